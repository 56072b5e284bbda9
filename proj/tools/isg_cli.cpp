#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "isg/algebra.hpp"
#include "isg/oracle.hpp"
#include "isg/parallel.hpp"
#include "isg/sampling.hpp"
#include "isg/semigroup.hpp"
#include "isg/spectrum.hpp"

namespace {

using namespace isg;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;
constexpr int kBudget = 3;

struct Common {
  std::string graph;
  bool allow_isolated = false;
  std::size_t budget = kDefaultNodeBudget;
  std::string level = "separated";
};

SeparatedGraph load(const Common& c) {
  GraphOptions opts;
  opts.allow_isolated = c.allow_isolated;
  return load_graph(c.graph, opts);
}

int cmd_validate(const Common& c) {
  std::cout << describe(load(c));
  return kOk;
}

int cmd_nf(const Common& c, const std::string& word, bool grading_flag, bool leaves) {
  const auto g = load(c);
  const Element a = parse_word(g, word, parse_level(c.level));
  std::cout << (leaves ? render_all_leaves(g, a) : render_nf(g, a)) << "\n";
  if (grading_flag && !a.is_zero()) std::cout << "grading: " << render_free_group_word(g, grading(a)) << "\n";
  return kOk;
}

int cmd_eq(const Common& c, const std::string& wa, const std::string& wb) {
  const auto g = load(c);
  const Level l = parse_level(c.level);
  const Element a = parse_word(g, wa, l), b = parse_word(g, wb, l);
  std::cout << (a == b ? "EQUAL" : "UNEQUAL") << "\n";
  std::cout << "a: " << render_nf(g, a) << "\n";
  std::cout << "b: " << render_nf(g, b) << "\n";
  return kOk;
}

int cmd_mul(const Common& c, const std::string& wa, const std::string& wb) {
  const auto g = load(c);
  const Level l = parse_level(c.level);
  std::cout << render_nf(g, multiply(g, parse_word(g, wa, l), parse_word(g, wb, l))) << "\n";
  return kOk;
}

int cmd_enumerate(const Common& c, std::size_t max_len, const std::string& what) {
  const auto g = load(c);
  Budget budget(c.budget);
  std::size_t count = 0;
  if (what == "basis") {
    for (const Element& e : basis_enumerate(g, max_len, budget)) {
      std::cout << scheiblich_nf(g, e) << "\n";
      ++count;
    }
  } else if (what == "idempotents") {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      enumerate_y0(g, LowerSet(v), max_len, budget, [&](const LowerSet& t) {
        std::cout << scheiblich_nf(g, Element::make(Level::Separated, t, vertex_path(v))) << "\n";
        ++count;
      });
    }
  } else if (what == "nc-paths") {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      for (const Path& p : c_separated_paths(g, v, max_len)) {
        std::cout << render_path(g, p) << "\n";
        ++count;
      }
    }
  } else {
    throw InputError("unknown --what '" + what + "'");
  }
  std::cout << "count: " << count << "\n";
  return kOk;
}

int cmd_spectrum(const Common& c, const std::string& check, const std::string& set, std::size_t depth) {
  const auto g = load(c);
  const FilterTruncation z = make_truncation(g, parse_lower_set(g, set), depth);
  Certificate cert;
  if (check == "ultra") {
    cert = check_ultra_truncation(g, z);
  } else if (check == "tight") {
    cert = check_tight_truncation(g, z);
  } else {
    throw InputError("unknown --check '" + check + "'");
  }
  std::cout << render_certificate(g, cert) << "\n";
  if (cert.infinite_caveat) std::cout << "note: infinite blocks checked on named edges only\n";
  return cert.pass ? kOk : kViolation;
}

struct CylinderArgs {
  std::string op, i1, f1, i2, f2, set;
  std::size_t depth = 4;
};

CylinderSet read_cylinder(const SeparatedGraph& g, const std::string& i, const std::string& f) {
  LowerSet li = parse_lower_set(g, i);
  std::vector<Path> fs = parse_path_list(g, f);
  return make_cylinder(g, normalize_0(g, li), fs);
}

int cmd_cylinder(const Common& c, const CylinderArgs& a) {
  const auto g = load(c);
  const CylinderSet b1 = read_cylinder(g, a.i1, a.f1);
  if (a.op == "member") {
    const FilterTruncation z = make_truncation(g, parse_lower_set(g, a.set), a.depth);
    std::cout << (cylinder_member(g, z, b1) ? "MEMBER" : "NOT MEMBER") << "\n";
    return kOk;
  }
  const CylinderSet b2 = read_cylinder(g, a.i2, a.f2);
  if (a.op == "intersect") {
    auto r = cylinder_intersect(g, b1, b2);
    std::cout << (r ? render_cylinder(g, *r) : std::string("empty")) << "\n";
  } else if (a.op == "diff") {
    const auto parts = cylinder_difference(g, b1, b2);
    if (parts.empty()) std::cout << "empty\n";
    for (const CylinderSet& p : parts) std::cout << render_cylinder(g, p) << "\n";
  } else {
    throw InputError("unknown --op '" + a.op + "'");
  }
  return kOk;
}

int cmd_cover(const Common& c, const std::string& vertex, const std::string& block, std::size_t max_len) {
  const auto g = load(c);
  auto v = g.find_vertex(vertex);
  if (!v) throw InputError("unknown vertex '" + vertex + "'");
  auto b = g.find_block(block);
  if (!b) throw InputError("unknown block '" + block + "'");
  if (g.block(*b).source != *v) throw InputError("block '" + block + "' is not at " + vertex);
  if (!g.is_finite_block(*b)) throw InputError("block '" + block + "' is infinite");
  Budget budget(c.budget);
  const LowerSet base(*v);
  std::vector<LowerSet> zs;
  for (EdgeId e : g.block(*b).edges) zs.push_back(lower_closure_unchecked(g, *v, {letter_path(g, Letter{e, false})}));
  const CoverVerdict verdict = is_cover_bounded(g, base, zs, max_len, budget);
  std::cout << render_cover_verdict(g, verdict) << "\n";
  std::size_t witnessed = 0;
  enumerate_y0(g, base, max_len, budget, [&](const LowerSet& j) {
    cover_witness(g, j, *b);
    ++witnessed;
  });
  std::cout << "witnesses validated: " << witnessed << "\n";
  return verdict.counterexample_found ? kViolation : kOk;
}

int cmd_aut(const Common& c) {
  const auto g = load(c);
  Budget budget(c.budget);
  const auto auts = enumerate_automorphisms(g, budget);
  for (const Automorphism& a : auts) std::cout << render_automorphism(g, a) << "\n";
  std::cout << "count: " << auts.size() << "\n";
  return kOk;
}

int cmd_crosscheck(const Common& c, std::size_t samples, std::size_t len, std::uint64_t seed, bool parallel,
                   bool walks) {
  const auto g = load(c);
  Rng rng(seed);
  std::vector<std::vector<Token>> words;
  words.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    words.push_back(walks ? random_walk(g, rng, len) : random_word(g, rng, len));
  }
  const CrosscheckReport r = parallel ? crosscheck_parallel(g, words) : crosscheck_serial(g, words);
  nlohmann::json j;
  j["graph"] = c.graph;
  j["samples"] = r.samples;
  j["max_len"] = len;
  j["seed"] = seed;
  j["sampler"] = walks ? "walk" : "uniform";
  j["threads"] = parallel ? parallel_threads() : 1;
  j["agreements"] = r.agreements;
  j["disagreements"] = r.disagreements;
  j["zero_results"] = r.zeros;
  j["budgets_hit"] = 0;
  j["examples"] = r.examples;
  std::cout << j.dump(2) << "\n";
  return r.disagreements == 0 ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inverse semigroups of separated graphs"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("graph", common.graph, "graph file")->required();
    sub->add_flag("--allow-isolated", common.allow_isolated, "accept isolated vertices");
    sub->add_option("--budget", common.budget, "node budget for enumerations")->capture_default_str();
  };
  auto add_level = [&](CLI::App* sub) {
    sub->add_option("--level", common.level, "free|toeplitz|separated")->capture_default_str();
  };

  auto* validate = app.add_subcommand("validate", "parse a graph and report its invariants");
  add_common(validate);

  std::string word, wa, wb;
  bool want_grading = false, leaves = false;
  auto* nf = app.add_subcommand("nf", "normal form of a word");
  add_common(nf);
  add_level(nf);
  nf->add_option("-w,--word", word, "word")->required();
  nf->add_flag("--grading", want_grading, "also print the free group grading");
  nf->add_flag("--all-leaves", leaves, "render every leaf of the Munn tree");

  auto* eq = app.add_subcommand("eq", "decide equality of two words");
  add_common(eq);
  add_level(eq);
  eq->add_option("-a", wa, "first word")->required();
  eq->add_option("-b", wb, "second word")->required();

  auto* mul = app.add_subcommand("mul", "normal form of a product");
  add_common(mul);
  add_level(mul);
  mul->add_option("-a", wa, "left word")->required();
  mul->add_option("-b", wb, "right word")->required();

  std::size_t max_len = 2;
  std::string what = "basis";
  auto* enumerate = app.add_subcommand("enumerate", "list basis elements, idempotents or paths");
  add_common(enumerate);
  enumerate->add_option("--max-len", max_len, "path length bound")->capture_default_str();
  enumerate->add_option("--what", what, "basis|idempotents|nc-paths")->capture_default_str();

  std::string check, set;
  std::size_t depth = 4;
  auto* spectrum = app.add_subcommand("spectrum", "check filter truncations; see also `spectrum cylinder`");
  spectrum->require_subcommand(0, 1);
  spectrum->add_option("graph", common.graph, "graph file");
  spectrum->add_flag("--allow-isolated", common.allow_isolated, "accept isolated vertices");
  spectrum->add_option("--check", check, "ultra|tight");
  spectrum->add_option("--set", set, "generating paths of the truncation");
  spectrum->add_option("--depth", depth, "truncation depth")->capture_default_str();

  CylinderArgs cyl;
  auto* cylinder = spectrum->add_subcommand("cylinder", "cylinder set operations");
  add_common(cylinder);
  cylinder->add_option("--op", cyl.op, "member|intersect|diff")->required();
  cylinder->add_option("--i1", cyl.i1, "first lower set")->required();
  cylinder->add_option("--f1", cyl.f1, "first excluded set")->default_val("{}");
  cylinder->add_option("--i2", cyl.i2, "second lower set");
  cylinder->add_option("--f2", cyl.f2, "second excluded set")->default_val("{}");
  cylinder->add_option("--set", cyl.set, "truncation for --op member");
  cylinder->add_option("--depth", cyl.depth, "truncation depth")->capture_default_str();

  std::string vertex, block;
  std::size_t cover_len = 4;
  auto* cover = app.add_subcommand("cover", "verify the finite cover of a vertex by a finite block");
  add_common(cover);
  cover->add_option("--vertex", vertex, "vertex")->required();
  cover->add_option("--block", block, "finite block at the vertex")->required();
  cover->add_option("--max-len", cover_len, "search bound")->capture_default_str();

  auto* aut = app.add_subcommand("aut", "list graph automorphisms");
  add_common(aut);

  std::size_t samples = 10000, len = 10;
  std::uint64_t seed = 1;
  bool parallel = false, walks = false;
  auto* oracle = app.add_subcommand("oracle", "independent validators");
  oracle->require_subcommand(1);
  auto* crosscheck = oracle->add_subcommand("crosscheck", "engine versus the peeling oracle on random words");
  add_common(crosscheck);
  crosscheck->add_option("--samples", samples, "number of words")->capture_default_str();
  crosscheck->add_option("--len", len, "maximum word length")->capture_default_str();
  crosscheck->add_option("--seed", seed, "random seed")->capture_default_str();
  crosscheck->add_flag("--parallel", parallel, "use OpenMP");
  crosscheck->add_flag("--walks", walks, "sample composable walks instead of uniform tokens");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*validate) return cmd_validate(common);
    if (*nf) return cmd_nf(common, word, want_grading, leaves);
    if (*eq) return cmd_eq(common, wa, wb);
    if (*mul) return cmd_mul(common, wa, wb);
    if (*enumerate) return cmd_enumerate(common, max_len, what);
    if (*cylinder) return cmd_cylinder(common, cyl);
    if (*spectrum) {
      if (common.graph.empty() || check.empty() || set.empty()) {
        throw InputError("spectrum needs <graph> --check --set (or the cylinder subcommand)");
      }
      return cmd_spectrum(common, check, set, depth);
    }
    if (*cover) return cmd_cover(common, vertex, block, cover_len);
    if (*aut) return cmd_aut(common);
    if (*crosscheck) return cmd_crosscheck(common, samples, len, seed, parallel, walks);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kInputError;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  }
  return kInputError;
}
