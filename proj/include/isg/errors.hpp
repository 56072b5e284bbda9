#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace isg {

// Malformed user input: bad graph file, unknown token, bad path list.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition of an operation was violated by the caller.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultNodeBudget = 1'000'000;

// Counts work units of an enumeration and throws once the limit is passed.
class Budget {
 public:
  explicit Budget(std::size_t limit = kDefaultNodeBudget) : limit_(limit) {}

  void tick(std::size_t n = 1) {
    used_ += n;
    if (used_ > limit_) {
      throw BudgetExceeded("node budget of " + std::to_string(limit_) + " exceeded");
    }
  }
  std::size_t used() const { return used_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t limit_;
  std::size_t used_ = 0;
};

}  // namespace isg
