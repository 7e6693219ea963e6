#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rgk {

// Input violates an operation's precondition (bad vertex, malformed graph6,
// order above an exact bound, ...). The CLI maps this to exit status 2.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A named hypothesis of the goodness characterization does not hold,
// e.g. "s(G) = 1" or "p >= snd(alpha)".
class HypothesisError : public PreconditionError {
 public:
  HypothesisError(std::string hypothesis, const std::string& detail)
      : PreconditionError("hypothesis violated: " + hypothesis + " (" + detail + ")"),
        hypothesis_(std::move(hypothesis)) {}

  const std::string& hypothesis() const noexcept { return hypothesis_; }

 private:
  std::string hypothesis_;
};

// A search hit its node-expansion cap before deciding. Never a "no".
class BudgetExhausted : public std::runtime_error {
 public:
  explicit BudgetExhausted(std::uint64_t budget)
      : std::runtime_error("undecided: search budget of " + std::to_string(budget) +
                           " nodes exhausted"),
        budget_(budget) {}

  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t budget_;
};

}  // namespace rgk
