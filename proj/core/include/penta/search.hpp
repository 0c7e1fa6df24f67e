#pragma once

#include <cstdint>

namespace penta {

/// Default number of search-tree extension steps a single query may spend.
inline constexpr std::uint64_t kDefaultMaxSteps = 10'000'000;

/// Step counter shared by the exhaustive searches. Once exhausted, every search
/// that draws on it reports an indeterminate result instead of a negative one.
class Budget {
 public:
  explicit Budget(std::uint64_t max_steps = kDefaultMaxSteps) : remaining_(max_steps) {}

  /// Spend one step; false once the budget is gone.
  bool charge() {
    if (remaining_ == 0) {
      exhausted_ = true;
      return false;
    }
    --remaining_;
    return true;
  }
  bool exhausted() const { return exhausted_; }
  std::uint64_t remaining() const { return remaining_; }

 private:
  std::uint64_t remaining_;
  bool exhausted_ = false;
};

/// Three-valued answer for predicates decided by bounded search.
enum class Answer { no, yes, unknown };

/// Result of a bounded search; `complete` is false when the budget ran out
/// before the search space was covered.
template <class T>
struct Searched {
  T value{};
  bool complete = true;
};

}  // namespace penta
