#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "cbperm/exact.hpp"
#include "cbperm/pattern_set.hpp"
#include "cbperm/permutation.hpp"

namespace cbperm {

struct EnumerationOptions {
  /// Maximum number of permutations on any single level of the insertion
  /// tree; exceeding it throws ResourceLimit.
  std::int64_t node_budget = 10'000'000;
};

/// |S_n(ps)| for n = 1..n_max.
struct AvoiderSequence {
  PatternSet pattern_set;
  std::vector<Count> counts;  // counts[0] is n = 1

  int n_max() const { return static_cast<int>(counts.size()); }
  Count count(int n) const { return counts.at(n - 1); }
};

/// Precompiled form of a pattern set for extending an avoider by its new
/// maximum. A child contains pattern q exactly when the new maximum plays
/// q's largest entry, so only the parent's occurrences of q-minus-its-max
/// need checking, each of which forbids a contiguous range of insertion
/// gaps.
class ExtensionPlan {
 public:
  explicit ExtensionPlan(const PatternSet& ps);

  /// Bit g is set when inserting the new maximum at 0-based gap g of
  /// `parent` (gap g puts it at 1-based position g+1) would create a
  /// forbidden pattern. `parent` must itself avoid the set.
  std::uint64_t forbidden_gaps(std::span<const std::uint8_t> parent) const;

  /// Whether the single-element permutation avoids the set.
  bool root_allowed() const { return root_allowed_; }

 private:
  struct Group {
    int reduced_length = 0;
    // Standardized reduced pattern (mixed-radix code) -> split points, the
    // number of reduced entries lying left of the maximum.
    std::unordered_map<std::uint64_t, std::vector<int>> splits;
  };
  std::vector<Group> groups_;
  bool forbid_all_ = false;
  bool root_allowed_ = true;
};

/// Every permutation of length n avoiding ps, sorted lexicographically.
/// Built level by level through the insert-the-maximum tree using
/// ExtensionPlan.
std::vector<Permutation> generate_avoiders(const PatternSet& ps, int n,
                                           const EnumerationOptions& opts = {});

/// Frontier traversal that keeps one level at a time; the last level is
/// counted, never stored.
AvoiderSequence count_sequence(const PatternSet& ps, int n_max,
                               const EnumerationOptions& opts = {});

/// count_sequence that stops at the first level exceeding the budget and
/// returns the counts completed so far.
struct BoundedSequence {
  AvoiderSequence sequence;
  bool budget_exceeded = false;
};
BoundedSequence count_sequence_bounded(const PatternSet& ps, int n_max,
                                       const EnumerationOptions& opts = {});

/// Serial reference versions: same tree, but every child is checked with
/// avoids_all against the full pattern set.
std::vector<Permutation> generate_avoiders_reference(const PatternSet& ps, int n,
                                                     const EnumerationOptions& opts = {});
AvoiderSequence count_sequence_reference(const PatternSet& ps, int n_max,
                                         const EnumerationOptions& opts = {});

std::string to_csv(const AvoiderSequence& seq);
nlohmann::json to_json(const AvoiderSequence& seq);
AvoiderSequence sequence_from_json(const nlohmann::json& j);

}  // namespace cbperm
