#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "cbperm/permutation.hpp"

namespace cbperm {

/// One element of the order-8 group generated by reverse, complement and
/// inverse. Applied as: inverse first (if set), then reverse, then
/// complement.
struct Symmetry {
  bool inverse = false;
  bool reverse = false;
  bool complement = false;

  Permutation apply(const Permutation& p) const;
  std::string name() const;

  friend bool operator==(const Symmetry&, const Symmetry&) = default;
};

/// All eight group elements, identity first.
const std::array<Symmetry, 8>& all_symmetries();

/// A non-empty set of forbidden patterns, stored sorted and deduplicated.
class PatternSet {
 public:
  /// Throws InvalidInput if `patterns` is empty or holds an empty pattern.
  explicit PatternSet(std::vector<Permutation> patterns);

  const std::vector<Permutation>& patterns() const { return patterns_; }
  int size() const { return static_cast<int>(patterns_.size()); }

  /// Comma-joined pattern strings of the lexicographically least symmetric
  /// image; equal for every member of an orbit.
  const std::string& canonical_key() const { return key_; }

  /// Comma-joined pattern strings of this set as stored.
  std::string to_string() const;

  friend bool operator==(const PatternSet& a, const PatternSet& b) {
    return a.patterns_ == b.patterns_;
  }
  friend bool operator<(const PatternSet& a, const PatternSet& b) {
    return a.patterns_ < b.patterns_;
  }

 private:
  std::vector<Permutation> patterns_;
  std::string key_;
};

PatternSet apply(const Symmetry& s, const PatternSet& ps);

/// Distinct images of `ps` under the symmetry group, sorted.
std::vector<PatternSet> symmetry_orbit(const PatternSet& ps);

bool avoids_all(const Permutation& perm, const PatternSet& ps);

/// Parses "2431,4231,1432,4132"; each pattern in compact or dotted form.
PatternSet parse_pattern_set(std::string_view text);

}  // namespace cbperm
