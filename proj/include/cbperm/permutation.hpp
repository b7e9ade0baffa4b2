#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cbperm {

/// A permutation in one-line notation. Positions and values are 1-based in
/// every public accessor; the empty permutation (n = 0) is valid.
class Permutation {
 public:
  Permutation() = default;

  /// Throws InvalidInput unless `values` is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> values);
  Permutation(std::initializer_list<int> values);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }

  /// Value at 1-based position `pos`.
  int at(int pos) const { return values_[pos - 1]; }

  std::span<const int> values() const { return values_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<int> values, Unchecked) : values_(std::move(values)) {}

  friend Permutation standardize(std::span<const int> values);
  friend Permutation reverse(const Permutation& p);
  friend Permutation complement(const Permutation& p);
  friend Permutation inverse(const Permutation& p);
  friend Permutation restrict_to(const Permutation& p, int m);
  friend Permutation insert_max(const Permutation& p, int pos);

  std::vector<int> values_;
};

/// The permutation order-isomorphic to `values` (distinct integers).
Permutation standardize(std::span<const int> values);

Permutation reverse(const Permutation& p);
Permutation complement(const Permutation& p);
Permutation inverse(const Permutation& p);

/// p with every value greater than m deleted.
Permutation restrict_to(const Permutation& p, int m);

/// p with the value n+1 inserted so that it lands at 1-based position `pos`
/// (1 <= pos <= n+1).
Permutation insert_max(const Permutation& p, int pos);

/// Positions (1-based, increasing) of the leftmost-first occurrence of
/// `pattern` in `perm`, or nullopt if `perm` avoids it.
std::optional<std::vector<int>> find_occurrence(const Permutation& perm,
                                                const Permutation& pattern);

bool contains_pattern(const Permutation& perm, const Permutation& pattern);

/// Accepts "2,4,5,1,7,8,3,9,6", or the compact digit form "245178396" when
/// n <= 9. Throws ParseError on malformed text and InvalidInput when the
/// numbers are not a permutation.
Permutation parse_permutation(std::string_view text);

/// Comma-separated form.
std::string to_string(const Permutation& p);

/// Digit form when every value is at most 9, dot-separated values otherwise.
/// Used inside pattern lists and canonical keys, where commas separate
/// patterns.
std::string to_pattern_string(const Permutation& p);

}  // namespace cbperm
