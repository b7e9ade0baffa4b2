#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cbperm/exact.hpp"

namespace cbperm {

enum class Step : char { North = 'N', East = 'E' };

struct Point {
  int x = 0;
  int y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

/// A North/East path. Paths built from code-word tails start at the origin;
/// reflected paths start at the mirror image of it.
struct LatticePath {
  std::vector<Step> steps;
  Point origin{};

  int east_count() const;
  int north_count() const;
  Point end() const;
  /// origin, then the point after every step.
  std::vector<Point> points() const;

  friend bool operator==(const LatticePath&, const LatticePath&) = default;
};

/// Paths from (0,0) to (east, north) that never touch y = x + barrier.
struct PathFamily {
  int east = 0;
  int north = 0;
  int barrier = 1;

  bool contains(const LatticePath& path) const;
};

/// Index into path.points() of the first point on y = x + barrier.
std::optional<std::size_t> first_touch(const LatticePath& path, int barrier);
bool touches(const LatticePath& path, int barrier);

/// The word tail w_{i+1} .. w_n of a code word with marker segment length
/// i, drawn with its j-th East step at height tail[j] - 2. Ends at
/// (len, len + i - 1). Throws InvalidInput unless the tail is non-decreasing
/// with 2 <= tail[j] <= j + i.
LatticePath tail_to_path(std::span<const int> tail, int barrier);

/// Inverse of tail_to_path. Throws InvalidInput when the path does not
/// start at the origin, touches the barrier, or does not end at
/// (a, a + barrier - 1).
std::vector<int> path_to_tail(const LatticePath& path, int barrier);

/// Barrier-avoiding paths (0,0) -> (n-i, n-1), as C(2n-i-1, n-1) - C(2n-i-1, n).
Count count_paths_difference(int i, int n);
/// The same count as C(2n-i-1, n-1) * i / n.
Count count_paths_ratio(int i, int n);
/// The same count as C(2n-i-1, n-i) * i / n.
Count count_paths_ratio_tail(int i, int n);

/// Checks a == n - i and 1 <= i <= n (DomainError otherwise), evaluates
/// the three closed forms above and throws std::logic_error if they
/// disagree.
Count count_paths_closed(int a, int i, int n);

/// Depth-first count of paths (0,0) -> (east, north) never touching
/// y = x + barrier. Throws ResourceLimit when east + north > step_limit.
Count count_paths_brute(int east, int north, int barrier, int step_limit = 30);

/// Every North/East path from `from` to `to`, in lexicographic step order
/// (E before N). Throws ResourceLimit beyond step_limit steps.
std::vector<LatticePath> all_paths(Point from, Point to, int step_limit = 24);

/// Reflects the part of `path` before its first touch of y = x + barrier
/// (swapping North and East steps and mirroring the origin); the rest is
/// unchanged. An involution. Throws InvalidInput if the path never touches.
LatticePath reflect_bad_path(const LatticePath& path, int barrier);

/// Sum over marker-segment lengths i of 2^i * count_paths_closed(n-i, i, n).
Count codeword_count_decomposed(int n);

/// Both sides of
///   sum_{j<n} 2^(m-j) C(m+j-1, j) (m-j) = n 2^(m-n+1) C(m+n-1, n),
/// each multiplied by 2^scale, where scale = max(0, n-1-m) is the smallest
/// power making every term integral.
struct IdentitySides {
  Count lhs = 0;
  Count rhs = 0;
  int scale = 0;
};
IdentitySides identity_check(int m, int n);

/// "ENNE..."
std::string to_string(const LatticePath& path);
LatticePath parse_path(std::string_view text);

/// {"east": a, "north": h, "barrier": i, "steps": "ENNE..."}
nlohmann::json to_json(const LatticePath& path, int barrier);
LatticePath path_from_json(const nlohmann::json& j);

}  // namespace cbperm
