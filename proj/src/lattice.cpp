#include "cbperm/lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "cbperm/errors.hpp"

namespace cbperm {

int LatticePath::east_count() const {
  return static_cast<int>(std::count(steps.begin(), steps.end(), Step::East));
}

int LatticePath::north_count() const { return static_cast<int>(steps.size()) - east_count(); }

Point LatticePath::end() const { return {origin.x + east_count(), origin.y + north_count()}; }

std::vector<Point> LatticePath::points() const {
  std::vector<Point> pts{origin};
  pts.reserve(steps.size() + 1);
  Point p = origin;
  for (Step s : steps) {
    if (s == Step::East)
      ++p.x;
    else
      ++p.y;
    pts.push_back(p);
  }
  return pts;
}

bool PathFamily::contains(const LatticePath& path) const {
  return path.origin == Point{} && path.end() == Point{east, north} && !touches(path, barrier);
}

std::optional<std::size_t> first_touch(const LatticePath& path, int barrier) {
  const auto pts = path.points();
  for (std::size_t k = 0; k < pts.size(); ++k)
    if (pts[k].y - pts[k].x == barrier) return k;
  return std::nullopt;
}

bool touches(const LatticePath& path, int barrier) { return first_touch(path, barrier).has_value(); }

LatticePath tail_to_path(std::span<const int> tail, int barrier) {
  if (barrier < 1) throw InvalidInput("barrier must be >= 1");
  LatticePath path;
  int height = 0;
  for (std::size_t k = 0; k < tail.size(); ++k) {
    const int j = static_cast<int>(k) + 1;
    if (tail[k] < 2 || tail[k] > j + barrier)
      throw InvalidInput("tail entry " + std::to_string(j) + " = " + std::to_string(tail[k]) +
                         " outside 2.." + std::to_string(j + barrier));
    if (k > 0 && tail[k] < tail[k - 1])
      throw InvalidInput("tail is not non-decreasing at entry " + std::to_string(j));
    for (; height < tail[k] - 2; ++height) path.steps.push_back(Step::North);
    path.steps.push_back(Step::East);
  }
  const int top = static_cast<int>(tail.size()) + barrier - 1;
  for (; height < top; ++height) path.steps.push_back(Step::North);
  return path;
}

std::vector<int> path_to_tail(const LatticePath& path, int barrier) {
  if (barrier < 1) throw InvalidInput("barrier must be >= 1");
  if (!(path.origin == Point{})) throw InvalidInput("path must start at (0,0)");
  const Point end = path.end();
  if (end.y != end.x + barrier - 1)
    throw InvalidInput("path ends at (" + std::to_string(end.x) + "," + std::to_string(end.y) +
                       "), expected (" + std::to_string(end.x) + "," +
                       std::to_string(end.x + barrier - 1) + ")");
  if (auto t = first_touch(path, barrier)) {
    const Point p = path.points()[*t];
    throw InvalidInput("path touches y = x + " + std::to_string(barrier) + " at (" +
                       std::to_string(p.x) + "," + std::to_string(p.y) + ")");
  }
  std::vector<int> tail;
  int height = 0;
  for (Step s : path.steps) {
    if (s == Step::North)
      ++height;
    else
      tail.push_back(height + 2);
  }
  return tail;
}

namespace {

void check_family(int i, int n) {
  if (i < 1 || i > n)
    throw DomainError("need 1 <= i <= n, got i=" + std::to_string(i) + " n=" + std::to_string(n));
}

Count exact_div(Count num, Count den) {
  if (num % den != 0) throw std::logic_error("closed form is not integral");
  return num / den;
}

}  // namespace

Count count_paths_difference(int i, int n) {
  check_family(i, n);
  const Count top = 2 * Count{n} - i - 1;
  return checked_sub(binomial(top, n - 1), binomial(top, n));
}

Count count_paths_ratio(int i, int n) {
  check_family(i, n);
  return exact_div(checked_mul(binomial(2 * Count{n} - i - 1, n - 1), i), n);
}

Count count_paths_ratio_tail(int i, int n) {
  check_family(i, n);
  return exact_div(checked_mul(binomial(2 * Count{n} - i - 1, n - i), i), n);
}

Count count_paths_closed(int a, int i, int n) {
  check_family(i, n);
  if (a != n - i)
    throw DomainError("count_paths_closed: a must equal n - i (a=" + std::to_string(a) +
                      ", n-i=" + std::to_string(n - i) + ")");
  const Count diff = count_paths_difference(i, n);
  if (diff != count_paths_ratio(i, n) || diff != count_paths_ratio_tail(i, n))
    throw std::logic_error("closed forms disagree at i=" + std::to_string(i) +
                           " n=" + std::to_string(n));
  return diff;
}

namespace {

Count count_from(int x, int y, int east, int north, int barrier) {
  if (y - x == barrier) return 0;
  if (x == east && y == north) return 1;
  Count total = 0;
  if (x < east) total += count_from(x + 1, y, east, north, barrier);
  if (y < north) total += count_from(x, y + 1, east, north, barrier);
  return total;
}

void collect(Point at, Point to, LatticePath& current, std::vector<LatticePath>& out) {
  if (at == to) {
    out.push_back(current);
    return;
  }
  if (at.x < to.x) {
    current.steps.push_back(Step::East);
    collect({at.x + 1, at.y}, to, current, out);
    current.steps.pop_back();
  }
  if (at.y < to.y) {
    current.steps.push_back(Step::North);
    collect({at.x, at.y + 1}, to, current, out);
    current.steps.pop_back();
  }
}

}  // namespace

Count count_paths_brute(int east, int north, int barrier, int step_limit) {
  if (east < 0 || north < 0 || barrier < 1)
    throw DomainError("count_paths_brute: need east, north >= 0 and barrier >= 1");
  if (east + north > step_limit)
    throw ResourceLimit("count_paths_brute: " + std::to_string(east + north) +
                        " steps exceeds limit " + std::to_string(step_limit));
  return count_from(0, 0, east, north, barrier);
}

std::vector<LatticePath> all_paths(Point from, Point to, int step_limit) {
  std::vector<LatticePath> out;
  if (to.x < from.x || to.y < from.y) return out;
  if ((to.x - from.x) + (to.y - from.y) > step_limit)
    throw ResourceLimit("all_paths: too many steps");
  LatticePath current;
  current.origin = from;
  collect(from, to, current, out);
  return out;
}

LatticePath reflect_bad_path(const LatticePath& path, int barrier) {
  const auto touch = first_touch(path, barrier);
  if (!touch) throw InvalidInput("path never touches y = x + " + std::to_string(barrier));
  LatticePath out = path;
  // Mirror image of (x, y) in y = x + b is (y - b, x + b).
  out.origin = {path.origin.y - barrier, path.origin.x + barrier};
  for (std::size_t k = 0; k < *touch; ++k)
    out.steps[k] = path.steps[k] == Step::East ? Step::North : Step::East;
  return out;
}

Count codeword_count_decomposed(int n) {
  if (n < 1) throw DomainError("codeword_count_decomposed: n must be >= 1");
  Count total = 0;
  for (int i = 1; i <= n; ++i)
    total = checked_add(total, checked_mul(pow2(i), count_paths_closed(n - i, i, n)));
  return total;
}

IdentitySides identity_check(int m, int n) {
  if (m < 1 || n < 1) throw DomainError("identity_check: need m, n >= 1");
  IdentitySides s;
  s.scale = std::max(0, n - 1 - m);
  for (int j = 0; j < n; ++j) {
    const Count term = checked_mul(checked_mul(pow2(m - j + s.scale), binomial(m + j - 1, j)), m - j);
    s.lhs = checked_add(s.lhs, term);
  }
  s.rhs = checked_mul(checked_mul(n, pow2(m - n + 1 + s.scale)), binomial(m + n - 1, n));
  return s;
}

std::string to_string(const LatticePath& path) {
  std::string out;
  for (Step s : path.steps) out += static_cast<char>(s);
  return out;
}

LatticePath parse_path(std::string_view text) {
  LatticePath path;
  for (char c : text) {
    if (c == 'N' || c == 'n')
      path.steps.push_back(Step::North);
    else if (c == 'E' || c == 'e')
      path.steps.push_back(Step::East);
    else
      throw ParseError("path text may only contain N and E, got '" + std::string(1, c) + "'");
  }
  return path;
}

nlohmann::json to_json(const LatticePath& path, int barrier) {
  const Point end = path.end();
  return {{"east", end.x}, {"north", end.y}, {"barrier", barrier}, {"steps", to_string(path)}};
}

LatticePath path_from_json(const nlohmann::json& j) {
  try {
    LatticePath path = parse_path(j.at("steps").get<std::string>());
    const Point end = path.end();
    if (end.x != j.at("east").get<int>() || end.y != j.at("north").get<int>())
      throw ParseError("path JSON endpoint does not match its steps");
    return path;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed path JSON: ") + e.what());
  }
}

}  // namespace cbperm
