#include <doctest.h>

#include <set>

#include "cbperm/codeword.hpp"
#include "cbperm/errors.hpp"
#include "cbperm/lattice.hpp"
#include "oracles.hpp"

using namespace cbperm;

TEST_CASE("tail_to_path examples") {
  const std::vector<int> tail{2, 3, 3, 5, 6, 8};
  const LatticePath path = tail_to_path(tail, 2);
  CHECK(to_string(path) == "ENEENNENENNEN");
  CHECK(path.end() == Point{6, 7});
  CHECK_FALSE(touches(path, 2));
  CHECK(PathFamily{6, 7, 2}.contains(path));
  // East step j sits at the reduced letter's height: 0,1,1,3,4,6.
  std::vector<int> heights;
  const auto pts = path.points();
  for (std::size_t k = 0; k < path.steps.size(); ++k)
    if (path.steps[k] == Step::East) heights.push_back(pts[k].y);
  CHECK(heights == std::vector<int>{0, 1, 1, 3, 4, 6});

  const LatticePath empty = tail_to_path(std::vector<int>{}, 1);
  CHECK(empty.steps.empty());
  CHECK(empty.end() == Point{0, 0});

  const LatticePath one = tail_to_path(std::vector<int>{2}, 1);
  CHECK(to_string(one) == "EN");
  CHECK(one.end() == Point{1, 1});
  CHECK_FALSE(touches(one, 1));
}

TEST_CASE("tail_to_path rejects invalid tails") {
  CHECK_THROWS_AS(tail_to_path(std::vector<int>{3, 2}, 2), InvalidInput);
  CHECK_THROWS_AS(tail_to_path(std::vector<int>{1}, 2), InvalidInput);
  CHECK_THROWS_AS(tail_to_path(std::vector<int>{4}, 2), InvalidInput);
  CHECK_THROWS_AS(tail_to_path(std::vector<int>{2}, 0), InvalidInput);
}

TEST_CASE("path_to_tail") {
  CHECK(path_to_tail(parse_path("ENEENNENENNEN"), 2) == std::vector<int>{2, 3, 3, 5, 6, 8});
  CHECK(path_to_tail(LatticePath{}, 1).empty());
  CHECK(path_to_tail(parse_path("N"), 2).empty());
  CHECK_THROWS_AS(path_to_tail(parse_path("NE"), 1), InvalidInput);   // touches at (0,1)
  CHECK_THROWS_AS(path_to_tail(parse_path("EEN"), 1), InvalidInput);  // wrong endpoint
  LatticePath shifted = parse_path("EN");
  shifted.origin = {-1, 1};
  CHECK_THROWS_AS(path_to_tail(shifted, 1), InvalidInput);
}

TEST_CASE("tail/path correspondence is a bijection (a <= 6, i <= 4)") {
  for (int i = 1; i <= 4; ++i)
    for (int a = 0; a <= 6; ++a) {
      const Point end{a, a + i - 1};
      int good = 0;
      for (const auto& path : all_paths({0, 0}, end)) {
        if (touches(path, i)) {
          CHECK_THROWS_AS(path_to_tail(path, i), InvalidInput);
          continue;
        }
        ++good;
        CHECK(tail_to_path(path_to_tail(path, i), i) == path);
      }
      CHECK(good == oracle::count_paths(a, a + i - 1, i));
    }
}

TEST_CASE("closed forms") {
  CHECK(count_paths_closed(6, 2, 8) == 429);
  CHECK(count_paths_difference(2, 8) == 1716 - 1287);
  for (int n = 1; n <= 10; ++n) CHECK(count_paths_closed(0, n, n) == 1);
  CHECK(count_paths_closed(1, 1, 2) == 1);
  CHECK_THROWS_AS(count_paths_closed(2, 1, 2), DomainError);
  CHECK_THROWS_AS(count_paths_closed(2, 0, 2), DomainError);
  for (int n = 1; n <= 20; ++n)
    for (int i = 1; i <= n; ++i) {
      CHECK(count_paths_ratio(i, n) == count_paths_difference(i, n));
      CHECK(count_paths_ratio_tail(i, n) == count_paths_difference(i, n));
    }
}

TEST_CASE("brute-force path counts") {
  CHECK(count_paths_brute(6, 7, 2) == 429);
  for (int i = 1; i <= 5; ++i)
    for (int k = 0; k < i; ++k) CHECK(count_paths_brute(0, k, i) == 1);
  CHECK(count_paths_brute(2, 4, 2) == 0);
  CHECK(count_paths_brute(3, 7, 3) == 0);
  CHECK_THROWS_AS(count_paths_brute(20, 20, 1), ResourceLimit);
  for (int a = 0; a <= 6; ++a)
    for (int h = 0; h <= 8; ++h)
      for (int b = 1; b <= 4; ++b) CHECK(count_paths_brute(a, h, b) == oracle::count_paths(a, h, b));
}

TEST_CASE("closed form equals brute force for 1 <= i <= n <= 12") {
  for (int n = 1; n <= 12; ++n)
    for (int i = 1; i <= n; ++i) CHECK(count_paths_closed(n - i, i, n) == count_paths_brute(n - i, n - 1, i));
}

TEST_CASE("reflect_bad_path") {
  const LatticePath bad = parse_path("NE");  // touches y = x + 1 at (0,1)
  const LatticePath r = reflect_bad_path(bad, 1);
  CHECK(r.origin == Point{-1, 1});
  CHECK(to_string(r) == "EE");
  CHECK(r.end() == bad.end());
  CHECK(reflect_bad_path(r, 1) == bad);
  CHECK_THROWS_AS(reflect_bad_path(parse_path("EN"), 1), InvalidInput);

  // n=2, i=1: C(2,1) - w = 2 - 1 bad paths.
  int bad_count = 0;
  for (const auto& p : all_paths({0, 0}, {1, 1})) bad_count += touches(p, 1);
  CHECK(bad_count == 2 - count_paths_closed(1, 1, 2));

  // Bad paths (0,0) -> (2,2) for y = x + 1 pair up with all paths (-1,1) -> (2,2).
  std::set<std::string> images, targets;
  for (const auto& p : all_paths({0, 0}, {2, 2}))
    if (touches(p, 1)) {
      const LatticePath img = reflect_bad_path(p, 1);
      CHECK(img.origin == Point{-1, 1});
      CHECK(reflect_bad_path(img, 1) == p);
      images.insert(to_string(img));
    }
  for (const auto& p : all_paths({-1, 1}, {2, 2})) targets.insert(to_string(p));
  CHECK(images == targets);
  CHECK(images.size() == 4);
}

TEST_CASE("decomposed code-word count") {
  CHECK(codeword_count_decomposed(1) == 2);
  CHECK(codeword_count_decomposed(2) == 6);
  CHECK(codeword_count_decomposed(4) == 70);
  for (int n = 1; n <= 10; ++n) {
    CHECK(codeword_count_decomposed(n) == central_binomial(n));
    if (n <= 6) CHECK(codeword_count_decomposed(n) == static_cast<Count>(oracle::codewords(n).size()));
  }
  CHECK_THROWS_AS(codeword_count_decomposed(0), DomainError);
}

TEST_CASE("marker segment decomposition counts words by i") {
  for (int n = 1; n <= 8; ++n) {
    std::vector<Count> by_markers(n + 1, 0);
    for (const auto& w : enumerate_codewords(n)) ++by_markers[w.marker_length()];
    for (int i = 1; i <= n; ++i) CHECK(by_markers[i] == pow2(i) * count_paths_closed(n - i, i, n));
  }
}

TEST_CASE("identity check") {
  for (int m = 1; m <= 20; ++m) {
    const auto s = identity_check(m, 1);
    CHECK(s.lhs == pow2(m) * m);
    CHECK(s.rhs == s.lhs);
  }
  const auto small = identity_check(1, 1);
  CHECK(small.lhs == 2);
  CHECK(small.rhs == 2);
  // m=1, n=3 has half-integer terms: 2 + 0 - 1/2 = 3/2 = 3 * 2^-1 * C(3,3).
  const auto half = identity_check(1, 3);
  CHECK(half.scale == 1);
  CHECK(half.lhs == 3);
  CHECK(half.rhs == 3);
  for (int m = 1; m <= 20; ++m)
    for (int n = 1; n <= 20; ++n) {
      const auto s = identity_check(m, n);
      CHECK(s.lhs == s.rhs);
    }
  for (int n = 1; n <= 20; ++n) {
    const auto s = identity_check(n, n);
    CHECK(s.scale == 0);
    CHECK(s.rhs == n * central_binomial(n));
    CHECK(s.lhs / n == central_binomial(n));
  }
  CHECK_THROWS_AS(identity_check(0, 1), DomainError);
}

TEST_CASE("path text and JSON") {
  const LatticePath p = parse_path("ENEENNENENNEN");
  CHECK(to_json(p, 2).dump() == R"({"barrier":2,"east":6,"north":7,"steps":"ENEENNENENNEN"})");
  CHECK(path_from_json(to_json(p, 2)) == p);
  CHECK_THROWS_AS(parse_path("ENX"), ParseError);
  CHECK_THROWS_AS(path_from_json(nlohmann::json::parse(R"({"east":1,"north":1,"barrier":1,"steps":"E"})")),
                  ParseError);
}
