// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion passes within its time limit.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "cbperm/avoiders.hpp"
#include "cbperm/codeword.hpp"
#include "cbperm/lattice.hpp"
#include "cbperm/render.hpp"
#include "cbperm/wilf.hpp"
#include "oracles.hpp"

using namespace cbperm;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::string join(const std::vector<Count>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
  return out;
}

std::vector<oracle::Seq> seqs(const std::vector<Permutation>& perms) {
  std::vector<oracle::Seq> out;
  for (const auto& p : perms) out.emplace_back(p.values().begin(), p.values().end());
  return out;
}

Outcome theorem_counts() {
  Outcome o;
  const std::vector<Count> expected{1, 2, 6, 20, 70, 252, 924, 3432, 12870, 48620};
  const auto seq = count_sequence(forbidden_patterns(), 10);
  o.require(seq.counts == expected, "counts " + join(seq.counts));
  for (int n = 1; n <= 10; ++n)
    o.require(seq.count(n) == oracle::binom(2 * (n - 1), n - 1), "b_{n-1} mismatch at n=" + std::to_string(n));
  const auto pats = seqs(forbidden_patterns().patterns());
  for (int n = 1; n <= 7; ++n)
    o.require(static_cast<Count>(oracle::avoiders(pats, n).size()) == expected[n - 1],
              "brute-force filter disagrees at n=" + std::to_string(n));
  if (o.pass) o.detail = "counts " + join(seq.counts);
  return o;
}

Outcome bijection() {
  Outcome o;
  for (int n = 1; n <= 9; ++n) {
    const auto avoiders = generate_avoiders(forbidden_patterns(), n);
    std::vector<CodeWord> image;
    image.reserve(avoiders.size());
    for (const auto& p : avoiders) {
      CodeWord w = encode(p);
      o.require(decode(w) == p, "decode(encode(p)) != p for " + to_string(p));
      image.push_back(std::move(w));
    }
    std::sort(image.begin(), image.end());
    o.require(std::adjacent_find(image.begin(), image.end()) == image.end(),
              "encode not injective at n=" + std::to_string(n));
    const auto words = enumerate_codewords(n - 1);
    o.require(image == words, "image differs from W_{n-1} at n=" + std::to_string(n));
    for (const auto& w : words) o.require(encode(decode(w)) == w, "encode(decode(w)) != w for " + to_string(w));
  }
  if (o.pass) o.detail = "n=1..9 exhaustive, 12870 permutations at n=9";
  return o;
}

Outcome codeword_counts() {
  Outcome o;
  for (int n = 1; n <= 10; ++n) {
    const Count listed = static_cast<Count>(enumerate_codewords(n).size());
    const Count b = oracle::binom(2 * n, n);
    o.require(listed == b, "|W_n| != C(2n,n) at n=" + std::to_string(n));
    o.require(codeword_count_decomposed(n) == b, "decomposed sum != C(2n,n) at n=" + std::to_string(n));
  }
  std::set<std::string> two;
  for (const auto& w : enumerate_codewords(2)) two.insert(to_string(w));
  o.require(two == std::set<std::string>{"B,B", "B,E", "E,B", "E,E", "B,2", "E,2"}, "W_2 set differs");
  if (o.pass) o.detail = "n=1..10, W_2 = {BB,BE,EB,EE,B2,E2}";
  return o;
}

Outcome path_oracle() {
  Outcome o;
  for (int n = 1; n <= 12; ++n)
    for (int i = 1; i <= n; ++i)
      o.require(count_paths_closed(n - i, i, n) == count_paths_brute(n - i, n - 1, i),
                "closed != brute at n=" + std::to_string(n) + " i=" + std::to_string(i));
  const Count closed = count_paths_closed(6, 2, 8);
  const Count brute = count_paths_brute(6, 7, 2);
  o.require(closed == 429 && brute == 429, "figure family counts " + std::to_string(closed) + "/" +
                                               std::to_string(brute));
  if (o.pass) o.detail = "1<=i<=n<=12; (a=6,i=2): closed=429 brute=429";
  return o;
}

Outcome reflection() {
  Outcome o;
  int families = 0;
  for (int n = 1; n <= 8; ++n)
    for (int i = 1; i <= n; ++i) {
      ++families;
      const Point end{n - i, n - 1};
      const Point mirror{-i, i};
      std::set<std::string> images;
      int bad = 0, good = 0;
      for (const auto& path : all_paths({0, 0}, end)) {
        if (!touches(path, i)) {
          ++good;
          continue;
        }
        ++bad;
        const LatticePath r = reflect_bad_path(path, i);
        o.require(r.origin == mirror && r.end() == end, "reflected path has wrong endpoints");
        o.require(reflect_bad_path(r, i) == path, "reflection is not an involution");
        images.insert(to_string(r));
      }
      std::set<std::string> unrestricted;
      for (const auto& path : all_paths(mirror, end)) unrestricted.insert(to_string(path));
      const std::string tag = " (n=" + std::to_string(n) + ", i=" + std::to_string(i) + ")";
      o.require(static_cast<int>(images.size()) == bad, "reflection not injective" + tag);
      o.require(images == unrestricted, "image is not the unrestricted family" + tag);
      o.require(bad == oracle::binom(2 * n - i - 1, n), "#bad != C(2n-i-1,n)" + tag);
      o.require(good == count_paths_closed(n - i, i, n), "good paths != closed form" + tag);
    }
  if (o.pass) o.detail = std::to_string(families) + " families paired exhaustively";
  return o;
}

Outcome identity() {
  Outcome o;
  for (int m = 1; m <= 20; ++m)
    for (int n = 1; n <= 20; ++n) {
      const auto s = identity_check(m, n);
      o.require(s.lhs == s.rhs, "lhs != rhs at m=" + std::to_string(m) + " n=" + std::to_string(n));
    }
  for (int n = 1; n <= 20; ++n) {
    const auto s = identity_check(n, n);
    o.require(s.scale == 0 && s.lhs % n == 0 && s.lhs / n == oracle::binom(2 * n, n),
              "W_n != C(2n,n) from m=n at n=" + std::to_string(n));
  }
  if (o.pass) o.detail = "1<=m,n<=20; m=n gives W_n=C(2n,n) for n<=20";
  return o;
}

Outcome census() {
  Outcome o;
  const auto classes = enumerate_quadruple_classes();
  int total = 0;
  for (const auto& c : classes) total += c.orbit_size;
  o.require(classes.size() == 1524, "classes=" + std::to_string(classes.size()));
  o.require(total == 10626, "orbit sum=" + std::to_string(total));
  if (o.pass) o.detail = "classes=1524 orbit-sum=10626";
  return o;
}

Outcome candidates() {
  Outcome o;
  const auto cache_path = (std::filesystem::temp_directory_path() / "cbperm_acceptance_cache.json").string();
  std::remove(cache_path.c_str());
  ClassCache cache = ClassCache::load(cache_path);
  ScanOptions opts;
  opts.cache = &cache;
  const auto reports = verify_candidate_list(9, opts);
  cache.save(cache_path);
  o.require(reports.size() == 12, "expected twelve classes");
  int matches = 0;
  for (const auto& r : reports) {
    matches += r.verdict.kind == Verdict::Kind::Matches;
    for (int n = 1; n <= 9; ++n)
      o.require(r.counts.count(n) == oracle::binom(2 * (n - 1), n - 1),
                r.canonical_key + " differs at n=" + std::to_string(n));
  }
  // A second pass is answered from the reloaded cache.
  ClassCache reloaded = ClassCache::load(cache_path);
  opts.cache = &reloaded;
  const auto again = verify_candidate_list(9, opts);
  for (std::size_t k = 0; k < again.size(); ++k)
    o.require(again[k].counts.counts == reports[k].counts.counts, "cached rerun differs");
  std::remove(cache_path.c_str());
  if (o.pass) o.detail = std::to_string(matches) + "/12 match b_{n-1} for n<=9";
  return o;
}

Outcome catalan_identity() {
  Outcome o;
  const auto seq = count_sequence(parse_pattern_set("1324,1342,1432,4132"), 9);
  for (int n = 1; n <= 9; ++n) {
    o.require(seq.count(n) == n * catalan(n - 1), "n*Catalan(n-1) differs at n=" + std::to_string(n));
    o.require(seq.count(n) == oracle::binom(2 * (n - 1), n - 1), "b_{n-1} differs at n=" + std::to_string(n));
  }
  if (o.pass) o.detail = "counts " + join(seq.counts);
  return o;
}

int count_of(const std::string& text, const std::string& needle) {
  int n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

Outcome figure_end_to_end() {
  Outcome o;
  const CodeWord w = encode(parse_permutation("245178396"));
  o.require(to_string(w) == "B,E,2,3,3,5,6,8", "encode gave " + to_string(w));
  const int i = w.marker_length();
  std::string reduced;
  for (int letter : w.tail()) reduced += std::to_string(letter - 2);
  o.require(i == 2 && reduced == "011346", "reduced tail " + reduced);
  const LatticePath path = tail_to_path(w.tail(), i);
  o.require(path.end() == Point{6, 7}, "path does not end at (6,7)");
  o.require(!touches(path, i), "path touches y=x+2");
  o.require(path_to_tail(path, i) == w.tail(), "path does not map back to the tail");

  const std::string svg = render_codeword(w, {RenderFormat::Svg, 40});
  o.require(svg.rfind("<?xml", 0) == 0 && svg.find("</svg>") != std::string::npos, "SVG not well framed");
  o.require(count_of(svg, "class=\"vertex\"") == static_cast<int>(path.steps.size()) + 1,
            "SVG vertex count");
  o.require(count_of(svg, "stroke-dasharray") == 1, "SVG barrier missing");
  const std::string art = render_codeword(w, {RenderFormat::Ascii, 40});
  o.require(count_of(art, "o") == static_cast<int>(path.steps.size()) + 1, "ASCII vertex count");
  o.require(art.find("(6,7)") != std::string::npos && art.find("y=x+2") != std::string::npos,
            "ASCII labels missing");
  if (o.pass) o.detail = "BE233568 -> 011346 -> path to (6,7) below y=x+2; 14 vertices rendered";
  return o;
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "theorem counts b_0..b_9", 60, theorem_counts},
      {2, "bijection S_n <-> W_{n-1}, n<=9", 120, bijection},
      {3, "code-word counts = C(2n,n), n<=10", 600, codeword_counts},
      {4, "closed-form path count = brute force, n<=12", 600, path_oracle},
      {5, "reflection principle pairing, n<=8", 600, reflection},
      {6, "summation identity, m,n<=20", 600, identity},
      {7, "symmetry census 1524 / 10626", 10, census},
      {8, "twelve candidates match, n<=9", 600, candidates},
      {9, "S_n(1324,1342,1432,4132) = n*Catalan(n-1), n<=9", 600, catalan_identity},
      {10, "figure example end to end", 600, figure_end_to_end},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && secs > c.limit_seconds) {
      o.pass = false;
      o.detail = "took " + std::to_string(secs) + "s, limit " + std::to_string(c.limit_seconds) + "s";
    }
    failed += !o.pass;
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << secs;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " -- " << o.detail
              << " (" << t.str() << "s)" << std::endl;
  }
  std::cout << (failed == 0 ? "ALL CRITERIA PASS" : std::to_string(failed) + " CRITERIA FAILED") << std::endl;
  return failed == 0 ? 0 : 1;
}
