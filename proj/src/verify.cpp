#include "cbperm/verify.hpp"

#include <algorithm>
#include <set>

#include "cbperm/avoiders.hpp"
#include "cbperm/codeword.hpp"
#include "cbperm/errors.hpp"
#include "cbperm/lattice.hpp"

namespace cbperm {

namespace {

std::string join(const std::vector<Count>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
  return out;
}

CheckResult equal(std::string name, Count expected, Count actual) {
  return {std::move(name), expected == actual, std::to_string(expected), std::to_string(actual)};
}

void bijection(const VerifyParams& p, std::vector<CheckResult>& out) {
  for (int n = 1; n <= p.n_max; ++n) {
    const auto avoiders = generate_avoiders(forbidden_patterns(), n);
    std::vector<CodeWord> image;
    int round_trip_failures = 0;
    for (const auto& perm : avoiders) {
      CodeWord w = encode(perm);
      if (decode(w) != perm) ++round_trip_failures;
      image.push_back(std::move(w));
    }
    std::sort(image.begin(), image.end());
    const auto words = enumerate_codewords(n - 1);
    int reverse_failures = 0;
    for (const auto& w : words)
      if (encode(decode(w)) != w) ++reverse_failures;
    const std::string tag = "bijection n=" + std::to_string(n);
    out.push_back(equal(tag + " |S_n| = C(2(n-1),n-1)", central_binomial(n - 1),
                        static_cast<Count>(avoiders.size())));
    out.push_back(equal(tag + " decode(encode(p)) = p failures", 0, round_trip_failures));
    out.push_back(equal(tag + " encode(decode(w)) = w failures", 0, reverse_failures));
    out.push_back({tag + " image = W_{n-1}", image == words, std::to_string(words.size()) + " words",
                   std::to_string(image.size()) + " encodings"});
  }
}

void counts(const VerifyParams& p, std::vector<CheckResult>& out) {
  std::vector<Count> expected;
  for (int n = 1; n <= p.n_max; ++n) expected.push_back(central_binomial(n - 1));
  const auto main_class = count_sequence(forbidden_patterns(), p.n_max);
  out.push_back({"counts S_n(2431,4231,1432,4132)", main_class.counts == expected, join(expected),
                 join(main_class.counts)});
  const auto other = count_sequence(parse_pattern_set("1324,1342,1432,4132"), p.n_max);
  std::vector<Count> n_catalan;
  for (int n = 1; n <= p.n_max; ++n) n_catalan.push_back(checked_mul(n, catalan(n - 1)));
  out.push_back({"counts S_n(1324,1342,1432,4132) = n*Catalan(n-1)", other.counts == n_catalan,
                 join(n_catalan), join(other.counts)});
}

void codewords(const VerifyParams& p, std::vector<CheckResult>& out) {
  for (int n = 1; n <= p.n_max; ++n) {
    const std::string tag = "codewords n=" + std::to_string(n);
    out.push_back(equal(tag + " |W_n|", central_binomial(n),
                        static_cast<Count>(enumerate_codewords(n).size())));
    out.push_back(equal(tag + " decomposed sum", central_binomial(n), codeword_count_decomposed(n)));
  }
}

void paths(const VerifyParams& p, std::vector<CheckResult>& out) {
  for (int n = 1; n <= p.n_max; ++n)
    for (int i = 1; i <= n; ++i)
      out.push_back(equal("paths n=" + std::to_string(n) + " i=" + std::to_string(i),
                          count_paths_brute(n - i, n - 1, i), count_paths_closed(n - i, i, n)));
}

void reflection(const VerifyParams& p, std::vector<CheckResult>& out) {
  for (int n = 1; n <= p.n_max; ++n)
    for (int i = 1; i <= n; ++i) {
      const Point end{n - i, n - 1};
      const Point mirrored_origin{-i, i};
      std::set<std::string> images;
      bool involution = true;
      Count bad = 0;
      for (const auto& path : all_paths({0, 0}, end)) {
        if (!touches(path, i)) continue;
        ++bad;
        const LatticePath r = reflect_bad_path(path, i);
        involution = involution && r.origin == mirrored_origin && r.end() == end &&
                     reflect_bad_path(r, i) == path;
        images.insert(to_string(r));
      }
      std::set<std::string> targets;
      for (const auto& path : all_paths(mirrored_origin, end)) targets.insert(to_string(path));
      const std::string tag = "reflection n=" + std::to_string(n) + " i=" + std::to_string(i);
      out.push_back({tag + " involution", involution, "true", involution ? "true" : "false"});
      out.push_back({tag + " image = paths from (-i,i)", images == targets,
                     std::to_string(targets.size()), std::to_string(images.size())});
      out.push_back(equal(tag + " #bad = C(2n-i-1,n)", binomial(2 * n - i - 1, n), bad));
    }
}

void identity(const VerifyParams& p, std::vector<CheckResult>& out) {
  for (int m = 1; m <= p.m_max; ++m)
    for (int n = 1; n <= p.n_max; ++n) {
      const auto s = identity_check(m, n);
      out.push_back(equal("identity m=" + std::to_string(m) + " n=" + std::to_string(n), s.rhs, s.lhs));
    }
  for (int n = 1; n <= std::min(p.n_max, p.m_max); ++n) {
    const auto s = identity_check(n, n);
    out.push_back(equal("identity m=n=" + std::to_string(n) + " lhs/n = C(2n,n)",
                        central_binomial(n), s.lhs / n));
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"bijection", "counts",     "codewords",
                                              "paths",     "reflection", "identity"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyParams& params) {
  std::vector<CheckResult> out;
  if (suite == "all") {
    for (const auto& name : suite_names()) {
      auto part = run_suite(name, params);
      out.insert(out.end(), part.begin(), part.end());
    }
  } else if (suite == "bijection") {
    bijection(params, out);
  } else if (suite == "counts") {
    counts(params, out);
  } else if (suite == "codewords") {
    codewords(params, out);
  } else if (suite == "paths") {
    paths(params, out);
  } else if (suite == "reflection") {
    reflection(params, out);
  } else if (suite == "identity") {
    identity(params, out);
  } else {
    throw InvalidInput("unknown suite '" + suite + "'");
  }
  return out;
}

}  // namespace cbperm
