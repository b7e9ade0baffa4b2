#include "cbperm/pattern_set.hpp"

#include <algorithm>

#include "cbperm/errors.hpp"

namespace cbperm {

Permutation Symmetry::apply(const Permutation& p) const {
  Permutation out = inverse ? cbperm::inverse(p) : p;
  if (reverse) out = cbperm::reverse(out);
  if (complement) out = cbperm::complement(out);
  return out;
}

std::string Symmetry::name() const {
  std::string s;
  if (inverse) s += "i";
  if (reverse) s += "r";
  if (complement) s += "c";
  return s.empty() ? "id" : s;
}

const std::array<Symmetry, 8>& all_symmetries() {
  static const std::array<Symmetry, 8> group = [] {
    std::array<Symmetry, 8> g;
    for (int bits = 0; bits < 8; ++bits)
      g[bits] = Symmetry{(bits & 4) != 0, (bits & 1) != 0, (bits & 2) != 0};
    return g;
  }();
  return group;
}

namespace {

std::string join(const std::vector<Permutation>& patterns) {
  std::string out;
  for (std::size_t k = 0; k < patterns.size(); ++k) {
    if (k > 0) out += ',';
    out += to_pattern_string(patterns[k]);
  }
  return out;
}

std::vector<Permutation> sorted_unique(std::vector<Permutation> patterns) {
  std::sort(patterns.begin(), patterns.end());
  patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
  return patterns;
}

std::vector<Permutation> image(const Symmetry& s, const std::vector<Permutation>& patterns) {
  std::vector<Permutation> out;
  out.reserve(patterns.size());
  for (const auto& p : patterns) out.push_back(s.apply(p));
  return sorted_unique(std::move(out));
}

}  // namespace

PatternSet::PatternSet(std::vector<Permutation> patterns)
    : patterns_(sorted_unique(std::move(patterns))) {
  if (patterns_.empty()) throw InvalidInput("pattern set must not be empty");
  for (const auto& p : patterns_)
    if (p.empty()) throw InvalidInput("patterns must have length >= 1");
  std::vector<Permutation> least = patterns_;
  for (const auto& s : all_symmetries()) {
    auto img = image(s, patterns_);
    if (img < least) least = std::move(img);
  }
  key_ = join(least);
}

std::string PatternSet::to_string() const { return join(patterns_); }

PatternSet apply(const Symmetry& s, const PatternSet& ps) {
  return PatternSet(image(s, ps.patterns()));
}

std::vector<PatternSet> symmetry_orbit(const PatternSet& ps) {
  std::vector<PatternSet> orbit;
  for (const auto& s : all_symmetries()) orbit.push_back(apply(s, ps));
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  return orbit;
}

bool avoids_all(const Permutation& perm, const PatternSet& ps) {
  return std::none_of(ps.patterns().begin(), ps.patterns().end(),
                      [&](const Permutation& q) { return contains_pattern(perm, q); });
}

PatternSet parse_pattern_set(std::string_view text) {
  std::vector<Permutation> patterns;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    std::string_view tok = text.substr(start, end == std::string_view::npos ? end : end - start);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (tok.empty()) throw ParseError("empty pattern in list '" + std::string(text) + "'");
    patterns.push_back(parse_permutation(tok));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return PatternSet(std::move(patterns));
}

}  // namespace cbperm
