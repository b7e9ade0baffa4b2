#include "cbperm/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "cbperm/errors.hpp"

namespace cbperm {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  for (int v : values_) {
    if (v < 1 || v > n || seen[v])
      throw InvalidInput("not a permutation of 1.." + std::to_string(n) + ": value " +
                         std::to_string(v));
    seen[v] = true;
  }
}

Permutation::Permutation(std::initializer_list<int> values)
    : Permutation(std::vector<int>(values)) {}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v), Unchecked{});
}

Permutation standardize(std::span<const int> values) {
  std::vector<int> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return values[a] < values[b]; });
  std::vector<int> out(values.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) out[order[rank]] = static_cast<int>(rank) + 1;
  return Permutation(std::move(out), Permutation::Unchecked{});
}

Permutation reverse(const Permutation& p) {
  std::vector<int> v(p.values_.rbegin(), p.values_.rend());
  return Permutation(std::move(v), Permutation::Unchecked{});
}

Permutation complement(const Permutation& p) {
  const int n = p.size();
  std::vector<int> v(p.values_);
  for (int& x : v) x = n - x + 1;
  return Permutation(std::move(v), Permutation::Unchecked{});
}

Permutation inverse(const Permutation& p) {
  std::vector<int> v(p.values_.size());
  for (int pos = 1; pos <= p.size(); ++pos) v[p.at(pos) - 1] = pos;
  return Permutation(std::move(v), Permutation::Unchecked{});
}

Permutation restrict_to(const Permutation& p, int m) {
  std::vector<int> v;
  v.reserve(std::max(m, 0));
  for (int x : p.values_)
    if (x <= m) v.push_back(x);
  return Permutation(std::move(v), Permutation::Unchecked{});
}

Permutation insert_max(const Permutation& p, int pos) {
  const int n = p.size();
  if (pos < 1 || pos > n + 1)
    throw DomainError("insert_max: position " + std::to_string(pos) + " outside 1.." +
                      std::to_string(n + 1));
  std::vector<int> v(p.values_);
  v.insert(v.begin() + (pos - 1), n + 1);
  return Permutation(std::move(v), Permutation::Unchecked{});
}

namespace {

// Backtracking over position subsequences. chosen[t] is the 0-based
// position matched to pattern entry t; a candidate is rejected as soon as
// its value is out of order with an earlier chosen entry.
bool extend_occurrence(std::span<const int> perm, std::span<const int> pattern,
                       std::vector<int>& chosen, int next_pos) {
  const std::size_t t = chosen.size();
  if (t == pattern.size()) return true;
  const int remaining = static_cast<int>(pattern.size() - t);
  for (int pos = next_pos; pos + remaining <= static_cast<int>(perm.size()); ++pos) {
    bool consistent = true;
    for (std::size_t s = 0; s < t && consistent; ++s)
      consistent = (perm[chosen[s]] < perm[pos]) == (pattern[s] < pattern[t]);
    if (!consistent) continue;
    chosen.push_back(pos);
    if (extend_occurrence(perm, pattern, chosen, pos + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

int parse_int(std::string_view token, std::string_view whole) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError("malformed permutation '" + std::string(whole) + "'");
  return v;
}

}  // namespace

std::optional<std::vector<int>> find_occurrence(const Permutation& perm,
                                                const Permutation& pattern) {
  std::vector<int> chosen;
  chosen.reserve(pattern.size());
  if (pattern.size() > perm.size()) return std::nullopt;
  if (!extend_occurrence(perm.values(), pattern.values(), chosen, 0)) return std::nullopt;
  for (int& c : chosen) ++c;
  return chosen;
}

bool contains_pattern(const Permutation& perm, const Permutation& pattern) {
  return find_occurrence(perm, pattern).has_value();
}

Permutation parse_permutation(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\n'))
    text.remove_suffix(1);
  std::vector<int> values;
  if (text.empty()) return Permutation{};
  const bool has_sep = text.find_first_of(",.") != std::string_view::npos;
  if (has_sep) {
    const char sep = text.find(',') != std::string_view::npos ? ',' : '.';
    std::size_t start = 0;
    while (true) {
      std::size_t end = text.find(sep, start);
      std::string_view tok = text.substr(start, end == std::string_view::npos ? end : end - start);
      while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
      while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
      values.push_back(parse_int(tok, text));
      if (end == std::string_view::npos) break;
      start = end + 1;
    }
  } else {
    if (text.size() > 9)
      throw ParseError("compact permutation form needs n <= 9; use commas for '" +
                       std::string(text) + "'");
    for (char c : text) {
      if (c < '0' || c > '9') throw ParseError("malformed permutation '" + std::string(text) + "'");
      values.push_back(c - '0');
    }
  }
  return Permutation(std::move(values));
}

std::string to_string(const Permutation& p) {
  std::string out;
  for (int pos = 1; pos <= p.size(); ++pos) {
    if (pos > 1) out += ',';
    out += std::to_string(p.at(pos));
  }
  return out;
}

std::string to_pattern_string(const Permutation& p) {
  const bool compact = p.size() <= 9;
  std::string out;
  for (int pos = 1; pos <= p.size(); ++pos) {
    if (!compact && pos > 1) out += '.';
    out += std::to_string(p.at(pos));
  }
  return out;
}

}  // namespace cbperm
