#include "cbperm/avoiders.hpp"

#include <algorithm>
#include <bit>

#include "cbperm/errors.hpp"

namespace cbperm {

namespace {

constexpr int kMaxLength = 63;

// Mixed-radix code of the standardization of values[idx[0..len)].
std::uint64_t standard_code(std::span<const std::uint8_t> values, const int* idx, int len) {
  std::uint64_t code = 0;
  for (int t = len - 1; t >= 0; --t) {
    int rank = 0;
    for (int s = 0; s < len; ++s) rank += values[idx[s]] < values[idx[t]];
    code = code * static_cast<std::uint64_t>(len) + static_cast<std::uint64_t>(rank);
  }
  return code;
}

std::uint64_t gap_range(int lo, int hi) {
  // Bits lo..hi inclusive, hi <= 63.
  const std::uint64_t upto_hi = hi >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << (hi + 1)) - 1;
  return upto_hi & ~((std::uint64_t{1} << lo) - 1);
}

std::uint64_t all_gaps(int parent_len) { return gap_range(0, parent_len); }

void check_length(int n) {
  if (n < 1) throw DomainError("length must be >= 1, got " + std::to_string(n));
  if (n > kMaxLength) throw DomainError("length " + std::to_string(n) + " exceeds " +
                                        std::to_string(kMaxLength));
}

void check_budget(std::int64_t size, int n, const EnumerationOptions& opts) {
  if (size > opts.node_budget)
    throw ResourceLimit("node budget of " + std::to_string(opts.node_budget) +
                        " exceeded at n=" + std::to_string(n) + " (" + std::to_string(size) +
                        " permutations)");
}

// Level k as a flat array of k-byte rows.
struct Level {
  int length = 0;
  std::vector<std::uint8_t> rows;
  std::int64_t size() const { return length == 0 ? 0 : static_cast<std::int64_t>(rows.size()) / length; }
  std::span<const std::uint8_t> row(std::int64_t r) const {
    return {rows.data() + r * length, static_cast<std::size_t>(length)};
  }
};

Level root_level(bool allowed) {
  Level l;
  l.length = 1;
  if (allowed) l.rows.push_back(1);
  return l;
}

void append_child(Level& next, std::span<const std::uint8_t> parent, int gap) {
  const auto max = static_cast<std::uint8_t>(parent.size() + 1);
  next.rows.insert(next.rows.end(), parent.begin(), parent.begin() + gap);
  next.rows.push_back(max);
  next.rows.insert(next.rows.end(), parent.begin() + gap, parent.end());
}

template <typename Forbidden>
Level grow(const Level& level, Forbidden&& forbidden, const EnumerationOptions& opts) {
  Level next;
  next.length = level.length + 1;
  for (std::int64_t r = 0; r < level.size(); ++r) {
    auto parent = level.row(r);
    std::uint64_t allowed = ~forbidden(parent) & all_gaps(level.length);
    while (allowed) {
      int gap = std::countr_zero(allowed);
      allowed &= allowed - 1;
      append_child(next, parent, gap);
    }
    check_budget(next.size(), next.length, opts);
  }
  return next;
}

template <typename Forbidden>
std::int64_t count_children(const Level& level, Forbidden&& forbidden) {
  std::int64_t total = 0;
  for (std::int64_t r = 0; r < level.size(); ++r)
    total += std::popcount(~forbidden(level.row(r)) & all_gaps(level.length));
  return total;
}

// Fills seq.counts level by level so a budget failure leaves the completed
// prefix behind.
template <typename Forbidden>
void count_into(AvoiderSequence& seq, int n_max, const EnumerationOptions& opts,
                bool root_allowed, Forbidden&& forbidden) {
  check_length(n_max);
  Level level = root_level(root_allowed);
  seq.counts.push_back(level.size());
  for (int n = 2; n <= n_max; ++n) {
    if (n == n_max) {
      std::int64_t c = count_children(level, forbidden);
      check_budget(c, n, opts);
      seq.counts.push_back(c);
      break;
    }
    level = grow(level, forbidden, opts);
    seq.counts.push_back(level.size());
  }
}

template <typename Forbidden>
std::vector<Permutation> generate_with(int n, const EnumerationOptions& opts, bool root_allowed,
                                       Forbidden&& forbidden) {
  check_length(n);
  Level level = root_level(root_allowed);
  for (int k = 2; k <= n; ++k) {
    level = grow(level, forbidden, opts);
  }
  std::vector<Permutation> out;
  out.reserve(level.size());
  for (std::int64_t r = 0; r < level.size(); ++r) {
    auto row = level.row(r);
    out.emplace_back(std::vector<int>(row.begin(), row.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Reference check: materialize each child and run the full containment test.
struct FullCheck {
  const PatternSet* ps;
  std::uint64_t operator()(std::span<const std::uint8_t> parent) const {
    std::vector<int> base(parent.begin(), parent.end());
    std::uint64_t mask = 0;
    for (int gap = 0; gap <= static_cast<int>(parent.size()); ++gap) {
      std::vector<int> child = base;
      child.insert(child.begin() + gap, static_cast<int>(parent.size()) + 1);
      if (!avoids_all(Permutation(std::move(child)), *ps)) mask |= std::uint64_t{1} << gap;
    }
    return mask;
  }
};

bool root_avoids(const PatternSet& ps) { return avoids_all(Permutation{1}, ps); }

}  // namespace

ExtensionPlan::ExtensionPlan(const PatternSet& ps) {
  for (const auto& q : ps.patterns()) {
    const int k = q.size();
    if (k == 1) {
      forbid_all_ = true;
      root_allowed_ = false;
      continue;
    }
    std::vector<std::uint8_t> reduced;
    int split = 0;
    for (int pos = 1; pos <= k; ++pos) {
      if (q.at(pos) == k)
        split = pos - 1;
      else
        reduced.push_back(static_cast<std::uint8_t>(q.at(pos)));
    }
    const int len = k - 1;
    auto it = std::find_if(groups_.begin(), groups_.end(),
                           [&](const Group& g) { return g.reduced_length == len; });
    if (it == groups_.end()) {
      groups_.push_back(Group{len, {}});
      it = std::prev(groups_.end());
    }
    std::vector<int> idx(len);
    for (int t = 0; t < len; ++t) idx[t] = t;
    it->splits[standard_code(reduced, idx.data(), len)].push_back(split);
  }
  std::sort(groups_.begin(), groups_.end(),
            [](const Group& a, const Group& b) { return a.reduced_length < b.reduced_length; });
}

std::uint64_t ExtensionPlan::forbidden_gaps(std::span<const std::uint8_t> parent) const {
  const int m = static_cast<int>(parent.size());
  const std::uint64_t full = all_gaps(m);
  if (forbid_all_) return full;
  std::uint64_t mask = 0;
  int idx[kMaxLength + 1];
  for (const auto& g : groups_) {
    const int len = g.reduced_length;
    if (len > m) break;
    // Lexicographic walk over len-subsets of 0..m-1.
    for (int t = 0; t < len; ++t) idx[t] = t;
    while (true) {
      auto hit = g.splits.find(standard_code(parent, idx, len));
      if (hit != g.splits.end()) {
        for (int s : hit->second) {
          const int lo = s > 0 ? idx[s - 1] + 1 : 0;
          const int hi = s < len ? idx[s] : m;
          mask |= gap_range(lo, hi);
        }
        if (mask == full) return mask;
      }
      int t = len - 1;
      while (t >= 0 && idx[t] == m - len + t) --t;
      if (t < 0) break;
      ++idx[t];
      for (int u = t + 1; u < len; ++u) idx[u] = idx[u - 1] + 1;
    }
  }
  return mask;
}

std::vector<Permutation> generate_avoiders(const PatternSet& ps, int n,
                                           const EnumerationOptions& opts) {
  ExtensionPlan plan(ps);
  return generate_with(n, opts, plan.root_allowed(),
                       [&](std::span<const std::uint8_t> p) { return plan.forbidden_gaps(p); });
}

AvoiderSequence count_sequence(const PatternSet& ps, int n_max, const EnumerationOptions& opts) {
  AvoiderSequence seq{ps, {}};
  ExtensionPlan plan(ps);
  count_into(seq, n_max, opts, plan.root_allowed(),
             [&](std::span<const std::uint8_t> p) { return plan.forbidden_gaps(p); });
  return seq;
}

BoundedSequence count_sequence_bounded(const PatternSet& ps, int n_max,
                                       const EnumerationOptions& opts) {
  BoundedSequence out{AvoiderSequence{ps, {}}, false};
  ExtensionPlan plan(ps);
  try {
    count_into(out.sequence, n_max, opts, plan.root_allowed(),
               [&](std::span<const std::uint8_t> p) { return plan.forbidden_gaps(p); });
  } catch (const ResourceLimit&) {
    out.budget_exceeded = true;
  }
  return out;
}

std::vector<Permutation> generate_avoiders_reference(const PatternSet& ps, int n,
                                                     const EnumerationOptions& opts) {
  return generate_with(n, opts, root_avoids(ps), FullCheck{&ps});
}

AvoiderSequence count_sequence_reference(const PatternSet& ps, int n_max,
                                         const EnumerationOptions& opts) {
  AvoiderSequence seq{ps, {}};
  count_into(seq, n_max, opts, root_avoids(ps), FullCheck{&ps});
  return seq;
}

std::string to_csv(const AvoiderSequence& seq) {
  std::string out = "n,count\n";
  for (int n = 1; n <= seq.n_max(); ++n)
    out += std::to_string(n) + "," + std::to_string(seq.count(n)) + "\n";
  return out;
}

nlohmann::json to_json(const AvoiderSequence& seq) {
  nlohmann::json patterns = nlohmann::json::array();
  for (const auto& p : seq.pattern_set.patterns()) patterns.push_back(to_pattern_string(p));
  return {{"patterns", patterns}, {"counts", seq.counts}};
}

AvoiderSequence sequence_from_json(const nlohmann::json& j) {
  try {
    std::vector<Permutation> patterns;
    for (const auto& p : j.at("patterns")) patterns.push_back(parse_permutation(p.get<std::string>()));
    return AvoiderSequence{PatternSet(std::move(patterns)), j.at("counts").get<std::vector<Count>>()};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed sequence JSON: ") + e.what());
  }
}

}  // namespace cbperm
