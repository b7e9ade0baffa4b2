#include "cbperm/wilf.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <set>
#include <sstream>

#include "cbperm/errors.hpp"

namespace cbperm {

const std::vector<Permutation>& length4_patterns() {
  static const std::vector<Permutation> all = [] {
    std::vector<Permutation> out;
    std::vector<int> v{1, 2, 3, 4};
    do {
      out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
  }();
  return all;
}

std::vector<SymmetryClass> enumerate_quadruple_classes() {
  const auto& pats = length4_patterns();
  const int count = static_cast<int>(pats.size());
  // action[s][k]: index of the image of pattern k under symmetry s.
  std::array<std::array<int, 24>, 8> action{};
  for (int s = 0; s < 8; ++s)
    for (int k = 0; k < count; ++k) {
      const Permutation img = all_symmetries()[s].apply(pats[k]);
      action[s][k] = static_cast<int>(std::lower_bound(pats.begin(), pats.end(), img) - pats.begin());
    }

  using Quad = std::array<int, 4>;
  // Index order is lexicographic pattern order, so the least sorted index
  // tuple is the least sorted pattern list.
  std::map<Quad, int> orbit_sizes;
  for (int a = 0; a < count; ++a)
    for (int b = a + 1; b < count; ++b)
      for (int c = b + 1; c < count; ++c)
        for (int d = c + 1; d < count; ++d) {
          std::set<Quad> images;
          for (const auto& act : action) {
            Quad img{act[a], act[b], act[c], act[d]};
            std::sort(img.begin(), img.end());
            images.insert(img);
          }
          const Quad& least = *images.begin();
          if (least == Quad{a, b, c, d}) orbit_sizes[least] = static_cast<int>(images.size());
        }

  std::vector<SymmetryClass> out;
  out.reserve(orbit_sizes.size());
  for (const auto& [quad, size] : orbit_sizes)
    out.push_back({PatternSet({pats[quad[0]], pats[quad[1]], pats[quad[2]], pats[quad[3]]}), size});
  std::sort(out.begin(), out.end(), [](const SymmetryClass& x, const SymmetryClass& y) {
    return x.representative.canonical_key() < y.representative.canonical_key();
  });
  return out;
}

SequenceTarget central_binomial_target() {
  return {"central-binomial", [](int n) -> std::optional<Count> {
            if (n < 1 || n > 34) return std::nullopt;
            return central_binomial(n - 1);
          }};
}

SequenceTarget listed_target(std::string name, std::vector<Count> values) {
  return {std::move(name), [values = std::move(values)](int n) -> std::optional<Count> {
            if (n < 1 || n > static_cast<int>(values.size())) return std::nullopt;
            return values[n - 1];
          }};
}

std::string Verdict::label(const SequenceTarget& target) const {
  switch (kind) {
    case Kind::Matches:
      return "matches-" + target.name + "-prefix";
    case Kind::Diverges:
      return "diverges-at-n=" + std::to_string(diverges_at);
    case Kind::BudgetExceeded:
      break;
  }
  return "budget-exceeded";
}

Verdict classify(const AvoiderSequence& counts, bool budget_exceeded, const SequenceTarget& target) {
  for (int n = 1; n <= counts.n_max(); ++n) {
    const auto expected = target.expected(n);
    if (!expected) break;
    if (*expected != counts.count(n)) return {Verdict::Kind::Diverges, n};
  }
  if (budget_exceeded) return {Verdict::Kind::BudgetExceeded, 0};
  return {Verdict::Kind::Matches, 0};
}

int ScanResult::matches() const {
  return static_cast<int>(std::count_if(reports.begin(), reports.end(), [](const ClassReport& r) {
    return r.verdict.kind == Verdict::Kind::Matches;
  }));
}

ClassCache::ClassCache(ClassCache&& other) noexcept {
  std::lock_guard lock(other.mutex_);
  entries_ = std::move(other.entries_);
}

ClassCache& ClassCache::operator=(ClassCache&& other) noexcept {
  if (this != &other) {
    std::scoped_lock lock(mutex_, other.mutex_);
    entries_ = std::move(other.entries_);
  }
  return *this;
}

std::optional<std::vector<Count>> ClassCache::lookup(const std::string& key, int n_max) const {
  std::lock_guard lock(mutex_);
  auto it = entries_.find(key);
  if (it == entries_.end() || static_cast<int>(it->second.size()) < n_max) return std::nullopt;
  return std::vector<Count>(it->second.begin(), it->second.begin() + n_max);
}

void ClassCache::store(const std::string& key, const std::vector<Count>& counts) {
  std::lock_guard lock(mutex_);
  auto& slot = entries_[key];
  if (counts.size() > slot.size()) slot = counts;
}

std::size_t ClassCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

nlohmann::json ClassCache::to_json() const {
  std::lock_guard lock(mutex_);
  nlohmann::json entries = nlohmann::json::object();
  for (const auto& [key, counts] : entries_) entries[key] = counts;
  return {{"schema_version", kSchemaVersion}, {"entries", entries}};
}

ClassCache ClassCache::from_json(const nlohmann::json& j) {
  ClassCache cache;
  try {
    if (j.at("schema_version").get<int>() != kSchemaVersion)
      throw ParseError("unsupported cache schema_version " + j.at("schema_version").dump());
    for (const auto& [key, counts] : j.at("entries").items())
      cache.entries_[key] = counts.get<std::vector<Count>>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed cache: ") + e.what());
  }
  return cache;
}

ClassCache ClassCache::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) return {};
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("cache file " + path + " is not valid JSON: " + e.what());
  }
  return from_json(j);
}

void ClassCache::save(const std::string& path) const {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp);
    out << to_json().dump() << '\n';
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("cannot replace cache file " + path);
}

namespace {

ClassReport evaluate_one(const SymmetryClass& cls, int n_max, const SequenceTarget& target,
                         const ScanOptions& opts) {
  const std::string& key = cls.representative.canonical_key();
  if (opts.cache) {
    if (auto cached = opts.cache->lookup(key, n_max)) {
      AvoiderSequence seq{cls.representative, std::move(*cached)};
      Verdict v = classify(seq, false, target);
      return {key, cls, std::move(seq), v};
    }
  }
  BoundedSequence run = count_sequence_bounded(cls.representative, n_max, opts.enumeration);
  if (opts.cache && !run.budget_exceeded) opts.cache->store(key, run.sequence.counts);
  Verdict v = classify(run.sequence, run.budget_exceeded, target);
  return {key, cls, std::move(run.sequence), v};
}

void check_n_max(int n_max) {
  if (n_max < 1) throw DomainError("n_max must be >= 1");
}

}  // namespace

std::vector<ClassReport> evaluate_classes_serial(std::span<const SymmetryClass> classes, int n_max,
                                                 const SequenceTarget& target,
                                                 const ScanOptions& opts) {
  check_n_max(n_max);
  std::vector<ClassReport> out;
  out.reserve(classes.size());
  for (const auto& cls : classes) out.push_back(evaluate_one(cls, n_max, target, opts));
  return out;
}

std::vector<ClassReport> evaluate_classes_parallel(std::span<const SymmetryClass> classes,
                                                   int n_max, const SequenceTarget& target,
                                                   const ScanOptions& opts) {
  check_n_max(n_max);
  std::vector<std::optional<ClassReport>> slots(classes.size());
  const long count = static_cast<long>(classes.size());
  // Exceptions may not escape an OpenMP region; keep the first one.
  std::exception_ptr failure;
  std::mutex failure_mutex;
#pragma omp parallel for schedule(dynamic, 1)
  for (long k = 0; k < count; ++k) {
    try {
      slots[k] = evaluate_one(classes[k], n_max, target, opts);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<ClassReport> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

ScanResult scan_for_sequence(int n_max, const SequenceTarget& target, const ScanOptions& opts) {
  if (n_max < 4) throw DomainError("scan needs n_max >= 4");
  const auto classes = enumerate_quadruple_classes();
  ScanResult result;
  result.n_max = n_max;
  result.target_name = target.name;
  result.reports = evaluate_classes_parallel(classes, n_max, target, opts);
  result.total_classes = static_cast<int>(classes.size());
  for (const auto& c : classes) result.total_subsets += c.orbit_size;
  return result;
}

const std::vector<PatternSet>& candidate_pattern_sets() {
  static const std::vector<PatternSet> sets = [] {
    const char* lists[] = {
        "2431,4231,1432,4132", "3124,4123,3142,4132", "1234,1243,1324,1342",
        "1234,1243,1342,1423", "1234,1243,1342,2341", "1243,1324,1342,1423",
        "1243,1324,1342,1432", "1243,2143,2413,2431", "1324,1342,1423,1432",
        "1324,1342,1432,4132", "1342,1423,1432,2431", "1342,2413,2431,3142",
    };
    std::vector<PatternSet> out;
    for (const char* l : lists) out.push_back(parse_pattern_set(l));
    return out;
  }();
  return sets;
}

std::vector<ClassReport> verify_candidate_list(int n_max, const ScanOptions& opts) {
  if (n_max < 4) throw DomainError("candidate verification needs n_max >= 4");
  std::vector<SymmetryClass> classes;
  for (const auto& ps : candidate_pattern_sets())
    classes.push_back({ps, static_cast<int>(symmetry_orbit(ps).size())});
  return evaluate_classes_parallel(classes, n_max, central_binomial_target(), opts);
}

nlohmann::json to_json(const ClassReport& report, const SequenceTarget& target) {
  nlohmann::json patterns = nlohmann::json::array();
  for (const auto& p : report.cls.representative.patterns()) patterns.push_back(to_pattern_string(p));
  return {{"canonical_key", report.canonical_key},
          {"patterns", patterns},
          {"orbit_size", report.cls.orbit_size},
          {"counts", report.counts.counts},
          {"verdict", report.verdict.label(target)}};
}

nlohmann::json to_json(const ScanResult& result) {
  // Labels only depend on the target name.
  const SequenceTarget named{result.target_name, {}};
  nlohmann::json reports = nlohmann::json::array();
  for (const auto& r : result.reports) reports.push_back(to_json(r, named));
  return {{"n_max", result.n_max},
          {"target", result.target_name},
          {"total_subsets", result.total_subsets},
          {"total_classes", result.total_classes},
          {"matches", result.matches()},
          {"reports", reports}};
}

std::string to_csv(std::span<const ClassReport> reports, const SequenceTarget& target) {
  std::ostringstream out;
  out << "canonical_key,orbit_size,n,count,expected,verdict\n";
  for (const auto& r : reports) {
    const std::string label = r.verdict.label(target);
    for (int n = 1; n <= r.counts.n_max(); ++n) {
      const auto expected = target.expected ? target.expected(n) : std::nullopt;
      out << '"' << r.canonical_key << "\"," << r.cls.orbit_size << ',' << n << ','
          << r.counts.count(n) << ',' << (expected ? std::to_string(*expected) : "") << ','
          << label << '\n';
    }
  }
  return out.str();
}

}  // namespace cbperm
