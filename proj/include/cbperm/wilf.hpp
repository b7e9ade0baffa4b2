#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "cbperm/avoiders.hpp"
#include "cbperm/pattern_set.hpp"

namespace cbperm {

/// A symmetry class: its canonical representative and orbit size.
struct SymmetryClass {
  PatternSet representative;
  int orbit_size = 0;
};

/// The 24 permutations of length 4 in lexicographic order.
const std::vector<Permutation>& length4_patterns();

/// One representative per orbit of 4-element subsets of the length-4
/// patterns under the symmetry group, sorted by canonical key.
std::vector<SymmetryClass> enumerate_quadruple_classes();

/// The expected sequence a scan compares against. `expected(n)` returns
/// nullopt when the target has no value for n, which stops the comparison.
struct SequenceTarget {
  std::string name;
  std::function<std::optional<Count>(int n)> expected;
};

/// counts[n] = C(2(n-1), n-1).
SequenceTarget central_binomial_target();
/// A fixed list of values for n = 1, 2, ...
SequenceTarget listed_target(std::string name, std::vector<Count> values);

struct Verdict {
  enum class Kind { Matches, Diverges, BudgetExceeded };
  Kind kind = Kind::Matches;
  int diverges_at = 0;  // first n with a mismatch, for Kind::Diverges

  /// "matches-<target>-prefix", "diverges-at-n=<k>" or "budget-exceeded".
  std::string label(const SequenceTarget& target) const;
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Prefix comparison of counts against the target. A mismatch found before
/// the budget ran out is reported as a divergence.
Verdict classify(const AvoiderSequence& counts, bool budget_exceeded, const SequenceTarget& target);

struct ClassReport {
  std::string canonical_key;
  SymmetryClass cls;
  AvoiderSequence counts;
  Verdict verdict;
};

struct ScanResult {
  int n_max = 0;
  std::string target_name;
  std::vector<ClassReport> reports;
  int total_subsets = 0;
  int total_classes = 0;

  int matches() const;
};

/// Per-class counts keyed by canonical key; a cached prefix of length >=
/// n_max answers a request without enumeration. Thread-safe.
class ClassCache {
 public:
  static constexpr int kSchemaVersion = 1;

  ClassCache() = default;
  ClassCache(ClassCache&& other) noexcept;
  ClassCache& operator=(ClassCache&& other) noexcept;

  std::optional<std::vector<Count>> lookup(const std::string& key, int n_max) const;
  /// Keeps the longer of the stored and the new sequence.
  void store(const std::string& key, const std::vector<Count>& counts);
  std::size_t size() const;

  nlohmann::json to_json() const;
  static ClassCache from_json(const nlohmann::json& j);

  /// A missing file yields an empty cache; a malformed one throws ParseError.
  static ClassCache load(const std::string& path);
  void save(const std::string& path) const;

 private:
  mutable std::mutex mutex_;
  std::map<std::string, std::vector<Count>> entries_;
};

struct ScanOptions {
  EnumerationOptions enumeration;
  ClassCache* cache = nullptr;
};

/// Evaluates every class, one after another. Reports keep input order.
std::vector<ClassReport> evaluate_classes_serial(std::span<const SymmetryClass> classes, int n_max,
                                                 const SequenceTarget& target,
                                                 const ScanOptions& opts = {});

/// Same contract as evaluate_classes_serial, classes distributed over
/// OpenMP threads. Output is identical regardless of thread count.
std::vector<ClassReport> evaluate_classes_parallel(std::span<const SymmetryClass> classes,
                                                   int n_max, const SequenceTarget& target,
                                                   const ScanOptions& opts = {});

/// Full scan over all quadruple classes. n_max >= 4.
ScanResult scan_for_sequence(int n_max, const SequenceTarget& target,
                             const ScanOptions& opts = {});

/// The twelve quadruples conjectured to be counted by central binomial
/// coefficients, in the order they are usually listed.
const std::vector<PatternSet>& candidate_pattern_sets();

/// Reports for the twelve candidates against central_binomial_target().
std::vector<ClassReport> verify_candidate_list(int n_max, const ScanOptions& opts = {});

nlohmann::json to_json(const ScanResult& result);
nlohmann::json to_json(const ClassReport& report, const SequenceTarget& target);
/// Rows of canonical_key,orbit_size,n,count,expected,verdict.
std::string to_csv(std::span<const ClassReport> reports, const SequenceTarget& target);

}  // namespace cbperm
