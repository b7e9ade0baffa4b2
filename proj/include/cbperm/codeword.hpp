#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cbperm/pattern_set.hpp"
#include "cbperm/permutation.hpp"

namespace cbperm {

/// B (insert at the front), E (insert at the end), or an insertion
/// position j >= 2.
class CodeLetter {
 public:
  enum class Kind { Begin, End, Position };

  static CodeLetter begin() { return CodeLetter(Kind::Begin, 0); }
  static CodeLetter end() { return CodeLetter(Kind::End, 0); }
  /// Throws InvalidInput when j < 2.
  static CodeLetter position(int j);

  Kind kind() const { return kind_; }
  bool is_marker() const { return kind_ != Kind::Position; }
  /// The integer value; 0 for markers.
  int value() const { return value_; }

  std::string to_string() const;

  friend bool operator==(const CodeLetter&, const CodeLetter&) = default;
  // B < E < 2 < 3 < ...
  friend auto operator<=>(const CodeLetter&, const CodeLetter&) = default;

 private:
  CodeLetter(Kind k, int v) : kind_(k), value_(v) {}
  Kind kind_;
  int value_;
};

/// Which code-word condition a letter sequence breaks, and where.
struct CodeWordViolation {
  int condition;    // 1, 2 or 3
  int position;     // 1-based index of the offending letter
  std::string message;
};

/// First violation of C1-C3, scanning left to right.
///   C1: letter i is B, E, or an integer j with 2 <= j <= i.
///   C2: an integer letter is followed by an integer letter.
///   C3: consecutive integer letters are non-decreasing.
std::optional<CodeWordViolation> find_violation(std::span<const CodeLetter> letters);

bool validate(std::span<const CodeLetter> letters);

/// A letter sequence known to satisfy C1-C3: an initial segment of markers
/// followed by a non-decreasing integer tail.
class CodeWord {
 public:
  CodeWord() = default;
  /// Throws InvalidInput naming the violated condition.
  explicit CodeWord(std::vector<CodeLetter> letters);

  int size() const { return static_cast<int>(letters_.size()); }
  /// 1-based.
  const CodeLetter& at(int i) const { return letters_[i - 1]; }
  std::span<const CodeLetter> letters() const { return letters_; }

  /// Length of the initial B/E segment.
  int marker_length() const;
  /// The integer letters, in order.
  std::vector<int> tail() const;

  friend bool operator==(const CodeWord&, const CodeWord&) = default;
  friend auto operator<=>(const CodeWord&, const CodeWord&) = default;

 private:
  std::vector<CodeLetter> letters_;
};

/// {2431, 4231, 1432, 4132}.
const PatternSet& forbidden_patterns();

/// Rightmost 1-based position whose value has a smaller value somewhere to
/// its left and somewhere to its right; 0 if there is none.
int p_statistic(const Permutation& p);

/// Throws InvalidInput (citing the pattern and its positions) when p
/// contains a forbidden pattern, DomainError when p is empty.
CodeWord encode(const Permutation& p);

/// Inverse of encode.
Permutation decode(const CodeWord& w);

/// All code words of length n, sorted.
std::vector<CodeWord> enumerate_codewords(int n);

/// "B,E,2,3,3,5,6,8" or the compact "BE233568" (only when every integer
/// letter is a single digit). Throws ParseError on unknown tokens. The
/// result is not validated against C1-C3.
std::vector<CodeLetter> parse_letters(std::string_view text);
CodeWord parse_codeword(std::string_view text);

std::string to_string(const CodeWord& w);

/// ["B","E",2,3,3,5,6,8]
nlohmann::json to_json(const CodeWord& w);
CodeWord codeword_from_json(const nlohmann::json& j);

}  // namespace cbperm
