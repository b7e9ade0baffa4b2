#include "cbperm/codeword.hpp"

#include <algorithm>
#include <charconv>

#include "cbperm/errors.hpp"

namespace cbperm {

CodeLetter CodeLetter::position(int j) {
  if (j < 2) throw InvalidInput("integer code letters must be >= 2, got " + std::to_string(j));
  return CodeLetter(Kind::Position, j);
}

std::string CodeLetter::to_string() const {
  switch (kind_) {
    case Kind::Begin:
      return "B";
    case Kind::End:
      return "E";
    case Kind::Position:
      break;
  }
  return std::to_string(value_);
}

std::optional<CodeWordViolation> find_violation(std::span<const CodeLetter> letters) {
  for (std::size_t k = 0; k < letters.size(); ++k) {
    const int i = static_cast<int>(k) + 1;
    const CodeLetter& w = letters[k];
    if (!w.is_marker() && w.value() > i)
      return CodeWordViolation{1, i,
                               "C1: letter " + std::to_string(i) + " is " + w.to_string() +
                                   " but integer letters at position " + std::to_string(i) +
                                   " must lie in 2.." + std::to_string(i)};
    if (k == 0 || letters[k - 1].is_marker()) continue;
    if (w.is_marker())
      return CodeWordViolation{2, i,
                               "C2: marker " + w.to_string() + " at position " +
                                   std::to_string(i) + " follows an integer letter"};
    if (w.value() < letters[k - 1].value())
      return CodeWordViolation{3, i,
                               "C3: letter " + std::to_string(i) + " (" + w.to_string() +
                                   ") is smaller than the preceding letter (" +
                                   letters[k - 1].to_string() + ")"};
  }
  return std::nullopt;
}

bool validate(std::span<const CodeLetter> letters) { return !find_violation(letters); }

CodeWord::CodeWord(std::vector<CodeLetter> letters) : letters_(std::move(letters)) {
  if (auto v = find_violation(letters_)) throw InvalidInput("invalid code word: " + v->message);
}

int CodeWord::marker_length() const {
  auto it = std::find_if(letters_.begin(), letters_.end(),
                         [](const CodeLetter& l) { return !l.is_marker(); });
  return static_cast<int>(it - letters_.begin());
}

std::vector<int> CodeWord::tail() const {
  std::vector<int> out;
  for (int k = marker_length(); k < size(); ++k) out.push_back(letters_[k].value());
  return out;
}

const PatternSet& forbidden_patterns() {
  static const PatternSet ps({Permutation{2, 4, 3, 1}, Permutation{4, 2, 3, 1},
                              Permutation{1, 4, 3, 2}, Permutation{4, 1, 3, 2}});
  return ps;
}

int p_statistic(const Permutation& p) {
  const int n = p.size();
  if (n < 3) return 0;
  // suffix_min[k]: smallest value strictly right of 1-based position k.
  std::vector<int> suffix_min(n + 2, n + 1);
  for (int k = n - 1; k >= 1; --k) suffix_min[k] = std::min(suffix_min[k + 1], p.at(k + 1));
  int prefix_min = p.at(1);
  int best = 0;
  for (int k = 2; k < n; ++k) {
    if (p.at(k) > prefix_min && p.at(k) > suffix_min[k]) best = k;
    prefix_min = std::min(prefix_min, p.at(k));
  }
  return best;
}

namespace {

CodeWord encode_unchecked(const Permutation& p) {
  std::vector<CodeLetter> letters;
  for (int m = 2; m <= p.size(); ++m) {
    const Permutation r = restrict_to(p, m);
    const int stat = p_statistic(r);
    if (stat != 0)
      letters.push_back(CodeLetter::position(stat));
    else if (r.at(1) == m)
      letters.push_back(CodeLetter::begin());
    else
      letters.push_back(CodeLetter::end());
  }
  return CodeWord(std::move(letters));
}

std::string join_positions(const std::vector<int>& pos) {
  std::string out;
  for (std::size_t k = 0; k < pos.size(); ++k) out += (k ? "," : "") + std::to_string(pos[k]);
  return out;
}

}  // namespace

CodeWord encode(const Permutation& p) {
  if (p.empty()) throw DomainError("encode: permutation must have length >= 1");
  for (const auto& q : forbidden_patterns().patterns())
    if (auto occ = find_occurrence(p, q))
      throw InvalidInput("permutation " + to_string(p) + " contains forbidden pattern " +
                         to_pattern_string(q) + " at positions " + join_positions(*occ));
  return encode_unchecked(p);
}

Permutation decode(const CodeWord& w) {
  Permutation perm{1};
  int stat = 0;
  for (const CodeLetter& l : w.letters()) {
    const int len = perm.size();
    int pos = len + 1;
    switch (l.kind()) {
      case CodeLetter::Kind::Begin:
        pos = 1;
        break;
      case CodeLetter::Kind::End:
        break;
      case CodeLetter::Kind::Position:
        // A repeated letter means the maximum went to the end, which keeps
        // the statistic unchanged.
        if (l.value() != stat) {
          pos = l.value();
          stat = l.value();
        }
        break;
    }
    perm = insert_max(perm, pos);
  }
  return perm;
}

std::vector<CodeWord> enumerate_codewords(int n) {
  if (n < 0) throw DomainError("enumerate_codewords: negative length");
  std::vector<CodeWord> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<CodeLetter> letters(n, CodeLetter::begin());
  // Markers occupy positions 1..i; position 1 can never hold an integer.
  for (int i = 1; i <= n; ++i) {
    for (unsigned mask = 0; mask < (1u << i); ++mask) {
      for (int k = 0; k < i; ++k)
        letters[k] = (mask >> (i - 1 - k)) & 1 ? CodeLetter::end() : CodeLetter::begin();
      // Non-decreasing tail, letter at 1-based position q within 2..q.
      auto fill = [&](auto&& self, int q, int lo) -> void {
        if (q > n) {
          out.emplace_back(letters);
          return;
        }
        for (int j = lo; j <= q; ++j) {
          letters[q - 1] = CodeLetter::position(j);
          self(self, q + 1, j);
        }
      };
      fill(fill, i + 1, 2);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

CodeLetter parse_token(std::string_view tok, std::string_view whole) {
  if (tok == "B" || tok == "b") return CodeLetter::begin();
  if (tok == "E" || tok == "e") return CodeLetter::end();
  int v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError("malformed code word '" + std::string(whole) + "': bad letter '" +
                     std::string(tok) + "'");
  if (v < 2)
    throw InvalidInput("C1: integer letter " + std::to_string(v) + " in '" + std::string(whole) +
                       "' is below 2");
  return CodeLetter::position(v);
}

}  // namespace

std::vector<CodeLetter> parse_letters(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == ' ')) text.remove_suffix(1);
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  std::vector<CodeLetter> letters;
  if (text.empty()) return letters;
  if (text.find(',') == std::string_view::npos) {
    for (std::size_t k = 0; k < text.size(); ++k) letters.push_back(parse_token(text.substr(k, 1), text));
    return letters;
  }
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find(',', start);
    std::string_view tok = text.substr(start, end == std::string_view::npos ? end : end - start);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    letters.push_back(parse_token(tok, text));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return letters;
}

CodeWord parse_codeword(std::string_view text) { return CodeWord(parse_letters(text)); }

std::string to_string(const CodeWord& w) {
  std::string out;
  for (int i = 1; i <= w.size(); ++i) {
    if (i > 1) out += ',';
    out += w.at(i).to_string();
  }
  return out;
}

nlohmann::json to_json(const CodeWord& w) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& l : w.letters()) {
    if (l.is_marker())
      arr.push_back(l.to_string());
    else
      arr.push_back(l.value());
  }
  return arr;
}

CodeWord codeword_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("code word JSON must be an array");
  std::vector<CodeLetter> letters;
  for (const auto& e : j) {
    if (e.is_string())
      letters.push_back(parse_token(e.get<std::string>(), e.get<std::string>()));
    else if (e.is_number_integer())
      letters.push_back(parse_token(std::to_string(e.get<int>()), "JSON array"));
    else
      throw ParseError("code word JSON letters must be \"B\", \"E\" or integers");
  }
  return CodeWord(std::move(letters));
}

}  // namespace cbperm
