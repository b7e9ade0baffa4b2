// Command-line front end: counting, the code-word bijection, invariant
// suites, the symmetry-class scan and lattice path renders.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cbperm/avoiders.hpp"
#include "cbperm/codeword.hpp"
#include "cbperm/errors.hpp"
#include "cbperm/render.hpp"
#include "cbperm/verify.hpp"
#include "cbperm/wilf.hpp"

namespace fs = std::filesystem;
using namespace cbperm;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitBudget = 3;

std::string default_cache_path() {
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
    return (fs::path(xdg) / "cbperm" / "classes.json").string();
  if (const char* home = std::getenv("HOME"); home && *home)
    return (fs::path(home) / ".cache" / "cbperm" / "classes.json").string();
  return "cbperm-classes.json";
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::vector<Count> read_target_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read target file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  for (char& c : text)
    if (c == ',') c = ' ';
  std::istringstream tokens(text);
  std::vector<Count> values;
  std::string tok;
  while (tokens >> tok) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ParseError("target file " + path + ": bad value '" + tok + "'");
    }
  }
  return values;
}

// "-" means one input per stdin line; an empty line is the empty word.
template <typename Fn>
void for_each_input(const std::string& arg, Fn&& fn) {
  if (arg != "-") {
    fn(arg);
    return;
  }
  std::string line;
  while (std::getline(std::cin, line)) fn(line);
}

struct CacheFlags {
  std::string path;
  bool disabled = false;
};

struct CacheSession {
  ClassCache cache;
  std::string path;
  bool enabled = false;

  explicit CacheSession(const CacheFlags& flags) {
    if (flags.disabled) return;
    enabled = true;
    path = flags.path.empty() ? default_cache_path() : flags.path;
    cache = ClassCache::load(path);
  }
  ClassCache* get() { return enabled ? &cache : nullptr; }
  void save() {
    if (!enabled) return;
    const fs::path p(path);
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    cache.save(path);
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutation class enumeration, the central-binomial code-word bijection and "
               "symmetry-class scans"};
  app.require_subcommand(1);

  std::string patterns_text, perm_text, word_text, format, out_path, suite = "all", target_file;
  int n_max = 0, m_max = 20, cell_size = 40;
  std::int64_t budget = EnumerationOptions{}.node_budget;
  bool allow_empty = false;
  CacheFlags cache_flags;

  auto* count = app.add_subcommand("count", "Count avoiders of a pattern set for n = 1..n-max");
  count->add_option("--patterns", patterns_text, "Comma-separated patterns, e.g. 2431,4231,1432,4132")
      ->required();
  count->add_option("--n-max", n_max, "Largest length")->required()->check(CLI::Range(1, 63));
  count->add_option("--format", format, "csv | json | lines")->check(CLI::IsMember({"csv", "json", "lines"}));
  count->add_option("--budget", budget, "Node budget per level");

  auto* gen = app.add_subcommand("generate", "List every avoider of length n, one per line");
  gen->add_option("--patterns", patterns_text, "Comma-separated patterns")->required();
  gen->add_option("--n", n_max, "Length")->required()->check(CLI::Range(1, 63));
  gen->add_option("--budget", budget, "Node budget per level");

  auto* enc = app.add_subcommand("encode", "Encode an avoider of 2431,4231,1432,4132 as a code word");
  enc->add_option("--perm", perm_text, "Permutation, e.g. 245178396 or 2,4,5,1,7,8,3,9,6; - reads one per line from stdin")->required();
  enc->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

  auto* dec = app.add_subcommand("decode", "Decode a code word into its permutation");
  dec->add_option("--word", word_text, "Code word, e.g. B,E,2,3,3,5,6,8; - reads one per line from stdin")->required();
  dec->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "Run invariant suites");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(suites));
  verify->add_option("--n-max", n_max, "Largest n checked")->check(CLI::Range(1, 30));
  verify->add_option("--m-max", m_max, "Largest m for the identity suite")->check(CLI::Range(1, 30));

  auto* scan = app.add_subcommand("scan", "Scan all symmetry classes of four length-4 patterns");
  scan->add_option("--n-max", n_max, "Largest length (default 9)")->check(CLI::Range(4, 63));
  scan->add_option("--out", out_path, "Report file (format from --format or the extension)");
  scan->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  scan->add_option("--target-file", target_file, "Expected counts for n = 1, 2, ... instead of C(2(n-1),n-1)");

  auto* cand = app.add_subcommand("candidates", "Check the twelve central-binomial candidate classes");
  cand->add_option("--n-max", n_max, "Largest length (default 10)")->check(CLI::Range(4, 63));
  cand->add_option("--out", out_path, "Report file");
  cand->add_option("--format", format, "lines | json | csv")->check(CLI::IsMember({"lines", "json", "csv"}));

  for (auto* sub : {scan, cand}) {
    sub->add_option("--cache", cache_flags.path, "Cache file (default: platform cache dir)");
    sub->add_flag("--no-cache", cache_flags.disabled, "Do not read or write the cache");
    sub->add_option("--budget", budget, "Node budget per level and class");
  }

  auto* render = app.add_subcommand("render", "Draw the lattice path of a code word's tail");
  render->add_option("--word", word_text, "Code word")->required();
  render->add_option("--format", format, "svg | ascii")->check(CLI::IsMember({"svg", "ascii"}));
  render->add_option("--out", out_path, "Output file (default stdout)");
  render->add_option("--cell-size", cell_size, "SVG pixels per unit")->check(CLI::Range(4, 400));
  render->add_flag("--allow-empty-path", allow_empty, "Render words without an integer tail");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    const EnumerationOptions enumeration{budget};

    if (*count) {
      const PatternSet ps = parse_pattern_set(patterns_text);
      const AvoiderSequence seq = count_sequence(ps, n_max, enumeration);
      if (format == "json") {
        std::cout << to_json(seq).dump() << '\n';
      } else if (format == "lines") {
        for (Count c : seq.counts) std::cout << c << '\n';
      } else {
        std::cout << to_csv(seq);
      }
    } else if (*gen) {
      for (const auto& p : generate_avoiders(parse_pattern_set(patterns_text), n_max, enumeration))
        std::cout << to_string(p) << '\n';
    } else if (*enc) {
      for_each_input(perm_text, [&](const std::string& text) {
        const CodeWord w = encode(parse_permutation(text));
        std::cout << (format == "json" ? to_json(w).dump() : to_string(w)) << '\n';
      });
    } else if (*dec) {
      for_each_input(word_text, [&](const std::string& text) {
        const auto letters = parse_letters(text);
        if (auto v = find_violation(letters)) throw InvalidInput("invalid code word: " + v->message);
        const Permutation p = decode(CodeWord(letters));
        if (format == "json")
          std::cout << nlohmann::json(std::vector<int>(p.values().begin(), p.values().end())).dump()
                    << '\n';
        else
          std::cout << to_string(p) << '\n';
      });
    } else if (*verify) {
      const auto results = run_suite(suite, VerifyParams{n_max > 0 ? n_max : 8, m_max});
      int failed = 0;
      for (const auto& r : results) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << "  expected=" << r.expected
                  << " actual=" << r.actual << '\n';
        failed += !r.pass;
      }
      std::cout << "checks=" << results.size() << " failed=" << failed << '\n';
      return failed == 0 ? kExitOk : kExitCheckFailed;
    } else if (*scan) {
      CacheSession session(cache_flags);
      const SequenceTarget target = target_file.empty()
                                        ? central_binomial_target()
                                        : listed_target("target", read_target_file(target_file));
      const ScanResult result = scan_for_sequence(n_max > 0 ? n_max : 9, target,
                                                  ScanOptions{enumeration, session.get()});
      session.save();
      if (!out_path.empty()) {
        const bool csv = format == "csv" || (format.empty() && fs::path(out_path).extension() == ".csv");
        write_output(csv ? to_csv(result.reports, target) : to_json(result).dump(2) + "\n", out_path);
      }
      std::cout << "classes=" << result.total_classes << " matches=" << result.matches() << '\n';
    } else if (*cand) {
      CacheSession session(cache_flags);
      const int n = n_max > 0 ? n_max : 10;
      const auto reports = verify_candidate_list(n, ScanOptions{enumeration, session.get()});
      session.save();
      const SequenceTarget target = central_binomial_target();
      std::string text;
      if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) arr.push_back(to_json(r, target));
        text = arr.dump(2) + "\n";
      } else if (format == "csv") {
        text = to_csv(reports, target);
      } else {
        for (const auto& r : reports) {
          std::string counts;
          for (Count c : r.counts.counts) counts += (counts.empty() ? "" : ",") + std::to_string(c);
          text += r.cls.representative.to_string() + " key=" + r.canonical_key +
                  " orbit=" + std::to_string(r.cls.orbit_size) + " verdict=" + r.verdict.label(target) +
                  " counts=" + counts + "\n";
        }
      }
      write_output(text, out_path);
      if (!out_path.empty()) {
        int matches = 0;
        for (const auto& r : reports) matches += r.verdict.kind == Verdict::Kind::Matches;
        std::cout << "candidates=" << reports.size() << " matches=" << matches << '\n';
      }
    } else if (*render) {
      const auto letters = parse_letters(word_text);
      if (auto v = find_violation(letters)) throw InvalidInput("invalid code word: " + v->message);
      RenderSpec spec{format == "ascii" ? RenderFormat::Ascii : RenderFormat::Svg, cell_size};
      write_output(render_codeword(CodeWord(letters), spec, allow_empty), out_path);
    }
  } catch (const ResourceLimit& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitOk;
}
