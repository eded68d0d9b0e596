// jwtl: projections, coefficients, tilings and verification suites from the command line.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 bound overflow,
// 4 engine not applicable to the diagram.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "jwtl/closed_forms.hpp"
#include "jwtl/histories.hpp"
#include "jwtl/json_io.hpp"
#include "jwtl/projections.hpp"
#include "jwtl/tikz.hpp"
#include "jwtl/verify.hpp"

using namespace jwtl;

namespace {

enum Exit { ok = 0, verify_failed = 1, usage = 2, overflow = 3, mismatch = 4 };

struct Failure {
  Exit code;
  std::string message;
};

[[noreturn]] void fail(Exit code, const std::string& message) { throw Failure{code, message}; }

int max_rank_bound() {
  const char* env = std::getenv("JWTL_MAX_RANK");
  if (!env || !*env) return 6;
  try {
    size_t used = 0;
    int v = std::stoi(env, &used);
    if (used == std::string(env).size() && v >= 1) return v;
  } catch (const std::exception&) {
  }
  fail(usage, "JWTL_MAX_RANK must be a positive integer");
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json qjson(const QRat& x) {
  Json j = to_json(x);
  j["expr"] = to_qint_string(x);
  return j;
}

Json summands_json(const std::vector<Summand>& s) {
  Json a = Json::array();
  for (const auto& t : s) a.push_back({{"label", t.label}, {"coef", qjson(t.value)}});
  return a;
}

Word parse_word_arg(const std::string& text, int max_index) {
  Word w;
  if (text != "-" && !text.empty()) {
    try {
      w = parse_word(text);
    } catch (const std::exception& e) {
      fail(usage, "malformed word '" + text + "': " + e.what());
    }
  }
  for (int s : w)
    if (s < 0 || s > max_index) fail(usage, "generator " + std::to_string(s) + " out of range 0.." + std::to_string(max_index));
  return w;
}

DyckPath parse_path(const std::string& text, int size) {
  if (text == "top") return DyckPath::top(size);
  try {
    return DyckPath(text);
  } catch (const std::exception& e) {
    fail(usage, "malformed Dyck path '" + text + "': " + e.what());
  }
}

std::vector<Chord> parse_chords(const std::string& text, int length) {
  std::vector<Chord> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) {
    Chord c{};
    char comma = 0, extra = 0;
    std::istringstream is(item);
    if (!(is >> c.a >> comma >> c.b) || comma != ',' || (is >> extra) || c.a < 1 || c.b <= c.a || c.b > length)
      fail(usage, "malformed chord '" + item + "', expected a,b with 1 <= a < b <= " + std::to_string(length));
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Terms ordered by word length, then word.
std::vector<std::pair<Word, TLElement::Terms::const_iterator>> ordered_terms(const TLElement& x) {
  std::vector<std::pair<Word, TLElement::Terms::const_iterator>> out;
  for (auto it = x.terms().begin(); it != x.terms().end(); ++it) out.push_back({reduced_word(it->first), it});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.first.size() != b.first.size() ? a.first.size() < b.first.size() : a.first < b.first;
  });
  return out;
}

std::string latex_word(const Word& w) {
  std::string s;
  for (int g : w) s += "E_{" + std::to_string(g) + "}";
  return s;
}

// ---------------------------------------------------------------------------

struct ProjectArgs {
  std::string type = "D";
  int n = -1;
  std::string format = "json";
};

int cmd_project(const ProjectArgs& a) {
  if (a.n < 0) fail(usage, "--n must be nonnegative");
  if (a.n > max_rank_bound()) fail(overflow, "n = " + std::to_string(a.n) + " exceeds the bound JWTL_MAX_RANK = " + std::to_string(max_rank_bound()));
  const bool d = a.type == "D";
  TLElement x = d ? compute_Q(a.n) : compute_P(a.n);
  const std::string name = (d ? "Q" : "P");
  auto terms = ordered_terms(x);
  if (a.format == "latex") {
    std::cout << name << "_{" << a.n << "} =";
    bool first = true;
    for (const auto& [w, it] : terms) {
      std::string c = to_latex(it->second);
      bool neg = c.rfind("-", 0) == 0;
      if (neg) c.erase(0, 1);
      std::string body = w.empty() ? c : (c == "1" ? "" : c + " ") + latex_word(w);
      std::cout << "\n  " << (first ? (neg ? "-" : "") : (neg ? "- " : "+ ")) << body;
      first = false;
    }
    std::cout << "\n";
    return ok;
  }
  Json j;
  j["type"] = a.type;
  j["n"] = a.n;
  j["rank"] = x.rank();
  j["size"] = x.size();
  j["terms"] = Json::array();
  for (const auto& [w, it] : terms)
    j["terms"].push_back({{"word", word_to_string(w)}, {"diagram", to_json(it->first)}, {"coef", qjson(it->second)}});
  emit(j);
  return ok;
}

struct CoefArgs {
  std::string word;
  int n = -1;
  std::string engine = "product";
  bool explain = false;
};

std::string tiling_label(const Tiling& t) { return to_string(t); }

int cmd_coef(const CoefArgs& a) {
  if (a.n < 0) fail(usage, "--n must be nonnegative");
  if (a.n > max_rank_bound()) fail(overflow, "n = " + std::to_string(a.n) + " exceeds the bound JWTL_MAX_RANK = " + std::to_string(max_rank_bound()));
  const int rank = q_rank(a.n);
  Word w = parse_word_arg(a.word, rank - 1);
  ScaledDiagram s = word_to_element(w, rank);
  const DecoratedDiagram& d = s.diagram;
  if (!s.scalar.is_one()) std::cerr << "note: the word is not reduced; reporting the coefficient of its diagram\n";

  auto need = [&](bool applicable, const std::string& what) {
    if (!applicable) fail(mismatch, "engine '" + a.engine + "' needs " + what);
  };
  if (a.engine != "product") need(a.n >= 1, "n >= 1");

  QRat value;
  std::vector<Summand> terms;
  Json extra;
  if (a.engine == "product") {
    value = compute_Q(a.n).coef(d);
    if (a.explain) terms = product_terms(a.n, d);
  } else if (a.engine == "even") {
    need(!d.is_odd(), "an even number of dots");
    value = coef_even_recursive(d);
    if (a.explain) terms = even_recursion_terms(d);
  } else if (a.engine == "odd" || a.engine == "mixed") {
    need(d.is_odd(), "exactly one dot");
    value = a.engine == "odd" ? coef_odd_recursive(d) : coef_mixed_recursive(d);
    if (a.explain) terms = a.engine == "odd" ? odd_recursion_terms(d) : mixed_recursion_terms(d);
  } else if (a.engine == "tiling") {
    if (d.is_odd()) {
      auto res = enumerate_bicolored(DyckPath(to_chord(d).path));
      int k = 0;
      for (const auto& h : res.accepted) {
        value += h.weight;
        terms.push_back({"history " + std::to_string(++k) + " green " + std::to_string(h.green) + " " + tiling_label(h.tiling), h.weight});
      }
      extra["histories"] = res.accepted.size();
      extra["rejected"] = res.rejected.size();
    } else {
      int admitted = 0, excluded = 0;
      for (const auto& t : even_tilings(d)) {
        if (!t.admissible) {
          ++excluded;
          continue;
        }
        ++admitted;
        value += t.weight;
        terms.push_back({"tiling " + tiling_label(t.tiling), t.weight});
      }
      extra["tilings"] = admitted;
      extra["excluded"] = excluded;
    }
  } else {
    auto c = closed_form_for(d);
    need(c.has_value(), "a word from one of the closed-form families");
    value = c->value;
    extra["family"] = pattern_name(c->pattern);
    extra["case"] = c->name;
  }

  Json j;
  j["word"] = word_to_string(w);
  j["n"] = a.n;
  j["engine"] = a.engine;
  j["diagram"] = to_json(d);
  if (!s.scalar.is_one()) j["word_scalar"] = qjson(s.scalar);
  j["coef"] = qjson(value);
  for (const auto& [k, v] : extra.items()) j[k] = v;
  if (a.explain) {
    if (!(sum_of(terms) == value)) fail(verify_failed, "summands do not add up to the coefficient");
    j["summands"] = summands_json(terms);
  }
  emit(j);
  return ok;
}

struct TilingsArgs {
  std::string lower, upper = "top", emit = "json", dotted;
  int size = 0;
  bool admissible = false;
};

int path_size_bound() { return max_rank_bound() + 1; }

int cmd_tilings(const TilingsArgs& a) {
  int size = a.size;
  if (a.lower != "top") size = static_cast<int>(a.lower.size() / 2);
  else if (a.upper != "top") size = static_cast<int>(a.upper.size() / 2);
  else if (size == 0) size = 1;
  if (size > path_size_bound()) fail(overflow, "path size exceeds JWTL_MAX_RANK + 1 = " + std::to_string(path_size_bound()));
  DyckPath lo = parse_path(a.lower, size), up = parse_path(a.upper, size);
  if (lo.size() != up.size()) fail(usage, "paths have different sizes");
  if (!path_leq(lo, up)) fail(usage, "the lower path must lie weakly below the upper path");
  auto dotted = parse_chords(a.dotted, lo.length());
  if (a.admissible && dotted.empty()) std::cerr << "note: --admissible without --dotted admits every tiling\n";

  std::vector<Tiling> ts;
  for (auto& t : enumerate_tilings(lo, up))
    if (!a.admissible || admissible_even(t, dotted)) ts.push_back(std::move(t));

  if (a.emit == "tikz") {
    std::vector<std::string> pics;
    for (const auto& t : ts) pics.push_back(tiling_tikz(t, {dotted, {}, 0.4, false}));
    std::cout << tikz_document(pics);
    return ok;
  }
  Json j;
  j["lower"] = lo.word();
  j["upper"] = up.word();
  if (!dotted.empty()) {
    j["dotted"] = Json::array();
    for (const auto& c : dotted) j["dotted"].push_back({c.a, c.b});
    j["admissible_only"] = a.admissible;
  }
  j["count"] = ts.size();
  if (a.emit == "json") {
    j["tilings"] = Json::array();
    for (const auto& t : ts) {
      Json tj = to_json(t);
      if (!dotted.empty()) tj["admissible"] = admissible_even(t, dotted);
      j["tilings"].push_back(tj);
    }
  }
  emit(j);
  return ok;
}

struct HistoriesArgs {
  std::string lower, emit = "json";
};

int cmd_histories(const HistoriesArgs& a) {
  if (static_cast<int>(a.lower.size() / 2) > path_size_bound())
    fail(overflow, "path size exceeds JWTL_MAX_RANK + 1 = " + std::to_string(path_size_bound()));
  DyckPath lo = parse_path(a.lower, 1);
  if (lo.is_top()) fail(usage, "the lower path must differ from the top path");
  BicoloredResult res = enumerate_bicolored(lo);

  if (a.emit == "tikz") {
    std::vector<std::string> pics;
    for (const auto& h : res.accepted) {
      TikzOptions opt;
      for (int k = 0; k < h.green; ++k)
        if (!h.entries[k].zero_length()) opt.trajectories.push_back({h.entries[k], k + 1 == h.green ? "green" : "red", true});
      pics.push_back(tiling_tikz(h.tiling, opt));
    }
    std::cout << tikz_document(pics);
    return ok;
  }
  QRat total;
  for (const auto& h : res.accepted) total += h.weight;
  Json j;
  j["lower"] = lo.word();
  j["count"] = res.accepted.size();
  j["rejected_count"] = res.rejected.size();
  j["total"] = qjson(total);
  if (a.emit == "json") {
    j["histories"] = Json::array();
    for (const auto& h : res.accepted) {
      Json red = Json::array();
      for (int k = 0; k + 1 < h.green; ++k)
        if (!h.entries[k].zero_length()) red.push_back(k + 1);
      j["histories"].push_back({{"tiling", to_json(h.tiling)},
                                {"green", h.green},
                                {"red", red},
                                {"doubled", h.doubled},
                                {"remainder", h.remainder.lower.word()},
                                {"weight", qjson(h.weight)}});
    }
    j["rejected"] = Json::array();
    for (const auto& r : res.rejected)
      j["rejected"].push_back({{"tiling", to_json(r.tiling)}, {"green", r.green}, {"counts", r.counts}});
  }
  emit(j);
  return ok;
}

Json big(const BigInt& x) { return x.fits_slong_p() ? Json(x.get_si()) : Json(x.get_str()); }

int cmd_dims(int rank) {
  if (rank < 1) fail(usage, "--rank must be positive");
  Dims d = dims(rank);
  emit({{"rank", rank}, {"even", big(d.even)}, {"odd", big(d.odd)}, {"total", big(d.total)}});
  return ok;
}

struct VerifyArgs {
  std::string suite = "all";
  int max_rank = 5;
  unsigned threads = 0;
};

int cmd_verify(const VerifyArgs& a) {
  if (a.max_rank < 2) fail(usage, "--max-rank must be at least 2");
  if (a.max_rank > max_rank_bound())
    fail(overflow, "max rank " + std::to_string(a.max_rank) + " exceeds the bound JWTL_MAX_RANK = " + std::to_string(max_rank_bound()));
  SuiteReport r = run_suite(a.suite, a.max_rank, a.threads);
  for (const auto& c : r.checks)
    std::cerr << (c.passed() ? "PASS " : "FAIL ") << c.suite << "/" << c.name << " (" << c.cases << " cases, " << c.seconds
              << " s)\n";
  emit(to_json(r));
  if (r.passed()) return ok;
  for (const auto& c : r.checks)
    if (!c.passed()) {
      std::cerr << "first counterexample in " << c.suite << "/" << c.name << ": " << c.counterexample->dump() << "\n";
      break;
    }
  return verify_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jones-Wenzl projections of types A and D, their coefficients and Dyck tiling generating functions"};
  app.require_subcommand(1);

  ProjectArgs pa;
  auto* project = app.add_subcommand("project", "Print a projection P_n (type A) or Q_n (type D)");
  project->add_option("--type", pa.type, "A or D")->check(CLI::IsMember({"A", "D"}));
  project->add_option("--n", pa.n, "Index of the projection")->required();
  project->add_option("--format", pa.format, "json or latex")->check(CLI::IsMember({"json", "latex"}));

  CoefArgs ca;
  auto* coef = app.add_subcommand("coef", "Coefficient of a word in Q_n");
  coef->add_option("--word", ca.word, "Comma-separated generator indices, '-' for the identity")->required();
  coef->add_option("--n", ca.n, "Index of the projection")->required();
  coef->add_option("--engine", ca.engine, "product, even, odd, mixed, tiling or closed")
      ->check(CLI::IsMember({"product", "even", "odd", "mixed", "tiling", "closed"}));
  coef->add_flag("--explain", ca.explain, "Print the summands of the engine");

  TilingsArgs ta;
  auto* tilings = app.add_subcommand("tilings", "Cover-inclusive Dyck tilings between two paths");
  tilings->add_option("--lower", ta.lower, "Dyck word over U, D or 'top'")->required();
  tilings->add_option("--upper", ta.upper, "Dyck word over U, D or 'top'");
  tilings->add_option("--size", ta.size, "Path size when both paths are 'top'")->check(CLI::PositiveNumber);
  tilings->add_option("--emit", ta.emit, "json, tikz or count")->check(CLI::IsMember({"json", "tikz", "count"}));
  tilings->add_option("--dotted", ta.dotted, "Dotted chords of the lower path, e.g. 1,2:5,6");
  tilings->add_flag("--admissible", ta.admissible, "Keep only tilings with no tile covering a dotted chord");

  HistoriesArgs ha;
  auto* histories = app.add_subcommand("histories", "Bicolored Hermite histories under the top path");
  histories->add_option("--lower", ha.lower, "Dyck word over U, D")->required();
  histories->add_option("--emit", ha.emit, "json, tikz or count")->check(CLI::IsMember({"json", "tikz", "count"}));

  int rank = 0;
  auto* dimsc = app.add_subcommand("dims", "Dimensions of the even, single-dot and full bases");
  dimsc->add_option("--rank", rank, "Rank")->required();

  VerifyArgs va;
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  auto* verify = app.add_subcommand("verify", "Run property suites");
  verify->add_option("--suite", va.suite, "Suite name or all")->check(CLI::IsMember(suites));
  verify->add_option("--max-rank", va.max_rank, "Largest diagram rank checked");
  verify->add_option("--threads", va.threads, "Worker threads, 0 for all cores");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage;
  }

  try {
    if (*project) return cmd_project(pa);
    if (*coef) return cmd_coef(ca);
    if (*tilings) return cmd_tilings(ta);
    if (*histories) return cmd_histories(ha);
    if (*dimsc) return cmd_dims(rank);
    if (*verify) return cmd_verify(va);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return verify_failed;
  }
  return usage;
}
