#include "foxdiv_app/app.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <memory>
#include <optional>
#include <set>
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>
#include <sstream>

#include "foxdiv/foxdiv.hpp"

namespace foxdiv::app {

namespace {

using json = nlohmann::ordered_json;

spdlog::logger& log() {
  static auto logger = [] {
    auto l = std::make_shared<spdlog::logger>(
        "foxdiv", std::make_shared<spdlog::sinks::stderr_sink_mt>());
    l->set_pattern("[foxdiv %l] %v");
    return l;
  }();
  return *logger;
}

void configure_logging() {
  const char* env = std::getenv("FOXDIV_LOG");
  const std::string level = env ? env : "off";
  if (level == "debug") {
    log().set_level(spdlog::level::debug);
  } else if (level == "info") {
    log().set_level(spdlog::level::info);
  } else {
    log().set_level(spdlog::level::off);
  }
}

/// Thrown by verbs to end with a specific exit status after printing `message`.
struct Outcome {
  int code;
  std::string message;
};

struct Loaded {
  Presentation presentation;
  std::optional<FamilySpec> family;
};

Loaded load(const std::string& path) {
  ParsedInput input = parse_input(path);
  Loaded out;
  if (auto* fam = std::get_if<FamilySpec>(&input)) {
    out.presentation = build_family(*fam);
    out.family = *fam;
  } else {
    out.presentation = std::get<Presentation>(input);
  }
  log().info("loaded {} with {} generators and {} relators", path,
             out.presentation.alphabet.generator_count(),
             out.presentation.relators.size());
  return out;
}

std::shared_ptr<const GroupRing> make_ring(const Presentation& p,
                                           const CompletionLimits& limits) {
  auto ring = GroupRing::create(p, limits);
  const auto& stats = ring->system().stats();
  log().info("completion: {} rules, {} steps, {} compositions",
             ring->system().size(), stats.steps, stats.compositions);
  return ring;
}

Generator generator_named(const Presentation& p, const std::string& name) {
  if (name.empty()) {
    if (p.alphabet.generator_count() == 0) throw Error("no generators");
    return 0;
  }
  auto g = p.alphabet.find(name);
  if (!g) throw Error("unknown generator '" + name + "'");
  return *g;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string poly_text(const Polynomial& p, const Alphabet& a) {
  return to_string(p, a);
}

json poly_list(const std::vector<Polynomial>& ps, const Alphabet& a) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(poly_text(p, a));
  return out;
}

/// Writes a flat report either as `key: value` lines or as JSON.
class Report {
 public:
  explicit Report(bool as_json) : as_json_(as_json) {}

  void field(const std::string& key, const json& value) {
    doc_[key] = value;
    if (as_json_) return;
    if (value.is_string()) {
      text_ << key << ": " << value.get<std::string>() << "\n";
    } else if (value.is_array()) {
      for (std::size_t k = 0; k < value.size(); ++k) {
        text_ << key << "[" << (k + 1) << "]: " << scalar(value[k]) << "\n";
      }
    } else {
      text_ << key << ": " << scalar(value) << "\n";
    }
  }

  /// Multi-line text stored verbatim under `key`; text mode indents it.
  void block(const std::string& key, const std::string& text) {
    doc_[key] = text;
    if (as_json_) return;
    text_ << key << ":\n";
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);) {
      text_ << "  " << line << "\n";
    }
  }

  /// Text mode prints just this line instead of the fields.
  void plain(const std::string& line) {
    if (!as_json_) text_.str(line + "\n");
  }

  json& doc() { return doc_; }
  std::ostringstream& text() { return text_; }

  void write(std::ostream& out) const {
    if (as_json_) {
      out << doc_.dump(2) << "\n";
    } else {
      out << text_.str();
    }
  }

 private:
  static std::string scalar(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  }

  bool as_json_;
  json doc_ = json::object();
  std::ostringstream text_;
};

struct GlobalOptions {
  bool json = false;
  CompletionLimits limits;
};

void add_limit_options(CLI::App* cmd, GlobalOptions& g) {
  cmd->add_option("--max-steps", g.limits.max_steps, "Completion step limit")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-rules", g.limits.max_rules, "Completion rule limit")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-degree", g.limits.max_degree,
                  "Completion word-length limit")
      ->check(CLI::PositiveNumber);
}

// --------------------------------------------------------------------------
// Verbs

int cmd_normalform(const GlobalOptions& g, const std::string& file,
                   const std::string& word, std::ostream& out) {
  const Loaded in = load(file);
  const auto ring = make_ring(in.presentation, g.limits);
  const Alphabet& a = in.presentation.alphabet;
  const Word w = parse_word(word, a);
  Report r(g.json);
  r.field("command", "normalform");
  r.field("fingerprint", fingerprint(in.presentation));
  r.field("word", to_string(w, a));
  r.field("normal_form", to_string(ring->normal_form(w), a));
  r.plain(to_string(ring->normal_form(w), a));
  r.write(out);
  return exit_ok;
}

int cmd_complete(const GlobalOptions& g, const std::string& file,
                 std::ostream& out) {
  const Loaded in = load(file);
  const Presentation semigroup =
      in.presentation.kind == PresentationKind::group
          ? to_semigroup(in.presentation)
          : in.presentation;
  const Alphabet& a = in.presentation.alphabet;
  const RewriteSystem result = shirshov_complete(
      presentation_to_rules(semigroup, a), g.limits);
  const auto& stats = result.stats();
  log().info("completion finished with status {}", to_string(result.status()));

  Report r(g.json);
  r.field("command", "complete");
  r.field("fingerprint", fingerprint(in.presentation));
  r.field("status", std::string(to_string(result.status())));
  r.field("limit_hit", stats.limit_hit.empty() ? "none" : stats.limit_hit);
  r.field("max_rules", g.limits.max_rules);
  r.field("max_steps", g.limits.max_steps);
  r.field("max_degree", g.limits.max_degree);
  r.field("steps", stats.steps);
  r.field("compositions", stats.compositions);
  r.field("rules_added", stats.rules_added);
  r.field("rules_removed", stats.rules_removed);
  r.field("rule_count", result.size());
  std::vector<Polynomial> rules;
  for (const auto& rule : result.rules()) rules.push_back(rule.poly);
  r.field("rules", poly_list(rules, a));
  r.write(out);
  return result.status() == CompletionStatus::completed ? exit_ok
                                                        : exit_limit_exceeded;
}

int cmd_irr(const GlobalOptions& g, const std::string& file,
            std::size_t max_len, std::ostream& out) {
  const Loaded in = load(file);
  const auto ring = make_ring(in.presentation, g.limits);
  const Alphabet& a = in.presentation.alphabet;
  json words = json::array();
  for (const Word& w : irr_enumerate(ring->system(), max_len)) {
    words.push_back(to_string(w, a));
  }
  Report r(g.json);
  r.field("command", "irr");
  r.field("fingerprint", fingerprint(in.presentation));
  r.field("max_len", max_len);
  r.field("count", words.size());
  r.field("words", words);
  r.write(out);
  return exit_ok;
}

/// Generator names mentioned in a word literal, `first` leading.
Alphabet inferred_alphabet(const std::string& word, const std::string& first) {
  std::vector<std::string> names{first};
  std::set<std::string> seen{first};
  std::istringstream tokens(word);
  std::string token;
  while (tokens >> token) {
    if (token == "1") continue;
    std::string name = token.substr(0, token.find('^'));
    if (seen.insert(name).second) names.push_back(name);
  }
  return Alphabet(std::move(names), true);
}

int cmd_fox(const GlobalOptions& g, const std::string& file,
            const std::string& word, const std::string& gen,
            std::ostream& out) {
  Alphabet a;
  if (file.empty()) {
    a = inferred_alphabet(word, gen);
  } else {
    a = load(file).presentation.alphabet;
  }
  const Word w = parse_word(word, a);
  auto x = a.find(gen);
  if (!x) throw Error("unknown generator '" + gen + "'");
  const Polynomial d = fox_derivative(w, *x);
  Report r(g.json);
  r.field("command", "fox");
  r.field("word", to_string(w, a));
  r.field("generator", gen);
  r.field("derivative", poly_text(d, a));
  r.plain(poly_text(d, a));
  r.write(out);
  return exit_ok;
}

FactorizationReport factorization(const Loaded& in, const std::string& gen) {
  if (in.family && gen.empty()) return factor_derivatives(*in.family);
  return common_right_divisor(in.presentation,
                              generator_named(in.presentation, gen));
}

void factorization_fields(Report& r, const FactorizationReport& f,
                          const Alphabet& a) {
  r.field("generator", a.name(f.generator));
  r.field("f", poly_text(f.f, a));
  r.field("D", poly_list(f.D, a));
  r.field("exact", f.exact);
}

int cmd_factor(const GlobalOptions& g, const std::string& file,
               const std::string& gen, std::ostream& out) {
  const Loaded in = load(file);
  const Alphabet& a = in.presentation.alphabet;
  const FactorizationReport f = factorization(in, gen);
  Report r(g.json);
  r.field("command", "factor");
  r.field("fingerprint", fingerprint(in.presentation));
  r.block("presentation", format_presentation(in.presentation));
  factorization_fields(r, f, a);
  r.write(out);
  return f.exact ? exit_ok : exit_negative;
}

int cmd_classify(const GlobalOptions& g, const std::string& file,
                 std::size_t index, const std::string& f_text,
                 const std::string& gen, std::ostream& out) {
  const Loaded in = load(file);
  const Alphabet& a = in.presentation.alphabet;
  if (index == 0 || index > in.presentation.relators.size()) {
    throw Error("relator index " + std::to_string(index) + " out of range 1.." +
                std::to_string(in.presentation.relators.size()));
  }
  const Generator x =
      in.family && gen.empty() ? FamilySpec::x : generator_named(in.presentation, gen);
  const Polynomial f =
      f_text.empty() ? factorization(in, gen).f : parse_polynomial(f_text, a);
  const auto& rel = in.presentation.relators[index - 1];
  const Phi1Analysis an = analyze_phi1(rel.lhs, rel.rhs, x, f, a);
  Report r(g.json);
  r.field("command", "classify");
  r.field("fingerprint", fingerprint(in.presentation));
  r.field("relator", index);
  r.field("generator", a.name(x));
  r.field("f", poly_text(f, a));
  r.field("factorizable", an.factorizable);
  if (an.factorizable) {
    r.field("u", to_string(an.u, a));
    r.field("fbar", to_string(an.fbar, a));
    r.field("f1", poly_text(an.f1, a));
    r.field("phi1", poly_text(an.phi1, a));
  }
  r.field("tag", std::string(to_string(an.tag)));
  r.write(out);
  return an.factorizable ? exit_ok : exit_negative;
}

ChainVector read_beta(const std::string& path, const GroupRing& ring) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  ChainVector beta;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      beta.push_back(ring.parse(line));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), number, e.column());
    }
  }
  if (beta.size() != ring.relator_count()) {
    throw Error("beta file has " + std::to_string(beta.size()) +
                " entries, expected " + std::to_string(ring.relator_count()));
  }
  return beta;
}

json witness_json(const WitnessReport& w) {
  json beta = json::array();
  for (const auto& e : w.beta) beta.push_back(to_string(e));
  json out;
  out["beta"] = beta;
  out["A"] = to_string(w.A);
  out["B"] = to_string(w.B);
  out["product_zero"] = w.product_zero;
  out["nontrivial"] = w.nontrivial;
  return out;
}

struct WitnessArgs {
  std::string file;
  std::string gen;
  std::string beta_file;
  KernelSearchOptions search;
};

int cmd_witness(const GlobalOptions& g, const WitnessArgs& args,
                std::ostream& out) {
  const Loaded in = load(args.file);
  const Alphabet& a = in.presentation.alphabet;
  const auto ring = make_ring(in.presentation, g.limits);
  const FactorizationReport f = factorization(in, args.gen);

  std::vector<ChainVector> betas;
  if (!args.beta_file.empty()) {
    betas.push_back(read_beta(args.beta_file, *ring));
    if (!is_in_kernel_d1(*ring, betas.front())) {
      throw Outcome{exit_negative, "beta is not in the kernel of d1"};
    }
  } else {
    betas = search_kernel(*ring, args.search);
    log().info("kernel search found {} vectors", betas.size());
  }

  Report r(g.json);
  r.field("command", "witness");
  r.field("fingerprint", fingerprint(in.presentation));
  factorization_fields(r, f, a);
  if (args.beta_file.empty()) {
    r.field("support_len", args.search.support_len);
    r.field("coeff_bound", args.search.coeff_bound);
  }
  r.field("kernel_vectors", betas.size());
  json witnesses = json::array();
  std::size_t nontrivial = 0;
  for (std::size_t k = 0; k < betas.size(); ++k) {
    const WitnessReport w = verify_witness(*ring, betas[k], f);
    if (w.nontrivial && w.product_zero) ++nontrivial;
    witnesses.push_back(witness_json(w));
    if (!g.json) {
      auto& t = r.text();
      t << "witness " << (k + 1) << ":\n";
      for (std::size_t j = 0; j < w.beta.size(); ++j) {
        t << "  beta[" << (j + 1) << "]: " << to_string(w.beta[j]) << "\n";
      }
      t << "  A: " << to_string(w.A) << "\n";
      t << "  B: " << to_string(w.B) << "\n";
      t << "  product_zero: " << bool_text(w.product_zero) << "\n";
      t << "  nontrivial: " << bool_text(w.nontrivial) << "\n";
    }
  }
  r.doc()["witnesses"] = witnesses;
  r.field("nontrivial_witnesses", nontrivial);
  r.write(out);
  return nontrivial > 0 ? exit_ok : exit_negative;
}

int cmd_torsion(const GlobalOptions& g, long n, std::ostream& out) {
  if (n < 2) throw Error("torsion-check needs -n >= 2");
  const bool holds = torsion_identity_check(n);
  Report r(g.json);
  r.field("command", "torsion-check");
  r.field("n", n);
  r.field("holds", holds);
  r.plain(bool_text(holds));
  r.write(out);
  return holds ? exit_ok : exit_negative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  configure_logging();

  CLI::App cli("Fox calculus, Groebner-Shirshov completion and zero-divisor "
               "certificates for finitely presented groups",
               "foxdiv");
  cli.require_subcommand(1);
  cli.fallthrough();
  GlobalOptions g;
  cli.add_flag("--json", g.json, "Emit a JSON report");

  std::string file;
  std::string word;
  std::string gen;

  auto* normalform = cli.add_subcommand("normalform", "Normal form of a word");
  normalform->add_option("file", file, "Presentation or family file")->required();
  normalform->add_option("-w,--word", word, "Word literal")->required();
  add_limit_options(normalform, g);

  auto* complete = cli.add_subcommand("complete", "Shirshov completion report");
  complete->add_option("file", file, "Presentation or family file")->required();
  add_limit_options(complete, g);

  std::size_t max_len = 4;
  auto* irr = cli.add_subcommand("irr", "Irreducible words up to a length");
  irr->add_option("file", file, "Presentation or family file")->required();
  irr->add_option("--max-len", max_len, "Maximum word length");
  add_limit_options(irr, g);

  auto* fox = cli.add_subcommand("fox", "Fox derivative of a word");
  fox->add_option("file", file, "Optional presentation file for the alphabet");
  fox->add_option("-w,--word", word, "Word literal")->required();
  fox->add_option("-x,--generator", gen, "Generator to differentiate by")->required();

  auto* factor = cli.add_subcommand("factor", "Common right divisor of the derivatives");
  factor->add_option("file", file, "Presentation or family file")->required();
  factor->add_option("-x,--generator", gen, "Generator (presentations only)");

  std::size_t index = 0;
  std::string f_text;
  auto* classify = cli.add_subcommand("classify", "Leading-term case of phi_1");
  classify->add_option("file", file, "Presentation or family file")->required();
  classify->add_option("-i,--index", index, "Relator number (1-based)")->required();
  classify->add_option("--f", f_text, "Divisor polynomial (default: factor's f)");
  classify->add_option("-x,--generator", gen, "Generator");

  WitnessArgs wargs;
  auto* witness = cli.add_subcommand("witness", "Kernel search and zero-divisor certificates");
  witness->add_option("file", wargs.file, "Presentation or family file")->required();
  witness->add_option("--support-len", wargs.search.support_len,
                      "Maximum length of support words");
  witness->add_option("--coeff-bound", wargs.search.coeff_bound,
                      "Coefficient bound");
  witness->add_option("--beta", wargs.beta_file,
                      "File with one polynomial per relator");
  witness->add_option("-x,--generator", wargs.gen, "Generator");
  witness->add_option("--threads", wargs.search.threads, "Search threads")
      ->check(CLI::PositiveNumber);
  witness->add_option("--max-candidates", wargs.search.max_candidates,
                      "Search budget");
  add_limit_options(witness, g);

  long n = 0;
  auto* torsion = cli.add_subcommand("torsion-check",
                                     "(1 - g)(1 + ... + g^(n-1)) = 0 in Z[C_n]");
  torsion->add_option("-n", n, "Order of g")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    cli.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = cli.exit(e, out, err);
    return code == 0 ? exit_ok : exit_input_error;
  }

  try {
    if (*normalform) return cmd_normalform(g, file, word, out);
    if (*complete) return cmd_complete(g, file, out);
    if (*irr) return cmd_irr(g, file, max_len, out);
    if (*fox) return cmd_fox(g, file, word, gen, out);
    if (*factor) return cmd_factor(g, file, gen, out);
    if (*classify) return cmd_classify(g, file, index, f_text, gen, out);
    if (*witness) return cmd_witness(g, wargs, out);
    if (*torsion) return cmd_torsion(g, n, out);
  } catch (const Outcome& o) {
    err << "foxdiv: " << o.message << "\n";
    return o.code;
  } catch (const RingUnavailableError& e) {
    err << "foxdiv: limit_exceeded: " << e.what() << "\n";
    return exit_limit_exceeded;
  } catch (const SearchLimitError& e) {
    err << "foxdiv: limit_exceeded: " << e.what() << "\n";
    return exit_limit_exceeded;
  } catch (const NonMonicObstruction& e) {
    err << "foxdiv: " << e.what() << "\n";
    return exit_negative;
  } catch (const Error& e) {
    err << "foxdiv: error: " << e.what() << "\n";
    return exit_input_error;
  }
  return exit_input_error;
}

}  // namespace foxdiv::app
