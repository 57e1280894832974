#include "diffalg/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "diffalg/equivalence.hpp"
#include "diffalg/error.hpp"
#include "diffalg/models.hpp"
#include "diffalg/numeric.hpp"
#include "diffalg/parser.hpp"
#include "diffalg/proof.hpp"
#include "diffalg/semantics.hpp"

namespace diffalg::cli {

namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

// Outcome of one subcommand before formatting.
struct Outcome {
  int code = kOk;
  Json payload = Json::object();
  std::string diagnostic;
};

// Failures that map to exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json assignment_json(const Assignment& sigma) {
  Json j = Json::object();
  for (const auto& [name, bit] : sigma) j[name] = bit ? 1 : 0;
  return j;
}

Json witness_json(const LawVerdict& v) {
  Json j;
  j["verdict"] = v.holds ? "HOLDS" : "FAILS";
  if (!v.holds) j["witness"] = v.witness;
  return j;
}

std::string verdict_word(bool ok) { return ok ? "proved" : "failed"; }

Json verdict_json(const std::string& name, const ReplayVerdict& v, std::optional<bool> semantic) {
  Json j;
  j["name"] = name;
  j["verdict"] = verdict_word(v.proved);
  if (!v.proved) {
    j["failed_step"] = v.failed_step;
    j["error"] = std::string(to_string(v.error.value_or(ErrorKind::not_proved)));
    j["reason"] = v.reason;
  }
  if (semantic) j["semantically_valid"] = *semantic;
  return j;
}

Outcome cmd_parse(const std::string& src) {
  Term t = parse_term(src);
  Term core = desugar(t);
  Outcome o;
  o.payload["input"] = src;
  o.payload["rendered"] = render_term(t);
  o.payload["core"] = render_term(core);
  o.payload["core_size"] = core.size();
  return o;
}

Outcome cmd_table(const std::string& src) {
  Term t = parse_term(src);
  auto table = truth_table(t);
  Outcome o;
  o.payload["term"] = render_term(t);
  o.payload["vars"] = table.vars;
  o.payload["bits"] = table.bit_string();
  return o;
}

Outcome cmd_equiv(const std::string& src) {
  Relation r = parse_relation(src);
  if (r.op() != RelOp::eq) throw UsageError("equiv expects a single equation '<term> = <term>'");
  Outcome o;
  o.payload["lhs"] = render_term(r.lhs());
  o.payload["rhs"] = render_term(r.rhs());
  o.payload["vars"] = merge_vars(free_vars(r.lhs()), free_vars(r.rhs()));
  auto cex = identity_counterexample(r.lhs(), r.rhs());
  o.payload["verdict"] = cex ? "not-equivalent" : "equivalent";
  if (cex) {
    o.payload["counterexample"] = assignment_json(*cex);
    o.payload["lhs_value"] = eval_core(desugar(r.lhs()), *cex) ? 1 : 0;
    o.payload["rhs_value"] = eval_core(desugar(r.rhs()), *cex) ? 1 : 0;
    o.code = kDomainFailure;
    o.diagnostic = "not equivalent";
  }
  return o;
}

Outcome cmd_equiv_rel(const std::string& a_src, const std::string& b_src) {
  Relation a = parse_relation(a_src);
  Relation b = parse_relation(b_src);
  auto v = equivalent(a, b);
  Outcome o;
  o.payload["first"] = render_relation(a);
  o.payload["second"] = render_relation(b);
  o.payload["first_equation"] = render_term(equation_of(a).body, RenderStyle::readable);
  o.payload["second_equation"] = render_term(equation_of(b).body, RenderStyle::readable);
  o.payload["verdict"] = v.equivalent ? "equivalent" : "not-equivalent";
  if (!v.equivalent) {
    o.payload["counterexample"] = assignment_json(*v.counterexample);
    o.payload["holds"] = v.first_holds ? "first" : "second";
    o.code = kDomainFailure;
    o.diagnostic = "relations are not equivalent";
  }
  return o;
}

Json corpus_json(const CorpusReport& report) {
  Json lemmas = Json::array();
  for (const auto& e : report.entries) lemmas.push_back(verdict_json(e.name, e.verdict, e.semantically_valid));
  return lemmas;
}

Outcome cmd_corpus(const fs::path& file) {
  auto scripts = parse_proof_corpus(read_file(file));
  auto report = verify_corpus(scripts);
  Outcome o;
  o.payload["file"] = file.string();
  o.payload["total"] = report.entries.size();
  o.payload["proved"] = report.proved();
  o.payload["failed"] = report.failed();
  o.payload["cross_check"] = report.all_ok() ? "pass" : "fail";
  o.payload["lemmas"] = corpus_json(report);
  if (!report.all_ok()) {
    o.code = kDomainFailure;
    o.diagnostic = std::to_string(report.failed()) + " lemma(s) failed";
  }
  return o;
}

Outcome cmd_prove(const fs::path& file, const std::optional<fs::path>& registry_file) {
  RuleRegistry registry = builtin_registry();
  Outcome o;
  if (registry_file) {
    auto base = verify_corpus(parse_proof_corpus(read_file(*registry_file)));
    for (const auto& e : base.entries) {
      if (!e.verdict.proved) {
        throw UsageError("registry lemma '" + e.name + "' does not replay: " + e.verdict.reason);
      }
    }
    for (const auto& s : parse_proof_corpus(read_file(*registry_file))) {
      registry = register_lemma(registry, s);
    }
    o.payload["registry_lemmas"] = base.entries.size();
  }
  auto scripts = parse_proof_corpus(read_file(file));
  if (scripts.empty()) throw UsageError(file.string() + " contains no lemma");
  auto report = verify_corpus(scripts, registry);
  o.payload["file"] = file.string();
  o.payload["lemmas"] = corpus_json(report);
  if (!report.all_ok()) {
    o.code = kDomainFailure;
    o.diagnostic = "proof failed";
  }
  return o;
}

Outcome cmd_derive(const std::string& src) {
  Relation r = parse_relation(src);
  Equation eq = equation_of(r);
  Dnf dnf = to_dnf(eq);
  Outcome o;
  o.payload["relation"] = render_relation(r);
  o.payload["equation"] = render_term(eq.body, RenderStyle::readable);
  Json imps = Json::array();
  for (const auto& i : dnf.implicants) imps.push_back(i.to_string());
  o.payload["implicants"] = imps;
  o.payload["minimized_equation"] = render_term(dnf_term(dnf), RenderStyle::readable);
  if (dnf.is_one()) {
    o.payload["equivalent_relation"] = "unsatisfiable";
    o.code = kDomainFailure;
    o.diagnostic = "the relation never holds";
    return o;
  }
  Relation out = relation_of(dnf);
  o.payload["equivalent_relation"] = render_relation(out);
  o.payload["check"] = equivalent(r, out).equivalent ? "equivalent" : "not-equivalent";
  return o;
}

Outcome cmd_numeric(const std::string& mode_text, std::size_t samples, std::uint64_t seed) {
  NumericMode mode = mode_text == "sum" ? NumericMode::sum : NumericMode::mod;
  auto matrix = numeric_matrix(mode, samples, seed);
  Outcome o;
  o.payload["mode"] = std::string(to_string(mode));
  o.payload["samples"] = samples;
  o.payload["seed"] = seed;
  Json props = Json::array();
  std::size_t holding = 0;
  for (const auto& v : matrix.verdicts) {
    Json p;
    p["property"] = std::string(property_label(v.property));
    p["name"] = std::string(property_name(v.property));
    p["verdict"] = v.holds ? "HOLDS" : "FAILS";
    if (!v.holds) p["counterexample"] = v.counterexample;
    props.push_back(p);
    holding += v.holds ? 1 : 0;
  }
  o.payload["holds"] = holding;
  o.payload["fails"] = kPropertyCount - holding;
  o.payload["properties"] = props;
  return o;
}

std::vector<Axiom> parse_axiom_list(const std::string& text) {
  std::vector<Axiom> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto a = parse_axiom(item);
    if (!a) throw UsageError("unknown axiom '" + item + "'");
    out.push_back(*a);
  }
  return out;
}

std::string mask_name(unsigned mask) {
  std::string out;
  for (std::size_t i = 0; i < kAllAxioms.size(); ++i) {
    if (!(mask & (1u << i))) continue;
    if (!out.empty()) out += ',';
    out += to_string(kAllAxioms[i]);
  }
  return out.empty() ? "none" : out;
}

Outcome cmd_models(std::size_t size, const std::optional<std::string>& axioms) {
  if (size < 2) throw UsageError("--size must be at least 2");
  auto summary = summarize_models(size);
  Outcome o;
  o.payload["size"] = size;
  o.payload["total"] = summary.total;
  if (axioms) {
    auto required = parse_axiom_list(*axioms);
    o.payload["axioms"] = *axioms;
    o.payload["satisfying"] = summary.satisfying(required);
  }
  Json subsets = Json::array();
  for (unsigned mask = 0; mask < summary.by_mask.size(); ++mask) {
    Json row;
    row["holding"] = mask_name(mask);
    row["count"] = summary.by_mask[mask];
    subsets.push_back(row);
  }
  o.payload["subsets"] = subsets;
  return o;
}

Json report_json(const AxiomReport& report) {
  Json j;
  for (auto a : kAllAxioms) j[std::string(to_string(a))] = witness_json(report[a]);
  return j;
}

Outcome cmd_independence(const std::string& target_text, std::size_t size, std::uint64_t budget,
                         std::uint64_t seed) {
  auto target = parse_axiom(target_text);
  if (!target || *target == Axiom::zero_law) throw UsageError("--target must be I, II or III");
  auto result = independence_search(*target, size, budget, seed);
  Outcome o;
  o.payload["target"] = target_text;
  o.payload["size"] = size;
  o.payload["mode"] = result.exhaustive ? "exhaustive" : "random";
  if (!result.exhaustive) {
    o.payload["budget"] = budget;
    o.payload["seed"] = seed;
  }
  o.payload["examined"] = result.examined;
  o.payload["found"] = result.model.has_value();
  if (result.model) {
    o.payload["position"] = result.position;
    Json rows = Json::array();
    for (std::size_t x = 0; x < result.model->size; ++x) {
      std::vector<int> row;
      for (std::size_t y = 0; y < result.model->size; ++y) row.push_back(result.model->diff(x, y));
      rows.push_back(row);
    }
    o.payload["zero"] = result.model->zero;
    o.payload["one"] = result.model->one;
    o.payload["table"] = rows;
    o.payload["report"] = report_json(result.report);
  }
  return o;
}

Outcome cmd_ring_audit(unsigned width) {
  if (width < 1 || width > 3) throw UsageError("--width must be in 1..3");
  auto report = ring_audit(width);
  Outcome o;
  o.payload["width"] = width;
  Json laws = Json::array();
  for (const auto& [name, verdict] : report.laws()) {
    Json j = witness_json(*verdict);
    j["law"] = std::string(name);
    laws.push_back(j);
  }
  o.payload["laws"] = laws;
  o.payload["notes"] = report.notes;
  return o;
}

Outcome cmd_relations(const fs::path& file) {
  std::istringstream lines(read_file(file));
  std::string line;
  Json rows = Json::array();
  std::size_t passed = 0, total = 0, lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    std::stringstream ss(line);
    std::string col;
    while (std::getline(ss, col, '\t')) cols.push_back(col);
    if (cols.size() != 3 || (cols[2] != "equivalent" && cols[2] != "not-equivalent")) {
      throw UsageError(file.string() + ":" + std::to_string(lineno) +
                       ": expected <relation> TAB <relation> TAB equivalent|not-equivalent");
    }
    auto v = equivalent(parse_relation(cols[0]), parse_relation(cols[1]));
    std::string got = v.equivalent ? "equivalent" : "not-equivalent";
    Json row;
    row["first"] = cols[0];
    row["second"] = cols[1];
    row["expected"] = cols[2];
    row["verdict"] = got;
    rows.push_back(row);
    ++total;
    passed += got == cols[2] ? 1 : 0;
  }
  Outcome o;
  o.payload["file"] = file.string();
  o.payload["total"] = total;
  o.payload["passed"] = passed;
  o.payload["rows"] = rows;
  if (passed != total) {
    o.code = kDomainFailure;
    o.diagnostic = std::to_string(total - passed) + " relation pair(s) disagree with the fixture";
  }
  return o;
}

void flatten(const Json& j, const std::string& prefix, std::map<std::string, std::string>& out,
             std::vector<std::pair<std::string, std::string>>* ordered) {
  auto emit = [&](const std::string& key, const std::string& value) {
    out[key] = value;
    if (ordered) ordered->emplace_back(key, value);
  };
  if (j.is_object()) {
    if (j.empty() && !prefix.empty()) emit(prefix, "{}");
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out, ordered);
  } else if (j.is_array()) {
    if (j.empty()) emit(prefix, "[]");
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), out, ordered);
  } else if (j.is_string()) {
    emit(prefix, j.get<std::string>());
  } else {
    emit(prefix, j.dump());
  }
}

void emit_record(std::ostream& out, bool machine, const std::string& command, const Outcome& o) {
  Json record;
  record["command"] = command;
  record["status"] = o.code == kOk ? "ok" : "error";
  record["payload"] = o.payload;
  if (machine) {
    out << record.dump() << '\n';
    return;
  }
  std::map<std::string, std::string> sink;
  std::vector<std::pair<std::string, std::string>> ordered;
  flatten(record, "", sink, &ordered);
  for (const auto& [k, v] : ordered) out << k << ": " << v << '\n';
}

fs::path in_fixtures(const std::string& file, const std::string& fixtures) {
  fs::path p(file);
  if (p.is_relative() && !fs::exists(p) && !fixtures.empty() && fs::exists(fs::path(fixtures) / p)) {
    return fs::path(fixtures) / p;
  }
  return p;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Workbench for the difference algebra: parsing, truth tables, proof replay, "
               "relation equivalence, numeric and finite-model checks.",
               "diffalg"};
  app.require_subcommand(1);
  std::string format = "text";
  std::string fixtures = "fixtures";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--fixtures", fixtures, "Fixture directory for relative file arguments");

  std::string term, goal, rel_a, rel_b, file, registry, mode = "mod", target, axioms;
  std::size_t samples = 10000, size = 2;
  std::uint64_t seed = 0, budget = 1000000;
  unsigned width = 1;

  auto* parse = app.add_subcommand("parse", "Echo canonical rendering and core desugaring");
  parse->add_option("term", term)->required();
  auto* table = app.add_subcommand("table", "Truth table, row 0 first");
  table->add_option("term", term)->required();
  auto* equiv = app.add_subcommand("equiv", "Check an identity '<t1> = <t2>'");
  equiv->add_option("goal", goal)->required();
  auto* equiv_rel = app.add_subcommand("equiv-rel", "Decide whether two relations are equivalent");
  equiv_rel->add_option("first", rel_a)->required();
  equiv_rel->add_option("second", rel_b)->required();
  auto* prove = app.add_subcommand("prove", "Replay proof scripts");
  prove->add_option("script", file)->required();
  auto* registry_opt = prove->add_option("--registry", registry, "Corpus whose lemmas may be cited");
  auto* corpus = app.add_subcommand("corpus", "Replay a proof corpus in order");
  corpus->add_option("file", file);
  auto* derive = app.add_subcommand("derive", "Equation, minimized form and equivalent inclusions");
  derive->add_option("relation", rel_a)->required();
  auto* numeric = app.add_subcommand("numeric-matrix", "Real-number readings of the modular difference laws");
  numeric->add_option("--mode", mode)->check(CLI::IsMember({"mod", "sum"}));
  numeric->add_option("--samples", samples)->check(CLI::PositiveNumber);
  numeric->add_option("--seed", seed);
  auto* models = app.add_subcommand("models", "Axiom satisfaction counts over all tables of one size");
  models->add_option("--size", size)->required();
  auto* axioms_opt = models->add_option("--axioms", axioms, "Comma-separated, e.g. I,II,III");
  auto* independence = app.add_subcommand("independence", "Search a countermodel for one axiom");
  independence->add_option("--target", target)->required()->check(CLI::IsMember({"I", "II", "III"}));
  independence->add_option("--size", size)->required();
  independence->add_option("--budget", budget);
  independence->add_option("--seed", seed);
  auto* ring = app.add_subcommand("ring-audit", "Ring laws for symmetric difference on a powerset");
  ring->add_option("--width", width)->required();
  auto* relations = app.add_subcommand("relations", "Check relation pairs against expected verdicts");
  relations->add_option("file", file);
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> argv_store{"diffalg"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  const bool machine = format == "machine";
  auto* active = app.get_subcommands().front();
  const std::string command = active->get_name();
  Outcome outcome;
  try {
    if (active == parse) outcome = cmd_parse(term);
    else if (active == table) outcome = cmd_table(term);
    else if (active == equiv) outcome = cmd_equiv(goal);
    else if (active == equiv_rel) outcome = cmd_equiv_rel(rel_a, rel_b);
    else if (active == prove) {
      std::optional<fs::path> reg;
      if (*registry_opt) reg = in_fixtures(registry, fixtures);
      outcome = cmd_prove(in_fixtures(file, fixtures), reg);
    } else if (active == corpus) {
      outcome = cmd_corpus(file.empty() ? fs::path(fixtures) / "corpus.dproof" : in_fixtures(file, fixtures));
    } else if (active == derive) outcome = cmd_derive(rel_a);
    else if (active == numeric) outcome = cmd_numeric(mode, samples, seed);
    else if (active == models) {
      std::optional<std::string> ax;
      if (*axioms_opt) ax = axioms;
      outcome = cmd_models(size, ax);
    } else if (active == independence) outcome = cmd_independence(target, size, budget, seed);
    else if (active == ring) outcome = cmd_ring_audit(width);
    else if (active == relations) {
      outcome = cmd_relations(file.empty() ? fs::path(fixtures) / "relations.txt" : in_fixtures(file, fixtures));
    }
  } catch (const UsageError& e) {
    outcome = Outcome{kUsageError, Json{{"error", "usage"}, {"message", e.what()}}, e.what()};
  } catch (const Error& e) {
    const bool usage = e.kind() == ErrorKind::syntax_error || e.kind() == ErrorKind::invalid_name ||
                       e.kind() == ErrorKind::precondition;
    outcome = Outcome{usage ? kUsageError : kDomainFailure,
                      Json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}}, e.what()};
  }

  emit_record(out, machine, command, outcome);
  if (outcome.code != kOk) err << "diffalg " << command << ": " << outcome.diagnostic << '\n';
  return outcome.code;
}

std::map<std::string, std::string> parse_text_record(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    auto sep = line.find(": ");
    if (sep == std::string::npos) continue;
    out[line.substr(0, sep)] = line.substr(sep + 2);
  }
  return out;
}

std::map<std::string, std::string> flatten_record(const std::string& machine_line) {
  std::map<std::string, std::string> out;
  flatten(Json::parse(machine_line), "", out, nullptr);
  return out;
}

}  // namespace diffalg::cli
