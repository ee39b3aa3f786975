#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ljplus/analysis.hpp"
#include "ljplus/cut_elimination.hpp"
#include "ljplus/derivation_io.hpp"
#include "ljplus/extraction.hpp"
#include "ljplus/kernel.hpp"
#include "ljplus/kripke.hpp"
#include "ljplus/kripke_io.hpp"
#include "ljplus/prop_decision.hpp"
#include "ljplus/syntax.hpp"
#include "ljplus/transform.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace ljplus;

namespace {

enum Exit : int { kOk = 0, kFailed = 1, kUsage = 2 };

// Raised for bad arguments and unreadable input; maps to exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  bool as_json = false;
  json data = json::object();
  std::ostringstream text;

  void emit() const {
    if (as_json) {
      std::cout << data.dump(2) << "\n";
    } else {
      std::cout << text.str();
    }
  }
};

json stats_json(const CheckStats& s) {
  json rules = json::object();
  for (std::size_t i = 0; i < kRuleTagCount; ++i) {
    if (s.rule_counts[i]) rules[std::string(tag_name(static_cast<RuleTag>(i)))] = s.rule_counts[i];
  }
  return {{"nodes", s.size}, {"height", s.height}, {"cuts", s.cuts}, {"mixes", s.mixes},
          {"neutralizations", s.neutralizations}, {"rules", rules}};
}

json report_json(const CheckReport& r) {
  json j = {{"ok", r.ok()}, {"stats", stats_json(r.stats)}};
  if (r.failure) j["failure"] = {{"path", r.failure->path}, {"code", code_name(r.failure->code)},
                                 {"message", r.failure->message}};
  return j;
}

CalculusMode parse_mode(const std::string& name) {
  auto m = mode_from_name(name);
  if (!m) throw UsageError("unknown mode '" + name + "' (expected lj, lj+, lj-atomic-lem or lk)");
  return *m;
}

std::string read_input(const std::string& path) {
  if (!fs::is_regular_file(path)) throw UsageError("cannot read " + path);
  return read_text_file(path);
}

struct Loaded {
  Derivation derivation;
  std::optional<CalculusMode> mode;
};

Loaded load_derivation(const std::string& path) {
  const std::string text = read_input(path);
  try {
    return {parse_derivation(text), mode_directive(text)};
  } catch (const ParseError& e) {
    throw UsageError(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " +
                     e.detail());
  } catch (const ArityError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

Formula formula_arg(const std::string& text) {
  try {
    return parse_formula(text);
  } catch (const ParseError& e) {
    throw UsageError("formula, column " + std::to_string(e.column()) + ": " + e.detail());
  } catch (const ArityError& e) {
    throw UsageError(e.what());
  }
}

Sequent sequent_arg(const std::string& text) {
  try {
    return parse_sequent(text);
  } catch (const ParseError& e) {
    throw UsageError("sequent, column " + std::to_string(e.column()) + ": " + e.detail());
  } catch (const ArityError& e) {
    throw UsageError(e.what());
  }
}

KripkeStructure load_structure(const std::string& path) {
  const std::string text = read_input(path);
  try {
    return parse_structure(text);
  } catch (const KripkeError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

int node_arg(const KripkeStructure& s, const std::string& name) {
  auto k = s.node_index(name);
  if (!k) throw UsageError("no node named " + name);
  return *k;
}

/// The weakest calculus in which `d` checks.
std::optional<CalculusMode> tightest_mode(const Derivation& d) {
  for (auto m : {CalculusMode::LJ, CalculusMode::LJ_PLUS, CalculusMode::LJ_ATOMIC_LEM, CalculusMode::LK_LEM}) {
    if (check(d, m).ok()) return m;
  }
  return std::nullopt;
}

// Writes `d` and reads it back; the artifact must parse and check again.
void write_checked(const std::string& path, const Derivation& d, const std::string& comment) {
  auto mode = tightest_mode(d);
  if (!mode) throw std::logic_error("refusing to write a derivation that does not check");
  write_derivation_file(path, d, mode, comment);
  Loaded again = load_derivation(path);
  if (!check(again.derivation, *mode).ok() || again.derivation.conclusion() != d.conclusion()) {
    throw std::logic_error(path + " does not re-check after writing");
  }
}

// ---------------------------------------------------------------- check

int cmd_check(Output& out, const std::string& file, const std::string& mode_flag) {
  Loaded in = load_derivation(file);
  CalculusMode mode = mode_flag.empty() ? in.mode.value_or(CalculusMode::LJ_PLUS) : parse_mode(mode_flag);
  CheckReport r = check(in.derivation, mode);
  out.data = report_json(r);
  out.data["file"] = file;
  out.data["mode"] = mode_name(mode);
  out.data["endsequent"] = to_string(in.derivation.conclusion());
  out.text << file << " [" << mode_name(mode) << "] " << to_string(in.derivation.conclusion()) << "\n"
           << format_report(r);
  return r.ok() ? kOk : kFailed;
}

// ------------------------------------------------------------ transform

struct TransformArgs {
  std::vector<std::string> inputs;
  std::string output;
  std::string formula;
  std::string symbol;
  std::string with;
  std::string n;
  std::string f;
  std::string direction = "imp-to-disj";
  bool atomic = false;
};

Derivation run_transform(const std::string& op, const TransformArgs& a, std::vector<Derivation>& before,
                         json& extra) {
  auto need = [&](std::size_t k) {
    if (a.inputs.size() != k) {
      throw UsageError(op + " takes " + std::to_string(k) + " input file(s), got " + std::to_string(a.inputs.size()));
    }
    for (const auto& p : a.inputs) before.push_back(load_derivation(p).derivation);
  };
  auto need_text = [&](const std::string& v, const char* flag) {
    if (v.empty()) throw UsageError(op + " needs " + flag);
  };

  if (op == "cutelim") {
    need(1);
    EliminationTrace trace;
    Derivation d = eliminate_cuts(before[0], &trace);
    extra["trace"] = {{"cuts_removed", trace.cuts_removed}, {"reductions", trace.reductions},
                      {"measure_comparisons", trace.comparisons}, {"measure_violations", trace.violations}};
    auto sub = predicate_subformula_report(d);
    extra["subformula_property"] = sub.ok();
    return d;
  }
  if (op == "lem2neut") return need(1), lem_to_neutralization(before[0]);
  if (op == "neut2lem") return need(1), neutralization_to_lem(before[0]);
  if (op == "extract-exists") {
    need(1);
    Extraction e = extract_disjuncts(before[0]);
    extra["witnesses"] = e.witnesses;
    return e.derivation;
  }
  if (op == "merge-subst") {
    need(2);
    need_text(a.formula, "--formula");
    need_text(a.symbol, "--symbol");
    return merge_by_substitution(before[0], before[1], formula_arg(a.formula), a.symbol);
  }
  if (op == "specialize") {
    need(1);
    need_text(a.symbol, "--symbol");
    need_text(a.with, "--with");
    return specialize(before[0], a.symbol, formula_arg(a.with));
  }
  if (op == "derive-lem") {
    need(0);
    need_text(a.formula, "--formula");
    Formula n = formula_arg(a.formula);
    return a.atomic ? derive_lem_atomic(n) : derive_lem(n);
  }
  if (op == "impdisj") {
    need(0);
    need_text(a.n, "--n");
    need_text(a.f, "--f");
    EquivDirection dir;
    if (a.direction == "imp-to-disj") {
      dir = EquivDirection::ImpToDisj;
    } else if (a.direction == "disj-to-imp") {
      dir = EquivDirection::DisjToImp;
    } else {
      throw UsageError("--direction is imp-to-disj or disj-to-imp");
    }
    return derive_impl_disj_equiv(formula_arg(a.n), formula_arg(a.f), dir);
  }
  throw UsageError("unknown transformation " + op);
}

int cmd_transform(Output& out, const std::string& op, const TransformArgs& a) {
  std::vector<Derivation> before;
  json extra = json::object();
  Derivation result;
  try {
    result = run_transform(op, a, before, extra);
  } catch (const TransformError& e) {
    out.data = {{"operation", op}, {"ok", false}, {"error", e.what()}};
    out.text << op << ": " << e.what() << "\n";
    return kFailed;
  } catch (const DecisionError& e) {
    out.data = {{"operation", op}, {"ok", false}, {"error", e.what()}};
    out.text << op << ": " << e.what() << "\n";
    return kFailed;
  }
  auto mode = tightest_mode(result);
  if (!mode) throw std::logic_error(op + " produced a derivation that does not check");
  out.data = {{"operation", op}, {"ok", true}, {"mode", mode_name(*mode)},
              {"endsequent", to_string(result.conclusion())}};
  out.data.update(extra);
  json bj = json::array();
  for (std::size_t i = 0; i < before.size(); ++i) {
    bj.push_back(stats_json(collect_stats(before[i])));
    out.text << "before[" << i << "] " << to_string(before[i].conclusion()) << "\n"
             << format_report(check(before[i], CalculusMode::LK_LEM));
  }
  out.data["before"] = bj;
  out.data["after"] = stats_json(collect_stats(result));
  out.text << "after [" << mode_name(*mode) << "] " << to_string(result.conclusion()) << "\n"
           << format_report(check(result, *mode));
  for (auto it = extra.begin(); it != extra.end(); ++it) out.text << "  " << it.key() << ": " << it.value().dump() << "\n";
  if (!a.output.empty()) {
    write_checked(a.output, result, op);
    out.data["output"] = a.output;
    out.text << "wrote " << a.output << "\n";
  }
  return kOk;
}

// --------------------------------------------------------------- decide

int cmd_decide(Output& out, const std::string& text, const std::string& output) {
  Formula f = formula_arg(text);
  if (!is_propositional(f)) throw UsageError("not a propositional formula: " + to_string(f));
  Decision d;
  try {
    d = decide_prop(f);
  } catch (const DecisionError& e) {
    throw UsageError(e.what());
  }
  out.data["formula"] = to_string(f);
  if (auto* no = std::get_if<NotDerivable>(&d)) {
    json v = json::object();
    std::string line;
    for (const auto& [sym, val] : no->falsifying) {
      v[sym] = val;
      line += (line.empty() ? "" : " ") + sym + "=" + (val ? "true" : "false");
    }
    out.data["derivable"] = false;
    out.data["valuation"] = v;
    out.text << "not derivable; falsified by " << line << "\n";
    return kFailed;
  }
  const Derivation& w = std::get<Derivable>(d).witness;
  write_checked(output, w, "decided: " + to_string(f));
  out.data["derivable"] = true;
  out.data["proof"] = output;
  out.data["stats"] = stats_json(collect_stats(w));
  out.text << "derivable; proof written to " << output << "\n";
  return kOk;
}

// --------------------------------------------------------------- kripke

Assignment assignment_arg(const KripkeStructure& s, const std::vector<std::string>& pairs) {
  Assignment asg;
  for (const auto& p : pairs) {
    auto eq = p.find('=');
    if (eq == std::string::npos) throw UsageError("assignment '" + p + "' is not VAR=ELEMENT");
    auto e = s.element_index(p.substr(eq + 1));
    if (!e) throw UsageError("no element named " + p.substr(eq + 1));
    asg[p.substr(0, eq)] = *e;
  }
  return asg;
}

json assignment_json(const KripkeStructure& s, const Assignment& a) {
  json j = json::object();
  for (const auto& [v, e] : a) j[v] = s.elements[e];
  return j;
}

std::string assignment_text(const KripkeStructure& s, const Assignment& a) {
  std::string out;
  for (const auto& [v, e] : a) out += (out.empty() ? "" : ", ") + v + "=" + s.elements[e];
  return out.empty() ? "(none)" : out;
}

struct KripkeArgs {
  std::vector<std::string> positional;
  std::vector<std::string> assign;
  std::string output;
  std::size_t max_nodes = 0;
  std::size_t max_domain = 0;
};

int cmd_kripke(Output& out, const std::string& op, const KripkeArgs& a) {
  auto need = [&](std::size_t k, const char* usage) {
    if (a.positional.size() != k) throw UsageError(std::string("usage: kripke ") + usage);
  };
  if (op == "validate") {
    need(1, "validate MODEL");
    auto s = load_structure(a.positional[0]);
    auto r = validate_structure(s);
    out.data = {{"well_formed", r.well_formed}, {"constrained", r.constrained}, {"problems", r.problems}};
    out.text << (!r.well_formed ? "not well-formed" : r.constrained ? "constrained" : "not constrained") << "\n";
    for (const auto& p : r.problems) out.text << "  " << p << "\n";
    return r.well_formed && r.constrained ? kOk : kFailed;
  }
  if (op == "force") {
    need(3, "force MODEL NODE FORMULA [--assign VAR=ELEM]...");
    auto s = load_structure(a.positional[0]);
    int k = node_arg(s, a.positional[1]);
    Formula f = formula_arg(a.positional[2]);
    bool forced;
    try {
      forced = forces(s, k, f, assignment_arg(s, a.assign));
    } catch (const KripkeError& e) {
      throw UsageError(e.what());
    }
    out.data = {{"node", s.nodes[k]}, {"formula", to_string(f)}, {"forced", forced}};
    out.text << s.nodes[k] << (forced ? " forces " : ": not forced: ") << to_string(f) << "\n";
    return forced ? kOk : kFailed;
  }
  if (op == "valid") {
    need(2, "valid MODEL SEQUENT");
    auto s = load_structure(a.positional[0]);
    Sequent q = sequent_arg(a.positional[1]);
    std::optional<Refutation> r;
    try {
      r = refute_sequent(s, q);
    } catch (const KripkeError& e) {
      throw UsageError(e.what());
    }
    out.data = {{"sequent", to_string(q)}, {"valid", !r}};
    if (!r) {
      out.text << "valid: " << to_string(q) << "\n";
      return kOk;
    }
    out.data["node"] = s.nodes[r->node];
    out.data["assignment"] = assignment_json(s, r->assignment);
    out.text << "refuted at " << s.nodes[r->node] << " with " << assignment_text(s, r->assignment) << "\n";
    return kFailed;
  }
  if (op == "glue") {
    need(4, "glue MODEL1 NODE1 MODEL2 NODE2 [-o OUT]");
    auto s1 = load_structure(a.positional[0]);
    auto s2 = load_structure(a.positional[2]);
    Glued g;
    try {
      g = glue(s1, node_arg(s1, a.positional[1]), s2, node_arg(s2, a.positional[3]));
    } catch (const KripkeError& e) {
      out.data = {{"ok", false}, {"error", e.what()}};
      out.text << "glue: " << e.what() << "\n";
      return kFailed;
    }
    const std::string text = write_structure(g.structure);
    out.data = {{"ok", true}, {"root", g.structure.nodes[g.root]}, {"structure", text}};
    out.text << "# root " << g.structure.nodes[g.root] << "\n" << text;
    if (!a.output.empty()) {
      std::ofstream(a.output) << text;
      if (!isomorphic(load_structure(a.output), g.structure)) throw std::logic_error("glued model does not re-read");
    }
    return kOk;
  }
  if (op == "search") {
    need(1, "search SEQUENT --max-nodes N --max-domain M [-o OUT]");
    if (a.max_nodes == 0 || a.max_domain == 0) throw UsageError("search needs --max-nodes and --max-domain (both >= 1)");
    Sequent q = sequent_arg(a.positional[0]);
    SearchBounds b{a.max_nodes, a.max_domain, symbols(q)};
    auto cm = countermodel_search(q, b);
    out.data = {{"sequent", to_string(q)}, {"refuted", cm.has_value()}};
    if (!cm) {
      out.text << "no countermodel with at most " << a.max_nodes << " nodes and " << a.max_domain << " elements\n";
      return kOk;
    }
    const std::string text = write_structure(cm->structure);
    out.data["node"] = cm->structure.nodes[cm->node];
    out.data["assignment"] = assignment_json(cm->structure, cm->assignment);
    out.data["structure"] = text;
    out.text << "# refuted at " << cm->structure.nodes[cm->node] << " with "
             << assignment_text(cm->structure, cm->assignment) << "\n"
             << text;
    if (!a.output.empty()) std::ofstream(a.output) << text;
    return kFailed;
  }
  throw UsageError("unknown kripke command " + op);
}

// --------------------------------------------------------------- corpus

struct Row {
  std::string item;
  std::string task;
  bool ok;
  std::string note;
};

void corpus_proof(const fs::path& file, std::vector<Row>& rows) {
  const std::string name = file.filename().string();
  Loaded in;
  try {
    in = load_derivation(file.string());
  } catch (const UsageError& e) {
    rows.push_back({name, "parse", false, e.what()});
    return;
  }
  const CalculusMode mode = in.mode.value_or(CalculusMode::LJ_PLUS);
  const Derivation& d = in.derivation;
  auto r = check(d, mode);
  rows.push_back({name, "check " + std::string(mode_name(mode)), r.ok(), r.ok() ? "" : r.failure->message});
  if (!r.ok()) return;

  auto attempt = [&](const std::string& task, const std::function<std::string()>& fn) {
    try {
      std::string note = fn();
      rows.push_back({name, task, note.empty(), note});
    } catch (const std::exception& e) {
      rows.push_back({name, task, false, e.what()});
    }
  };
  if (check(d, CalculusMode::LJ_PLUS).ok()) {
    attempt("cutelim", [&]() -> std::string {
      EliminationTrace t;
      Derivation e = eliminate_cuts(d, &t);
      if (!check(e, CalculusMode::LJ_PLUS).ok()) return "output does not check";
      if (count_tag(e, RuleTag::Cut) + count_tag(e, RuleTag::Mix)) return "cuts remain";
      if (e.conclusion() != d.conclusion()) return "endsequent changed";
      if (t.violations) return "measure did not decrease";
      if (!predicate_subformula_report(e).ok()) return "subformula property fails";
      return "";
    });
  }
  if (mode != CalculusMode::LK_LEM) {
    attempt("neut2lem/lem2neut", [&]() -> std::string {
      Derivation base = lem_to_neutralization(d);
      Derivation lem = neutralization_to_lem(base);
      if (!check(lem, CalculusMode::LJ_ATOMIC_LEM).ok()) return "neut2lem output does not check";
      Derivation back = lem_to_neutralization(lem);
      if (!check(back, CalculusMode::LJ_PLUS).ok()) return "lem2neut output does not check";
      if (back.conclusion() != d.conclusion() || lem.conclusion() != d.conclusion()) return "endsequent changed";
      return "";
    });
  }
  const Sequent& end = d.conclusion();
  if (end.antecedent.empty() && end.succedent && end.succedent->is(Kind::Exists)) {
    attempt("extract-exists", [&]() -> std::string {
      Extraction e = extract_disjuncts(d);
      return check(e.derivation, CalculusMode::LJ_PLUS).ok() ? "" : "output does not check";
    });
  }
}

void corpus_countermodels(const fs::path& dir, std::vector<Row>& rows) {
  const fs::path list = dir / "countermodels.txt";
  if (!fs::exists(list)) return;
  std::istringstream in(read_text_file(list.string()));
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') continue;
    std::vector<std::string> parts;
    std::stringstream ss(line);
    for (std::string p; std::getline(ss, p, ';');) {
      p.erase(0, p.find_first_not_of(" \t"));
      p.erase(p.find_last_not_of(" \t") + 1);
      parts.push_back(p);
    }
    const std::string item = "countermodels.txt:" + std::to_string(lineno);
    try {
      if (parts.size() < 3) throw std::runtime_error("expected SEQUENT ; NODES ; DOMAIN [; MODEL]");
      Sequent q = parse_sequent(parts[0]);
      SearchBounds b{std::stoul(parts[1]), std::stoul(parts[2]), symbols(q)};
      auto cm = countermodel_search(q, b);
      std::string note;
      if (!cm) {
        note = "no countermodel found";
      } else if (parts.size() > 3 && !isomorphic(cm->structure, read_structure_file((dir / parts[3]).string()))) {
        note = "witness is not isomorphic to " + parts[3];
      }
      rows.push_back({item, "search " + parts[0], note.empty(), note});
    } catch (const std::exception& e) {
      rows.push_back({item, "search", false, e.what()});
    }
  }
}

int cmd_corpus(Output& out, const std::string& dir_arg) {
  const fs::path dir(dir_arg);
  std::vector<fs::path> proofs, models;
  if (fs::is_directory(dir / "proofs")) {
    for (const auto& e : fs::directory_iterator(dir / "proofs")) {
      if (e.path().extension() == ".ljp") proofs.push_back(e.path());
    }
  }
  if (fs::is_directory(dir / "models")) {
    for (const auto& e : fs::directory_iterator(dir / "models")) {
      if (e.path().extension() == ".km") models.push_back(e.path());
    }
  }
  if (proofs.empty()) throw UsageError("no .ljp files under " + (dir / "proofs").string());
  std::sort(proofs.begin(), proofs.end());
  std::sort(models.begin(), models.end());

  std::vector<Row> rows;
  for (const auto& p : proofs) corpus_proof(p, rows);
  for (const auto& m : models) {
    const std::string name = m.filename().string();
    try {
      auto r = validate_structure(read_structure_file(m.string()));
      rows.push_back({name, "validate", r.well_formed && r.constrained, r.problems.empty() ? "" : r.problems[0]});
    } catch (const std::exception& e) {
      rows.push_back({name, "validate", false, e.what()});
    }
  }
  corpus_countermodels(dir, rows);

  std::size_t failed = 0;
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.item.size());
  json arr = json::array();
  for (const auto& r : rows) {
    failed += !r.ok;
    out.text << (r.ok ? "pass  " : "FAIL  ") << r.item << std::string(width + 2 - r.item.size(), ' ') << r.task;
    if (!r.note.empty()) out.text << "  (" << r.note << ")";
    out.text << "\n";
    arr.push_back({{"item", r.item}, {"task", r.task}, {"ok", r.ok}, {"note", r.note}});
  }
  out.text << rows.size() - failed << "/" << rows.size() << " passed\n";
  out.data = {{"results", arr}, {"passed", rows.size() - failed}, {"failed", failed}};
  return failed ? kFailed : kOk;
}

// ------------------------------------------------------------------ fmt

int cmd_fmt(Output& out, const std::string& arg) {
  const fs::path p(arg);
  if (p.extension() == ".ljp") {
    Loaded in = load_derivation(arg);
    std::string text = write_derivation(in.derivation);
    if (in.mode) text = "; mode: " + std::string(mode_name(*in.mode)) + "\n" + text;
    out.data = {{"derivation", text}};
    out.text << text;
  } else if (p.extension() == ".km") {
    std::string text = write_structure(load_structure(arg));
    out.data = {{"structure", text}};
    out.text << text;
  } else if (arg.find("|-") != std::string::npos) {
    std::string text = to_string(sequent_arg(arg));
    out.data = {{"sequent", text}};
    out.text << text << "\n";
  } else {
    std::string text = render_formula(formula_arg(arg));
    out.data = {{"formula", text}};
    out.text << text << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LJ+ proof workbench: check, transform and decide derivations; evaluate Kripke structures."};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--json", out.as_json, "Machine-readable report");

  std::string file, mode, formula_text, dir = "corpus", output, op;
  auto* check_cmd = app.add_subcommand("check", "Kernel-check a derivation file");
  check_cmd->add_option("file", file, "Derivation (.ljp)")->required();
  check_cmd->add_option("--mode", mode, "lj, lj+, lj-atomic-lem or lk (default: the file's mode line, else lj+)");

  TransformArgs ta;
  auto* transform_cmd = app.add_subcommand("transform", "Run a proof transformation");
  transform_cmd->add_option("operation", op,
                            "cutelim | lem2neut | neut2lem | extract-exists | merge-subst | specialize | "
                            "derive-lem | impdisj")
      ->required();
  transform_cmd->add_option("inputs", ta.inputs, "Input derivations");
  transform_cmd->add_option("-o,--output", ta.output, "Write the result here");
  transform_cmd->add_option("--formula", ta.formula, "merge-subst: the merged formula; derive-lem: N");
  transform_cmd->add_option("--symbol", ta.symbol, "Propositional symbol (merge-subst, specialize)");
  transform_cmd->add_option("--with", ta.with, "specialize: replacement formula");
  transform_cmd->add_option("--n", ta.n, "impdisj: N");
  transform_cmd->add_option("--f", ta.f, "impdisj: F");
  transform_cmd->add_option("--direction", ta.direction, "impdisj: imp-to-disj or disj-to-imp");
  transform_cmd->add_flag("--atomic", ta.atomic, "derive-lem: atomic LEM leaves instead of neutralizations");

  auto* decide_cmd = app.add_subcommand("decide", "Decide a propositional formula");
  std::string proof_out = "decided.ljp";
  decide_cmd->add_option("formula", formula_text, "Formula text")->required();
  decide_cmd->add_option("-o,--output", proof_out, "Where to write the proof");

  KripkeArgs ka;
  auto* kripke_cmd = app.add_subcommand("kripke", "Kripke structures");
  kripke_cmd->add_option("operation", op, "validate | force | valid | glue | search")->required();
  kripke_cmd->add_option("args", ka.positional, "Operation arguments");
  kripke_cmd->add_option("--assign", ka.assign, "force: VAR=ELEMENT");
  kripke_cmd->add_option("-o,--output", ka.output, "glue/search: write the structure here");
  kripke_cmd->add_option("--max-nodes", ka.max_nodes, "search: node bound");
  kripke_cmd->add_option("--max-domain", ka.max_domain, "search: domain bound");

  auto* corpus_cmd = app.add_subcommand("corpus", "Run the bundled corpus");
  corpus_cmd->add_option("dir", dir, "Corpus directory (with proofs/ and models/)");

  auto* fmt_cmd = app.add_subcommand("fmt", "Pretty-print a formula, sequent, .ljp or .km file");
  std::string fmt_arg;
  fmt_cmd->add_option("input", fmt_arg, "Text or file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  int code = kUsage;
  try {
    if (*check_cmd) code = cmd_check(out, file, mode);
    if (*transform_cmd) code = cmd_transform(out, op, ta);
    if (*decide_cmd) code = cmd_decide(out, formula_text, proof_out);
    if (*kripke_cmd) code = cmd_kripke(out, op, ka);
    if (*corpus_cmd) code = cmd_corpus(out, dir);
    if (*fmt_cmd) code = cmd_fmt(out, fmt_arg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFailed;
  }
  out.emit();
  return code;
}
