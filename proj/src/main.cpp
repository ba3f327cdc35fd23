// gvm — exact Jantzen coefficients and simplicity of generalized Verma
// modules.  Subcommands: simple, coeffs, reduce, basics, verify, batch,
// golden-dump.  Output is line-oriented: each line is one record of
// space-separated key=value tokens with alphabetically sorted keys;
// rationals are printed as "p/q" or plain integers.  Exit codes: 0 on
// success, 1 on parse/verification failure, 2 on internal invariant
// violations.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "basics.hpp"
#include "classical.hpp"
#include "golden.hpp"
#include "jantzen.hpp"
#include "reduction.hpp"
#include "rootsys.hpp"
#include "weyl.hpp"

using namespace gvm;

namespace {

// ---- record output ----

struct Record {
  std::map<std::string, std::string> kv;  // emitted in key order

  Record& set(const std::string& k, const std::string& v) {
    kv[k] = v;
    return *this;
  }
  Record& set(const std::string& k, const char* v) {
    return set(k, std::string(v));
  }
  Record& set(const std::string& k, long v) { return set(k, std::to_string(v)); }
  Record& set(const std::string& k, int v) { return set(k, std::to_string(v)); }
  Record& set(const std::string& k, bool v) {
    return set(k, std::string(v ? "true" : "false"));
  }

  void emit(std::ostream& os) const {
    bool first = true;
    for (const auto& [k, v] : kv) {
      if (!first) os << ' ';
      os << k << '=' << v;
      first = false;
    }
    os << '\n';
  }
};

std::string join_ints(const std::vector<int>& xs) {
  std::string out;
  for (size_t k = 0; k < xs.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(xs[k]);
  }
  return out;
}

std::string root_list(const Realization& R, const std::vector<int>& roots) {
  std::string out;
  for (size_t k = 0; k < roots.size(); ++k) {
    if (k) out += ';';
    out += '(' + vec_str(R.roots[roots[k]]) + ')';
  }
  return out;
}

// ---- instance parsing ----

struct Instance {
  const Realization* R = nullptr;
  std::string system;
  std::vector<int> crossed;
  Vec lambda;
};

std::pair<char, int> parse_system(const std::string& s) {
  if (s.size() < 2) throw ParseError("bad system name '" + s + "'");
  char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  if (std::string("ABCDEFG").find(letter) == std::string::npos)
    throw ParseError("unknown system letter in '" + s + "'");
  for (size_t k = 1; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      throw ParseError("bad system rank in '" + s + "'");
  return {letter, std::stoi(s.substr(1))};
}

std::vector<int> parse_index_list(const std::string& s, int rank,
                                  const char* what) {
  std::vector<int> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    for (char c : cur)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError(std::string("bad ") + what + " index '" + cur + "'");
    int v = std::stoi(cur);
    if (v < 1 || v > rank)
      throw ParseError(std::string(what) + " index " + cur +
                       " outside 1.." + std::to_string(rank));
    out.push_back(v);
    cur.clear();
  };
  for (char c : s) {
    if (c == ',')
      flush();
    else if (!std::isspace(static_cast<unsigned char>(c)))
      cur += c;
  }
  flush();
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Instance make_instance(const std::string& system, const std::string& crossed,
                       const std::string& included, const std::string& lambda) {
  Instance ins;
  auto [letter, rank] = parse_system(system);
  ins.R = &build_realization(letter, rank);
  ins.system = ins.R->name();
  if (!crossed.empty() && !included.empty())
    throw ParseError("--crossed and --included are mutually exclusive");
  if (!included.empty()) {
    std::vector<int> inc = parse_index_list(included, rank, "included");
    for (int v = 1; v <= rank; ++v)
      if (!std::binary_search(inc.begin(), inc.end(), v))
        ins.crossed.push_back(v);
  } else {
    ins.crossed = parse_index_list(crossed, rank, "crossed");
  }
  ins.lambda = parse_vec(lambda);
  if (static_cast<int>(ins.lambda.size()) != ins.R->dim)
    throw ParseError("lambda needs " + std::to_string(ins.R->dim) +
                     " coordinates for " + ins.system + ", got " +
                     std::to_string(ins.lambda.size()));
  return ins;
}

Record base_record(const Instance& ins, const std::string& type) {
  Record rec;
  rec.set("record", type)
      .set("system", ins.system)
      .set("crossed", join_ints(ins.crossed))
      .set("lambda", vec_str(ins.lambda));
  return rec;
}

// ---- commands ----
// Each takes extra key/value pairs to splice into every record (used by
// batch mode to tag output lines with their input line number).

using Extra = std::vector<std::pair<std::string, std::string>>;

void splice(Record& rec, const Extra& extra) {
  for (const auto& [k, v] : extra) rec.set(k, v);
}

void cmd_simple(const Instance& ins, const Extra& extra, std::ostream& os) {
  ParabolicData pd = make_parabolic(*ins.R, ins.crossed);
  Ctx ctx = make_ctx(pd);
  SimplicityResult sr = is_simple(ins.lambda, ctx);
  bool red = simple_via_reduction(*ins.R, ins.lambda, pd);
  if (sr.simple != red)
    throw InternalError("simplicity deciders disagree on " + ins.system +
                        " lambda=" + vec_str(ins.lambda));
  Record rec = base_record(ins, "simple");
  rec.set("simple", sr.simple).set("agreement", true);
  if (!sr.simple) {
    rec.set("witness_beta", "(" + vec_str(ins.R->roots[sr.witness_beta]) + ")")
        .set("witness_mu", vec_str(sr.witness_mu))
        .set("witness_c", sr.witness_c);
  }
  splice(rec, extra);
  rec.emit(os);
}

void cmd_coeffs(const Instance& ins, const Extra& extra, std::ostream& os) {
  ParabolicData pd = make_parabolic(*ins.R, ins.crossed);
  Ctx ctx = make_ctx(pd);
  CoefficientRow row = jantzen_row(ins.lambda, ctx);
  std::vector<const RowEntry*> entries = row.nonzero();
  std::sort(entries.begin(), entries.end(),
            [](const RowEntry* a, const RowEntry* b) {
              return vec_less(a->mu, b->mu);
            });
  Record head = base_record(ins, "coeffs");
  head.set("entries", static_cast<long>(entries.size()));
  splice(head, extra);
  head.emit(os);
  for (const RowEntry* e : entries) {
    Record rec;
    rec.set("record", "coeff").set("mu", vec_str(e->mu)).set("value", e->total);
    std::vector<std::pair<int, int>> contrib = e->contributors;
    std::sort(contrib.begin(), contrib.end());
    std::string cs;
    for (size_t k = 0; k < contrib.size(); ++k) {
      if (k) cs += ';';
      cs += '(' + vec_str(ins.R->roots[contrib[k].first]) + "):" +
            (contrib[k].second > 0 ? "+1" : "-1");
    }
    rec.set("contributors", cs);
    splice(rec, extra);
    rec.emit(os);
  }
}

void cmd_reduce(const Instance& ins, const std::string& beta_str,
                const Extra& extra, std::ostream& os) {
  Vec bv = parse_vec(beta_str);
  int beta = ins.R->root_index(bv);
  if (beta < 0)
    throw ParseError("beta '" + beta_str + "' is not a root of " + ins.system);
  ParabolicData pd = make_parabolic(*ins.R, ins.crossed);
  ReductionTrace trace = reduce(*ins.R, ins.lambda, pd, beta);
  BasicTriple triple = basic_triple_of(*ins.R, ins.lambda, pd, trace);

  Record head = base_record(ins, "reduce");
  head.set("beta", "(" + vec_str(ins.R->roots[beta]) + ")")
      .set("steps", static_cast<long>(trace.steps.size()))
      .set("label", label_str(triple));
  splice(head, extra);
  head.emit(os);

  Record init;
  init.set("record", "step")
      .set("index", 0)
      .set("rule", "integral")
      .set("pos_roots", root_list(*ins.R, positive_members(*ins.R, trace.initial)));
  splice(init, extra);
  init.emit(os);
  for (const ReductionStep& st : trace.steps) {
    Record rec;
    rec.set("record", "step")
        .set("index", st.index)
        .set("rule", rule_name(st.rule))
        .set("pos_roots", root_list(*ins.R, positive_members(*ins.R, st.result)));
    splice(rec, extra);
    rec.emit(os);
  }
  Record basic;
  basic.set("record", "basic")
      .set("label", label_str(triple))
      .set("weight", vec_str(triple.weight))
      .set("pos_roots",
           root_list(*ins.R, positive_members(*ins.R, triple.system)));
  splice(basic, extra);
  basic.emit(os);
}

// ---- basics ----

void emit_dot(const BasicSystemRecord& rec, std::ostream& os) {
  std::map<std::pair<int, int>, long> coeff;
  for (const auto& c : rec.coeffs) coeff[{c.s, c.t}] = c.c;
  os << "digraph \"" << rec.letter << rec.rank << "(" << rec.i << "," << rec.j
     << ")\" {\n";
  for (size_t k = 1; k <= rec.weights.size(); ++k)
    os << "  " << k << ";\n";
  for (const auto& [s, t] : rec.poset)
    os << "  " << s << " -> " << t << " [label=\"" << coeff[{s, t}]
       << "\"];\n";
  os << "}\n";
}

void emit_basics(const BasicSystemRecord& rec, bool dot, bool summary_only,
                 std::ostream& os) {
  if (dot) {
    emit_dot(rec, os);
    return;
  }
  Record head;
  head.set("record", "basics")
      .set("system", std::string(1, rec.letter) + std::to_string(rec.rank))
      .set("i", rec.i)
      .set("j", rec.j)
      .set("weights", static_cast<long>(rec.weights.size()))
      .set("coefficients", static_cast<long>(rec.coeffs.size()))
      .set("edges", static_cast<long>(rec.poset.size()))
      .set("non_simple", join_ints(rec.non_simple));
  head.emit(os);
  if (summary_only) return;
  for (size_t k = 0; k < rec.weights.size(); ++k) {
    Record w;
    w.set("record", "weight")
        .set("index", static_cast<long>(k + 1))
        .set("value", vec_str(rec.weights[k]));
    w.emit(os);
  }
  for (const auto& c : rec.coeffs) {
    Record r;
    r.set("record", "coefficient").set("s", c.s).set("t", c.t).set("value", c.c);
    r.emit(os);
  }
  for (const auto& [s, t] : rec.poset) {
    Record r;
    r.set("record", "edge").set("s", s).set("t", t);
    r.emit(os);
  }
}

int cmd_basics(const std::string& system, int i, int j, bool all, bool dot,
               std::ostream& os) {
  if (all) {
    std::vector<GoldenLabel> labels = classify_basic_systems();
    for (const auto& l : labels) {
      const Realization& R = build_realization(l.letter, l.rank);
      emit_basics(basic_jantzen_table(R, l.i, l.j), false, true, os);
    }
    Record sum;
    sum.set("record", "classification")
        .set("systems", static_cast<long>(labels.size()));
    sum.emit(os);
    return 0;
  }
  auto [letter, rank] = parse_system(system);
  const Realization& R = build_realization(letter, rank);
  if (i < 1 || i > rank || j < 1 || j > rank)
    throw ParseError("simple-root indices must lie in 1.." +
                     std::to_string(rank));
  emit_basics(basic_jantzen_table(R, i, j), dot, false, os);
  return 0;
}

// ---- verify ----

// Reference-table numbering: 1-10 are the type-E basic-weight tables,
// 11-15 the nonzero-coefficient tables, 16 the classical Psi++ summary;
// "figures" covers the four poset diagrams.
const std::vector<GoldenLabel>& table_systems(int table) {
  static const std::map<int, std::vector<GoldenLabel>> map = {
      {1, {{'E', 6, 4, 4}}},
      {2, {{'E', 7, 4, 4}}},
      {3, {{'E', 7, 4, 5}}},
      {4, {{'E', 7, 5, 4}}},
      {5, {{'E', 8, 3, 4}}},
      {6, {{'E', 8, 4, 3}}},
      {7, {{'E', 8, 4, 4}}},
      {8, {{'E', 8, 5, 5}}},
      {9, {{'E', 8, 4, 5}}},
      {10, {{'E', 8, 5, 4}}},
      {11, {{'A', 1, 1, 1}, {'B', 3, 2, 2}, {'C', 3, 2, 2}}},
      {12, {{'E', 7, 4, 4}}},
      {13, {{'E', 8, 5, 4}}},
      {14, {{'E', 8, 4, 5}}},
      {15, {{'E', 8, 4, 4}}}};
  return map.at(table);
}

bool coeffs_equal(const std::vector<GoldenCoeff>& a,
                  const std::vector<GoldenCoeff>& b) {
  if (a.size() != b.size()) return false;
  for (size_t k = 0; k < a.size(); ++k)
    if (a[k].s != b[k].s || a[k].t != b[k].t || a[k].c != b[k].c) return false;
  return true;
}

bool verify_table(int table) {
  for (const GoldenLabel& l : table_systems(table)) {
    const GoldenSystem* g = golden_find(l.letter, l.rank, l.i, l.j);
    if (!g) return false;
    const Realization& R = build_realization(l.letter, l.rank);
    BasicSystemRecord rec = basic_jantzen_table(R, l.i, l.j);
    if (table <= 10) {
      if (rec.weights != g->weights) return false;
    } else {
      if (!coeffs_equal(rec.coeffs, g->coeffs)) return false;
      if (rec.non_simple != g->non_simple) return false;
    }
  }
  return true;
}

bool verify_classical_table() {
  for (const GoldenClassicalRow& r : golden_classical_rows()) {
    const Realization& R = build_realization(r.label.letter, r.label.rank);
    ParabolicData pd = make_parabolic(R, std::vector<int>{r.label.i});
    Ctx ctx = make_ctx(pd);
    PsiSets psi = psi_sets(r.lambda, ctx);
    std::vector<std::string> live, expect;
    for (int b : psi.psi_plus_plus) live.push_back(vec_str(R.roots[b]));
    for (const Vec& v : r.psi_pp) expect.push_back(vec_str(v));
    std::sort(live.begin(), live.end());
    std::sort(expect.begin(), expect.end());
    if (live != expect) return false;
    if (is_simple(r.lambda, ctx).simple != r.simple) return false;
    if (classical_is_simple(R, pd, r.lambda) != r.simple) return false;
  }
  return true;
}

bool verify_figures() {
  for (const GoldenSystem& g : golden_systems()) {
    const Realization& R = build_realization(g.label.letter, g.label.rank);
    BasicSystemRecord rec = basic_jantzen_table(R, g.label.i, g.label.j);
    if (rec.poset != g.poset) return false;
  }
  return true;
}

int cmd_verify(const std::string& tables, std::ostream& os) {
  std::vector<std::string> targets;
  if (tables == "all") {
    for (int t = 1; t <= 16; ++t) targets.push_back(std::to_string(t));
    targets.push_back("figures");
  } else {
    targets.push_back(tables);
  }
  int failed = 0;
  for (const std::string& t : targets) {
    bool ok;
    if (t == "figures") {
      ok = verify_figures();
    } else {
      int num = 0;
      try {
        num = std::stoi(t);
      } catch (const std::exception&) {
        throw ParseError("bad table selector '" + t + "'");
      }
      if (num < 1 || num > 16)
        throw ParseError("table number must lie in 1..16");
      try {
        ok = (num == 16) ? verify_classical_table() : verify_table(num);
      } catch (const Error&) {
        ok = false;
      }
    }
    if (!ok) ++failed;
    Record rec;
    rec.set("record", "verify").set("table", t).set("status",
                                                    ok ? "pass" : "fail");
    rec.emit(os);
  }
  Record sum;
  sum.set("record", "verify-summary")
      .set("checked", static_cast<long>(targets.size()))
      .set("failed", failed);
  sum.emit(os);
  return failed == 0 ? 0 : 1;
}

// ---- batch ----

std::string sanitize(const std::string& s) {
  std::string out = s;
  for (char& c : out)
    if (std::isspace(static_cast<unsigned char>(c)) || c == '=') c = '_';
  return out;
}

int cmd_batch(const std::string& path, std::ostream& os) {
  std::ifstream in(path);
  if (!in.good()) throw ParseError("cannot open batch file '" + path + "'");
  std::string line;
  int lineno = 0, errors = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
    if (trimmed.empty() || trimmed[0] == '#') continue;
    try {
      std::vector<std::string> fields;
      std::stringstream ss(trimmed);
      std::string f;
      while (std::getline(ss, f, ';')) {
        f.erase(0, f.find_first_not_of(" \t\r"));
        f.erase(f.find_last_not_of(" \t\r") + 1);
        if (!f.empty()) fields.push_back(f);
      }
      if (fields.empty()) throw ParseError("empty instance line");
      std::string system = fields[0], crossed, included, lambda, cmd, beta;
      for (size_t k = 1; k < fields.size(); ++k) {
        size_t eq = fields[k].find('=');
        if (eq == std::string::npos)
          throw ParseError("field '" + fields[k] + "' is not key=value");
        std::string key = fields[k].substr(0, eq);
        std::string val = fields[k].substr(eq + 1);
        if (key == "crossed")
          crossed = val;
        else if (key == "included")
          included = val;
        else if (key == "lambda")
          lambda = val;
        else if (key == "cmd")
          cmd = val;
        else if (key == "beta")
          beta = val;
        else
          throw ParseError("unknown field '" + key + "'");
      }
      Instance ins = make_instance(system, crossed, included, lambda);
      Extra extra = {{"line", std::to_string(lineno)}};
      if (cmd == "simple")
        cmd_simple(ins, extra, os);
      else if (cmd == "coeffs")
        cmd_coeffs(ins, extra, os);
      else if (cmd == "reduce")
        cmd_reduce(ins, beta, extra, os);
      else
        throw ParseError("unknown cmd '" + cmd + "'");
    } catch (const InternalError&) {
      throw;  // invariant violations abort the whole run
    } catch (const Error& e) {
      ++errors;
      Record rec;
      rec.set("record", "error")
          .set("line", lineno)
          .set("message", sanitize(e.what()));
      rec.emit(os);
    }
  }
  return errors == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Jantzen coefficients and simplicity of generalized "
               "Verma modules"};
  app.require_subcommand(1);

  std::string system, crossed, included, lambda, beta, tables = "all", file;
  int opt_i = 0, opt_j = 0;
  bool all = false, dot = false;

  auto add_instance = [&](CLI::App* sub) {
    sub->add_option("system", system, "Root system, e.g. B8")->required();
    sub->add_option("--crossed", crossed,
                    "Crossed simple roots (complement of I), e.g. 2,5");
    sub->add_option("--included", included,
                    "Included simple roots (the set I) instead of --crossed");
    sub->add_option("--lambda", lambda, "Weight coordinates, e.g. 2,1,1/2")
        ->required();
  };

  CLI::App* s_simple = app.add_subcommand(
      "simple", "Decide simplicity by the sum formula and by reduction");
  add_instance(s_simple);

  CLI::App* s_coeffs =
      app.add_subcommand("coeffs", "Full Jantzen coefficient row");
  add_instance(s_coeffs);

  CLI::App* s_reduce =
      app.add_subcommand("reduce", "Reduction chain and basic-system label");
  add_instance(s_reduce);
  s_reduce->add_option("--beta", beta, "Root to reduce, e.g. 0,0,0,0,1,1,0,0")
      ->required();

  CLI::App* s_basics = app.add_subcommand(
      "basics", "Basic-system weights, coefficient table and poset");
  s_basics->add_option("--system", system, "Root system, e.g. E7");
  s_basics->add_option("--i", opt_i, "Crossed simple root of I");
  s_basics->add_option("--j", opt_j, "Simple root defining the weight orbit");
  s_basics->add_flag("--all", all, "Sweep the whole classification");
  s_basics->add_flag("--dot", dot, "Emit the poset as Graphviz DOT text");

  CLI::App* s_verify = app.add_subcommand(
      "verify", "Recompute and diff the embedded reference tables");
  s_verify->add_option("--tables", tables, "all, 1..16, or figures");

  CLI::App* s_batch =
      app.add_subcommand("batch", "Process one instance per input line");
  s_batch->add_option("--file", file, "Batch input file")->required();

  CLI::App* s_dump = app.add_subcommand(
      "golden-dump", "Print the canonical text form of the reference tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (s_simple->parsed()) {
      cmd_simple(make_instance(system, crossed, included, lambda), {},
                 std::cout);
    } else if (s_coeffs->parsed()) {
      cmd_coeffs(make_instance(system, crossed, included, lambda), {},
                 std::cout);
    } else if (s_reduce->parsed()) {
      cmd_reduce(make_instance(system, crossed, included, lambda), beta, {},
                 std::cout);
    } else if (s_basics->parsed()) {
      if (!all && system.empty())
        throw ParseError("basics needs --system/--i/--j or --all");
      return cmd_basics(system, opt_i, opt_j, all, dot, std::cout);
    } else if (s_verify->parsed()) {
      return cmd_verify(tables, std::cout);
    } else if (s_batch->parsed()) {
      return cmd_batch(file, std::cout);
    } else if (s_dump->parsed()) {
      std::cout << golden_serialized();
    }
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
