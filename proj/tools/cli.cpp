#include "cli.h"

#include "pasp/pasp.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

namespace pasp::cli {

namespace {

using nlohmann::ordered_json;

struct Options {
  std::string file;
  std::string semantics = "auto";
  std::string grid = "certplus";
  std::string query;
  std::string level;
  std::optional<unsigned> max_atoms;
  std::string format = "text";
};

struct Entry {
  std::string key;
  Certainty value;
};

struct Result {
  bool consistent = true;
  std::vector<Entry> entries;
  Valuation valuation;

  std::string serialized() const {
    std::string s = "{";
    for (std::size_t i = 0; i < entries.size(); ++i) s += (i ? ", " : "") + entries[i].key + "^" + entries[i].value.str();
    return s + "}";
  }
};

struct Solved {
  std::string semantics;
  std::optional<std::vector<Certainty>> grid;
  std::vector<Result> results;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

std::string key_text(const Clause& key, const SymbolTable& symbols) {
  return key.is_unit() ? format(key, symbols) : "(" + format(key, symbols) + ")";
}

Result make_result(Valuation v, bool consistent, const SymbolTable& symbols) {
  Result r;
  r.consistent = consistent;
  for (const auto& [key, value] : v.entries()) r.entries.push_back({key_text(key, symbols), value});
  std::sort(r.entries.begin(), r.entries.end(), [](const Entry& a, const Entry& b) { return a.key < b.key; });
  r.valuation = std::move(v);
  return r;
}

std::string resolve(const std::string& requested, const Program& p) {
  if (requested != "auto") return requested;
  if (p.mode() == ProgramMode::clausal) return "weak";
  if (!p.crisp()) return p.kind() == ProgramKind::disjunctive ? "strong" : "new";
  return "classical";
}

std::vector<Certainty> parse_grid(const std::string& text, const Program& p) {
  if (text == "certplus") return cert_plus(p);
  std::vector<Certainty> grid;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      grid.push_back(Certainty::parse(item));
    } catch (const Error&) {
      throw UsageError("invalid grid value '" + item + "'");
    }
  }
  if (grid.empty()) throw UsageError("empty grid");
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

Solved solve(const Program& p, const Options& o, const Limits& limits) {
  static const std::vector<std::string> known{"classical", "baseline", "new", "strong", "weak", "auto"};
  if (std::find(known.begin(), known.end(), o.semantics) == known.end())
    throw UsageError("unknown semantics '" + o.semantics + "'");
  if (o.grid != "certplus") parse_grid(o.grid, p);
  Solved s;
  s.semantics = resolve(o.semantics, p);
  const SymbolTable& sym = p.symbols();
  if (s.semantics == "classical") {
    for (const Interpretation& i : classical::answer_sets(p, limits)) {
      Valuation v;
      for (Literal l : i) v.set(l, Certainty::one());
      s.results.push_back(make_result(std::move(v), is_consistent(i), sym));
    }
  } else if (s.semantics == "baseline") {
    for (Valuation& v : baseline::nicolas_answer_sets(p, limits)) s.results.push_back(make_result(std::move(v), true, sym));
  } else {
    s.grid = parse_grid(o.grid, p);
    std::vector<AnswerSet> sets;
    if (s.semantics == "new") {
      if (!p.has_naf()) {
        auto r = newsem::simple_answer_set(p, limits);
        sets.push_back({std::move(r.valuation), r.consistent});
      } else {
        sets = newsem::normal_answer_sets(p, *s.grid, limits);
      }
    } else if (s.semantics == "strong") {
      sets = strong::strong_answer_sets(p, *s.grid, limits);
    } else {
      sets = weak::weak_answer_sets(p, *s.grid, limits);
    }
    for (AnswerSet& a : sets) s.results.push_back(make_result(std::move(a.valuation), a.consistent, sym));
  }
  std::sort(s.results.begin(), s.results.end(), [](const Result& a, const Result& b) {
    return std::make_pair(a.serialized(), !a.consistent) < std::make_pair(b.serialized(), !b.consistent);
  });
  return s;
}

std::string grid_text(const std::vector<Certainty>& grid) {
  std::string out;
  for (std::size_t i = 0; i < grid.size(); ++i) out += (i ? ", " : "") + grid[i].str();
  return out;
}

ordered_json grid_json(const std::optional<std::vector<Certainty>>& grid) {
  if (!grid) return nullptr;
  ordered_json arr = ordered_json::array();
  for (const Certainty& c : *grid) arr.push_back(c.str());
  return arr;
}

ordered_json result_json(const Result& r) {
  ordered_json entries = ordered_json::array();
  for (const Entry& e : r.entries) entries.push_back({{"key", e.key}, {"value", e.value.str()}});
  return {{"consistent", r.consistent}, {"entries", std::move(entries)}};
}

std::size_t consistent_count(const Solved& s) {
  return static_cast<std::size_t>(
      std::count_if(s.results.begin(), s.results.end(), [](const Result& r) { return r.consistent; }));
}

void grid_notice(const Program& p, const Solved& s, std::ostream& err) {
  if (s.grid && p.has_naf())
    err << "note: answer sets are enumerated on the certainty grid {" << grid_text(*s.grid) << "} only\n";
}

int cmd_solve(const Program& p, const Options& o, const Limits& limits, std::ostream& out, std::ostream& err) {
  const Solved s = solve(p, o, limits);
  if (o.format == "json") {
    ordered_json sets = ordered_json::array();
    for (const Result& r : s.results) sets.push_back(result_json(r));
    ordered_json doc{{"semantics", s.semantics}, {"grid", grid_json(s.grid)}, {"answer_sets", std::move(sets)},
                     {"count", s.results.size()}};
    out << doc.dump(2) << "\n";
  } else {
    grid_notice(p, s, err);
    out << "semantics: " << s.semantics << "\n";
    if (s.grid) out << "grid: {" << grid_text(*s.grid) << "}\n";
    for (std::size_t i = 0; i < s.results.size(); ++i)
      out << "answer set " << i + 1 << ": " << s.results[i].serialized()
          << (s.results[i].consistent ? "" : " (inconsistent)") << "\n";
    out << "count: " << s.results.size() << "\n";
  }
  return consistent_count(s) > 0 ? kTrue : kFalse;
}

int cmd_exists(const Program& p, const Options& o, const Limits& limits, std::ostream& out, std::ostream&) {
  const Solved s = solve(p, o, limits);
  const bool exists = consistent_count(s) > 0;
  if (o.format == "json")
    out << ordered_json{{"semantics", s.semantics}, {"grid", grid_json(s.grid)}, {"exists", exists},
                        {"count", consistent_count(s)}}
               .dump(2)
        << "\n";
  else
    out << (exists ? "yes" : "no") << "\n";
  return exists ? kTrue : kFalse;
}

int cmd_query(bool brave, const Program& p, const Options& o, const Limits& limits, std::ostream& out,
              std::ostream& err) {
  if (o.query.empty()) throw UsageError("--query is required");
  SymbolTable symbols = p.symbols();
  const Query q = parse_query(o.query, symbols);
  Certainty level = q.level.value_or(Certainty::one());
  if (!o.level.empty()) {
    try {
      level = Certainty::parse(o.level);
    } catch (const Error&) {
      throw UsageError("invalid level '" + o.level + "'");
    }
  }
  const Solved s = solve(p, o, limits);
  bool answer = !brave;
  for (const Result& r : s.results) {
    if (!r.consistent) continue;
    const bool entailed = logic::entails(r.valuation, q.clause, level);
    if (brave && entailed) answer = true;
    if (!brave && !entailed) answer = false;
  }
  if (o.format == "json") {
    out << ordered_json{{"semantics", s.semantics}, {"grid", grid_json(s.grid)},
                        {"mode", brave ? "brave" : "cautious"}, {"query", format(q.clause, symbols)},
                        {"level", level.str()}, {"result", answer}, {"count", consistent_count(s)}}
               .dump(2)
        << "\n";
  } else {
    grid_notice(p, s, err);
    out << (answer ? "true" : "false") << "\n";
  }
  return answer ? kTrue : kFalse;
}

int cmd_check(const Program& p, const Options& o, std::ostream& out) {
  const char* mode = p.mode() == ProgramMode::clausal ? "clausal" : "literal";
  if (o.format == "json") {
    out << ordered_json{{"mode", mode},
                        {"kind", to_string(p.kind())},
                        {"rules", p.rules().size()},
                        {"atoms", p.herbrand().size()},
                        {"constraints", p.has_constraints()},
                        {"naf", p.has_naf()},
                        {"crisp", p.crisp()},
                        {"semantics", resolve("auto", p)}}
               .dump(2)
        << "\n";
  } else {
    out << "mode: " << mode << "\nkind: " << to_string(p.kind()) << "\nrules: " << p.rules().size()
        << "\natoms: " << p.herbrand().size() << "\nauto semantics: " << resolve("auto", p) << "\n";
  }
  return kTrue;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  const qbf::Qbf2 q = qbf::parse_qbf(read_input(o.file));
  const Program p = qbf::reduce_qbf(q);
  if (o.format == "json")
    out << ordered_json{{"qbf", qbf::format(q)}, {"program", format(p)}}.dump(2) << "\n";
  else
    out << format(p);
  return kTrue;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Possibilistic answer set solver", "pasp"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* cmd, bool solver) {
    cmd->add_option("file", o.file, "Program file, or - for stdin")->required();
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    if (!solver) return;
    cmd->add_option("--semantics", o.semantics, "classical, baseline, new, strong, weak or auto");
    cmd->add_option("--grid", o.grid, "certplus or a comma-separated list of certainties");
    cmd->add_option("--max-atoms", o.max_atoms, "World cap (overrides PASP_MAX_ATOMS)");
  };
  auto* solve_cmd = app.add_subcommand("solve", "Enumerate answer sets");
  common(solve_cmd, true);
  auto* brave_cmd = app.add_subcommand("brave", "Is the query entailed by some consistent answer set?");
  common(brave_cmd, true);
  auto* cautious_cmd = app.add_subcommand("cautious", "Is the query entailed by every consistent answer set?");
  common(cautious_cmd, true);
  for (auto* cmd : {brave_cmd, cautious_cmd}) {
    cmd->add_option("--query", o.query, "Clause such as \"a | -b\", optionally followed by \"@ level\"")->required();
    cmd->add_option("--level", o.level, "Certainty level (default 1)");
  }
  auto* exists_cmd = app.add_subcommand("exists", "Does a consistent answer set exist?");
  common(exists_cmd, true);
  auto* reduce_cmd = app.add_subcommand("reduce-qbf", "Reduce an exists-forall QBF to a clausal program");
  common(reduce_cmd, false);
  auto* check_cmd = app.add_subcommand("check", "Parse and classify a program");
  common(check_cmd, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kTrue : kUsage;
  }

  try {
    Limits limits = Limits::from_environment();
    if (o.max_atoms) limits = Limits::with_atoms(*o.max_atoms);
    if (reduce_cmd->parsed()) return cmd_reduce(o, out);
    const Program p = parse_program(read_input(o.file));
    if (check_cmd->parsed()) return cmd_check(p, o, out);
    if (solve_cmd->parsed()) return cmd_solve(p, o, limits, out, err);
    if (exists_cmd->parsed()) return cmd_exists(p, o, limits, out, err);
    return cmd_query(brave_cmd->parsed(), p, o, limits, out, err);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const ParseError& e) {
    err << (o.file.empty() ? std::string("input") : o.file) << ":" << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace pasp::cli
