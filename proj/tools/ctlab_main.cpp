// ctlab: exact character tables, codegree sets, and theorem verification for
// small permutation groups.
//
// Exit codes: 0 success (and no counterexample), 1 counterexample found,
// 2 usage or input error, 3 resource cap exceeded, 4 internal invariant
// violation (a bug, never bad input).

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ctlab/caps.hpp"
#include "ctlab/character_table.hpp"
#include "ctlab/class_function.hpp"
#include "ctlab/corpus.hpp"
#include "ctlab/errors.hpp"
#include "ctlab/perm_group.hpp"
#include "ctlab/structure.hpp"
#include "ctlab/verify.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json value_json(const ctlab::CyclotomicValue &v) {
  ordered_json j;
  j["order"] = v.order();
  j["mult"] = v.mult();
  return j;
}

std::string class_set_text(const std::vector<int> &classes) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < classes.size(); ++i)
    out << (i ? ", " : "") << classes[i];
  out << "}";
  return out.str();
}

int cmd_table(const std::string &spec, bool json, const ctlab::Caps &caps) {
  ctlab::GroupPtr g = ctlab::parse_group_spec(spec, caps);
  ctlab::CharacterTable table = ctlab::CharacterTable::compute(g);
  const ctlab::ConjugacyClassData &cls = g->classes();

  if (json) {
    ordered_json j;
    j["group"] = spec;
    j["order"] = g->order();
    j["exponent"] = cls.exponent;
    ordered_json classes = ordered_json::array();
    for (int t = 0; t < cls.count(); ++t) {
      ordered_json jc;
      jc["index"] = t;
      jc["size"] = cls.sizes[static_cast<std::size_t>(t)];
      jc["element_order"] = cls.rep_orders[static_cast<std::size_t>(t)];
      jc["rep"] = g->element(cls.reps[static_cast<std::size_t>(t)]).to_cycles();
      classes.push_back(std::move(jc));
    }
    j["classes"] = std::move(classes);
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < table.count(); ++i) {
      const ctlab::IrreducibleCharacter &chi = table.irr(i);
      ordered_json jr;
      jr["index"] = i;
      jr["degree"] = chi.degree;
      jr["codegree"] = chi.codegree;
      jr["det_order"] = chi.det_order;
      jr["kernel_order"] = chi.kernel_order;
      ordered_json values = ordered_json::array();
      for (const ctlab::CyclotomicValue &v : chi.values)
        values.push_back(value_json(v));
      jr["values"] = std::move(values);
      rows.push_back(std::move(jr));
    }
    j["irreducibles"] = std::move(rows);
    std::cout << j.dump() << "\n";
    return 0;
  }

  std::cout << "group " << spec << "\n";
  std::cout << "order " << g->order() << "  classes " << cls.count() << "  exponent "
            << cls.exponent << "\n";
  std::cout << "classes:\n";
  for (int t = 0; t < cls.count(); ++t) {
    std::cout << "  " << t << ": size " << cls.sizes[static_cast<std::size_t>(t)] << "  order "
              << cls.rep_orders[static_cast<std::size_t>(t)] << "  rep "
              << g->element(cls.reps[static_cast<std::size_t>(t)]).to_cycles() << "\n";
  }
  std::cout << "irreducibles:\n";
  for (int i = 0; i < table.count(); ++i) {
    const ctlab::IrreducibleCharacter &chi = table.irr(i);
    std::cout << "  " << i << ": degree " << chi.degree << "  cod " << chi.codegree << "  det "
              << chi.det_order << "  ker " << chi.kernel_order << "  [";
    for (std::size_t t = 0; t < chi.values.size(); ++t)
      std::cout << (t ? ", " : "") << chi.values[t].to_string();
    std::cout << "]\n";
  }
  return 0;
}

// Selector text for the n-th normal subgroup in the deterministic lattice
// order: "<order>:<index among that order>".
std::string selector_of(const std::vector<ctlab::Subgroup> &normals, std::size_t pos) {
  int index = 0;
  for (std::size_t i = 0; i < pos; ++i)
    if (normals[i].order() == normals[pos].order())
      ++index;
  std::ostringstream out;
  out << normals[pos].order() << ":" << index;
  return out.str();
}

int cmd_codegrees(const std::string &spec, bool over_derived, const std::string &normal_sel,
                  bool json, const ctlab::Caps &caps) {
  ctlab::GroupPtr g = ctlab::parse_group_spec(spec, caps);
  ctlab::CharacterTable table = ctlab::CharacterTable::compute(g);
  std::vector<ctlab::Subgroup> normals = ctlab::normal_subgroups(table);

  std::optional<std::size_t> chosen;
  if (over_derived) {
    ctlab::Subgroup derived = ctlab::derived_subgroup(ctlab::full_subgroup(g));
    for (std::size_t i = 0; i < normals.size(); ++i)
      if (normals[i] == derived)
        chosen = i;
    if (!chosen)
      throw ctlab::internal_error("derived subgroup is missing from the normal lattice");
  } else {
    std::size_t colon = normal_sel.find(':');
    std::int64_t want_order = -1;
    int want_index = -1;
    try {
      if (colon == std::string::npos)
        throw std::invalid_argument("no colon");
      want_order = std::stoll(normal_sel.substr(0, colon));
      want_index = std::stoi(normal_sel.substr(colon + 1));
    } catch (const std::exception &) {
      throw ctlab::input_error("bad --normal selector '" + normal_sel +
                               "', expected <order>:<index>");
    }
    int seen = 0;
    for (std::size_t i = 0; i < normals.size(); ++i) {
      if (normals[i].order() != want_order)
        continue;
      if (seen == want_index) {
        chosen = i;
        break;
      }
      ++seen;
    }
    if (!chosen) {
      std::ostringstream msg;
      msg << "no normal subgroup matches " << normal_sel << "; available:";
      for (std::size_t i = 0; i < normals.size(); ++i)
        msg << " " << selector_of(normals, i);
      throw ctlab::input_error(msg.str());
    }
  }

  const ctlab::Subgroup &n = normals[*chosen];
  std::string selector = selector_of(normals, *chosen);
  std::vector<int> n_classes = ctlab::class_index_set(n);
  std::vector<int> rows = ctlab::irr_over(table, n);
  std::set<std::int64_t> cod = ctlab::cod_set(table, n);

  if (json) {
    ordered_json j;
    j["group"] = spec;
    j["order"] = g->order();
    j["n_order"] = n.order();
    j["n_selector"] = selector;
    j["n_classes"] = n_classes;
    ordered_json jrows = ordered_json::array();
    for (int row : rows) {
      ordered_json jr;
      jr["row"] = row;
      jr["degree"] = table.irr(row).degree;
      jr["codegree"] = table.irr(row).codegree;
      jrows.push_back(std::move(jr));
    }
    j["rows"] = std::move(jrows);
    j["cod"] = cod;
    std::cout << j.dump() << "\n";
    return 0;
  }

  std::cout << "group " << spec << "  order " << g->order() << "\n";
  std::cout << "N order " << n.order() << "  selector " << selector << "  classes "
            << class_set_text(n_classes) << "\n";
  std::cout << "Irr(G|N):\n";
  if (rows.empty())
    std::cout << "  (none)\n";
  for (int row : rows)
    std::cout << "  row " << row << "  degree " << table.irr(row).degree << "  cod "
              << table.irr(row).codegree << "\n";
  std::cout << "cod(G|N) = {";
  bool first = true;
  for (std::int64_t c : cod) {
    std::cout << (first ? "" : ", ") << c;
    first = false;
  }
  std::cout << "}\n";
  if (n.order() == 1)
    std::cout << "note: N is trivial, so no irreducible lies over it\n";
  return 0;
}

int cmd_verify(const std::string &corpus_path, const std::string &theorem, bool trace,
               bool timings, const ctlab::Caps &caps) {
  std::vector<ctlab::NamedGroup> corpus =
      corpus_path.empty() ? ctlab::parse_corpus_text(ctlab::default_corpus_text(), caps)
                          : ctlab::load_corpus(corpus_path, caps);
  ctlab::RunOptions options;
  if (theorem != "all")
    options.theorems = {theorem};
  options.trace = trace;
  options.timings = timings;
  ctlab::RunSummary summary = ctlab::run_corpus(corpus, options, std::cout);
  std::cerr << ctlab::render_summary(summary) << "\n";
  return summary.counterexamples > 0 ? 1 : 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"exact character tables and codegree verification for small permutation groups"};
  app.require_subcommand(1);
  app.fallthrough();

  std::int64_t max_order = 0;
  std::int64_t max_degree = 0;
  app.add_option("--max-order", max_order, "cap on group order")
      ->envname("CTLAB_MAX_ORDER")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-degree", max_degree, "cap on permutation degree")
      ->envname("CTLAB_MAX_DEGREE")
      ->check(CLI::PositiveNumber);

  std::string table_spec;
  bool table_json = false;
  CLI::App *table_cmd = app.add_subcommand("table", "compute the character table of one group");
  table_cmd->add_option("spec", table_spec, "group spec, e.g. S4 or perm:3:[(1 2)]")->required();
  table_cmd->add_flag("--json", table_json, "emit JSON with exact multiplicity vectors");

  std::string cod_spec;
  std::string cod_normal;
  bool cod_over_derived = false;
  bool cod_json = false;
  CLI::App *cod_cmd =
      app.add_subcommand("codegrees", "list Irr(G|N) and cod(G|N) for a normal subgroup N");
  cod_cmd->add_option("spec", cod_spec, "group spec")->required();
  CLI::Option *sel_derived =
      cod_cmd->add_flag("--over-derived", cod_over_derived, "N = derived subgroup of G");
  cod_cmd->add_option("--normal", cod_normal, "N by <order>:<index> in the normal lattice")
      ->excludes(sel_derived);
  cod_cmd->add_flag("--json", cod_json, "emit JSON");

  std::string verify_corpus;
  std::string verify_theorem = "all";
  bool verify_trace = false;
  bool verify_timings = false;
  CLI::App *verify_cmd =
      app.add_subcommand("verify", "run the theorem checkers over a corpus of groups");
  verify_cmd->add_option("--corpus", verify_corpus, "corpus file (default: built-in corpus)");
  verify_cmd->add_option("--theorem", verify_theorem, "which checker to run")
      ->check(CLI::IsMember({"A", "thompson", "berkovich", "isaacs-knutson", "all"}));
  verify_cmd->add_flag("--trace", verify_trace, "also emit per-instance proof traces");
  verify_cmd->add_flag("--timings", verify_timings, "include timing_ms in report lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  ctlab::Caps caps;
  if (max_degree > 0)
    caps.max_degree = max_degree;
  if (max_order > 0)
    caps.max_order = max_order;

  try {
    if (table_cmd->parsed())
      return cmd_table(table_spec, table_json, caps);
    if (cod_cmd->parsed()) {
      if (!cod_over_derived && cod_normal.empty())
        throw ctlab::input_error(
            "choose a normal subgroup with --over-derived or --normal <order>:<index>");
      return cmd_codegrees(cod_spec, cod_over_derived, cod_normal, cod_json, caps);
    }
    if (verify_cmd->parsed())
      return cmd_verify(verify_corpus, verify_theorem, verify_trace, verify_timings, caps);
  } catch (const ctlab::resource_error &e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const ctlab::input_error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ctlab::internal_error &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
