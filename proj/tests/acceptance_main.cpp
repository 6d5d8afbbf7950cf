// Acceptance harness: one pass/fail line per criterion, exit 1 on any failure.
// Each criterion is checked against an independent oracle or a frozen
// hand-derived value, never against the code under test.

#include <cstdint>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ctlab/character_table.hpp"
#include "ctlab/class_function.hpp"
#include "ctlab/corpus.hpp"
#include "ctlab/perm_group.hpp"
#include "ctlab/structure.hpp"
#include "ctlab/verify.hpp"
#include "cli_util.hpp"
#include "oracles.hpp"

namespace {

struct Tables {
  std::vector<ctlab::NamedGroup> corpus;
  std::vector<ctlab::CharacterTable> tables;
};

Tables compute_all() {
  Tables all;
  all.corpus = ctlab::parse_corpus_text(ctlab::default_corpus_text());
  for (const ctlab::NamedGroup &ng : all.corpus)
    all.tables.push_back(ctlab::CharacterTable::compute(ng.group));
  return all;
}

bool orthogonality_and_degree_identities(const Tables &all, std::string &detail) {
  for (std::size_t i = 0; i < all.corpus.size(); ++i) {
    const ctlab::NamedGroup &ng = all.corpus[i];
    const ctlab::CharacterTable &table = all.tables[i];
    if (!oracle::orthogonality_holds(table)) {
      detail = ng.name + ": orthogonality failed";
      return false;
    }
    std::int64_t sum = 0;
    for (int r = 0; r < table.count(); ++r) {
      std::int64_t d = table.irr(r).degree;
      sum += d * d;
      if (ng.group->order() % d != 0) {
        detail = ng.name + ": degree " + std::to_string(d) + " does not divide the order";
        return false;
      }
    }
    if (sum != ng.group->order()) {
      detail = ng.name + ": degree squares sum to " + std::to_string(sum);
      return false;
    }
    std::int64_t derived = ctlab::derived_subgroup(ctlab::full_subgroup(ng.group)).order();
    auto linear = ctlab::linear_rows(table);
    if (static_cast<std::int64_t>(linear.size()) != ng.group->order() / derived) {
      detail = ng.name + ": " + std::to_string(linear.size()) + " linear characters";
      return false;
    }
  }
  return true;
}

bool reference_tables_match(std::string &detail) {
  struct Ref {
    const char *spec;
    oracle::Fingerprint expected;
  };
  const Ref refs[] = {
      {"C2", oracle::reference_c2()}, {"S3", oracle::reference_s3()},
      {"Q8", oracle::reference_q8()}, {"D8", oracle::reference_d8()},
      {"A4", oracle::reference_a4()}, {"S4", oracle::reference_s4()},
      {"A5", oracle::reference_a5()},
  };
  for (const Ref &ref : refs) {
    auto g = ctlab::parse_group_spec(ref.spec);
    ctlab::CharacterTable table = ctlab::CharacterTable::compute(g);
    if (oracle::fingerprint(table) != ref.expected) {
      detail = std::string(ref.spec) + ": table differs from the hand-derived reference";
      return false;
    }
  }
  return true;
}

bool codegree_sets_match(std::string &detail) {
  auto full_cod = [](const std::string &spec) {
    auto g = ctlab::parse_group_spec(spec);
    ctlab::CharacterTable table = ctlab::CharacterTable::compute(g);
    std::set<std::int64_t> cod;
    for (int r = 0; r < table.count(); ++r)
      cod.insert(table.irr(r).codegree);
    return cod;
  };
  if (full_cod("S3") != std::set<std::int64_t>{1, 2, 3}) {
    detail = "cod(S3)";
    return false;
  }
  if (full_cod("Q8") != std::set<std::int64_t>{1, 2, 4}) {
    detail = "cod(Q8)";
    return false;
  }
  if (full_cod("A4") != std::set<std::int64_t>{1, 3, 4}) {
    detail = "cod(A4)";
    return false;
  }
  {
    auto g = ctlab::parse_group_spec("S3");
    ctlab::CharacterTable table = ctlab::CharacterTable::compute(g);
    ctlab::Subgroup a3 = ctlab::derived_subgroup(ctlab::full_subgroup(g));
    // only the degree-2 character lies over A3: the sign character has
    // kernel exactly A3, so it is excluded and its codegree 2 does not appear
    if (ctlab::cod_set(table, a3) != std::set<std::int64_t>{3}) {
      detail = "cod(S3|A3)";
      return false;
    }
  }
  {
    auto g = ctlab::parse_group_spec("A4");
    ctlab::CharacterTable table = ctlab::CharacterTable::compute(g);
    ctlab::Subgroup v4 = ctlab::derived_subgroup(ctlab::full_subgroup(g));
    if (v4.order() != 4 || ctlab::cod_set(table, v4) != std::set<std::int64_t>{4}) {
      detail = "cod(A4|V4)";
      return false;
    }
  }
  return true;
}

bool normal_lattice_matches_brute_force(const Tables &all, std::string &detail) {
  for (std::size_t i = 0; i < all.corpus.size(); ++i) {
    const ctlab::NamedGroup &ng = all.corpus[i];
    if (ng.group->order() > 48)
      continue;
    auto brute = oracle::normal_subgroups_brute(*ng.group);
    auto computed = ctlab::normal_subgroups(all.tables[i]);
    if (computed.size() != brute.size()) {
      detail = ng.name + ": " + std::to_string(computed.size()) + " vs " +
               std::to_string(brute.size()) + " normal subgroups";
      return false;
    }
    for (std::size_t k = 0; k < brute.size(); ++k) {
      std::set<int> got(computed[k].element_indices().begin(),
                        computed[k].element_indices().end());
      if (got != brute[k]) {
        detail = ng.name + ": lattice entry " + std::to_string(k) + " differs";
        return false;
      }
    }
  }
  // spot shape check: S4 has exactly the trivial group, V4, A4, S4
  auto s4 = ctlab::parse_group_spec("S4");
  ctlab::CharacterTable s4_table = ctlab::CharacterTable::compute(s4);
  auto normals = ctlab::normal_subgroups(s4_table);
  std::vector<std::int64_t> orders;
  for (const ctlab::Subgroup &n : normals)
    orders.push_back(n.order());
  if (orders != std::vector<std::int64_t>{1, 4, 12, 24}) {
    detail = "S4 lattice orders";
    return false;
  }
  for (int x : normals[1].element_indices())
    if (s4->element_order(x) > 2) {
      detail = "S4 order-4 normal subgroup is not V4";
      return false;
    }
  return true;
}

// Shared corpus run used by the next three criteria.
struct CorpusRun {
  ctlab::RunSummary summary;
  bool ok = false;
};

CorpusRun run_all_checks(const Tables &all) {
  CorpusRun run;
  ctlab::RunOptions options;
  options.trace = true;
  std::ostringstream sink;
  run.summary = ctlab::run_corpus(all.corpus, options, sink);
  run.ok = true;
  return run;
}

bool main_theorem_holds_on_corpus(const CorpusRun &run, std::string &detail) {
  if (run.summary.counterexamples != 0) {
    detail = std::to_string(run.summary.counterexamples) + " counterexamples";
    return false;
  }
  if (run.summary.confirmed_nonabelian < 20) {
    detail = "only " + std::to_string(run.summary.confirmed_nonabelian) +
             " nonabelian confirmations";
    return false;
  }
  return true;
}

bool corollaries_hold_on_corpus(const Tables &all, std::string &detail) {
  ctlab::RunOptions options;
  options.theorems = {"thompson", "berkovich", "isaacs-knutson"};
  std::ostringstream sink;
  ctlab::RunSummary summary = ctlab::run_corpus(all.corpus, options, sink);
  if (summary.counterexamples != 0) {
    detail = std::to_string(summary.counterexamples) + " counterexamples";
    return false;
  }
  return true;
}

bool proof_steps_and_reciprocity_hold(const Tables &all, const CorpusRun &run,
                                      std::string &detail) {
  if (run.summary.trace_steps_checked == 0 || run.summary.trace_steps_failed != 0) {
    detail = std::to_string(run.summary.trace_steps_failed) + " failed steps of " +
             std::to_string(run.summary.trace_steps_checked);
    return false;
  }
  if (run.summary.step7_nontrivial < 1) {
    detail = "fixed-point step never met a nontrivial subgroup";
    return false;
  }
  for (std::size_t i = 0; i < all.corpus.size(); ++i) {
    const ctlab::NamedGroup &ng = all.corpus[i];
    if (ng.group->order() > 200)
      continue;
    const ctlab::CharacterTable &g_table = all.tables[i];
    std::vector<ctlab::Subgroup> subs = ctlab::normal_subgroups(g_table);
    for (std::int64_t p : ng.group->prime_divisors())
      subs.push_back(ctlab::sylow_subgroup(ctlab::full_subgroup(ng.group), p));
    for (const ctlab::Subgroup &h : subs) {
      ctlab::GroupPtr h_std = h.realize();
      ctlab::CharacterTable h_table = ctlab::CharacterTable::compute(h_std);
      for (int tr = 0; tr < h_table.count(); ++tr) {
        ctlab::ClassFunction theta = ctlab::to_class_function(h_table, tr);
        ctlab::ClassFunction induced = ctlab::induce_to(theta, ng.group);
        for (int cr = 0; cr < g_table.count(); ++cr) {
          ctlab::ClassFunction chi = ctlab::to_class_function(g_table, cr);
          std::int64_t lhs = ctlab::inner_product(induced, chi);
          std::int64_t rhs = ctlab::inner_product(theta, ctlab::restrict_to(chi, h_std));
          if (lhs != rhs) {
            detail = ng.name + ": reciprocity fails at |H|=" + std::to_string(h.order()) +
                     " theta=" + std::to_string(tr) + " chi=" + std::to_string(cr);
            return false;
          }
        }
      }
    }
  }
  return true;
}

bool determinant_routes_agree(const Tables &all, std::string &detail) {
  for (std::size_t i = 0; i < all.corpus.size(); ++i) {
    const ctlab::NamedGroup &ng = all.corpus[i];
    if (ng.group->order() > 24)
      continue;
    const ctlab::CharacterTable &table = all.tables[i];
    for (int r = 0; r < table.count(); ++r) {
      std::int64_t newton = oracle::newton_det_order(table, r);
      if (newton != table.irr(r).det_order) {
        detail = ng.name + " row " + std::to_string(r) + ": " + std::to_string(newton) +
                 " vs " + std::to_string(table.irr(r).det_order);
        return false;
      }
    }
  }
  return true;
}

bool verify_output_is_deterministic(std::string &detail) {
  cliutil::RunResult first = cliutil::run_cli("verify --theorem all");
  cliutil::RunResult second = cliutil::run_cli("verify --theorem all");
  if (first.exit_code != 0 || second.exit_code != 0) {
    detail = "exit codes " + std::to_string(first.exit_code) + " and " +
             std::to_string(second.exit_code);
    return false;
  }
  if (first.out != second.out) {
    detail = "stdout differs between runs";
    return false;
  }
  if (first.out.empty()) {
    detail = "no output produced";
    return false;
  }
  return true;
}

} // namespace

int main() try {
  Tables all = compute_all();
  CorpusRun run = run_all_checks(all);

  struct Criterion {
    std::string label;
    bool passed;
    std::string detail;
  };
  std::vector<Criterion> results;
  auto record = [&](const std::string &label, auto &&fn) {
    Criterion c{label, false, ""};
    c.passed = fn(c.detail);
    results.push_back(std::move(c));
  };

  record("1. orthogonality relations, degree identities, linear-character counts",
         [&](std::string &d) { return orthogonality_and_degree_identities(all, d); });
  record("2. tables of C2 S3 Q8 D8 A4 S4 A5 match hand-derived references",
         [&](std::string &d) { return reference_tables_match(d); });
  record("3. codegree sets match hand-derived values",
         [&](std::string &d) { return codegree_sets_match(d); });
  record("4. normal-subgroup lattice equals brute-force enumeration (order <= 48)",
         [&](std::string &d) { return normal_lattice_matches_brute_force(all, d); });
  record("5. main theorem: zero counterexamples, >= 20 nonabelian confirmations",
         [&](std::string &d) { return main_theorem_holds_on_corpus(run, d); });
  record("6. corollary checkers report zero counterexamples",
         [&](std::string &d) { return corollaries_hold_on_corpus(all, d); });
  record("7. all applicable proof steps hold; Frobenius reciprocity exact (order <= 200)",
         [&](std::string &d) { return proof_steps_and_reciprocity_hold(all, run, d); });
  record("8. determinantal order: eigenvalue product equals Newton identities (order <= 24)",
         [&](std::string &d) { return determinant_routes_agree(all, d); });
  record("9. corpus verification output is byte-identical across runs",
         [&](std::string &d) { return verify_output_is_deterministic(d); });

  bool all_passed = true;
  for (const Criterion &c : results) {
    std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << c.label;
    if (!c.passed && !c.detail.empty())
      std::cout << "  (" << c.detail << ")";
    std::cout << "\n";
    all_passed = all_passed && c.passed;
  }
  return all_passed ? 0 : 1;
} catch (const std::exception &e) {
  std::cout << "[FAIL] acceptance setup: " << e.what() << "\n";
  return 1;
}
