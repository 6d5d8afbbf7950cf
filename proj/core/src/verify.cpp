#include "ctlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <optional>
#include <sstream>
#include <utility>

#include "json.hpp"

#include "ctlab/class_function.hpp"
#include "ctlab/errors.hpp"
#include "ctlab/structure.hpp"

namespace ctlab {

const std::vector<std::string> kTheoremIds = {"A", "thompson", "berkovich", "isaacs-knutson"};

namespace {

using ordered_json = nlohmann::ordered_json;

// Standalone group plus table for a subgroup, reusing the ambient pair when
// the subgroup is the whole group.
struct Standalone {
  GroupPtr group;
  std::shared_ptr<const CharacterTable> table;
};

Standalone standalone_of(const GroupAnalysis &ga, const Subgroup &h) {
  if (h.order() == ga.group->order())
    return {ga.group, ga.table};
  GroupPtr g = h.realize();
  auto table = std::make_shared<const CharacterTable>(CharacterTable::compute(g));
  return {std::move(g), std::move(table)};
}

std::optional<Subgroup> complement_in(const std::vector<Subgroup> &normals, std::int64_t order,
                                      std::int64_t p) {
  std::int64_t target = order / p_part(order, p);
  for (const Subgroup &k : normals)
    if (k.order() == target)
      return k;
  return std::nullopt;
}

// Map a subgroup of a standalone realization back into the ambient group.
Subgroup lift_subgroup(const Subgroup &sub, const GroupPtr &ambient) {
  if (sub.parent() == ambient)
    return sub;
  std::vector<int> elems;
  elems.reserve(sub.element_indices().size());
  for (int i : sub.element_indices()) {
    int gi = ambient->index_of(sub.parent()->element(i));
    if (gi < 0)
      throw internal_error("lifted subgroup element is missing from the ambient group");
    elems.push_back(gi);
  }
  std::sort(elems.begin(), elems.end());
  return subgroup_from_elements(ambient, elems);
}

std::string verdict_for(bool hypothesis, bool conclusion) {
  if (!hypothesis)
    return "vacuous";
  return conclusion ? "confirmed" : "COUNTEREXAMPLE";
}

std::vector<int> all_class_indices(const CharacterTable &table) {
  std::vector<int> out(static_cast<std::size_t>(table.count()));
  std::iota(out.begin(), out.end(), 0);
  return out;
}

std::string report_line(const VerificationReport &r, bool timings) {
  ordered_json j;
  j["record"] = "report";
  j["theorem"] = r.theorem;
  j["group"] = r.group;
  j["n_order"] = r.n_order;
  j["n_classes"] = r.n_classes;
  j["p"] = r.p;
  j["hypothesis"] = r.hypothesis;
  j["complement_found"] = r.complement_found;
  j["complement_order"] = r.complement_order;
  if (r.solvable_applicable)
    j["solvable"] = r.solvable;
  else
    j["solvable"] = nullptr;
  j["verdict"] = r.verdict;
  if (timings)
    j["timing_ms"] = r.timing_ms;
  return j.dump();
}

std::string trace_line(const ProofTrace &t) {
  ordered_json j;
  j["record"] = "trace";
  j["group"] = t.group;
  j["n_order"] = t.n_order;
  j["n_classes"] = t.n_classes;
  j["p"] = t.p;
  ordered_json steps = ordered_json::array();
  for (const TraceStep &s : t.steps) {
    ordered_json js;
    js["step"] = s.step;
    js["applicable"] = s.applicable;
    js["holds"] = s.holds;
    js["witness"] = s.witness;
    steps.push_back(std::move(js));
  }
  j["steps"] = std::move(steps);
  return j.dump();
}

} // namespace

GroupAnalysis analyze_group(const NamedGroup &named) {
  GroupAnalysis ga;
  ga.name = named.name;
  ga.group = named.group;
  ga.table = std::make_shared<const CharacterTable>(CharacterTable::compute(named.group));
  ga.normals = normal_subgroups(*ga.table);
  ga.primes = named.group->prime_divisors();
  return ga;
}

NormalAnalysis analyze_normal(const GroupAnalysis &ga, const Subgroup &n) {
  Standalone st = standalone_of(ga, n);
  std::vector<Subgroup> n_normals;
  if (st.group == ga.group)
    n_normals = ga.normals;
  else
    n_normals = normal_subgroups(*st.table);
  return NormalAnalysis{n, class_index_set(n), std::move(st.group), std::move(st.table),
                        std::move(n_normals)};
}

VerificationReport check_theorem_a(const GroupAnalysis &ga, const NormalAnalysis &na,
                                   std::int64_t p) {
  VerificationReport r;
  r.theorem = "A";
  r.group = ga.name;
  r.n_order = na.n.order();
  r.n_classes = na.n_classes;
  r.p = p;

  HypothesisResult hyp = codegree_hypothesis(*ga.table, na.n, p);
  r.hypothesis = hyp.holds;
  std::optional<Subgroup> comp = complement_in(na.n_normals, na.n.order(), p);
  r.complement_found = comp.has_value();
  r.complement_order = comp ? comp->order() : 0;
  r.solvable_applicable = true;
  r.solvable = is_solvable(na.n);
  r.verdict = verdict_for(r.hypothesis, r.complement_found && r.solvable);
  return r;
}

VerificationReport check_thompson(const GroupAnalysis &ga, std::int64_t p) {
  VerificationReport r;
  r.theorem = "thompson";
  r.group = ga.name;
  r.n_order = ga.group->order();
  r.n_classes = all_class_indices(*ga.table);
  r.p = p;

  bool hyp = true;
  for (int i = 0; i < ga.table->count(); ++i) {
    std::int64_t d = ga.table->irr(i).degree;
    if (d > 1 && d % p != 0) {
      hyp = false;
      break;
    }
  }
  r.hypothesis = hyp;
  std::optional<Subgroup> comp = complement_in(ga.normals, ga.group->order(), p);
  r.complement_found = comp.has_value();
  r.complement_order = comp ? comp->order() : 0;
  r.verdict = verdict_for(hyp, r.complement_found);
  return r;
}

VerificationReport check_berkovich(const GroupAnalysis &ga, const NormalAnalysis &na,
                                   std::int64_t p) {
  VerificationReport r;
  r.theorem = "berkovich";
  r.group = ga.name;
  r.n_order = na.n.order();
  r.n_classes = na.n_classes;
  r.p = p;

  bool hyp = true;
  for (int row : irr_over(*ga.table, na.n)) {
    std::int64_t d = ga.table->irr(row).degree;
    if (d > 1 && d % p != 0) {
      hyp = false;
      break;
    }
  }
  r.hypothesis = hyp;
  std::optional<Subgroup> comp = complement_in(na.n_normals, na.n.order(), p);
  r.complement_found = comp.has_value();
  r.complement_order = comp ? comp->order() : 0;
  r.verdict = verdict_for(hyp, r.complement_found);
  return r;
}

VerificationReport check_isaacs_knutson(const GroupAnalysis &ga, const NormalAnalysis &na,
                                        std::int64_t p) {
  VerificationReport r;
  r.theorem = "isaacs-knutson";
  r.group = ga.name;
  r.n_order = na.n.order();
  r.n_classes = na.n_classes;
  r.p = p;

  Subgroup n_derived = derived_subgroup(na.n);
  bool hyp = true;
  for (int row : irr_over(*ga.table, n_derived)) {
    if (ga.table->irr(row).degree % p != 0) {
      hyp = false;
      break;
    }
  }
  r.hypothesis = hyp;
  std::optional<Subgroup> comp = complement_in(na.n_normals, na.n.order(), p);
  r.complement_found = comp.has_value();
  r.complement_order = comp ? comp->order() : 0;
  r.solvable_applicable = true;
  r.solvable = is_solvable(na.n);
  r.verdict = verdict_for(hyp, r.complement_found && r.solvable);
  return r;
}

ProofTrace trace_proof(const GroupAnalysis &ga, const NormalAnalysis &na, std::int64_t p) {
  ProofTrace trace;
  trace.group = ga.name;
  trace.n_order = na.n.order();
  trace.n_classes = na.n_classes;
  trace.p = p;
  auto record = [&trace](int step, bool applicable, bool holds, std::string witness) {
    trace.steps.push_back(TraceStep{step, applicable, holds, std::move(witness)});
  };

  const GroupPtr &g = ga.group;

  // Step 1: with M the smallest normal subgroup of N with p-power quotient,
  // P a Sylow p-subgroup of M and S a Sylow p-subgroup of G containing P, the
  // claim is P = S cap M with P normal in S.
  Subgroup m = o_p_residual(na.n, p);
  Subgroup p_syl = sylow_subgroup(m, p);
  Subgroup s_syl = sylow_containing(full_subgroup(g), p_syl, p);
  {
    bool holds = is_normal(m) && s_syl.contains(p_syl) && intersection(s_syl, m) == p_syl &&
                 normalizes(s_syl, p_syl);
    std::ostringstream w;
    w << "|M|=" << m.order() << " |P|=" << p_syl.order() << " |S|=" << s_syl.order();
    record(1, true, holds, w.str());
  }

  // Steps 2 through 6 need a nontrivial P.
  const bool p_trivial = p_syl.order() == 1;

  // Step 2: some nonprincipal linear character of P is S-invariant, and the
  // orbit count behind it checks out: |Lin(P)| = #fixed (mod p).
  std::optional<int> lambda_row;
  Standalone p_grp;
  if (p_trivial) {
    record(2, false, true, "P trivial");
  } else {
    p_grp = standalone_of(ga, p_syl);
    std::vector<int> lin = linear_rows(*p_grp.table);
    std::int64_t fixed = 0;
    int chosen = -1;
    for (int row : lin) {
      if (!is_invariant(to_class_function(*p_grp.table, row), p_syl, s_syl))
        continue;
      ++fixed;
      if (row != 0 && chosen < 0)
        chosen = row;
    }
    bool counting = (static_cast<std::int64_t>(lin.size()) - fixed) % p == 0;
    if (chosen >= 0)
      lambda_row = chosen;
    std::ostringstream w;
    w << "|Lin(P)|=" << lin.size() << " fixed=" << fixed;
    if (chosen >= 0)
      w << " lambda=row " << chosen;
    record(2, true, chosen >= 0 && counting, w.str());
  }

  // Step 3: inducing the chosen linear character to M yields an S-invariant
  // irreducible constituent of degree prime to p.
  std::optional<int> alpha_row;
  Standalone m_grp;
  if (!lambda_row) {
    record(3, false, true, p_trivial ? "P trivial" : "no invariant linear character");
  } else {
    m_grp = standalone_of(ga, m);
    ClassFunction lam_up = induce_to(to_class_function(*p_grp.table, *lambda_row), m_grp.group);
    std::vector<std::int64_t> mult = decompose(lam_up, *m_grp.table);
    int chosen = -1;
    for (int i = 0; i < m_grp.table->count(); ++i) {
      if (mult[static_cast<std::size_t>(i)] == 0)
        continue;
      if (m_grp.table->irr(i).degree % p == 0)
        continue;
      if (!is_invariant(to_class_function(*m_grp.table, i), m, s_syl))
        continue;
      chosen = i;
      break;
    }
    if (chosen >= 0)
      alpha_row = chosen;
    std::ostringstream w;
    if (chosen >= 0)
      w << "alpha=row " << chosen << " deg=" << m_grp.table->irr(chosen).degree;
    else
      w << "no invariant constituent";
    record(3, true, chosen >= 0, w.str());
  }

  // Step 4: M equals its own p-residual, so the determinantal order of the
  // constituent is prime to p.
  if (!alpha_row) {
    record(4, false, true, "no constituent alpha");
  } else {
    bool residual = o_p_residual(m, p) == m;
    std::int64_t o_alpha = m_grp.table->irr(*alpha_row).det_order;
    std::ostringstream w;
    w << "o(alpha)=" << o_alpha;
    record(4, true, residual && o_alpha % p != 0, w.str());
  }

  // Step 5: the constituent extends to an irreducible character of MS, found
  // by exhaustive search over rows of matching degree.
  std::optional<int> beta_row;
  Standalone ms_grp;
  if (!alpha_row) {
    record(5, false, true, "no constituent alpha");
  } else {
    Subgroup ms = join(m, s_syl);
    ms_grp = standalone_of(ga, ms);
    const IrreducibleCharacter &alpha = m_grp.table->irr(*alpha_row);
    int chosen = -1;
    for (int i = 0; i < ms_grp.table->count(); ++i) {
      if (ms_grp.table->irr(i).degree != alpha.degree)
        continue;
      ClassFunction down = restrict_to(to_class_function(*ms_grp.table, i), m_grp.group);
      if (down.values == alpha.values) {
        chosen = i;
        break;
      }
    }
    if (chosen >= 0)
      beta_row = chosen;
    std::ostringstream w;
    w << "|MS|=" << ms_grp.group->order();
    if (chosen >= 0)
      w << " beta=row " << chosen;
    else
      w << " no extension";
    record(5, true, chosen >= 0, w.str());
  }

  // Step 6: the extension induced to G has a constituent of degree prime to p.
  if (!beta_row) {
    record(6, false, true, "no extension beta");
  } else {
    ClassFunction beta_up = induce_to(to_class_function(*ms_grp.table, *beta_row), g);
    std::vector<std::int64_t> mult = decompose(beta_up, *ga.table);
    int chosen = -1;
    for (int i = 0; i < ga.table->count(); ++i) {
      if (mult[static_cast<std::size_t>(i)] == 0)
        continue;
      if (ga.table->irr(i).degree % p != 0) {
        chosen = i;
        break;
      }
    }
    std::ostringstream w;
    if (chosen >= 0)
      w << "chi=row " << chosen << " deg=" << ga.table->irr(chosen).degree;
    else
      w << "all constituents divisible";
    record(6, true, chosen >= 0, w.str());
  }

  // Steps 7 and 8 look at M = N' cap K for K the normal p-complement of N,
  // with S acting coprimely on M.
  std::optional<Subgroup> comp = complement_in(na.n_normals, na.n.order(), p);
  if (!comp) {
    record(7, false, true, "no normal p-complement in N");
    record(8, false, true, "no normal p-complement in N");
  } else {
    Subgroup k = lift_subgroup(*comp, g);
    Subgroup m7 = intersection(derived_subgroup(na.n), k);
    if (m7.order() % p == 0)
      throw internal_error("p-complement intersection has order divisible by p");
    Standalone m7_grp = standalone_of(ga, m7);
    bool all_inv = true;
    for (int i = 0; i < m7_grp.table->count(); ++i) {
      if (!is_invariant(to_class_function(*m7_grp.table, i), m7, s_syl)) {
        all_inv = false;
        break;
      }
    }
    Subgroup cent = centralizer(m7, s_syl);

    // Step 7: if every irreducible character of M is S-invariant, the coprime
    // action must be trivial: C_M(S) = M.
    bool holds = !all_inv || cent == m7;
    if (all_inv && m7.order() > 1)
      trace.step7_exercised = true;
    std::ostringstream w;
    w << "|M|=" << m7.order() << " all_invariant=" << (all_inv ? "yes" : "no")
      << " |C_M(S)|=" << cent.order();
    record(7, true, holds, w.str());

    // Step 8: a coprime action with trivial fixed points forces M solvable.
    if (cent.order() == 1) {
      std::ostringstream w8;
      w8 << "|M|=" << m7.order();
      record(8, true, is_solvable(m7), w8.str());
    } else {
      record(8, false, true, "C_M(S) nontrivial");
    }
  }

  return trace;
}

RunSummary run_corpus(const std::vector<NamedGroup> &corpus, const RunOptions &options,
                      std::ostream &out) {
  using clock = std::chrono::steady_clock;
  const auto run_start = clock::now();
  RunSummary summary;

  for (const std::string &id : options.theorems)
    if (std::find(kTheoremIds.begin(), kTheoremIds.end(), id) == kTheoremIds.end())
      throw input_error("unknown theorem id: " + id);
  std::vector<std::string> active;
  for (const std::string &id : kTheoremIds)
    if (std::find(options.theorems.begin(), options.theorems.end(), id) !=
        options.theorems.end())
      active.push_back(id);

  for (const NamedGroup &named : corpus) {
    GroupAnalysis ga = analyze_group(named);
    for (const Subgroup &n : ga.normals) {
      NormalAnalysis na = analyze_normal(ga, n);
      for (std::int64_t p : ga.primes) {
        ++summary.triples;
        for (const std::string &id : active) {
          // Its statement is about G alone, so the Thompson check runs once
          // per (G, p), on the N = G triple.
          if (id == "thompson" && na.n.order() != ga.group->order())
            continue;
          const auto check_start = clock::now();
          VerificationReport report;
          if (id == "A")
            report = check_theorem_a(ga, na, p);
          else if (id == "thompson")
            report = check_thompson(ga, p);
          else if (id == "berkovich")
            report = check_berkovich(ga, na, p);
          else
            report = check_isaacs_knutson(ga, na, p);
          report.timing_ms =
              std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - check_start)
                  .count();
          if (report.verdict == "confirmed") {
            ++summary.confirmed;
            if (id == "A" && !is_abelian(na.n))
              ++summary.confirmed_nonabelian;
          } else if (report.verdict == "vacuous") {
            ++summary.vacuous;
          } else {
            ++summary.counterexamples;
          }
          out << report_line(report, options.timings) << "\n";
        }
        if (options.trace) {
          ProofTrace trace = trace_proof(ga, na, p);
          for (const TraceStep &step : trace.steps) {
            if (!step.applicable)
              continue;
            ++summary.trace_steps_checked;
            if (!step.holds)
              ++summary.trace_steps_failed;
          }
          if (trace.step7_exercised)
            ++summary.step7_nontrivial;
          out << trace_line(trace) << "\n";
        }
      }
    }
  }

  summary.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - run_start).count();
  return summary;
}

std::string render_summary(const RunSummary &summary) {
  ordered_json j;
  j["triples"] = summary.triples;
  j["confirmed"] = summary.confirmed;
  j["vacuous"] = summary.vacuous;
  j["counterexamples"] = summary.counterexamples;
  j["elapsed_ms"] = summary.elapsed_ms;
  return j.dump();
}

} // namespace ctlab
