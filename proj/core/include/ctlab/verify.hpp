#ifndef CTLAB_VERIFY_HPP
#define CTLAB_VERIFY_HPP

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "ctlab/character_table.hpp"
#include "ctlab/corpus.hpp"
#include "ctlab/perm_group.hpp"

namespace ctlab {

extern const std::vector<std::string> kTheoremIds; // "A", "thompson", "berkovich", "isaacs-knutson"

// One theorem check on one (G, N, p) triple. For "thompson" and "berkovich"
// the conclusion has no solvability part and solvable_applicable is false.
struct VerificationReport {
  std::string theorem;
  std::string group;
  std::int64_t n_order = 0;
  std::vector<int> n_classes; // class-index set of N in G
  std::int64_t p = 0;
  bool hypothesis = false;
  bool complement_found = false;
  std::int64_t complement_order = 0; // 0 when none found
  bool solvable_applicable = false;
  bool solvable = false;
  std::string verdict; // confirmed | vacuous | COUNTEREXAMPLE
  std::int64_t timing_ms = 0;
};

struct TraceStep {
  int step = 0; // 1..8
  bool applicable = false;
  bool holds = true; // inapplicable steps hold trivially
  std::string witness;
};

struct ProofTrace {
  std::string group;
  std::int64_t n_order = 0;
  std::vector<int> n_classes;
  std::int64_t p = 0;
  std::vector<TraceStep> steps;  // always all eight, in order
  bool step7_exercised = false;  // step 7 reached its conclusion on a nontrivial M
};

// Everything computed once per corpus group.
struct GroupAnalysis {
  std::string name;
  GroupPtr group;
  std::shared_ptr<const CharacterTable> table;
  std::vector<Subgroup> normals; // of the group itself
  std::vector<std::int64_t> primes;
};

// Everything computed once per normal subgroup N of G.
struct NormalAnalysis {
  Subgroup n;                 // as a subgroup of G
  std::vector<int> n_classes; // class-index set in G
  GroupPtr n_std;             // standalone realization (G itself when N = G)
  std::shared_ptr<const CharacterTable> n_table;
  std::vector<Subgroup> n_normals; // normal subgroups of n_std
};

GroupAnalysis analyze_group(const NamedGroup &named);
NormalAnalysis analyze_normal(const GroupAnalysis &ga, const Subgroup &n);

VerificationReport check_theorem_a(const GroupAnalysis &ga, const NormalAnalysis &na,
                                   std::int64_t p);
VerificationReport check_thompson(const GroupAnalysis &ga, std::int64_t p);
VerificationReport check_berkovich(const GroupAnalysis &ga, const NormalAnalysis &na,
                                   std::int64_t p);
VerificationReport check_isaacs_knutson(const GroupAnalysis &ga, const NormalAnalysis &na,
                                        std::int64_t p);
ProofTrace trace_proof(const GroupAnalysis &ga, const NormalAnalysis &na, std::int64_t p);

struct RunOptions {
  std::vector<std::string> theorems = kTheoremIds; // subset, in kTheoremIds order
  bool trace = false;
  bool timings = false; // include timing_ms in report lines
};

struct RunSummary {
  std::int64_t triples = 0; // (G, N, p) triples iterated
  std::int64_t confirmed = 0;
  std::int64_t vacuous = 0;
  std::int64_t counterexamples = 0;
  std::int64_t elapsed_ms = 0;
  // Aggregate diagnostics; not part of the emitted summary object.
  std::int64_t confirmed_nonabelian = 0; // theorem-A confirmations with N nonabelian
  std::int64_t trace_steps_checked = 0;  // applicable trace steps evaluated
  std::int64_t trace_steps_failed = 0;
  std::int64_t step7_nontrivial = 0; // all-invariant step-7 instances with M > 1
};

// Streams one JSON object per report (and per trace, when enabled) to out in
// deterministic order: corpus order, then N ascending, then p ascending, then
// theorem order. The summary is returned, not written.
RunSummary run_corpus(const std::vector<NamedGroup> &corpus, const RunOptions &options,
                      std::ostream &out);

// {"triples": ..., "confirmed": ..., "vacuous": ..., "counterexamples": ...,
//  "elapsed_ms": ...} as one line.
std::string render_summary(const RunSummary &summary);

} // namespace ctlab

#endif
