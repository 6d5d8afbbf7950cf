#include <benchmark/benchmark.h>

#include "ctlab/character_table.hpp"
#include "ctlab/corpus.hpp"
#include "ctlab/perm_group.hpp"
#include "ctlab/structure.hpp"
#include "ctlab/verify.hpp"

#include <sstream>

namespace {

void BM_group_construction(benchmark::State &state, const char *spec) {
  for (auto _ : state) {
    ctlab::GroupPtr g = ctlab::parse_group_spec(spec);
    benchmark::DoNotOptimize(g->order());
  }
}
BENCHMARK_CAPTURE(BM_group_construction, S5, "S5");
BENCHMARK_CAPTURE(BM_group_construction, S6, "S6");
BENCHMARK_CAPTURE(BM_group_construction, C7xS3, "C7xS3");

void BM_conjugacy_classes(benchmark::State &state, const char *spec) {
  for (auto _ : state) {
    ctlab::GroupPtr g = ctlab::parse_group_spec(spec);
    benchmark::DoNotOptimize(g->classes().count());
  }
}
BENCHMARK_CAPTURE(BM_conjugacy_classes, S6, "S6");
BENCHMARK_CAPTURE(BM_conjugacy_classes, A5, "A5");

void BM_character_table(benchmark::State &state, const char *spec) {
  for (auto _ : state) {
    ctlab::GroupPtr g = ctlab::parse_group_spec(spec);
    ctlab::CharacterTable table = ctlab::CharacterTable::compute(g);
    benchmark::DoNotOptimize(table.count());
  }
}
BENCHMARK_CAPTURE(BM_character_table, A5, "A5");
BENCHMARK_CAPTURE(BM_character_table, S5, "S5");
BENCHMARK_CAPTURE(BM_character_table, S6, "S6");

void BM_normal_lattice(benchmark::State &state, const char *spec) {
  ctlab::GroupPtr g = ctlab::parse_group_spec(spec);
  ctlab::CharacterTable table = ctlab::CharacterTable::compute(g);
  for (auto _ : state) {
    auto normals = ctlab::normal_subgroups(table);
    benchmark::DoNotOptimize(normals.size());
  }
}
BENCHMARK_CAPTURE(BM_normal_lattice, S4, "S4");
BENCHMARK_CAPTURE(BM_normal_lattice, C2xQ8, "C2xQ8");
BENCHMARK_CAPTURE(BM_normal_lattice, D24, "D24");

void BM_verify_corpus(benchmark::State &state, const char *corpus_text) {
  auto corpus = ctlab::parse_corpus_text(corpus_text);
  for (auto _ : state) {
    std::ostringstream sink;
    ctlab::RunSummary summary = ctlab::run_corpus(corpus, ctlab::RunOptions{}, sink);
    benchmark::DoNotOptimize(summary.triples);
  }
}
BENCHMARK_CAPTURE(BM_verify_corpus, small, "S3\nA4\nS4\nQ8\n");

} // namespace

BENCHMARK_MAIN();
