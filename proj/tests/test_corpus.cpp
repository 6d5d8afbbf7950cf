#include <cstdio>
#include <fstream>
#include <unistd.h>
#include <set>
#include <sstream>
#include <string>

#include "doctest.h"

#include "ctlab/corpus.hpp"
#include "ctlab/errors.hpp"
#include "ctlab/perm_group.hpp"

using ctlab::parse_group_spec;

TEST_CASE("family orders and degrees") {
  struct Row {
    const char *spec;
    std::int64_t order;
    int degree;
  };
  for (const Row &r : {
           Row{"C1", 1, 1},
           Row{"C2", 2, 2},
           Row{"C7", 7, 7},
           Row{"D6", 6, 3},
           Row{"D8", 8, 4},
           Row{"D14", 14, 7},
           Row{"Q8", 8, 8},
           Row{"Q16", 16, 16},
           Row{"S1", 1, 1},
           Row{"S4", 24, 4},
           Row{"A2", 1, 2},
           Row{"A5", 60, 5},
           Row{"SL23", 24, 8},
           Row{"F20", 20, 5},
       }) {
    CAPTURE(r.spec);
    auto g = parse_group_spec(r.spec);
    CHECK(g->order() == r.order);
    CHECK(g->degree() == r.degree);
  }
}

TEST_CASE("generalized quaternion groups have a unique involution") {
  for (const std::string spec : {"Q8", "Q12", "Q16", "Q20", "SL23"}) {
    CAPTURE(spec);
    auto g = parse_group_spec(spec);
    int involutions = 0;
    for (int i = 0; i < g->order(); ++i)
      if (g->element_order(i) == 2)
        ++involutions;
    CHECK(involutions == 1);
  }
}

TEST_CASE("dihedral groups act as symmetries of the polygon") {
  auto g = parse_group_spec("D14");
  CHECK(g->order() == 14);
  int rotations = 0;
  int reflections = 0;
  for (int i = 0; i < g->order(); ++i) {
    std::int64_t o = g->element_order(i);
    if (o == 7)
      ++rotations;
    else if (o == 2)
      ++reflections;
  }
  CHECK(rotations == 6);
  CHECK(reflections == 7);
}

TEST_CASE("F20 is transitive of degree 5 with a normal Sylow 5") {
  auto g = parse_group_spec("F20");
  std::set<int> orbit{0};
  for (int i = 0; i < g->order(); ++i)
    orbit.insert(g->element(i)(0));
  CHECK(orbit.size() == 5);
  int order5 = 0;
  int order4 = 0;
  for (int i = 0; i < g->order(); ++i) {
    std::int64_t o = g->element_order(i);
    if (o == 5)
      ++order5;
    if (o == 4)
      ++order4;
  }
  CHECK(order5 == 4);
  CHECK(order4 == 10);
}

TEST_CASE("direct products concatenate the factors") {
  auto g = parse_group_spec("C2xS3");
  CHECK(g->order() == 12);
  CHECK(g->degree() == 5);
  CHECK(g->is_abelian() == false);
  auto h = parse_group_spec("C2xC2xC3");
  CHECK(h->order() == 12);
  CHECK(h->is_abelian());
  CHECK(h->exponent() == 6);
  auto k = parse_group_spec("S3xS3");
  CHECK(k->order() == 36);
  CHECK(k->degree() == 6);
}

TEST_CASE("explicit permutation specs") {
  auto g = parse_group_spec("perm:3:[(1 2);(1 2 3)]");
  CHECK(g->order() == 6);
  CHECK(g->degree() == 3);
  auto h = parse_group_spec("perm:4:[(1 2)(3 4);(1 3)(2 4)]");
  CHECK(h->order() == 4);
  CHECK(h->is_abelian());
  auto id = parse_group_spec("perm:2:[]");
  CHECK(id->order() == 1);
  CHECK(id->degree() == 2);
}

TEST_CASE("malformed specs are rejected") {
  for (const std::string bad : {
           "",        "C0",  "D7",  "D4",   "D2",          "Q6",   "Q10x",
           "A0",      "S0",  "B5",  "SL24", "F21",         "C2x",  "xC2",
           "perm:3:", "perm:3:[(1 4)]", "perm:0:[]", "perm:3:[(1 1 2)]",
           "perm:3:[(1 2]", "C2 x C3", "c2",
       }) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_group_spec(bad), ctlab::input_error);
  }
}

TEST_CASE("caps bound order and degree") {
  ctlab::Caps caps;
  caps.max_order = 100;
  CHECK_THROWS_AS(parse_group_spec("S5", caps), ctlab::resource_error);
  CHECK(parse_group_spec("S4", caps)->order() == 24);
  ctlab::Caps dcaps;
  dcaps.max_degree = 4;
  CHECK_THROWS_AS(parse_group_spec("S6", dcaps), ctlab::resource_error);
  CHECK_THROWS_AS(parse_group_spec("C5", dcaps), ctlab::resource_error);
  CHECK(parse_group_spec("S4", dcaps)->order() == 24);
}

TEST_CASE("corpus text parsing") {
  std::string text = "# heading comment\n"
                     "\n"
                     "C2\n"
                     "  S3   # trailing comment\n"
                     "\n"
                     "Q8\n";
  auto groups = ctlab::parse_corpus_text(text);
  REQUIRE(groups.size() == 3);
  CHECK(groups[0].name == "C2");
  CHECK(groups[1].name == "S3");
  CHECK(groups[1].group->order() == 6);
  CHECK(groups[2].name == "Q8");

  CHECK(ctlab::parse_corpus_text("").empty());
  CHECK(ctlab::parse_corpus_text("# only comments\n\n").empty());

  try {
    ctlab::parse_corpus_text("C2\nD7\n");
    FAIL("expected input_error");
  } catch (const ctlab::input_error &e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  try {
    ctlab::parse_corpus_text("C2\nS3\nC2\n");
    FAIL("expected input_error");
  } catch (const ctlab::input_error &e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("corpus files load from disk") {
  std::string path = "ctlab_corpus_test_" + std::to_string(::getpid()) + ".txt";
  {
    std::ofstream out(path);
    out << "C2\nS3\n";
  }
  auto groups = ctlab::load_corpus(path);
  std::remove(path.c_str());
  REQUIRE(groups.size() == 2);
  CHECK(groups[1].group->order() == 6);
  CHECK_THROWS_AS(ctlab::load_corpus("no_such_corpus_file.txt"), ctlab::input_error);
}

TEST_CASE("default corpus contents") {
  auto groups = ctlab::parse_corpus_text(ctlab::default_corpus_text());
  CHECK(groups.size() == 43);
  std::set<std::string> names;
  std::int64_t max_order = 0;
  bool has_nonsolvable = false;
  for (const auto &ng : groups) {
    names.insert(ng.name);
    max_order = std::max(max_order, ng.group->order());
    if (ng.name == "A5" || ng.name == "S5" || ng.name == "A6" || ng.name == "S6")
      has_nonsolvable = true;
  }
  CHECK(names.size() == 43);
  CHECK(max_order <= 720);
  CHECK(has_nonsolvable);
  CHECK(names.count("S3") == 1);
  CHECK(names.count("Q8") == 1);
}

TEST_CASE("installed corpus file matches the embedded text") {
  std::ifstream in(std::string(CTLAB_DATA_DIR) + "/default_corpus.txt", std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == ctlab::default_corpus_text());
}
