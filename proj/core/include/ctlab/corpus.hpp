#ifndef CTLAB_CORPUS_HPP
#define CTLAB_CORPUS_HPP

#include <string>
#include <vector>

#include "ctlab/caps.hpp"
#include "ctlab/perm_group.hpp"

namespace ctlab {

struct NamedGroup {
  std::string name; // the spec text, e.g. "C2xS3"
  GroupPtr group;
};

// Grammar (machine-readable copy in docs/corpus-grammar.ebnf):
//   spec    = atom { "x" atom }
//   atom    = "C"n | "D"n | "Q"n | "S"n | "A"n | "SL23" | "F20"
//           | "perm:" degree ":[" perm { ";" perm } "]"
// with 1-based cycle notation inside perm, e.g. perm:3:[(1 2);(1 2 3)].
GroupPtr parse_group_spec(const std::string &spec, Caps caps = {});

// One spec per line; '#' starts a comment; blank lines ignored; duplicate
// names rejected. Errors carry the 1-based line number.
std::vector<NamedGroup> parse_corpus_text(const std::string &text, Caps caps = {});
std::vector<NamedGroup> load_corpus(const std::string &path, Caps caps = {});

// The corpus shipped with the tool (also installed as data/default_corpus.txt).
const std::string &default_corpus_text();

} // namespace ctlab

#endif
