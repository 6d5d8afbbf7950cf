#ifndef CTLAB_CHARACTER_TABLE_HPP
#define CTLAB_CHARACTER_TABLE_HPP

#include <cstdint>
#include <set>
#include <vector>

#include "ctlab/cyclotomic.hpp"
#include "ctlab/perm_group.hpp"

namespace ctlab {

// One irreducible character. values[t] is the canonical eigenvalue multiset
// of a representing matrix at the class-t representative: a multiplicity
// vector over the e_t-th roots of unity with non-negative entries summing to
// the degree.
struct IrreducibleCharacter {
  std::int64_t degree = 0;
  std::vector<CyclotomicValue> values;
  std::vector<int> kernel_classes; // ascending class indices
  std::int64_t kernel_order = 0;
  std::int64_t codegree = 0;  // |G : ker| / degree
  std::int64_t det_order = 0; // multiplicative order of the determinant character
};

// Full table of irreducible characters, computed from class-sum structure
// constants by splitting F_l^k into common eigenspaces of the class matrices
// and lifting the eigenvector data back to exact cyclotomic values.
//
// Rows are ordered by ascending degree; among equal degrees by
// lexicographically descending multiplicity vectors class by class. The
// trivial character is always row 0.
class CharacterTable {
public:
  static CharacterTable compute(GroupPtr group);

  const PermGroup &group() const { return *group_; }
  GroupPtr group_ptr() const { return group_; }
  int count() const { return static_cast<int>(irreducibles_.size()); }
  const IrreducibleCharacter &irr(int i) const { return irreducibles_.at(static_cast<std::size_t>(i)); }
  const std::vector<IrreducibleCharacter> &irreducibles() const { return irreducibles_; }
  std::int64_t prime() const { return prime_; } // modulus used for the eigenvector phase

  std::vector<std::int64_t> degree_list() const;   // ascending, with multiplicity
  std::set<std::int64_t> degree_set() const;       // cd(G)
  std::set<std::int64_t> codegree_set() const;     // cod(G)

  // Structure constants for class i: result[j][t] counts pairs
  // (x, y) in C_i x C_j with x*y equal to the class-t representative.
  std::vector<std::vector<std::int64_t>> class_matrix(int i) const;

private:
  CharacterTable() = default;

  GroupPtr group_;
  std::int64_t prime_ = 0;
  std::vector<IrreducibleCharacter> irreducibles_;
};

} // namespace ctlab

#endif
