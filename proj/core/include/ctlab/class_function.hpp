#ifndef CTLAB_CLASS_FUNCTION_HPP
#define CTLAB_CLASS_FUNCTION_HPP

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "ctlab/character_table.hpp"
#include "ctlab/cyclotomic.hpp"
#include "ctlab/perm_group.hpp"

namespace ctlab {

// One exact value per conjugacy class of `group`. Rows copied from a table
// carry canonical eigenvalue multisets; sums and induced functions carry
// representative vectors where only the value is meaningful.
struct ClassFunction {
  GroupPtr group;
  std::vector<CyclotomicValue> values;

  // Integer value at the identity class.
  std::int64_t degree() const;
};

ClassFunction to_class_function(const CharacterTable &table, int row);
ClassFunction trivial_character(GroupPtr g);

// Kernel of a table row, as a (normal) subgroup of the table's group.
Subgroup kernel_subgroup(const CharacterTable &table, int row);

// Row indices of table whose kernel does not contain n; n must be a normal
// subgroup of the table's group.
std::vector<int> irr_over(const CharacterTable &table, const Subgroup &n);
// Codegrees over irr_over(table, n), deduplicated.
std::set<std::int64_t> cod_set(const CharacterTable &table, const Subgroup &n);
// Row indices of degree 1.
std::vector<int> linear_rows(const CharacterTable &table);

// Restriction to a standalone group whose elements all belong to f.group.
ClassFunction restrict_to(const ClassFunction &f, GroupPtr subgroup);
// Induction to a group containing every element of theta.group.
ClassFunction induce_to(const ClassFunction &theta, GroupPtr big);

// (1/|G|) sum_t |C_t| a(g_t) b(g_t^-1), exact; throws input_error when the
// result is not an integer (inputs were not virtual characters).
std::int64_t inner_product(const ClassFunction &a, const ClassFunction &b);
// Multiplicity of every table row in f, by inner products.
std::vector<std::int64_t> decompose(const ClassFunction &f, const CharacterTable &table);
// Rows with positive multiplicity; throws input_error on a negative one and
// checks sum mult * degree = f(1).
std::vector<std::pair<int, std::int64_t>> constituents(const ClassFunction &f,
                                                       const CharacterTable &table);

// True iff theta(s m s^-1) = theta(m) for all s in s_sub, checked on
// generators and class representatives. theta must be a table row of a
// realization of m; throws input_error when s_sub does not normalize m.
bool is_invariant(const ClassFunction &theta, const Subgroup &m, const Subgroup &s_sub);

// Determinant of a table row: the linear character with value
// zeta_{e_t} ^ (sum_j j*m_j) at class t. det_row returns the index of the
// linear table row it equals (internal error if none matches).
ClassFunction det_character(const CharacterTable &table, int row);
int det_row(const CharacterTable &table, int row);

} // namespace ctlab

#endif
