#ifndef CTLAB_STRUCTURE_HPP
#define CTLAB_STRUCTURE_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "ctlab/character_table.hpp"
#include "ctlab/perm_group.hpp"

namespace ctlab {

// All normal subgroups of the table's group, as intersections of irreducible
// kernels, ascending by (order, element index list).
std::vector<Subgroup> normal_subgroups(const CharacterTable &table);

// Ascending parent-class indices meeting n. For normal n this is its class
// decomposition.
std::vector<int> class_index_set(const Subgroup &n);

std::int64_t p_part(std::int64_t n, std::int64_t p);

// The normal p-complement of the table's group when one exists: the normal
// subgroup whose order is the p'-part of the group order.
std::optional<Subgroup> normal_p_complement(const CharacterTable &table, std::int64_t p);

// Hypothesis of the main normal-p-complement theorem for (G, N, p): no member
// of cod(G|N') is divisible by p.
struct HypothesisResult {
  bool holds;
  Subgroup n_derived;         // N' as a subgroup of G
  std::set<std::int64_t> cod; // cod(G|N')
};
HypothesisResult codegree_hypothesis(const CharacterTable &g_table, const Subgroup &n,
                                     std::int64_t p);

} // namespace ctlab

#endif
