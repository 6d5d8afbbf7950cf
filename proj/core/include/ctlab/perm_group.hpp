#ifndef CTLAB_PERM_GROUP_HPP
#define CTLAB_PERM_GROUP_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "ctlab/caps.hpp"
#include "ctlab/permutation.hpp"

namespace ctlab {

class PermGroup;
using GroupPtr = std::shared_ptr<const PermGroup>;

// Conjugacy class data for a fully enumerated group. Classes are ordered by
// their smallest element index, so class 0 is always the identity class and
// the ordering is reproducible across runs.
struct ConjugacyClassData {
  std::vector<int> class_of;                // element index -> class index
  std::vector<int> reps;                    // class -> smallest element index
  std::vector<std::int64_t> sizes;          // class -> |C_i|
  std::vector<std::int64_t> rep_orders;     // class -> element order
  std::vector<std::vector<int>> members;    // class -> ascending element indices
  std::vector<std::vector<int>> power_map;  // [i][m] = class of rep_i^m, 0 <= m < rep_orders[i]
  std::vector<int> inverse_class;           // class of rep^-1
  std::int64_t exponent = 1;                // lcm of rep orders

  int count() const { return static_cast<int>(reps.size()); }
  // Class of rep_i^m for arbitrary integer m (reduced mod the rep order).
  int power_class(int cls, std::int64_t m) const;
};

// An immutable finite permutation group, exhaustively enumerated at
// construction. elements()[0] is the identity; the remaining order is the
// breadth-first closure order over the generators, which makes every
// downstream computation deterministic.
class PermGroup {
public:
  static GroupPtr from_generators(int degree, std::vector<Permutation> gens, Caps caps = {});
  // Builds a group from an explicit element set (which must be closed);
  // generators are extracted greedily by ascending position in `elems`.
  static GroupPtr from_elements(int degree, const std::vector<Permutation> &elems,
                                Caps caps = {});

  int degree() const { return degree_; }
  std::int64_t order() const { return static_cast<std::int64_t>(elements_.size()); }
  const std::vector<Permutation> &generators() const { return gens_; }
  const std::vector<Permutation> &elements() const { return elements_; }
  const Permutation &element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
  const Caps &caps() const { return caps_; }

  // Index of p in the element list, or -1 when p is not a member.
  int index_of(const Permutation &p) const;
  bool contains(const Permutation &p) const { return index_of(p) >= 0; }

  int product(int a, int b) const;           // index of element(a) * element(b)
  int inverse(int a) const;                  // index of element(a)^-1
  int conjugate(int g, int x) const;         // index of g x g^-1 (by indices)
  std::int64_t element_order(int i) const { return element(i).order(); }

  bool is_abelian() const;
  std::int64_t exponent() const { return classes().exponent; }
  std::vector<std::int64_t> prime_divisors() const;

  const ConjugacyClassData &classes() const;

private:
  PermGroup() = default;

  int degree_ = 0;
  Caps caps_;
  std::vector<Permutation> gens_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, int, PermutationHash> index_;

  mutable std::once_flag classes_once_;
  mutable std::unique_ptr<ConjugacyClassData> classes_;

  void build_index();
  void compute_classes() const;
};

// A subgroup of an enumerated parent group, stored as ascending parent
// element indices plus a membership mask. Value semantics; two subgroups are
// equal when they have the same parent object and the same element set.
class Subgroup {
public:
  Subgroup() = default;
  // `elems` must be sorted, closed, and contain the identity (index 0);
  // `gens` generate the element set. Checked in debug paths by callers.
  Subgroup(GroupPtr parent, std::vector<int> elems, std::vector<int> gens);

  const GroupPtr &parent() const { return parent_; }
  std::int64_t order() const { return static_cast<std::int64_t>(elems_.size()); }
  const std::vector<int> &element_indices() const { return elems_; }
  const std::vector<int> &generator_indices() const { return gens_; }
  bool contains_index(int i) const { return mask_[static_cast<std::size_t>(i)] != 0; }
  bool contains(const Subgroup &other) const;
  bool same_parent(const Subgroup &other) const { return parent_ == other.parent_; }

  bool operator==(const Subgroup &rhs) const {
    return parent_ == rhs.parent_ && elems_ == rhs.elems_;
  }
  bool operator!=(const Subgroup &rhs) const { return !(*this == rhs); }

  // Realizes the subgroup as a standalone group on the same points. The
  // element set is unchanged, so membership lookups against the parent (or
  // any other group on the same points) keep working via hashing.
  GroupPtr realize() const;

private:
  GroupPtr parent_;
  std::vector<int> elems_;
  std::vector<int> gens_;
  std::vector<char> mask_;
};

// Subgroup construction and algebra. All functions require their Subgroup
// arguments to share a parent and throw input_error otherwise.
Subgroup trivial_subgroup(GroupPtr g);
Subgroup full_subgroup(GroupPtr g);
Subgroup subgroup_from_indices(GroupPtr g, const std::vector<int> &generator_indices);
Subgroup subgroup_from_elements(GroupPtr g, std::vector<int> sorted_elems);

Subgroup intersection(const Subgroup &a, const Subgroup &b);
Subgroup join(const Subgroup &a, const Subgroup &b);
bool normalizes(const Subgroup &s, const Subgroup &m);
bool centralizes(const Subgroup &s, const Subgroup &m);
bool is_normal(const Subgroup &h);
bool is_abelian(const Subgroup &h);

// Derived subgroup [H, H]: the normal closure in H of the commutators of its
// generators.
Subgroup derived_subgroup(const Subgroup &h);
std::vector<Subgroup> derived_series(const Subgroup &h);
bool is_solvable(const Subgroup &h);

// Sylow p-subgroup by deterministic normalizer growth: repeatedly adjoin the
// lowest-index p-element of the normalizer until the full p-part is reached.
// Returns the trivial subgroup when p does not divide |H|.
Subgroup sylow_subgroup(const Subgroup &h, std::int64_t p);
// Same growth seeded with an existing p-subgroup, yielding S >= seed.
Subgroup sylow_containing(const Subgroup &h, const Subgroup &seed, std::int64_t p);

// O^p(N): the smallest normal subgroup of N with p-group quotient, generated
// by the p'-elements of N.
Subgroup o_p_residual(const Subgroup &n, std::int64_t p);

// Centralizer of S in M: the elements of M commuting with every generator of S.
Subgroup centralizer(const Subgroup &m, const Subgroup &s);

} // namespace ctlab

#endif
