#include "ctlab/class_function.hpp"

#include <algorithm>

#include "ctlab/errors.hpp"

namespace ctlab {

std::int64_t ClassFunction::degree() const {
  auto d = values.at(0).as_integer();
  if (!d)
    throw input_error("class function has a non-integer value at the identity");
  return *d;
}

ClassFunction to_class_function(const CharacterTable &table, int row) {
  return ClassFunction{table.group_ptr(), table.irr(row).values};
}

ClassFunction trivial_character(GroupPtr g) {
  std::vector<CyclotomicValue> values(static_cast<std::size_t>(g->classes().count()),
                                      CyclotomicValue::integer(1));
  return ClassFunction{std::move(g), std::move(values)};
}

Subgroup kernel_subgroup(const CharacterTable &table, int row) {
  const ConjugacyClassData &cls = table.group().classes();
  std::vector<int> elems;
  for (int t : table.irr(row).kernel_classes)
    elems.insert(elems.end(), cls.members[static_cast<std::size_t>(t)].begin(),
                 cls.members[static_cast<std::size_t>(t)].end());
  std::sort(elems.begin(), elems.end());
  return subgroup_from_elements(table.group_ptr(), std::move(elems));
}

std::vector<int> irr_over(const CharacterTable &table, const Subgroup &n) {
  if (n.parent() != table.group_ptr())
    throw input_error("subgroup belongs to a different group than the table");
  if (!is_normal(n))
    throw input_error("irreducibles over a subgroup require a normal subgroup");
  std::vector<int> rows;
  for (int i = 0; i < table.count(); ++i) {
    const IrreducibleCharacter &chi = table.irr(i);
    bool contained = true;
    for (int e : n.element_indices()) {
      int t = table.group().classes().class_of[static_cast<std::size_t>(e)];
      if (!std::binary_search(chi.kernel_classes.begin(), chi.kernel_classes.end(), t)) {
        contained = false;
        break;
      }
    }
    if (!contained)
      rows.push_back(i);
  }
  return rows;
}

std::set<std::int64_t> cod_set(const CharacterTable &table, const Subgroup &n) {
  std::set<std::int64_t> out;
  for (int i : irr_over(table, n))
    out.insert(table.irr(i).codegree);
  return out;
}

std::vector<int> linear_rows(const CharacterTable &table) {
  std::vector<int> rows;
  for (int i = 0; i < table.count(); ++i)
    if (table.irr(i).degree == 1)
      rows.push_back(i);
  return rows;
}

ClassFunction restrict_to(const ClassFunction &f, GroupPtr subgroup) {
  const ConjugacyClassData &sub_cls = subgroup->classes();
  const ConjugacyClassData &big_cls = f.group->classes();
  ClassFunction out;
  out.group = subgroup;
  out.values.reserve(static_cast<std::size_t>(sub_cls.count()));
  for (int d = 0; d < sub_cls.count(); ++d) {
    const Permutation &rep = subgroup->element(sub_cls.reps[static_cast<std::size_t>(d)]);
    int gi = f.group->index_of(rep);
    if (gi < 0)
      throw input_error("restriction target is not a subgroup of the class function's group");
    out.values.push_back(f.values[static_cast<std::size_t>(big_cls.class_of[static_cast<std::size_t>(gi)])]);
  }
  return out;
}

ClassFunction induce_to(const ClassFunction &theta, GroupPtr big) {
  const ConjugacyClassData &sub_cls = theta.group->classes();
  const ConjugacyClassData &big_cls = big->classes();
  const std::int64_t n = big->order();
  const std::int64_t h = theta.group->order();
  ClassFunction out;
  out.group = big;
  out.values.assign(static_cast<std::size_t>(big_cls.count()), CyclotomicValue::integer(0));
  for (int d = 0; d < sub_cls.count(); ++d) {
    const Permutation &rep = theta.group->element(sub_cls.reps[static_cast<std::size_t>(d)]);
    int gi = big->index_of(rep);
    if (gi < 0)
      throw input_error("induction source is not a subgroup of the target group");
    int t = big_cls.class_of[static_cast<std::size_t>(gi)];
    // |C_G(g_t)| * |class_d| / |H| = |C_G(rep)| / |C_H(rep)|, an integer.
    std::int64_t num = (n / big_cls.sizes[static_cast<std::size_t>(t)]) *
                       sub_cls.sizes[static_cast<std::size_t>(d)];
    if (num % h != 0)
      throw internal_error("induction coefficient is not integral");
    out.values[static_cast<std::size_t>(t)] =
        out.values[static_cast<std::size_t>(t)] +
        theta.values[static_cast<std::size_t>(d)].scaled(num / h);
  }
  auto induced_degree = out.values[0].as_integer();
  if (!induced_degree || *induced_degree != theta.degree() * (n / h))
    throw internal_error("induced degree does not equal degree times index");
  return out;
}

std::int64_t inner_product(const ClassFunction &a, const ClassFunction &b) {
  if (a.group != b.group)
    throw input_error("inner product of class functions on different groups");
  const ConjugacyClassData &cls = a.group->classes();
  CyclotomicValue acc = CyclotomicValue::integer(0);
  for (int t = 0; t < cls.count(); ++t) {
    int ti = cls.inverse_class[static_cast<std::size_t>(t)];
    CyclotomicValue term = a.values[static_cast<std::size_t>(t)] *
                           b.values[static_cast<std::size_t>(ti)];
    acc = acc + term.scaled(cls.sizes[static_cast<std::size_t>(t)]);
  }
  auto total = acc.as_integer();
  if (!total || *total % a.group->order() != 0)
    throw input_error("inner product is not an integer; inputs are not virtual characters");
  return *total / a.group->order();
}

std::vector<std::int64_t> decompose(const ClassFunction &f, const CharacterTable &table) {
  if (f.group != table.group_ptr())
    throw input_error("decomposition against a table of a different group");
  std::vector<std::int64_t> mult;
  mult.reserve(static_cast<std::size_t>(table.count()));
  for (int i = 0; i < table.count(); ++i)
    mult.push_back(inner_product(f, to_class_function(table, i)));
  return mult;
}

std::vector<std::pair<int, std::int64_t>> constituents(const ClassFunction &f,
                                                       const CharacterTable &table) {
  std::vector<std::int64_t> mult = decompose(f, table);
  std::vector<std::pair<int, std::int64_t>> out;
  std::int64_t degree_sum = 0;
  for (int i = 0; i < table.count(); ++i) {
    if (mult[static_cast<std::size_t>(i)] < 0)
      throw input_error("negative constituent multiplicity; input is not a character");
    if (mult[static_cast<std::size_t>(i)] > 0) {
      out.emplace_back(i, mult[static_cast<std::size_t>(i)]);
      degree_sum += mult[static_cast<std::size_t>(i)] * table.irr(i).degree;
    }
  }
  if (degree_sum != f.degree())
    throw internal_error("constituent degrees do not sum to the input degree");
  return out;
}

bool is_invariant(const ClassFunction &theta, const Subgroup &m, const Subgroup &s_sub) {
  if (m.parent() != s_sub.parent())
    throw input_error("invariance check across different parent groups");
  if (theta.group->order() != m.order())
    throw input_error("class function does not live on a realization of the subgroup");
  if (!normalizes(s_sub, m))
    throw input_error("the acting subgroup does not normalize the target subgroup");
  const GroupPtr &parent = m.parent();
  const ConjugacyClassData &cls = theta.group->classes();
  for (int d = 0; d < cls.count(); ++d) {
    const Permutation &rep = theta.group->element(cls.reps[static_cast<std::size_t>(d)]);
    int pi = parent->index_of(rep);
    if (pi < 0)
      throw input_error("realization contains an element outside the parent group");
    for (int sg : s_sub.generator_indices()) {
      int ci = parent->conjugate(sg, pi);
      int mi = theta.group->index_of(parent->element(ci));
      if (mi < 0)
        throw internal_error("conjugate left the normalized subgroup");
      int d2 = cls.class_of[static_cast<std::size_t>(mi)];
      if (theta.values[static_cast<std::size_t>(d2)] != theta.values[static_cast<std::size_t>(d)])
        return false;
    }
  }
  return true;
}

ClassFunction det_character(const CharacterTable &table, int row) {
  const ConjugacyClassData &cls = table.group().classes();
  ClassFunction out;
  out.group = table.group_ptr();
  out.values.reserve(static_cast<std::size_t>(cls.count()));
  for (int t = 0; t < cls.count(); ++t) {
    const CyclotomicValue &v = table.irr(row).values[static_cast<std::size_t>(t)];
    std::int64_t e = v.order();
    std::int64_t r = 0;
    for (std::int64_t j = 0; j < e; ++j)
      r = (r + j * v.mult()[static_cast<std::size_t>(j)]) % e;
    out.values.push_back(CyclotomicValue::root_power(e, r));
  }
  return out;
}

int det_row(const CharacterTable &table, int row) {
  ClassFunction det = det_character(table, row);
  for (int i : linear_rows(table)) {
    if (table.irr(i).values == det.values)
      return i;
  }
  throw internal_error("determinant character matches no linear table row");
}

} // namespace ctlab

