#include "ctlab/structure.hpp"

#include <algorithm>
#include <set>

#include "ctlab/class_function.hpp"
#include "ctlab/errors.hpp"

namespace ctlab {

std::vector<Subgroup> normal_subgroups(const CharacterTable &table) {
  const ConjugacyClassData &cls = table.group().classes();
  std::vector<int> all_classes(static_cast<std::size_t>(cls.count()));
  for (int t = 0; t < cls.count(); ++t)
    all_classes[static_cast<std::size_t>(t)] = t;

  // Every normal subgroup is an intersection of irreducible kernels, so the
  // pairwise-intersection closure of the kernel class sets enumerates all of
  // them.
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> work;
  auto push = [&](std::vector<int> s) {
    if (seen.insert(s).second)
      work.push_back(std::move(s));
  };
  push(std::move(all_classes));
  for (int i = 0; i < table.count(); ++i)
    push(table.irr(i).kernel_classes);
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      std::vector<int> inter;
      std::set_intersection(work[i].begin(), work[i].end(), work[j].begin(),
                            work[j].end(), std::back_inserter(inter));
      push(std::move(inter));
    }
  }

  std::vector<Subgroup> out;
  out.reserve(seen.size());
  for (const std::vector<int> &class_set : seen) {
    std::vector<int> elems;
    for (int t : class_set)
      elems.insert(elems.end(), cls.members[static_cast<std::size_t>(t)].begin(),
                   cls.members[static_cast<std::size_t>(t)].end());
    std::sort(elems.begin(), elems.end());
    out.push_back(subgroup_from_elements(table.group_ptr(), std::move(elems)));
  }
  std::sort(out.begin(), out.end(), [](const Subgroup &a, const Subgroup &b) {
    if (a.order() != b.order())
      return a.order() < b.order();
    return a.element_indices() < b.element_indices();
  });
  return out;
}

std::vector<int> class_index_set(const Subgroup &n) {
  const ConjugacyClassData &cls = n.parent()->classes();
  std::set<int> classes;
  for (int e : n.element_indices())
    classes.insert(cls.class_of[static_cast<std::size_t>(e)]);
  return std::vector<int>(classes.begin(), classes.end());
}

std::int64_t p_part(std::int64_t n, std::int64_t p) {
  std::int64_t q = 1;
  while (n % p == 0) {
    n /= p;
    q *= p;
  }
  return q;
}

std::optional<Subgroup> normal_p_complement(const CharacterTable &table, std::int64_t p) {
  std::int64_t target = table.group().order() / p_part(table.group().order(), p);
  for (const Subgroup &n : normal_subgroups(table))
    if (n.order() == target)
      return n;
  return std::nullopt;
}

HypothesisResult codegree_hypothesis(const CharacterTable &g_table, const Subgroup &n,
                                     std::int64_t p) {
  Subgroup n_derived = derived_subgroup(n);
  std::set<std::int64_t> cod = cod_set(g_table, n_derived);
  bool holds = true;
  for (std::int64_t c : cod)
    if (c % p == 0)
      holds = false;
  return HypothesisResult{holds, std::move(n_derived), std::move(cod)};
}

} // namespace ctlab

