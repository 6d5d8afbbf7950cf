#include "ctlab/perm_group.hpp"

#include <algorithm>
#include <numeric>

#include "ctlab/errors.hpp"

namespace ctlab {

int ConjugacyClassData::power_class(int cls, std::int64_t m) const {
  std::int64_t e = rep_orders[static_cast<std::size_t>(cls)];
  std::int64_t r = ((m % e) + e) % e;
  return power_map[static_cast<std::size_t>(cls)][static_cast<std::size_t>(r)];
}

GroupPtr PermGroup::from_generators(int degree, std::vector<Permutation> gens, Caps caps) {
  if (degree < 1 || degree > 255)
    throw input_error("group degree must be in [1, 255]");
  if (degree > caps.max_degree)
    throw resource_error("degree " + std::to_string(degree) + " exceeds cap " +
                         std::to_string(caps.max_degree));
  for (const auto &g : gens)
    if (g.degree() != degree)
      throw input_error("generator degree mismatch");

  auto group = std::shared_ptr<PermGroup>(new PermGroup());
  group->degree_ = degree;
  group->caps_ = caps;
  group->gens_ = std::move(gens);

  // breadth-first closure from the identity; discovery order is the canonical
  // element order for everything downstream
  group->elements_.push_back(Permutation::identity(degree));
  group->index_.emplace(group->elements_[0], 0);
  for (std::size_t front = 0; front < group->elements_.size(); ++front) {
    Permutation x = group->elements_[front];
    for (const auto &g : group->gens_) {
      Permutation y = x * g;
      if (group->index_.find(y) != group->index_.end())
        continue;
      if (static_cast<std::int64_t>(group->elements_.size()) >= caps.max_order)
        throw resource_error("group order exceeds cap " + std::to_string(caps.max_order));
      group->index_.emplace(y, static_cast<int>(group->elements_.size()));
      group->elements_.push_back(std::move(y));
    }
  }
  return group;
}

GroupPtr PermGroup::from_elements(int degree, const std::vector<Permutation> &elems, Caps caps) {
  if (elems.empty())
    throw input_error("element set is empty");
  // greedy generating set: scan in the given order, adjoin anything not yet
  // generated
  std::vector<Permutation> gens;
  auto generated = from_generators(degree, gens, caps);
  for (const auto &e : elems) {
    if (generated->contains(e))
      continue;
    gens.push_back(e);
    generated = from_generators(degree, gens, caps);
  }
  if (generated->order() != static_cast<std::int64_t>(elems.size()))
    throw input_error("element set is not closed under multiplication");
  return generated;
}

void PermGroup::build_index() {
  index_.clear();
  for (std::size_t i = 0; i < elements_.size(); ++i)
    index_.emplace(elements_[i], static_cast<int>(i));
}

int PermGroup::index_of(const Permutation &p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

int PermGroup::product(int a, int b) const {
  int r = index_of(element(a) * element(b));
  if (r < 0)
    throw internal_error("product fell outside the group");
  return r;
}

int PermGroup::inverse(int a) const {
  int r = index_of(element(a).inverse());
  if (r < 0)
    throw internal_error("inverse fell outside the group");
  return r;
}

int PermGroup::conjugate(int g, int x) const {
  const Permutation &pg = element(g);
  int r = index_of(pg * element(x) * pg.inverse());
  if (r < 0)
    throw internal_error("conjugate fell outside the group");
  return r;
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (gens_[i] * gens_[j] != gens_[j] * gens_[i])
        return false;
  return true;
}

std::vector<std::int64_t> PermGroup::prime_divisors() const {
  std::vector<std::int64_t> primes;
  std::int64_t n = order();
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0)
        n /= p;
    }
  }
  if (n > 1)
    primes.push_back(n);
  return primes;
}

const ConjugacyClassData &PermGroup::classes() const {
  std::call_once(classes_once_, [this] { compute_classes(); });
  return *classes_;
}

void PermGroup::compute_classes() const {
  auto data = std::make_unique<ConjugacyClassData>();
  const int n = static_cast<int>(elements_.size());
  data->class_of.assign(static_cast<std::size_t>(n), -1);

  std::vector<int> orbit;
  for (int start = 0; start < n; ++start) {
    if (data->class_of[static_cast<std::size_t>(start)] >= 0)
      continue;
    int cls = data->count();
    orbit.clear();
    orbit.push_back(start);
    data->class_of[static_cast<std::size_t>(start)] = cls;
    for (std::size_t front = 0; front < orbit.size(); ++front) {
      const Permutation &x = elements_[static_cast<std::size_t>(orbit[front])];
      for (const auto &g : gens_) {
        int y = index_of(g * x * g.inverse());
        if (data->class_of[static_cast<std::size_t>(y)] < 0) {
          data->class_of[static_cast<std::size_t>(y)] = cls;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    data->reps.push_back(orbit.front());
    data->sizes.push_back(static_cast<std::int64_t>(orbit.size()));
    data->rep_orders.push_back(elements_[static_cast<std::size_t>(orbit.front())].order());
    data->members.push_back(orbit);
  }

  data->exponent = 1;
  for (std::int64_t e : data->rep_orders)
    data->exponent = std::lcm(data->exponent, e);

  for (int c = 0; c < data->count(); ++c) {
    const Permutation &rep = elements_[static_cast<std::size_t>(data->reps[static_cast<std::size_t>(c)])];
    std::int64_t e = data->rep_orders[static_cast<std::size_t>(c)];
    std::vector<int> powers(static_cast<std::size_t>(e));
    Permutation acc = Permutation::identity(degree_);
    for (std::int64_t m = 0; m < e; ++m) {
      powers[static_cast<std::size_t>(m)] = data->class_of[static_cast<std::size_t>(index_of(acc))];
      acc = acc * rep;
    }
    data->power_map.push_back(std::move(powers));
    data->inverse_class.push_back(
        data->power_map.back()[static_cast<std::size_t>((e - 1) % e)]);
  }

  classes_ = std::move(data);
}

// ---------------------------------------------------------------------------
// Subgroup

namespace {

std::vector<char> make_mask(const GroupPtr &parent, const std::vector<int> &elems) {
  std::vector<char> mask(static_cast<std::size_t>(parent->order()), 0);
  for (int i : elems)
    mask[static_cast<std::size_t>(i)] = 1;
  return mask;
}

void require_same_parent(const Subgroup &a, const Subgroup &b) {
  if (a.parent() != b.parent())
    throw input_error("subgroups do not share a parent group");
}

// BFS closure of the generators inside the parent, returned as a sorted index
// list.
std::vector<int> closure_indices(const GroupPtr &g, const std::vector<int> &gen_idx) {
  std::vector<char> seen(static_cast<std::size_t>(g->order()), 0);
  std::vector<int> out;
  seen[0] = 1;
  out.push_back(0);
  for (std::size_t front = 0; front < out.size(); ++front) {
    for (int gi : gen_idx) {
      int y = g->product(out[front], gi);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Greedy generating set for a closed element set, scanning ascending indices.
std::vector<int> greedy_generators(const GroupPtr &g, const std::vector<int> &sorted_elems) {
  std::vector<int> gens;
  std::vector<int> current{0};
  for (int idx : sorted_elems) {
    if (std::binary_search(current.begin(), current.end(), idx))
      continue;
    gens.push_back(idx);
    current = closure_indices(g, gens);
    if (current.size() == sorted_elems.size())
      break;
  }
  return gens;
}

} // namespace

Subgroup::Subgroup(GroupPtr parent, std::vector<int> elems, std::vector<int> gens)
    : parent_(std::move(parent)), elems_(std::move(elems)), gens_(std::move(gens)),
      mask_(make_mask(parent_, elems_)) {}

bool Subgroup::contains(const Subgroup &other) const {
  for (int i : other.elems_)
    if (!contains_index(i))
      return false;
  return true;
}

GroupPtr Subgroup::realize() const {
  std::vector<Permutation> gen_perms;
  gen_perms.reserve(gens_.size());
  for (int i : gens_)
    gen_perms.push_back(parent_->element(i));
  auto g = PermGroup::from_generators(parent_->degree(), std::move(gen_perms), parent_->caps());
  if (g->order() != order())
    throw internal_error("standalone realization has wrong order");
  return g;
}

Subgroup trivial_subgroup(GroupPtr g) { return Subgroup(std::move(g), {0}, {}); }

Subgroup full_subgroup(GroupPtr g) {
  std::vector<int> elems(static_cast<std::size_t>(g->order()));
  std::iota(elems.begin(), elems.end(), 0);
  std::vector<int> gens;
  gens.reserve(g->generators().size());
  for (const auto &p : g->generators()) {
    int i = g->index_of(p);
    if (i != 0)
      gens.push_back(i);
  }
  return Subgroup(std::move(g), std::move(elems), std::move(gens));
}

Subgroup subgroup_from_indices(GroupPtr g, const std::vector<int> &generator_indices) {
  auto elems = closure_indices(g, generator_indices);
  return Subgroup(std::move(g), std::move(elems), generator_indices);
}

Subgroup subgroup_from_elements(GroupPtr g, std::vector<int> sorted_elems) {
  auto gens = greedy_generators(g, sorted_elems);
  auto check = closure_indices(g, gens);
  if (check != sorted_elems)
    throw input_error("element set is not a subgroup");
  return Subgroup(std::move(g), std::move(sorted_elems), std::move(gens));
}

Subgroup intersection(const Subgroup &a, const Subgroup &b) {
  require_same_parent(a, b);
  std::vector<int> elems;
  std::set_intersection(a.element_indices().begin(), a.element_indices().end(),
                        b.element_indices().begin(), b.element_indices().end(),
                        std::back_inserter(elems));
  auto gens = greedy_generators(a.parent(), elems);
  return Subgroup(a.parent(), std::move(elems), std::move(gens));
}

Subgroup join(const Subgroup &a, const Subgroup &b) {
  require_same_parent(a, b);
  std::vector<int> gens = a.generator_indices();
  gens.insert(gens.end(), b.generator_indices().begin(), b.generator_indices().end());
  return subgroup_from_indices(a.parent(), gens);
}

bool normalizes(const Subgroup &s, const Subgroup &m) {
  require_same_parent(s, m);
  const auto &g = s.parent();
  for (int si : s.generator_indices())
    for (int mi : m.generator_indices())
      if (!m.contains_index(g->conjugate(si, mi)))
        return false;
  return true;
}

bool centralizes(const Subgroup &s, const Subgroup &m) {
  require_same_parent(s, m);
  const auto &g = s.parent();
  for (int si : s.generator_indices())
    for (int mi : m.generator_indices())
      if (g->product(si, mi) != g->product(mi, si))
        return false;
  return true;
}

bool is_normal(const Subgroup &h) { return normalizes(full_subgroup(h.parent()), h); }

bool is_abelian(const Subgroup &h) {
  const auto &g = h.parent();
  const auto &gens = h.generator_indices();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (g->product(gens[i], gens[j]) != g->product(gens[j], gens[i]))
        return false;
  return true;
}

Subgroup derived_subgroup(const Subgroup &h) {
  const auto &g = h.parent();
  // commutators of the generators, then the normal closure within H
  std::vector<int> seed;
  const auto &gens = h.generator_indices();
  for (int a : gens)
    for (int b : gens) {
      int c = g->product(g->product(g->inverse(a), g->inverse(b)), g->product(a, b));
      if (c != 0)
        seed.push_back(c);
    }
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());

  auto closure = closure_indices(g, seed);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> added;
    for (int hi : gens)
      for (int x : seed) {
        int c = g->conjugate(hi, x);
        if (!std::binary_search(closure.begin(), closure.end(), c))
          added.push_back(c);
      }
    if (!added.empty()) {
      seed.insert(seed.end(), added.begin(), added.end());
      std::sort(seed.begin(), seed.end());
      seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
      closure = closure_indices(g, seed);
      grew = true;
    }
  }
  auto final_gens = greedy_generators(g, closure);
  return Subgroup(g, std::move(closure), std::move(final_gens));
}

std::vector<Subgroup> derived_series(const Subgroup &h) {
  std::vector<Subgroup> series{h};
  while (true) {
    Subgroup next = derived_subgroup(series.back());
    if (next.order() == series.back().order())
      break;
    series.push_back(std::move(next));
    if (series.back().order() == 1)
      break;
  }
  return series;
}

bool is_solvable(const Subgroup &h) { return derived_series(h).back().order() == 1; }

namespace {

bool is_prime_int(std::int64_t p) {
  if (p < 2)
    return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

bool is_p_power(std::int64_t n, std::int64_t p) {
  while (n % p == 0)
    n /= p;
  return n == 1;
}

Subgroup sylow_grow(const Subgroup &h, Subgroup s, std::int64_t p) {
  const auto &g = h.parent();
  std::int64_t p_part = 1;
  for (std::int64_t n = h.order(); n % p == 0; n /= p)
    p_part *= p;

  while (s.order() < p_part) {
    int found = -1;
    for (int x : h.element_indices()) {
      if (s.contains_index(x))
        continue;
      if (!is_p_power(g->element_order(x), p))
        continue;
      bool normalizes_s = true;
      for (int si : s.generator_indices())
        if (!s.contains_index(g->conjugate(x, si))) {
          normalizes_s = false;
          break;
        }
      if (normalizes_s) {
        found = x;
        break;
      }
    }
    if (found < 0)
      throw internal_error("Sylow growth stalled below the p-part");
    std::vector<int> gens = s.generator_indices();
    gens.push_back(found);
    s = subgroup_from_indices(g, gens);
  }
  return s;
}

} // namespace

Subgroup sylow_subgroup(const Subgroup &h, std::int64_t p) {
  if (!is_prime_int(p))
    throw input_error("p = " + std::to_string(p) + " is not prime");
  if (h.order() % p != 0)
    return trivial_subgroup(h.parent());
  return sylow_grow(h, trivial_subgroup(h.parent()), p);
}

Subgroup sylow_containing(const Subgroup &h, const Subgroup &seed, std::int64_t p) {
  if (!is_prime_int(p))
    throw input_error("p = " + std::to_string(p) + " is not prime");
  require_same_parent(h, seed);
  if (!h.contains(seed))
    throw input_error("seed subgroup is not contained in the ambient subgroup");
  if (!is_p_power(seed.order(), p))
    throw input_error("seed subgroup is not a p-group");
  if (h.order() % p != 0)
    return trivial_subgroup(h.parent());
  return sylow_grow(h, seed, p);
}

Subgroup o_p_residual(const Subgroup &n, std::int64_t p) {
  if (!is_prime_int(p))
    throw input_error("p = " + std::to_string(p) + " is not prime");
  const auto &g = n.parent();
  std::vector<int> seed;
  for (int x : n.element_indices())
    if (x != 0 && g->element_order(x) % p != 0)
      seed.push_back(x);
  auto elems = closure_indices(g, seed);
  auto gens = greedy_generators(g, elems);
  Subgroup result(g, std::move(elems), std::move(gens));
  if (n.order() % result.order() != 0 || !is_p_power(n.order() / result.order(), p))
    throw internal_error("O^p residual index is not a p-power");
  return result;
}

Subgroup centralizer(const Subgroup &m, const Subgroup &s) {
  require_same_parent(m, s);
  const auto &g = m.parent();
  std::vector<int> elems;
  for (int x : m.element_indices()) {
    bool central = true;
    for (int si : s.generator_indices())
      if (g->product(x, si) != g->product(si, x)) {
        central = false;
        break;
      }
    if (central)
      elems.push_back(x);
  }
  auto gens = greedy_generators(g, elems);
  return Subgroup(g, std::move(elems), std::move(gens));
}

} // namespace ctlab
