#include "ctlab/character_table.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "ctlab/errors.hpp"

namespace ctlab {

namespace {

using Mat = std::vector<std::vector<std::int64_t>>;

// In-place reduced row echelon form over F_l. Zero rows are dropped. Returns
// the pivot column of each remaining row. RREF is unique per row space, so
// this doubles as a canonical form.
std::vector<int> rref(Mat &rows, const PrimeField &f) {
  if (rows.empty())
    return {};
  std::size_t cols = rows[0].size();
  std::vector<int> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0)
      ++p;
    if (p == rows.size())
      continue;
    std::swap(rows[rank], rows[p]);
    std::int64_t inv = f.inv(rows[rank][c]);
    for (std::size_t j = c; j < cols; ++j)
      rows[rank][j] = f.mul(rows[rank][j], inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0)
        continue;
      std::int64_t factor = rows[r][c];
      for (std::size_t j = c; j < cols; ++j)
        rows[r][j] = f.sub(rows[r][j], f.mul(factor, rows[rank][j]));
    }
    pivots.push_back(static_cast<int>(c));
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

// Nullspace basis of a square matrix over F_l, returned in RREF.
Mat nullspace(Mat m, const PrimeField &f) {
  std::size_t d = m.empty() ? 0 : m[0].size();
  std::vector<int> pivots = rref(m, f);
  std::vector<bool> is_pivot(d, false);
  for (int c : pivots)
    is_pivot[static_cast<std::size_t>(c)] = true;
  Mat basis;
  for (std::size_t fc = 0; fc < d; ++fc) {
    if (is_pivot[fc])
      continue;
    std::vector<std::int64_t> v(d, 0);
    v[fc] = 1;
    for (std::size_t r = 0; r < m.size(); ++r)
      v[static_cast<std::size_t>(pivots[r])] = f.sub(0, m[r][fc]);
    basis.push_back(std::move(v));
  }
  rref(basis, f);
  return basis;
}

// Characteristic polynomial of a square matrix over F_l, monic, constant term
// first. Uses a Hessenberg reduction by similarity transforms (only pivot
// inversions, valid over any field) followed by the minor recurrence.
std::vector<std::int64_t> charpoly(Mat h, const PrimeField &f) {
  std::size_t d = h.size();
  for (std::size_t c = 0; c + 2 < d; ++c) {
    std::size_t p = c + 1;
    while (p < d && h[p][c] == 0)
      ++p;
    if (p == d)
      continue;
    if (p != c + 1) {
      std::swap(h[p], h[c + 1]);
      for (std::size_t r = 0; r < d; ++r)
        std::swap(h[r][p], h[r][c + 1]);
    }
    std::int64_t piv_inv = f.inv(h[c + 1][c]);
    for (std::size_t r = c + 2; r < d; ++r) {
      if (h[r][c] == 0)
        continue;
      std::int64_t u = f.mul(h[r][c], piv_inv);
      for (std::size_t j = 0; j < d; ++j)
        h[r][j] = f.sub(h[r][j], f.mul(u, h[c + 1][j]));
      for (std::size_t j = 0; j < d; ++j)
        h[j][c + 1] = f.add(h[j][c + 1], f.mul(u, h[j][r]));
    }
  }
  // p_m = (x - h[m-1][m-1]) p_{m-1}
  //       - sum_{i=1}^{m-1} h[i-1][m-1] (prod_{j=i}^{m-1} h[j][j-1]) p_{i-1}
  std::vector<std::vector<std::int64_t>> p(d + 1);
  p[0] = {1};
  for (std::size_t m = 1; m <= d; ++m) {
    std::vector<std::int64_t> q(m + 1, 0);
    for (std::size_t j = 0; j < m; ++j) {
      q[j + 1] = f.add(q[j + 1], p[m - 1][j]);
      q[j] = f.sub(q[j], f.mul(h[m - 1][m - 1], p[m - 1][j]));
    }
    std::int64_t prod = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      prod = f.mul(prod, h[i][i - 1]);
      std::int64_t coef = f.mul(h[i - 1][m - 1], prod);
      if (coef == 0)
        continue;
      for (std::size_t j = 0; j < i; ++j)
        q[j] = f.sub(q[j], f.mul(coef, p[i - 1][j]));
    }
    p[m] = std::move(q);
  }
  return p[d];
}

std::int64_t poly_eval(const std::vector<std::int64_t> &poly, std::int64_t x,
                       const PrimeField &f) {
  std::int64_t acc = 0;
  for (std::size_t j = poly.size(); j-- > 0;)
    acc = f.add(f.mul(acc, x), poly[j]);
  return acc;
}

struct Subspace {
  Mat rows;                // RREF basis, each row a vector indexed by class
  std::vector<int> pivots; // pivot column per row
};

// Determinant of the character at one class from its power sums mod l, via
// Newton's identities. Divisions are by 1..degree, all below l.
std::int64_t newton_determinant(const std::vector<std::int64_t> &power_sums,
                                std::int64_t degree, const PrimeField &f) {
  std::vector<std::int64_t> elem(static_cast<std::size_t>(degree) + 1, 0);
  elem[0] = 1;
  for (std::int64_t m = 1; m <= degree; ++m) {
    std::int64_t acc = 0;
    std::int64_t sign = 1;
    for (std::int64_t i = 1; i <= m; ++i) {
      std::int64_t term = f.mul(elem[static_cast<std::size_t>(m - i)],
                                power_sums[static_cast<std::size_t>(i)]);
      acc = (sign > 0) ? f.add(acc, term) : f.sub(acc, term);
      sign = -sign;
    }
    elem[static_cast<std::size_t>(m)] = f.mul(acc, f.inv(f.reduce(m)));
  }
  return elem[static_cast<std::size_t>(degree)];
}

} // namespace

std::vector<std::vector<std::int64_t>> CharacterTable::class_matrix(int i) const {
  const ConjugacyClassData &cls = group_->classes();
  int k = cls.count();
  if (i < 0 || i >= k)
    throw internal_error("class_matrix: class index out of range");
  Mat m(static_cast<std::size_t>(k), std::vector<std::int64_t>(static_cast<std::size_t>(k), 0));
  for (int t = 0; t < k; ++t) {
    for (int x : cls.members[static_cast<std::size_t>(i)]) {
      int y = group_->product(group_->inverse(x), cls.reps[static_cast<std::size_t>(t)]);
      int j = cls.class_of[static_cast<std::size_t>(y)];
      ++m[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)];
    }
  }
  return m;
}

CharacterTable CharacterTable::compute(GroupPtr group) {
  CharacterTable table;
  table.group_ = group;
  const ConjugacyClassData &cls = group->classes();
  const int k = cls.count();
  const std::int64_t n = group->order();
  const std::int64_t exponent = cls.exponent;

  const std::int64_t l = dixon_prime(n, exponent);
  table.prime_ = l;
  PrimeField f(l);
  const std::int64_t omega_exp = f.root_of_unity(exponent);

  // Split F_l^k into the common eigenspaces of the class matrices. Smaller
  // classes first keeps the expensive matrices for the (usually few) spaces
  // that are still unsplit.
  std::vector<int> matrix_order;
  for (int i = 1; i < k; ++i)
    matrix_order.push_back(i);
  std::sort(matrix_order.begin(), matrix_order.end(), [&](int a, int b) {
    auto sa = cls.sizes[static_cast<std::size_t>(a)];
    auto sb = cls.sizes[static_cast<std::size_t>(b)];
    return sa != sb ? sa < sb : a < b;
  });

  std::vector<Subspace> spaces;
  {
    Subspace full;
    full.rows.assign(static_cast<std::size_t>(k),
                     std::vector<std::int64_t>(static_cast<std::size_t>(k), 0));
    for (int t = 0; t < k; ++t) {
      full.rows[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)] = 1;
      full.pivots.push_back(t);
    }
    spaces.push_back(std::move(full));
  }

  auto fully_split = [&spaces]() {
    for (const Subspace &s : spaces)
      if (s.rows.size() > 1)
        return false;
    return true;
  };

  for (int i : matrix_order) {
    if (fully_split())
      break;
    Mat m = table.class_matrix(i);
    std::vector<Subspace> next;
    for (Subspace &s : spaces) {
      std::size_t d = s.rows.size();
      if (d == 1) {
        next.push_back(std::move(s));
        continue;
      }
      // Restriction of the class matrix to the subspace, in basis coordinates.
      // RREF makes coordinate extraction a pivot-column read.
      Mat a(d, std::vector<std::int64_t>(d, 0));
      for (std::size_t col = 0; col < d; ++col) {
        std::vector<std::int64_t> image(static_cast<std::size_t>(k), 0);
        for (int j = 0; j < k; ++j) {
          std::int64_t acc = 0;
          for (int t = 0; t < k; ++t) {
            std::int64_t coef = m[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)];
            if (coef != 0)
              acc = f.add(acc, f.mul(f.reduce(coef), s.rows[col][static_cast<std::size_t>(t)]));
          }
          image[static_cast<std::size_t>(j)] = acc;
        }
        for (std::size_t q = 0; q < d; ++q)
          a[q][col] = image[static_cast<std::size_t>(s.pivots[q])];
        for (int t = 0; t < k; ++t) {
          std::int64_t acc = image[static_cast<std::size_t>(t)];
          for (std::size_t q = 0; q < d; ++q)
            acc = f.sub(acc, f.mul(a[q][col], s.rows[q][static_cast<std::size_t>(t)]));
          if (acc != 0)
            throw internal_error("character table: class matrix does not preserve a subspace");
        }
      }
      std::vector<std::int64_t> cp = charpoly(a, f);
      std::size_t split_dim = 0;
      for (std::int64_t lam = 0; lam < l; ++lam) {
        if (poly_eval(cp, lam, f) != 0)
          continue;
        Mat shifted = a;
        for (std::size_t q = 0; q < d; ++q)
          shifted[q][q] = f.sub(shifted[q][q], lam);
        Mat coord_basis = nullspace(std::move(shifted), f);
        if (coord_basis.empty())
          throw internal_error("character table: eigenvalue without eigenvector");
        Mat ambient;
        for (const std::vector<std::int64_t> &c : coord_basis) {
          std::vector<std::int64_t> v(static_cast<std::size_t>(k), 0);
          for (std::size_t q = 0; q < d; ++q) {
            if (c[q] == 0)
              continue;
            for (int t = 0; t < k; ++t)
              v[static_cast<std::size_t>(t)] =
                  f.add(v[static_cast<std::size_t>(t)],
                        f.mul(c[q], s.rows[q][static_cast<std::size_t>(t)]));
          }
          ambient.push_back(std::move(v));
        }
        Subspace piece;
        piece.rows = std::move(ambient);
        piece.pivots = rref(piece.rows, f);
        split_dim += piece.rows.size();
        next.push_back(std::move(piece));
      }
      if (split_dim != d)
        throw internal_error("character table: eigenspaces do not fill a subspace");
    }
    spaces = std::move(next);
  }
  if (!fully_split())
    throw internal_error("character table: splitting incomplete after all class matrices");

  // Each line is spanned by the central-character vector w with
  // w(t) = |C_t| chi(g_t) / chi(1) mod l, normalized by w(identity) = 1.
  std::vector<std::int64_t> class_size_inv(static_cast<std::size_t>(k));
  for (int t = 0; t < k; ++t)
    class_size_inv[static_cast<std::size_t>(t)] = f.inv(f.reduce(cls.sizes[static_cast<std::size_t>(t)]));

  std::vector<IrreducibleCharacter> rows;
  std::int64_t degree_square_sum = 0;
  for (const Subspace &s : spaces) {
    std::vector<std::int64_t> w = s.rows[0];
    if (w[0] == 0)
      throw internal_error("character table: eigenvector vanishes at the identity");
    std::int64_t scale = f.inv(w[0]);
    for (std::int64_t &x : w)
      x = f.mul(x, scale);

    // degree^2 = |G| / sum_t w(t) w(t*) / |C_t|, then the square root below
    // l/2 is the true degree.
    std::int64_t norm = 0;
    for (int t = 0; t < k; ++t) {
      int ti = cls.inverse_class[static_cast<std::size_t>(t)];
      std::int64_t term = f.mul(w[static_cast<std::size_t>(t)], w[static_cast<std::size_t>(ti)]);
      norm = f.add(norm, f.mul(term, class_size_inv[static_cast<std::size_t>(t)]));
    }
    if (norm == 0)
      throw internal_error("character table: degree norm vanished");
    std::int64_t deg_sq = f.mul(f.reduce(n), f.inv(norm));
    std::int64_t root = f.sqrt(deg_sq);
    std::int64_t degree = std::min(root, l - root);
    if (degree == 0)
      throw internal_error("character table: zero degree");
    degree_square_sum += degree * degree;

    // chi(g_t) mod l, for every class.
    std::vector<std::int64_t> chi_mod(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t)
      chi_mod[static_cast<std::size_t>(t)] =
          f.mul(f.reduce(degree),
                f.mul(w[static_cast<std::size_t>(t)], class_size_inv[static_cast<std::size_t>(t)]));

    IrreducibleCharacter row;
    row.degree = degree;
    row.values.reserve(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t) {
      const std::int64_t e = cls.rep_orders[static_cast<std::size_t>(t)];
      const std::int64_t omega = f.pow(omega_exp, exponent / e);
      const std::int64_t omega_inv = f.inv(omega);
      const std::int64_t e_inv = f.inv(f.reduce(e));
      std::vector<std::int64_t> mult(static_cast<std::size_t>(e), 0);
      std::int64_t mult_sum = 0;
      for (std::int64_t j = 0; j < e; ++j) {
        std::int64_t acc = 0;
        for (std::int64_t u = 0; u < e; ++u) {
          int cu = cls.power_class(t, u);
          acc = f.add(acc, f.mul(chi_mod[static_cast<std::size_t>(cu)],
                                 f.pow(omega_inv, (j * u) % e)));
        }
        std::int64_t mj = f.mul(acc, e_inv);
        if (2 * mj >= l)
          throw internal_error("character table: eigenvalue multiplicity out of range");
        mult[static_cast<std::size_t>(j)] = mj;
        mult_sum += mj;
      }
      if (mult_sum != degree)
        throw internal_error("character table: lifted multiplicities do not sum to the degree");
      row.values.emplace_back(e, std::move(mult));
    }

    // Kernel, codegree, determinant order.
    for (int t = 0; t < k; ++t) {
      const CyclotomicValue &v = row.values[static_cast<std::size_t>(t)];
      if (v.mult()[0] == degree)
        row.kernel_classes.push_back(t);
    }
    row.kernel_order = 0;
    for (int t : row.kernel_classes)
      row.kernel_order += cls.sizes[static_cast<std::size_t>(t)];
    if (n % row.kernel_order != 0)
      throw internal_error("character table: kernel size does not divide the group order");
    std::int64_t ker_index = n / row.kernel_order;
    if (ker_index % degree != 0)
      throw internal_error("character table: degree does not divide the kernel index");
    row.codegree = ker_index / degree;

    row.det_order = 1;
    for (int t = 0; t < k; ++t) {
      const std::int64_t e = cls.rep_orders[static_cast<std::size_t>(t)];
      const CyclotomicValue &v = row.values[static_cast<std::size_t>(t)];
      std::int64_t r = 0;
      for (std::int64_t j = 0; j < e; ++j)
        r = (r + j * v.mult()[static_cast<std::size_t>(j)]) % e;
      row.det_order = std::lcm(row.det_order, e / std::gcd(e, r));
      // Cross-check the exponent against the determinant recovered from
      // power sums over F_l.
      std::vector<std::int64_t> power_sums(static_cast<std::size_t>(degree) + 1, 0);
      for (std::int64_t u = 1; u <= degree; ++u)
        power_sums[static_cast<std::size_t>(u)] =
            chi_mod[static_cast<std::size_t>(cls.power_class(t, u))];
      std::int64_t det_mod = newton_determinant(power_sums, degree, f);
      std::int64_t omega = f.pow(omega_exp, exponent / e);
      if (det_mod != f.pow(omega, r))
        throw internal_error("character table: determinant cross-check failed");
    }

    rows.push_back(std::move(row));
  }

  if (static_cast<int>(rows.size()) != k)
    throw internal_error("character table: row count differs from class count");
  if (degree_square_sum != n)
    throw internal_error("character table: degree squares do not sum to the group order");

  std::sort(rows.begin(), rows.end(),
            [](const IrreducibleCharacter &a, const IrreducibleCharacter &b) {
              if (a.degree != b.degree)
                return a.degree < b.degree;
              for (std::size_t t = 0; t < a.values.size(); ++t) {
                if (a.values[t].mult() != b.values[t].mult())
                  return a.values[t].mult() > b.values[t].mult();
              }
              return false;
            });
  if (rows[0].degree != 1 || rows[0].kernel_order != n)
    throw internal_error("character table: trivial character is not row 0");
  table.irreducibles_ = std::move(rows);
  return table;
}

std::vector<std::int64_t> CharacterTable::degree_list() const {
  std::vector<std::int64_t> out;
  out.reserve(irreducibles_.size());
  for (const IrreducibleCharacter &row : irreducibles_)
    out.push_back(row.degree);
  return out;
}

std::set<std::int64_t> CharacterTable::degree_set() const {
  std::set<std::int64_t> out;
  for (const IrreducibleCharacter &row : irreducibles_)
    out.insert(row.degree);
  return out;
}

std::set<std::int64_t> CharacterTable::codegree_set() const {
  std::set<std::int64_t> out;
  for (const IrreducibleCharacter &row : irreducibles_)
    out.insert(row.codegree);
  return out;
}

} // namespace ctlab

