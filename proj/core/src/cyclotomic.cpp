#include "ctlab/cyclotomic.hpp"

#include <cassert>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

#include "ctlab/errors.hpp"

namespace ctlab {

namespace {

// Quotient of two integer polynomials where the divisor is monic and divides
// exactly. Coefficient vectors store the constant term first.
std::vector<std::int64_t> exact_monic_quotient(std::vector<std::int64_t> num,
                                               const std::vector<std::int64_t> &den) {
  assert(!den.empty() && den.back() == 1);
  if (num.size() < den.size())
    throw internal_error("cyclotomic: degree underflow in polynomial division");
  std::vector<std::int64_t> quot(num.size() - den.size() + 1, 0);
  for (std::size_t qi = quot.size(); qi-- > 0;) {
    std::int64_t c = num[qi + den.size() - 1];
    quot[qi] = c;
    if (c == 0)
      continue;
    for (std::size_t di = 0; di < den.size(); ++di)
      num[qi + di] -= c * den[di];
  }
  for (std::int64_t c : num)
    if (c != 0)
      throw internal_error("cyclotomic: inexact polynomial division");
  return quot;
}

// Remainder of poly modulo the monic divisor, in place.
void monic_remainder(std::vector<std::int64_t> &poly,
                     const std::vector<std::int64_t> &den) {
  assert(!den.empty() && den.back() == 1);
  for (std::size_t qi = poly.size(); qi-- + 1 > den.size();) {
    std::int64_t c = poly[qi];
    if (c == 0)
      continue;
    std::size_t shift = qi + 1 - den.size();
    for (std::size_t di = 0; di < den.size(); ++di)
      poly[shift + di] -= c * den[di];
  }
  poly.resize(den.size() - 1);
}

} // namespace

const std::vector<std::int64_t> &cyclotomic_polynomial(std::int64_t e) {
  static std::map<std::int64_t, std::vector<std::int64_t>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  if (e < 1)
    throw internal_error("cyclotomic: order must be positive");
  auto it = cache.find(e);
  if (it != cache.end())
    return it->second;
  // Phi_e = (x^e - 1) / prod_{d | e, d < e} Phi_d, computed bottom up so the
  // recursion depth stays flat and every divisor lands in the cache.
  for (std::int64_t d = 1; d <= e; ++d) {
    if (e % d != 0 || cache.count(d))
      continue;
    std::vector<std::int64_t> num(static_cast<std::size_t>(d) + 1, 0);
    num[0] = -1;
    num.back() = 1;
    for (std::int64_t dd = 1; dd < d; ++dd)
      if (d % dd == 0)
        num = exact_monic_quotient(std::move(num), cache.at(dd));
    cache.emplace(d, std::move(num));
  }
  return cache.at(e);
}

CyclotomicValue::CyclotomicValue(std::int64_t order, std::vector<std::int64_t> mult)
    : order_(order), mult_(std::move(mult)) {
  if (order_ < 1 || mult_.size() != static_cast<std::size_t>(order_))
    throw internal_error("cyclotomic: multiplicity vector length mismatch");
}

CyclotomicValue CyclotomicValue::integer(std::int64_t n) {
  return CyclotomicValue(1, {n});
}

CyclotomicValue CyclotomicValue::root_power(std::int64_t order, std::int64_t j) {
  std::vector<std::int64_t> m(static_cast<std::size_t>(order), 0);
  j %= order;
  if (j < 0)
    j += order;
  m[static_cast<std::size_t>(j)] = 1;
  return CyclotomicValue(order, std::move(m));
}

std::int64_t CyclotomicValue::total() const {
  std::int64_t s = 0;
  for (std::int64_t m : mult_)
    s += m;
  return s;
}

CyclotomicValue CyclotomicValue::embedded(std::int64_t new_order) const {
  if (new_order % order_ != 0)
    throw internal_error("cyclotomic: embedding order is not a multiple");
  if (new_order == order_)
    return *this;
  std::int64_t stride = new_order / order_;
  std::vector<std::int64_t> m(static_cast<std::size_t>(new_order), 0);
  for (std::int64_t j = 0; j < order_; ++j)
    m[static_cast<std::size_t>(j * stride)] = mult_[static_cast<std::size_t>(j)];
  return CyclotomicValue(new_order, std::move(m));
}

CyclotomicValue CyclotomicValue::operator+(const CyclotomicValue &rhs) const {
  std::int64_t e = std::lcm(order_, rhs.order_);
  CyclotomicValue a = embedded(e);
  CyclotomicValue b = rhs.embedded(e);
  for (std::size_t j = 0; j < a.mult_.size(); ++j)
    a.mult_[j] += b.mult_[j];
  return a;
}

CyclotomicValue CyclotomicValue::operator-(const CyclotomicValue &rhs) const {
  return *this + rhs.scaled(-1);
}

CyclotomicValue CyclotomicValue::operator*(const CyclotomicValue &rhs) const {
  std::int64_t e = std::lcm(order_, rhs.order_);
  CyclotomicValue a = embedded(e);
  CyclotomicValue b = rhs.embedded(e);
  std::vector<std::int64_t> m(static_cast<std::size_t>(e), 0);
  for (std::int64_t i = 0; i < e; ++i) {
    if (a.mult_[static_cast<std::size_t>(i)] == 0)
      continue;
    for (std::int64_t j = 0; j < e; ++j) {
      if (b.mult_[static_cast<std::size_t>(j)] == 0)
        continue;
      std::int64_t k = (i + j) % e;
      m[static_cast<std::size_t>(k)] += a.mult_[static_cast<std::size_t>(i)] *
                                        b.mult_[static_cast<std::size_t>(j)];
    }
  }
  return CyclotomicValue(e, std::move(m));
}

CyclotomicValue CyclotomicValue::scaled(std::int64_t c) const {
  CyclotomicValue r = *this;
  for (std::int64_t &m : r.mult_)
    m *= c;
  return r;
}

CyclotomicValue CyclotomicValue::power_transform(std::int64_t u) const {
  u %= order_;
  if (u < 0)
    u += order_;
  std::int64_t d = std::gcd(order_, u);
  std::int64_t new_order = order_ / d;
  std::vector<std::int64_t> m(static_cast<std::size_t>(new_order), 0);
  for (std::int64_t j = 0; j < order_; ++j) {
    std::int64_t c = mult_[static_cast<std::size_t>(j)];
    if (c == 0)
      continue;
    std::int64_t k = (j * u) % order_;
    assert(k % d == 0);
    m[static_cast<std::size_t>(k / d)] += c;
  }
  return CyclotomicValue(new_order, std::move(m));
}

std::int64_t CyclotomicValue::eval_mod(const PrimeField &f, std::int64_t ambient_order,
                                       std::int64_t omega) const {
  if (ambient_order % order_ != 0)
    throw internal_error("cyclotomic: ambient order mismatch in eval_mod");
  std::int64_t stride = ambient_order / order_;
  std::int64_t acc = 0;
  for (std::int64_t j = 0; j < order_; ++j) {
    std::int64_t c = mult_[static_cast<std::size_t>(j)];
    if (c == 0)
      continue;
    std::int64_t term = f.mul(f.reduce(c), f.pow(omega, j * stride));
    acc = f.add(acc, term);
  }
  return acc;
}

std::complex<double> CyclotomicValue::to_complex() const {
  std::complex<double> acc(0.0, 0.0);
  for (std::int64_t j = 0; j < order_; ++j) {
    std::int64_t c = mult_[static_cast<std::size_t>(j)];
    if (c == 0)
      continue;
    double angle = 2.0 * std::numbers::pi * static_cast<double>(j) /
                   static_cast<double>(order_);
    acc += static_cast<double>(c) * std::polar(1.0, angle);
  }
  return acc;
}

std::vector<std::int64_t> CyclotomicValue::basis_coefficients() const {
  std::vector<std::int64_t> poly = mult_;
  monic_remainder(poly, cyclotomic_polynomial(order_));
  return poly;
}

bool CyclotomicValue::is_zero() const {
  for (std::int64_t c : basis_coefficients())
    if (c != 0)
      return false;
  return true;
}

bool CyclotomicValue::is_integer() const { return as_integer().has_value(); }

std::optional<std::int64_t> CyclotomicValue::as_integer() const {
  std::vector<std::int64_t> poly = basis_coefficients();
  // {1, zeta, ..., zeta^(phi(e)-1)} is an integral basis, so the value is a
  // rational integer exactly when every non-constant coordinate vanishes.
  for (std::size_t j = 1; j < poly.size(); ++j)
    if (poly[j] != 0)
      return std::nullopt;
  return poly.empty() ? 0 : poly[0];
}

std::string CyclotomicValue::to_string() const {
  if (auto n = as_integer())
    return std::to_string(*n);
  std::ostringstream out;
  bool first = true;
  for (std::int64_t j = 0; j < order_; ++j) {
    std::int64_t c = mult_[static_cast<std::size_t>(j)];
    if (c == 0)
      continue;
    if (!first)
      out << (c > 0 ? "+" : "");
    first = false;
    if (j == 0) {
      out << c;
      continue;
    }
    if (c == -1)
      out << "-";
    else if (c != 1)
      out << c;
    out << "z" << order_;
    if (j != 1)
      out << "^" << j;
  }
  return out.str();
}

} // namespace ctlab

