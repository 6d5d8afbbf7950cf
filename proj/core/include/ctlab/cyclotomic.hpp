#ifndef CTLAB_CYCLOTOMIC_HPP
#define CTLAB_CYCLOTOMIC_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ctlab/modular.hpp"

namespace ctlab {

// An element of Z[zeta_e], stored as integer multiplicities of the e-th roots
// of unity: value = sum_j mult[j] * zeta_e^j. Character values use this with
// non-negative entries summing to the degree (the eigenvalue multiset of a
// representing matrix); general class-function arithmetic allows arbitrary
// integer entries, where the vector is one representative of the value.
class CyclotomicValue {
public:
  CyclotomicValue() : order_(1), mult_{0} {}
  CyclotomicValue(std::int64_t order, std::vector<std::int64_t> mult);
  static CyclotomicValue integer(std::int64_t n);
  static CyclotomicValue root_power(std::int64_t order, std::int64_t j);

  std::int64_t order() const { return order_; }
  const std::vector<std::int64_t> &mult() const { return mult_; }
  // Sum of multiplicities; equals chi(1) for canonical character values.
  std::int64_t total() const;

  CyclotomicValue embedded(std::int64_t new_order) const; // requires order | new_order
  CyclotomicValue operator+(const CyclotomicValue &rhs) const;
  CyclotomicValue operator-(const CyclotomicValue &rhs) const;
  CyclotomicValue operator*(const CyclotomicValue &rhs) const;
  CyclotomicValue scaled(std::int64_t c) const;

  // Eigenvalue-level power map: each zeta_e^j becomes zeta_e^(j*u). The result
  // order is e / gcd(e, u). This is the value of chi at g^u when *this is the
  // canonical value at g.
  CyclotomicValue power_transform(std::int64_t u) const;
  // Complex conjugation (exponent negation); canonical value at g^-1.
  CyclotomicValue conjugated() const { return power_transform(order_ - 1); }

  // Image in F_l under zeta_E -> omega_E, where E is a multiple of order()
  // and omega_E is a primitive E-th root of unity mod l.
  std::int64_t eval_mod(const PrimeField &f, std::int64_t ambient_order,
                        std::int64_t omega) const;

  std::complex<double> to_complex() const;

  // Coefficients over the integral power basis 1, zeta, ..., zeta^(phi(e)-1)
  // after reduction modulo Phi_e; length phi(e). Two vectors represent the
  // same value exactly when their reductions agree.
  std::vector<std::int64_t> basis_coefficients() const;

  // Exact value tests via reduction modulo the cyclotomic polynomial Phi_e.
  bool is_zero() const;
  bool is_integer() const;
  std::optional<std::int64_t> as_integer() const;
  bool value_equals(const CyclotomicValue &rhs) const { return (*this - rhs).is_zero(); }

  // Representation equality (same order, same multiplicities). Canonical
  // character values of one irreducible compare correctly with this.
  bool operator==(const CyclotomicValue &rhs) const {
    return order_ == rhs.order_ && mult_ == rhs.mult_;
  }
  bool operator!=(const CyclotomicValue &rhs) const { return !(*this == rhs); }

  // Compact text form: plain integer, or terms like "2z6^5" meaning
  // 2*zeta_6^5.
  std::string to_string() const;

private:
  std::int64_t order_;
  std::vector<std::int64_t> mult_;
};

// Phi_e as an integer coefficient vector, constant term first. Cached.
const std::vector<std::int64_t> &cyclotomic_polynomial(std::int64_t e);

} // namespace ctlab

#endif
