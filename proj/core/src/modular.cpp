#include "ctlab/modular.hpp"

#include <string>

#include "ctlab/errors.hpp"

namespace ctlab {

PrimeField::PrimeField(std::int64_t modulus) : mod_(modulus) {
  if (!is_prime(modulus))
    throw input_error("modulus " + std::to_string(modulus) + " is not prime");
  if (modulus >= (std::int64_t{1} << 31))
    throw resource_error("modulus exceeds 2^31");
}

std::int64_t PrimeField::pow(std::int64_t base, std::int64_t exp) const {
  base = reduce(base);
  std::int64_t acc = 1;
  while (exp > 0) {
    if (exp & 1)
      acc = mul(acc, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return acc;
}

std::int64_t PrimeField::inv(std::int64_t a) const {
  a = reduce(a);
  if (a == 0)
    throw input_error("division by zero in F_l");
  return pow(a, mod_ - 2);
}

std::int64_t PrimeField::sqrt(std::int64_t a) const {
  a = reduce(a);
  if (a == 0)
    return 0;
  if (pow(a, (mod_ - 1) / 2) != 1)
    throw internal_error("modular sqrt of a non-residue");
  if (mod_ % 4 == 3)
    return pow(a, (mod_ + 1) / 4);

  // Tonelli-Shanks with the smallest non-residue as the twiddle base
  std::int64_t q = mod_ - 1;
  int s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::int64_t z = 2;
  while (pow(z, (mod_ - 1) / 2) != mod_ - 1)
    ++z;

  std::int64_t m = s;
  std::int64_t c = pow(z, q);
  std::int64_t t = pow(a, q);
  std::int64_t r = pow(a, (q + 1) / 2);
  while (t != 1) {
    std::int64_t i = 0;
    std::int64_t probe = t;
    while (probe != 1) {
      probe = mul(probe, probe);
      ++i;
      if (i == m)
        throw internal_error("Tonelli-Shanks failed to converge");
    }
    std::int64_t b = c;
    for (std::int64_t j = 0; j < m - i - 1; ++j)
      b = mul(b, b);
    m = i;
    c = mul(b, b);
    t = mul(t, c);
    r = mul(r, b);
  }
  return r;
}

std::int64_t PrimeField::primitive_root() const {
  if (mod_ == 2)
    return 1;
  auto factors = prime_factors(mod_ - 1);
  for (std::int64_t g = 2; g < mod_; ++g) {
    bool primitive = true;
    for (std::int64_t q : factors)
      if (pow(g, (mod_ - 1) / q) == 1) {
        primitive = false;
        break;
      }
    if (primitive)
      return g;
  }
  throw internal_error("no primitive root found");
}

std::int64_t PrimeField::root_of_unity(std::int64_t e) const {
  if (e < 1 || (mod_ - 1) % e != 0)
    throw input_error("no " + std::to_string(e) + "-th roots of unity mod " +
                      std::to_string(mod_));
  return pow(primitive_root(), (mod_ - 1) / e);
}

bool is_prime(std::int64_t n) {
  if (n < 2)
    return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0)
        n /= p;
    }
  }
  if (n > 1)
    out.push_back(n);
  return out;
}

std::int64_t dixon_prime(std::int64_t order, std::int64_t exponent) {
  // l > 2*sqrt(order), tested without floating point: l^2 > 4*order
  auto big_enough = [order](std::int64_t l) {
    return static_cast<__int128>(l) * l > static_cast<__int128>(4) * order;
  };
  for (std::int64_t l = exponent + 1;; l += exponent) {
    if (l >= (std::int64_t{1} << 31))
      throw resource_error("Dixon prime search exceeded 2^31");
    if (big_enough(l) && is_prime(l))
      return l;
  }
}

} // namespace ctlab
