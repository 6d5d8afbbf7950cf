#ifndef CTLAB_MODULAR_HPP
#define CTLAB_MODULAR_HPP

#include <cstdint>
#include <vector>

namespace ctlab {

// Arithmetic in F_l for a runtime prime modulus l < 2^31. Values are stored
// as canonical representatives in [0, l); intermediate products go through
// 128-bit arithmetic before reduction.
class PrimeField {
public:
  explicit PrimeField(std::int64_t modulus);

  std::int64_t modulus() const { return mod_; }

  std::int64_t reduce(std::int64_t a) const {
    std::int64_t r = a % mod_;
    return r < 0 ? r + mod_ : r;
  }
  std::int64_t add(std::int64_t a, std::int64_t b) const {
    std::int64_t r = a + b;
    return r >= mod_ ? r - mod_ : r;
  }
  std::int64_t sub(std::int64_t a, std::int64_t b) const {
    std::int64_t r = a - b;
    return r < 0 ? r + mod_ : r;
  }
  std::int64_t mul(std::int64_t a, std::int64_t b) const {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % mod_);
  }
  std::int64_t pow(std::int64_t base, std::int64_t exp) const;
  std::int64_t inv(std::int64_t a) const; // throws input_error on a == 0

  // Centered lift to (-l/2, l/2].
  std::int64_t lift_centered(std::int64_t a) const {
    return a > mod_ / 2 ? a - mod_ : a;
  }

  // Square root via Tonelli-Shanks; throws internal_error when a is a
  // non-residue (callers only pass provable squares).
  std::int64_t sqrt(std::int64_t a) const;

  // Smallest primitive root of F_l* and the canonical primitive e-th root of
  // unity g^((l-1)/e); requires e | l-1.
  std::int64_t primitive_root() const;
  std::int64_t root_of_unity(std::int64_t e) const;

private:
  std::int64_t mod_;
};

bool is_prime(std::int64_t n);
std::vector<std::int64_t> prime_factors(std::int64_t n);

// The working prime for eigenvalue computations: the smallest prime l with
// l ≡ 1 (mod exponent) and l > 2*sqrt(order). Capped at 2^31.
std::int64_t dixon_prime(std::int64_t order, std::int64_t exponent);

} // namespace ctlab

#endif
