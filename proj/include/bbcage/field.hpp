#pragma once

#include <cstdint>
#include <vector>

namespace bbcage {

/// Element of GF(p^k), encoded as the base-p digit vector of its polynomial
/// representative (least significant digit = constant term).
using Element = std::uint32_t;

/// Finite field GF(p^k) with q = p^k <= Field::kMaxOrder.
///
/// The modulus is the lexicographically least monic irreducible polynomial
/// of degree k, with coefficient vectors compared constant term first.
/// Multiplication goes through discrete log / antilog tables built once at
/// construction; addition is digit-wise mod p. Instances are immutable.
class Field {
public:
  static constexpr std::uint32_t kMaxOrder = 4096;

  Field(std::uint32_t p, std::uint32_t k);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return k_; }
  std::uint32_t order() const noexcept { return q_; }

  /// Modulus coefficients c_0..c_k (c_k = 1).
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Element add(Element a, Element b) const;
  Element neg(Element a) const;
  Element sub(Element a, Element b) const;
  Element mul(Element a, Element b) const;
  Element inv(Element a) const;
  Element pow(Element a, std::uint64_t e) const;

  /// Generator of the multiplicative group used for the log tables.
  Element primitive() const noexcept { return primitive_; }

  bool operator==(const Field& other) const = default;

private:
  void check(Element a) const;
  Element add_unchecked(Element a, Element b) const;
  Element neg_unchecked(Element a) const;
  Element mul_unchecked(Element a, Element b) const;
  Element poly_mul_reduce(Element a, Element b) const;

  std::uint32_t p_;
  std::uint32_t k_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  Element primitive_ = 0;
  std::vector<std::uint32_t> log_; // log_[a] for a != 0
  std::vector<Element> exp_;       // exp_[i] = primitive^i, i in [0, q-1)
};

/// Field of order p^k. Throws ParameterError for non-prime p, k < 1 or
/// an order above the cap.
Field make_field(std::uint32_t p, std::uint32_t k);

/// Decomposes q = p^k. Throws ParameterError if q is not a prime power.
Field make_field_of_order(std::uint32_t q);

bool is_prime(std::uint64_t n) noexcept;

/// True iff q = p^k for a prime p and k >= 1.
bool is_prime_power(std::uint64_t q) noexcept;

} // namespace bbcage
