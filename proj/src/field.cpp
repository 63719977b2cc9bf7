#include "bbcage/field.hpp"

#include "bbcage/error.hpp"

#include <string>

namespace bbcage {

namespace {

using Poly = std::vector<std::uint32_t>; // low degree first, mod p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic d over GF(p).
Poly poly_mod(Poly a, const Poly& d, std::uint32_t p) {
  trim(a);
  const std::size_t dd = d.size() - 1;
  while (a.size() > dd) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dd;
    for (std::size_t i = 0; i <= dd; ++i) {
      a[shift + i] = (a[shift + i] + p - (lead * d[i]) % p) % p;
    }
    trim(a);
  }
  return a;
}

Poly digits_of(std::uint64_t code, std::uint32_t p, std::uint32_t len) {
  Poly out(len);
  for (std::uint32_t i = 0; i < len; ++i) {
    out[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return out;
}

// Exhaustive: no monic factor of degree 1..k/2.
bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t k = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; d <= k / 2; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g = digits_of(code, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Poly least_irreducible(std::uint32_t p, std::uint32_t k) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) count *= p;
  // Enumerate (c_0, ..., c_{k-1}) lexicographically with c_0 most significant.
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly f(k + 1);
    std::uint64_t rest = idx;
    for (std::uint32_t i = k; i-- > 0;) {
      f[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    f[k] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw IntegrityError("no irreducible polynomial of degree " + std::to_string(k) +
                       " over GF(" + std::to_string(p) + ")");
}

} // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_prime_power(std::uint64_t q) noexcept {
  if (q < 2) return false;
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  while (q % p == 0) q /= p;
  return q == 1;
}

Field::Field(std::uint32_t p, std::uint32_t k) : p_(p), k_(k), q_(1) {
  if (!is_prime(p)) {
    throw ParameterError("field characteristic must be prime, got p=" + std::to_string(p));
  }
  if (k < 1) {
    throw ParameterError("field extension degree must be >= 1, got k=" + std::to_string(k));
  }
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxOrder) {
      throw ParameterError("field order " + std::to_string(p) + "^" + std::to_string(k) +
                           " exceeds cap " + std::to_string(kMaxOrder));
    }
  }
  q_ = static_cast<std::uint32_t>(q);
  modulus_ = least_irreducible(p, k);

  log_.assign(q_, 0);
  exp_.assign(q_ - 1, 0);
  for (Element g = 1; g < q_; ++g) {
    Element x = 1;
    std::uint32_t ord = 0;
    do {
      exp_[ord] = x;
      x = poly_mul_reduce(x, g);
      ++ord;
    } while (x != 1 && ord < q_ - 1);
    if (x == 1 && ord == q_ - 1) {
      primitive_ = g;
      break;
    }
  }
  if (primitive_ == 0) throw IntegrityError("multiplicative group is not cyclic");
  for (std::uint32_t i = 0; i + 1 < q_; ++i) log_[exp_[i]] = i;
}

Element Field::poly_mul_reduce(Element a, Element b) const {
  Poly pa = digits_of(a, p_, k_);
  Poly pb = digits_of(b, p_, k_);
  Poly prod(2 * k_, 0);
  for (std::uint32_t i = 0; i < k_; ++i) {
    for (std::uint32_t j = 0; j < k_; ++j) {
      prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
    }
  }
  Poly r = poly_mod(std::move(prod), modulus_, p_);
  Element out = 0;
  for (std::size_t i = r.size(); i-- > 0;) out = out * p_ + r[i];
  return out;
}

void Field::check(Element a) const {
  if (a >= q_) {
    throw ParameterError("element " + std::to_string(a) + " out of range for GF(" +
                         std::to_string(q_) + ")");
  }
}

Element Field::add_unchecked(Element a, Element b) const {
  if (p_ == 2) return a ^ b;
  Element out = 0;
  Element scale = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

Element Field::neg_unchecked(Element a) const {
  if (p_ == 2) return a;
  Element out = 0;
  Element scale = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

Element Field::mul_unchecked(Element a, Element b) const {
  if (a == 0 || b == 0) return 0;
  std::uint32_t e = log_[a] + log_[b];
  if (e >= q_ - 1) e -= q_ - 1;
  return exp_[e];
}

Element Field::add(Element a, Element b) const {
  check(a);
  check(b);
  return add_unchecked(a, b);
}

Element Field::neg(Element a) const {
  check(a);
  return neg_unchecked(a);
}

Element Field::sub(Element a, Element b) const {
  check(a);
  check(b);
  return add_unchecked(a, neg_unchecked(b));
}

Element Field::mul(Element a, Element b) const {
  check(a);
  check(b);
  return mul_unchecked(a, b);
}

Element Field::inv(Element a) const {
  check(a);
  if (a == 0) throw ParameterError("inverse of zero in GF(" + std::to_string(q_) + ")");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Element Field::pow(Element a, std::uint64_t e) const {
  check(a);
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

Field make_field(std::uint32_t p, std::uint32_t k) { return Field(p, k); }

Field make_field_of_order(std::uint32_t q) {
  if (!is_prime_power(q)) {
    throw ParameterError(std::to_string(q) + " is not a prime power");
  }
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t k = 0;
  for (std::uint32_t rest = q; rest > 1; rest /= p) ++k;
  return Field(p, k);
}

} // namespace bbcage
