#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dpcolor {

/// An element of GF(p^r), identified by its index in the owning field's
/// canonical order. Index 0 is zero and index 1 is one.
class FieldElement {
public:
  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint32_t index) : index_(index) {}

  constexpr std::uint32_t index() const { return index_; }

  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;

private:
  std::uint32_t index_ = 0;
};

class FieldError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

bool is_prime(std::uint64_t n);

/// If n = p^r for a prime p and r >= 1, returns {p, r}; otherwise {0, 0}.
struct PrimePower {
  std::uint32_t p = 0;
  std::uint32_t r = 0;
  explicit operator bool() const { return p != 0; }
};
PrimePower prime_power_decomposition(std::uint64_t n);

/// Finite field GF(p^r) with a deterministic modulus and canonical element
/// order. Elements of an extension are coefficient vectors c_0 + c_1 x + ...
/// whose index is sum c_i p^i. Immutable after construction.
class Field {
public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  /// Builds GF(p^r) using the lexicographically smallest monic irreducible
  /// modulus of degree r (coefficients compared from the constant term up).
  static Field make(std::uint32_t p, std::uint32_t r);

  /// Builds GF(k) for a prime power k.
  static Field of_order(std::uint32_t k);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return r_; }
  std::uint32_t order() const { return k_; }
  bool is_prime_field() const { return r_ == 1; }

  /// Monic modulus, coefficients low-to-high (size r + 1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElement zero() const { return FieldElement{0}; }
  FieldElement one() const { return FieldElement{1}; }
  FieldElement element(std::uint32_t index) const;

  /// Coefficient vector of an element, low-to-high, length r.
  std::vector<std::uint32_t> coefficients(FieldElement a) const;

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  FieldElement pow(FieldElement a, std::uint64_t e) const;

  /// Raw index arithmetic for inner loops; arguments must be < order().
  std::uint32_t add_index(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t mul_index(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg_index(std::uint32_t a) const { return neg_[a]; }
  std::uint32_t inv_index(std::uint32_t a) const;

  std::string describe() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.r_ == b.r_ && a.modulus_ == b.modulus_;
  }

private:
  Field() = default;
  void build_tables();
  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t digit_add(std::uint32_t a, std::uint32_t b) const;

  std::uint32_t p_ = 0;
  std::uint32_t r_ = 0;
  std::uint32_t k_ = 0;
  std::vector<std::uint32_t> modulus_;

  // Full k x k tables are kept for small fields; larger ones use log tables.
  static constexpr std::uint32_t kTableLimit = 256;
  bool full_tables_ = false;
  std::vector<std::uint16_t> add_table_;
  std::vector<std::uint16_t> mul_table_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
};

/// Trial-division irreducibility test for a monic polynomial over GF(p),
/// coefficients low-to-high.
bool is_irreducible_over_prime_field(std::span<const std::uint32_t> poly, std::uint32_t p);

}  // namespace dpcolor
