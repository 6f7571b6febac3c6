#include "dpcolor/finite_field.hpp"

#include <algorithm>
#include <sstream>

namespace dpcolor {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  // p is prime, so a^(p-2) is the inverse.
  std::uint64_t result = 1, base = a % p;
  std::uint32_t e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo a monic divisor over GF(p).
Poly poly_mod(Poly a, const Poly& monic, std::uint32_t p) {
  const std::size_t dd = monic.size() - 1;
  trim(a);
  while (a.size() > dd) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dd;
    for (std::size_t i = 0; i <= dd; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + static_cast<std::uint64_t>(p - lead) * monic[i]) % p);
    }
    trim(a);
  }
  return a;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimePower prime_power_decomposition(std::uint64_t n) {
  if (n < 2) return {};
  std::uint64_t p = 2;
  while (n % p != 0) ++p;
  std::uint32_t r = 0;
  while (n % p == 0) {
    n /= p;
    ++r;
  }
  if (n != 1) return {};
  return {static_cast<std::uint32_t>(p), r};
}

bool is_irreducible_over_prime_field(std::span<const std::uint32_t> poly, std::uint32_t p) {
  Poly f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2 || f.back() != 1) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  // Every reducible polynomial has a monic factor of degree <= deg / 2.
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t t = 0; t < count; ++t) {
      Poly divisor(d + 1);
      std::uint64_t rest = t;
      for (std::size_t i = 0; i < d; ++i) {
        divisor[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      divisor[d] = 1;
      if (poly_mod(f, divisor, p).empty()) return false;
    }
  }
  return true;
}

Field Field::make(std::uint32_t p, std::uint32_t r) {
  if (!is_prime(p)) throw FieldError("field characteristic " + std::to_string(p) + " is not prime");
  if (r < 1) throw FieldError("field extension degree must be at least 1");
  std::uint64_t k = 1;
  for (std::uint32_t i = 0; i < r; ++i) {
    k *= p;
    if (k > kMaxOrder) throw FieldError("field order exceeds 2^16");
  }

  Field f;
  f.p_ = p;
  f.r_ = r;
  f.k_ = static_cast<std::uint32_t>(k);

  if (r == 1) {
    f.modulus_ = {0, 1};
  } else {
    // Lexicographic order on (c_0, c_1, ..., c_{r-1}): c_0 is the most
    // significant digit of the search counter.
    for (std::uint64_t t = 0; t < k; ++t) {
      Poly cand(r + 1);
      std::uint64_t rest = t;
      for (std::uint32_t i = 0; i < r; ++i) {
        cand[r - 1 - i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      cand[r] = 1;
      if (is_irreducible_over_prime_field(cand, p)) {
        f.modulus_ = std::move(cand);
        break;
      }
    }
    if (f.modulus_.empty()) throw FieldError("no irreducible modulus found");
  }
  f.build_tables();
  return f;
}

Field Field::of_order(std::uint32_t k) {
  const PrimePower pp = prime_power_decomposition(k);
  if (!pp) throw FieldError(std::to_string(k) + " is not a prime power");
  return make(pp.p, pp.r);
}

FieldElement Field::element(std::uint32_t index) const {
  if (index >= k_) throw FieldError("element index " + std::to_string(index) + " out of range for GF(" + std::to_string(k_) + ")");
  return FieldElement{index};
}

std::vector<std::uint32_t> Field::coefficients(FieldElement a) const {
  std::vector<std::uint32_t> c(r_);
  std::uint32_t rest = a.index();
  for (std::uint32_t i = 0; i < r_; ++i) {
    c[i] = rest % p_;
    rest /= p_;
  }
  return c;
}

std::uint32_t Field::digit_add(std::uint32_t a, std::uint32_t b) const {
  if (r_ == 1) return (a + b) % p_;
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t i = 0; i < r_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

std::uint32_t Field::slow_mul(std::uint32_t a, std::uint32_t b) const {
  if (r_ == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  Poly pa(r_), pb(r_);
  for (std::uint32_t i = 0; i < r_; ++i) {
    pa[i] = a % p_;
    pb[i] = b % p_;
    a /= p_;
    b /= p_;
  }
  Poly prod(2 * r_ - 1, 0);
  for (std::uint32_t i = 0; i < r_; ++i) {
    for (std::uint32_t j = 0; j < r_; ++j) {
      prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
    }
  }
  Poly red = poly_mod(std::move(prod), modulus_, p_);
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t i = 0; i < red.size(); ++i) {
    out += red[i] * scale;
    scale *= p_;
  }
  return out;
}

void Field::build_tables() {
  neg_.resize(k_);
  for (std::uint32_t a = 0; a < k_; ++a) {
    std::uint32_t out = 0, scale = 1, rest = a;
    for (std::uint32_t i = 0; i < r_; ++i) {
      const std::uint32_t c = rest % p_;
      out += ((p_ - c) % p_) * scale;
      rest /= p_;
      scale *= p_;
    }
    neg_[a] = out;
  }

  full_tables_ = k_ <= kTableLimit;
  if (full_tables_) {
    add_table_.resize(static_cast<std::size_t>(k_) * k_);
    mul_table_.resize(static_cast<std::size_t>(k_) * k_);
    for (std::uint32_t a = 0; a < k_; ++a) {
      for (std::uint32_t b = 0; b < k_; ++b) {
        add_table_[a * k_ + b] = static_cast<std::uint16_t>(digit_add(a, b));
        mul_table_[a * k_ + b] = static_cast<std::uint16_t>(slow_mul(a, b));
      }
    }
  } else if (r_ > 1) {
    // Discrete log tables over a primitive element.
    const std::uint32_t group = k_ - 1;
    exp_.assign(group, 0);
    log_.assign(k_, 0);
    for (std::uint32_t g = 2; g < k_; ++g) {
      std::uint32_t x = 1, steps = 0;
      do {
        exp_[steps] = x;
        x = slow_mul(x, g);
        ++steps;
      } while (x != 1 && steps < group);
      if (steps == group && x == 1) break;
    }
    for (std::uint32_t i = 0; i < group; ++i) log_[exp_[i]] = i;
  }

  inv_.assign(k_, 0);
  for (std::uint32_t a = 1; a < k_; ++a) {
    if (r_ == 1) {
      inv_[a] = mod_inverse(a, p_);
    } else if (full_tables_) {
      for (std::uint32_t b = 1; b < k_; ++b) {
        if (mul_table_[a * k_ + b] == 1) {
          inv_[a] = b;
          break;
        }
      }
    } else {
      inv_[a] = exp_[(k_ - 1 - log_[a]) % (k_ - 1)];
    }
  }
}

std::uint32_t Field::add_index(std::uint32_t a, std::uint32_t b) const {
  if (full_tables_) return add_table_[a * k_ + b];
  return digit_add(a, b);
}

std::uint32_t Field::mul_index(std::uint32_t a, std::uint32_t b) const {
  if (full_tables_) return mul_table_[a * k_ + b];
  if (r_ == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % (k_ - 1)];
}

std::uint32_t Field::inv_index(std::uint32_t a) const {
  if (a == 0) throw FieldError("inverse of zero");
  return inv_[a];
}

FieldElement Field::add(FieldElement a, FieldElement b) const { return FieldElement{add_index(a.index(), b.index())}; }
FieldElement Field::sub(FieldElement a, FieldElement b) const { return FieldElement{add_index(a.index(), neg_[b.index()])}; }
FieldElement Field::mul(FieldElement a, FieldElement b) const { return FieldElement{mul_index(a.index(), b.index())}; }
FieldElement Field::neg(FieldElement a) const { return FieldElement{neg_[a.index()]}; }
FieldElement Field::inv(FieldElement a) const { return FieldElement{inv_index(a.index())}; }

FieldElement Field::pow(FieldElement a, std::uint64_t e) const {
  std::uint32_t result = 1, base = a.index();
  while (e) {
    if (e & 1) result = mul_index(result, base);
    base = mul_index(base, base);
    e >>= 1;
  }
  return FieldElement{result};
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(" << k_ << ")";
  if (r_ > 1) {
    os << " mod ";
    bool first = true;
    for (std::size_t i = modulus_.size(); i-- > 0;) {
      if (modulus_[i] == 0) continue;
      if (!first) os << "+";
      first = false;
      if (modulus_[i] != 1 || i == 0) os << modulus_[i];
      if (i >= 1) os << "x";
      if (i >= 2) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace dpcolor
