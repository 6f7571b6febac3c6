#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dpcolor/bounds.hpp"
#include "dpcolor/finite_field.hpp"
#include "dpcolor/graph.hpp"
#include "dpcolor/labeling.hpp"
#include "dpcolor/permutation.hpp"

namespace dpcolor {

class CoveringError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an exhaustive evaluation would exceed its step budget.
class CoverBudgetError : public CoveringError {
public:
  using CoveringError::CoveringError;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Polynomial in F[x, y] with exponents at most k-1 in each variable;
/// coefficient of x^a y^b is at index a*k + b.
class BivariatePoly {
public:
  BivariatePoly() = default;
  explicit BivariatePoly(FieldPtr field);

  /// cx*x + cy*y + c0.
  static BivariatePoly linear(FieldPtr field, std::uint32_t cx, std::uint32_t cy, std::uint32_t c0);

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  std::uint32_t coefficient(int a, int b) const { return coeff_[static_cast<std::size_t>(a) * k_ + b]; }
  void set_coefficient(int a, int b, std::uint32_t value);
  /// Max a + b over nonzero coefficients; -1 for the zero polynomial.
  int degree() const;
  bool is_zero() const { return degree() < 0; }
  std::uint32_t evaluate(std::uint32_t x, std::uint32_t y) const;
  std::string to_string() const;

private:
  FieldPtr field_;
  int k_ = 0;
  std::vector<std::uint32_t> coeff_;
};

/// L^pi_{i,j}(x,y) = (j-i)(y-pi(i)) - (pi(j)-pi(i))(x-i).
struct LFactor {
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  Permutation pi;
  BivariatePoly poly;
};

LFactor l_polynomial(FieldPtr field, const Permutation& pi, std::uint32_t i, std::uint32_t j);
/// x -> (j-i)^{-1}(pi(j)-pi(i))(x-i) + pi(i), whose graph is the zero line of L^pi_{i,j}.
Permutation corresponding_permutation(const Field& field, const Permutation& pi, std::uint32_t i, std::uint32_t j);

/// floor(k/2) L-factors whose product vanishes at every (c, pi(c)).
std::vector<LFactor> cover_halfk(FieldPtr field, const Permutation& pi);
/// k-2 L-factors whose product vanishes at every (c, pi(c)) but not at (a, b).
std::vector<LFactor> cover_km2_anchored(FieldPtr field, const Permutation& pi, std::uint32_t a, std::uint32_t b);

/// One factor of a cover polynomial, in the variables of vertices tail and head.
struct CoverFactor {
  int tail = 0;
  int head = 0;
  BivariatePoly poly;
  int degree = 1;
};

struct CoverPolynomial {
  FieldPtr field;
  int n = 0;
  std::vector<CoverFactor> factors;

  /// Formal degree: the sum of the factor degrees.
  int degree() const;
  std::uint32_t evaluate(const std::vector<std::uint32_t>& point) const;
  bool nonzero_at(const std::vector<std::uint32_t>& point) const;
};

enum class CoverMode { halfk, anchored };

/// Cover polynomial of a labeling whose tree slots (first component of each
/// edge of t) are the identity. Tree slots contribute x_tail - x_head; every
/// other slot contributes the factors of cover_halfk, or of
/// cover_km2_anchored at (kappa(tail), kappa(head)) in anchored mode.
CoverPolynomial graph_cover_polynomial(FieldPtr field, const SLabeling& l, const SpanningTree& t, CoverMode mode,
                                       const std::vector<int>& kappa = {});

/// floor(k/2)(m-n+1) + n-1 and (k-2)(m-n+1) + n-1.
std::int64_t halfk_cover_degree(std::int64_t n, std::int64_t m, std::int64_t k);
std::int64_t anchored_cover_degree(std::int64_t n, std::int64_t m, std::int64_t k);

/// The multigraph labeling on G' = add_parallel_edges(G, t, floor(k/2) - 1)
/// whose tuple on every non-tree edge lists the permutations of the
/// cover_halfk factors.
SLabeling derived_multigraph_labeling(FieldPtr field, const SLabeling& l, const SpanningTree& t);

/// Number of points of F^n where f is nonzero, by exhaustive evaluation.
std::uint64_t count_nonzeros(const CoverPolynomial& f, std::uint64_t budget = 1'000'000'000);

/// min prod q_i over integers 1 <= q_i <= sizes[i] with sum q_i >= sum sizes - d.
/// Returns 1 when sum sizes - d <= n.
BigInt alon_furedi_exact(const std::vector<std::int64_t>& sizes, std::int64_t d);
/// t^{(S-n-d)/(t-1)} under S >= n + d and t >= 2.
BoundValue alon_furedi_weak(std::int64_t n, std::int64_t total, std::int64_t t, std::int64_t d);

}  // namespace dpcolor
