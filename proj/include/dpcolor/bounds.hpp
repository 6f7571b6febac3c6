#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dpcolor {

using Rational = boost::rational<std::int64_t>;
using BigInt = boost::multiprecision::cpp_int;

class BoundError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

enum class HypothesisStatus {
  satisfied,  // checked arithmetically
  violated,
  assumed,    // asserted by the caller, not checked
  verified,   // checked by brute force on a concrete graph
};

const char* to_string(HypothesisStatus s);

struct Hypothesis {
  std::string name;
  HypothesisStatus status = HypothesisStatus::assumed;
  std::string detail;
  bool holds() const { return status != HypothesisStatus::violated; }
};

/// base^exponent with an exact rational exponent. `floor` is the smallest
/// integer N with N >= base^exponent (1 when the exponent is negative), a
/// valid lower bound for any integer count bounded below by the power.
struct BoundValue {
  std::string theorem;
  std::int64_t base = 2;
  Rational exponent{0};
  BigInt floor = 1;
  std::vector<Hypothesis> hypotheses;
  bool applicable = true;
  /// Special-case form of a family bound, e.g. "3^{n/6}".
  std::string corollary;
  std::vector<std::string> notes;

  double approximate() const;
  std::string display() const;
};

/// Smallest integer N with N >= base^exponent; 1 for negative exponents.
BigInt ceil_power(std::int64_t base, Rational exponent);

BoundValue make_bound(std::string theorem, std::int64_t base, Rational exponent, std::vector<Hypothesis> hypotheses);

std::string format_rational(Rational r);

/// k^{((2n-m)(k-2)-(k-3))/(k-1)} under chi_DP(G) <= k and m <= 2n - (k-3)/(k-2).
BoundValue bound_main_ii(std::int64_t n, std::int64_t m, std::int64_t k,
                         HypothesisStatus chromatic = HypothesisStatus::assumed);
/// k^{(n(q+k-2)-qm+1-q)/(k-1)}, q = floor(k/2), under chi_DP(G') <= k and
/// m <= n(1 + (k-2)/q) - 1 + 1/q.
BoundValue bound_main_i(std::int64_t n, std::int64_t m, std::int64_t k,
                        HypothesisStatus chromatic = HypothesisStatus::assumed);
/// k^{n - m/(k-1)} for linear labelings, under chi_L(G) <= k and m <= (k-1)n.
BoundValue bound_linear(std::int64_t n, std::int64_t m, std::int64_t k,
                        HypothesisStatus chromatic = HypothesisStatus::assumed);
/// Same exponent for list colorings, any k >= 2.
BoundValue bound_list(std::int64_t n, std::int64_t m, std::int64_t k,
                      HypothesisStatus chromatic = HypothesisStatus::assumed);
/// Same exponent for signed colorings: one signature, or all of them.
BoundValue bound_signed(std::int64_t n, std::int64_t m, std::int64_t k, bool all_signatures,
                        HypothesisStatus chromatic = HypothesisStatus::assumed);
/// c^{(n(c+k-4)-(k-2)m-(k-3))/(c-1)} with c <= k colors taken from GF(k).
BoundValue bound_general_c(std::int64_t n, std::int64_t m, std::int64_t c, std::int64_t k,
                           HypothesisStatus chromatic = HypothesisStatus::assumed);

/// Strict edge bound (n-2)(3t+3)/(2t-1) for plane graphs without cycles of
/// length 4..t.
Rational edge_bound_no_short_cycles(std::int64_t n, std::int64_t t);
/// Maximum average degree bound 3 + 9/(2t-1) for the same family.
Rational mad_bound(std::int64_t t);

struct FamilyParams {
  std::int64_t n = 0;
  std::int64_t k = 3;
  std::int64_t genus = 0;
  Rational c{0};
  std::optional<std::int64_t> m;
};

struct FamilyInfo {
  std::string id;
  std::string description;
  /// k used when the caller gives none.
  std::int64_t default_k = 3;
};

const std::vector<FamilyInfo>& family_catalog();
BoundValue family_bound(const std::string& id, const FamilyParams& params);

}  // namespace dpcolor
