#include "doctest.h"

#include "dpcolor/bounds.hpp"
#include "dpcolor/covering.hpp"

using namespace dpcolor;

namespace {

// Smallest N with N^den >= base^num, by bisection on big integers.
BigInt naive_ceil_power(std::int64_t base, Rational e) {
  if (e < Rational(0)) return 1;
  const auto num = static_cast<unsigned>(e.numerator());
  const auto den = static_cast<unsigned>(e.denominator());
  const BigInt target = boost::multiprecision::pow(BigInt(base), num);
  BigInt lo = 1, hi = target;
  while (lo < hi) {
    const BigInt mid = (lo + hi) / 2;
    if (boost::multiprecision::pow(mid, den) >= target) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

}  // namespace

TEST_CASE("main-ii examples") {
  const BoundValue b = bound_main_ii(5, 6, 3);
  CHECK(b.exponent == Rational(2));
  CHECK(b.floor == 9);
  CHECK(b.applicable);
  const BoundValue zero = bound_main_ii(4, 8, 3);
  CHECK(zero.exponent == Rational(0));
  CHECK(zero.floor == 1);
  CHECK(zero.applicable);
  // Edge hypothesis: m <= 2n - (k-3)/(k-2).
  CHECK_FALSE(bound_main_ii(5, 10, 4).applicable);
  CHECK(bound_main_ii(5, 9, 4).applicable);
  CHECK(bound_main_ii(5, 6, 3, HypothesisStatus::violated).applicable == false);
  CHECK_THROWS_AS(bound_main_ii(5, 6, 6), BoundError);
  CHECK_THROWS_AS(bound_main_ii(5, 6, 2), BoundError);
  CHECK_THROWS_AS(bound_main_ii(0, 0, 3), BoundError);
}

TEST_CASE("main-i and linear examples") {
  const BoundValue b = bound_main_i(5, 6, 4);
  CHECK(b.exponent == Rational(7, 3));
  CHECK(b.floor == 26);  // 4^{7/3} ~ 25.4
  CHECK(bound_linear(4, 3, 4).exponent == Rational(3));
  CHECK(bound_linear(4, 3, 4).floor == 64);
  CHECK_FALSE(bound_linear(4, 3, 6).applicable);  // 6 is not a prime power
  CHECK(bound_list(4, 3, 6).applicable);
  CHECK(bound_signed(3, 3, 3, false).exponent == Rational(3, 2));
  CHECK(bound_signed(3, 3, 3, true).theorem == "signed-all");
}

TEST_CASE("general c") {
  for (std::int64_t n = 1; n <= 12; ++n) {
    for (std::int64_t m = 0; m <= 2 * n; ++m) {
      for (std::int64_t k : {3, 4, 5, 7}) {
        const auto a = bound_general_c(n, m, k, k);
        const auto b = bound_main_ii(n, m, k);
        CHECK(a.exponent == b.exponent);
        CHECK(a.floor == b.floor);
      }
    }
  }
  CHECK(bound_general_c(5, 6, 6, 7).exponent == Rational(11, 5));
  CHECK_FALSE(bound_general_c(5, 6, 8, 7).applicable);
}

TEST_CASE("ceil_power matches a direct search") {
  for (std::int64_t base : {2, 3, 4, 5, 7, 9}) {
    for (std::int64_t num = -3; num <= 20; ++num) {
      for (std::int64_t den : {1, 2, 3, 4, 5, 6}) {
        const Rational e(num, den);
        CAPTURE(base);
        CAPTURE(num);
        CAPTURE(den);
        CHECK(ceil_power(base, e) == naive_ceil_power(base, e));
      }
    }
  }
  CHECK(ceil_power(2, Rational(100)) == boost::multiprecision::pow(BigInt(2), 100));
}

TEST_CASE("edge and average degree bounds") {
  CHECK(edge_bound_no_short_cycles(12, 8) == Rational(9, 5) * 10);
  CHECK(edge_bound_no_short_cycles(13, 6) == Rational(21, 11) * 11);
  CHECK(edge_bound_no_short_cycles(15, 7) == Rational(24, 13) * 13);
  CHECK(mad_bound(6) == Rational(3) + Rational(9, 11));
  CHECK_THROWS_AS(mad_bound(3), BoundError);
}

TEST_CASE("family bounds") {
  FamilyParams p;
  p.n = 120;
  p.k = 3;
  const auto g5 = family_bound("girth5-genus", p);
  CHECK(g5.exponent == Rational(20));
  CHECK(g5.corollary == "3^{n/6} (planar case g = 0)");
  p.genus = 30;
  CHECK_FALSE(family_bound("girth5-genus", p).applicable);

  FamilyParams q;
  q.n = 44;
  q.k = 3;
  const auto nc = family_bound("no-cycles-4-9", q);
  CHECK(nc.exponent == Rational(1));
  CHECK(nc.floor == 3);
  CHECK(nc.corollary == "3^{n/22 - 1}");

  FamilyParams t;
  t.n = 10;
  t.c = Rational(1, 2);
  const auto tf = family_bound("triangle-free-planar-dp", t);
  CHECK(tf.base == 4);
  CHECK(tf.exponent == Rational(19, 3));
  t.m = 16;
  CHECK_FALSE(family_bound("triangle-free-planar-dp", t).applicable);
  t.m = 15;
  CHECK(family_bound("triangle-free-planar-dp", t).applicable);

  FamilyParams s;
  s.n = 9;
  s.k = 5;
  CHECK(family_bound("signed-planar", s).exponent == Rational(9, 4));
  CHECK_THROWS_AS(family_bound("no-such-family", s), BoundError);
  CHECK(family_catalog().size() == 13);
  for (const auto& f : family_catalog()) {
    FamilyParams any;
    any.n = 60;
    any.k = 4;
    any.c = Rational(1, 4);
    const auto b = family_bound(f.id, any);
    CHECK(b.floor >= 1);
    CHECK(b.theorem == f.id);
  }
}

TEST_CASE("main bounds coincide with the weak Alon-Furedi bound at the cover degrees") {
  for (std::int64_t n = 1; n <= 20; ++n) {
    for (std::int64_t m = n - 1; m <= 2 * n; ++m) {
      if (m < 0) continue;
      for (std::int64_t k : {3, 4, 5, 7, 8, 9}) {
        CAPTURE(n);
        CAPTURE(m);
        CAPTURE(k);
        const auto ii = bound_main_ii(n, m, k);
        const auto af_ii = alon_furedi_weak(n, n * k, k, anchored_cover_degree(n, m, k));
        CHECK(ii.exponent == af_ii.exponent);
        CHECK(ii.floor == af_ii.floor);
        CHECK(ii.applicable == af_ii.applicable);
        const auto i = bound_main_i(n, m, k);
        const auto af_i = alon_furedi_weak(n, n * k, k, halfk_cover_degree(n, m, k));
        CHECK(i.exponent == af_i.exponent);
        CHECK(i.floor == af_i.floor);
        CHECK(i.applicable == af_i.applicable);
      }
    }
  }
}

TEST_CASE("display and hypothesis strings") {
  const auto b = bound_main_ii(5, 6, 3);
  CHECK(b.display().find("3^(2)") != std::string::npos);
  CHECK(std::string(to_string(HypothesisStatus::verified)) == "verified");
  CHECK(format_rational(Rational(7, 3)) == "7/3");
  CHECK(format_rational(Rational(-2)) == "-2");
}
