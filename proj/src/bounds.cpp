#include "dpcolor/bounds.hpp"

#include <cmath>
#include <functional>
#include <iomanip>
#include <sstream>

#include "dpcolor/finite_field.hpp"

namespace dpcolor {

const char* to_string(HypothesisStatus s) {
  switch (s) {
    case HypothesisStatus::satisfied: return "satisfied";
    case HypothesisStatus::violated: return "violated";
    case HypothesisStatus::assumed: return "assumed";
    case HypothesisStatus::verified: return "verified";
  }
  return "unknown";
}

BigInt ceil_power(std::int64_t base, Rational exponent) {
  if (base < 1) throw BoundError("bound base must be positive");
  const std::int64_t p = exponent.numerator();
  const std::int64_t q = exponent.denominator();
  if (p <= 0 || base == 1) return 1;
  const BigInt target = boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(p));
  if (q == 1) return target;
  // Smallest N with N^q >= base^p, between 1 and base^ceil(p/q).
  BigInt lo = 1;
  BigInt hi = boost::multiprecision::pow(BigInt(base), static_cast<unsigned>((p + q - 1) / q));
  while (lo < hi) {
    const BigInt mid = (lo + hi) / 2;
    if (boost::multiprecision::pow(mid, static_cast<unsigned>(q)) >= target) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

std::string format_rational(Rational r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double BoundValue::approximate() const {
  return std::pow(static_cast<double>(base),
                  static_cast<double>(exponent.numerator()) / static_cast<double>(exponent.denominator()));
}

std::string BoundValue::display() const {
  std::ostringstream os;
  os << base << "^(" << format_rational(exponent) << ") ~ " << std::setprecision(6) << approximate();
  os << ", integer floor " << floor;
  if (!applicable) os << " [not applicable]";
  return os.str();
}

BoundValue make_bound(std::string theorem, std::int64_t base, Rational exponent, std::vector<Hypothesis> hypotheses) {
  BoundValue b;
  b.theorem = std::move(theorem);
  b.base = base;
  b.exponent = exponent;
  b.hypotheses = std::move(hypotheses);
  b.applicable = true;
  for (const auto& h : b.hypotheses) b.applicable = b.applicable && h.holds();
  b.floor = ceil_power(base, exponent);
  return b;
}

namespace {

bool is_prime_power(std::int64_t k) {
  return k >= 2 && static_cast<bool>(prime_power_decomposition(static_cast<std::uint64_t>(k)));
}

Hypothesis check(std::string name, bool ok, std::string detail = {}) {
  return Hypothesis{std::move(name), ok ? HypothesisStatus::satisfied : HypothesisStatus::violated, std::move(detail)};
}

Hypothesis edge_check(std::int64_t m, Rational limit) {
  return check("m <= " + format_rational(limit), Rational(m) <= limit,
               "m = " + std::to_string(m) + ", limit = " + format_rational(limit));
}

void require_field_order(std::int64_t k) {
  if (k <= 2) throw BoundError("k must exceed 2");
  if (!is_prime_power(k)) throw BoundError(std::to_string(k) + " is not a prime power");
}

void require_graph_size(std::int64_t n, std::int64_t m) {
  if (n < 1) throw BoundError("n must be positive");
  if (m < 0) throw BoundError("m must be nonnegative");
}

}  // namespace

BoundValue bound_main_ii(std::int64_t n, std::int64_t m, std::int64_t k, HypothesisStatus chromatic) {
  require_graph_size(n, m);
  require_field_order(k);
  const Rational exponent((2 * n - m) * (k - 2) - (k - 3), k - 1);
  return make_bound("main-ii", k, exponent,
                    {Hypothesis{"chi_DP(G) <= " + std::to_string(k), chromatic, {}},
                     edge_check(m, Rational(2 * n) - Rational(k - 3, k - 2))});
}

BoundValue bound_main_i(std::int64_t n, std::int64_t m, std::int64_t k, HypothesisStatus chromatic) {
  require_graph_size(n, m);
  require_field_order(k);
  const std::int64_t q = k / 2;
  const Rational exponent(n * (q + k - 2) - q * m + 1 - q, k - 1);
  return make_bound("main-i", k, exponent,
                    {Hypothesis{"chi_DP(G') <= " + std::to_string(k), chromatic,
                                "G' adds " + std::to_string(q - 1) + " parallel edges to every non-tree edge"},
                     edge_check(m, Rational(n) * (Rational(1) + Rational(k - 2, q)) - 1 + Rational(1, q))});
}

BoundValue bound_linear(std::int64_t n, std::int64_t m, std::int64_t k, HypothesisStatus chromatic) {
  require_graph_size(n, m);
  if (k < 2) throw BoundError("k must be at least 2");
  return make_bound("linear", k, Rational(n) - Rational(m, k - 1),
                    {check("k is a prime power", is_prime_power(k)),
                     Hypothesis{"chi_L(G) <= " + std::to_string(k), chromatic, {}},
                     edge_check(m, Rational((k - 1) * n))});
}

BoundValue bound_list(std::int64_t n, std::int64_t m, std::int64_t k, HypothesisStatus chromatic) {
  require_graph_size(n, m);
  if (k < 2) throw BoundError("k must be at least 2");
  return make_bound("list", k, Rational(n) - Rational(m, k - 1),
                    {Hypothesis{"chi_list(G) <= " + std::to_string(k), chromatic, {}},
                     edge_check(m, Rational((k - 1) * n))});
}

BoundValue bound_signed(std::int64_t n, std::int64_t m, std::int64_t k, bool all_signatures,
                        HypothesisStatus chromatic) {
  require_graph_size(n, m);
  if (k < 2) throw BoundError("k must be at least 2");
  const std::string chi = all_signatures ? "chi_signed(G) <= " : "chi(G, sigma) <= ";
  return make_bound(all_signatures ? "signed-all" : "signed", k, Rational(n) - Rational(m, k - 1),
                    {check("k is a prime power", is_prime_power(k)),
                     Hypothesis{chi + std::to_string(k), chromatic, {}},
                     edge_check(m, Rational((k - 1) * n))});
}

BoundValue bound_general_c(std::int64_t n, std::int64_t m, std::int64_t c, std::int64_t k, HypothesisStatus chromatic) {
  require_graph_size(n, m);
  if (c < 2) throw BoundError("c must be at least 2");
  if (k < 3) throw BoundError("k must be at least 3");
  const Rational exponent(n * (c + k - 4) - (k - 2) * m - (k - 3), c - 1);
  return make_bound("general-c", c, exponent,
                    {check("k is a prime power", is_prime_power(k)), check("c <= k", c <= k),
                     Hypothesis{"chi_DP(G) <= " + std::to_string(c), chromatic, {}},
                     edge_check(m, Rational(n * (c + k - 4) - (k - 3), k - 2))});
}

Rational edge_bound_no_short_cycles(std::int64_t n, std::int64_t t) {
  if (t < 4 || n < 3) throw BoundError("edge bound needs t >= 4 and n >= 3");
  return Rational((n - 2) * (3 * t + 3), 2 * t - 1);
}

Rational mad_bound(std::int64_t t) {
  if (t < 4) throw BoundError("mad bound needs t >= 4");
  return Rational(3) + Rational(9, 2 * t - 1);
}

// --- families --------------------------------------------------------------------

namespace {

using ExponentFn = std::function<Rational(std::int64_t n, std::int64_t k, const FamilyParams&)>;

struct FamilySpec {
  FamilyInfo info;
  bool fixed_base_four = false;
  std::int64_t min_k = 3;
  std::int64_t corollary_k = 0;  // 0: no special case
  std::string chromatic;         // hypothesis label, with k substituted
  ExponentFn exponent;
  std::vector<std::string> notes;
};

Rational sparse_family_exponent(std::int64_t n, std::int64_t k, Rational fraction) {
  return fraction * Rational(n) * Rational(k - 2, k - 1) - 1;
}

const std::vector<FamilySpec>& specs() {
  static const std::vector<FamilySpec> table = {
      {{"girth5-genus", "girth >= 5 on a surface of Euler genus g, DP-k-colorable, n >= 5g"},
       false, 3, 3, "chi_DP(G) <= k",
       [](std::int64_t n, std::int64_t k, const FamilyParams& p) {
         return (Rational((n - 5 * p.genus) * (k - 2), 3) - (k - 3)) / Rational(k - 1);
       },
       {"edge bound m <= (5/3)(n - 2) + (5/3)g"}},
      {{"no-cycles-4-8", "planar, no cycle of length 4..8"},
       false, 3, 0, "chi_DP(G) <= k (chi_DP is 3 or 4 for this family)",
       [](std::int64_t n, std::int64_t k, const FamilyParams&) { return sparse_family_exponent(n, k, Rational(1, 5)); },
       {"edge bound |E| < (n-2)(27/15) from the no-short-cycles bound with t = 8"}},
      {{"no-cycles-4-9", "planar, no cycle of length in {4,5,6,9}"},
       false, 3, 3, "chi_DP(G) <= 3",
       [](std::int64_t n, std::int64_t k, const FamilyParams&) { return sparse_family_exponent(n, k, Rational(1, 11)); },
       {"edge bound |E| < (21/11)(n-2) from the no-short-cycles bound with t = 6"}},
      {{"no-cycles-4-7-no-intersecting-triangles", "planar, no intersecting triangles, no cycle of length 4..7"},
       false, 3, 3, "chi_DP(G) <= 3",
       [](std::int64_t n, std::int64_t k, const FamilyParams&) { return sparse_family_exponent(n, k, Rational(2, 13)); },
       {"edge bound |E| < (24/13)(n-2) from the no-short-cycles bound with t = 7"}},
      {{"no-cycles-4-6", "planar, no cycle of length 4..6"},
       false, 4, 4, "chi_DP(G) <= 4",
       [](std::int64_t n, std::int64_t k, const FamilyParams&) { return sparse_family_exponent(n, k, Rational(1, 11)); },
       {"edge bound |E| < (21/11)(n-2) from the no-short-cycles bound with t = 6"}},
      {{"no-cycles-4-5-7-9", "planar, no cycle of length in {4,5,7,9}"},
       false, 3, 3, "chi_DP(G) <= 3",
       [](std::int64_t n, std::int64_t k, const FamilyParams&) { return sparse_family_exponent(n, k, Rational(2, 13)); },
       {"edge bound |E| < (24/13)n is hard-coded: it rests on an average face length of at least 4 + 4/11, "
        "not on the no-short-cycles bound"}},
      {{"signed-planar", "signed planar graphs"},
       false, 5, 5, "chi_signed(G) <= 5",
       [](std::int64_t n, std::int64_t k, const FamilyParams&) { return Rational(n * (k - 4), k - 1); },
       {"edge bound m <= 3n - 6"}},
      {{"signed-triangle-free-planar", "signed triangle-free planar graphs"},
       false, 4, 4, "chi_signed(G) <= 4",
       [](std::int64_t n, std::int64_t k, const FamilyParams&) { return Rational(n * (k - 3), k - 1); },
       {"edge bound m <= 2n - 4"}},
      {{"signed-girth5-planar", "signed planar graphs of girth >= 5"},
       false, 3, 3, "chi_signed(G) <= 3",
       [](std::int64_t n, std::int64_t k, const FamilyParams&) { return Rational(n * (3 * k - 8), 3 * (k - 1)); },
       {"edge bound m <= (5/3)(n - 2)"}},
      {{"signed-no-cycles-4-8", "signed planar graphs with no cycle of length 4..8"},
       false, 3, 3, "chi_signed(G) <= 3",
       [](std::int64_t n, std::int64_t k, const FamilyParams&) { return Rational(n * (5 * k - 14), 5 * (k - 1)); },
       {"edge bound |E| < (9/5)(n - 2) from the no-short-cycles bound with t = 8"}},
      {{"triangle-free-planar-list", "list colorings of triangle-free planar graphs, 4 colors"},
       true, 4, 4, "chi_list(G) <= 4",
       [](std::int64_t n, std::int64_t, const FamilyParams&) { return Rational(n + 4, 3); },
       {"edge bound m <= 2n - 4"}},
      {{"triangle-free-planar-signed", "signed triangle-free planar graphs, 4 colors"},
       true, 4, 4, "chi_signed(G) <= 4",
       [](std::int64_t n, std::int64_t, const FamilyParams&) { return Rational(n + 4, 3); },
       {"edge bound m <= 2n - 4"}},
      {{"triangle-free-planar-dp", "DP colorings of triangle-free planar graphs with m <= (2 - c)n, cn >= 1/2"},
       true, 4, 0, "chi_DP(G) <= 4",
       [](std::int64_t n, std::int64_t, const FamilyParams& p) { return (Rational(4) * p.c * Rational(n) - 1) / 3; },
       {}},
  };
  return table;
}

std::string affine_form(Rational slope, Rational intercept) {
  std::string out;
  if (slope != Rational(0)) {
    if (slope.numerator() != 1) out += std::to_string(slope.numerator());
    out += "n";
    if (slope.denominator() != 1) out += "/" + std::to_string(slope.denominator());
  }
  if (intercept != Rational(0) || out.empty()) {
    if (!out.empty()) out += intercept < Rational(0) ? " - " : " + ";
    out += format_rational(out.empty() ? intercept : (intercept < Rational(0) ? -intercept : intercept));
  }
  return out;
}

std::string substitute_k(std::string text, std::int64_t k) {
  for (std::size_t pos = text.find("<= k"); pos != std::string::npos; pos = text.find("<= k", pos)) {
    text.replace(pos + 3, 1, std::to_string(k));
  }
  return text;
}

}  // namespace

const std::vector<FamilyInfo>& family_catalog() {
  static const std::vector<FamilyInfo> catalog = [] {
    std::vector<FamilyInfo> out;
    for (const auto& s : specs()) {
      out.push_back(s.info);
      out.back().default_k = s.corollary_k != 0 ? s.corollary_k : s.min_k;
    }
    return out;
  }();
  return catalog;
}

BoundValue family_bound(const std::string& id, const FamilyParams& params) {
  const FamilySpec* spec = nullptr;
  for (const auto& s : specs()) {
    if (s.info.id == id) spec = &s;
  }
  if (!spec) throw BoundError("unknown family '" + id + "'");
  if (params.n < 1) throw BoundError("n must be positive");

  const std::int64_t k = spec->fixed_base_four ? 4 : params.k;
  if (k < 2) throw BoundError("k must be at least 2");
  std::vector<Hypothesis> hyps;
  hyps.push_back(check("k is a prime power", is_prime_power(k)));
  hyps.push_back(check("k > 2", k > 2));
  if (spec->min_k > 3) hyps.push_back(check("k >= " + std::to_string(spec->min_k), k >= spec->min_k));
  hyps.push_back(Hypothesis{"G belongs to the family: " + spec->info.description, HypothesisStatus::assumed, {}});
  hyps.push_back(Hypothesis{substitute_k(spec->chromatic, k), HypothesisStatus::assumed, {}});
  if (id == "girth5-genus") {
    if (params.genus < 0) throw BoundError("genus must be nonnegative");
    hyps.push_back(check("n >= 5g", params.n >= 5 * params.genus));
  }
  if (id == "triangle-free-planar-dp") {
    hyps.push_back(check("c > 0", params.c > Rational(0)));
    hyps.push_back(check("cn >= 1/2", params.c * Rational(params.n) >= Rational(1, 2)));
    const Rational limit = (Rational(2) - params.c) * Rational(params.n);
    if (params.m) {
      hyps.push_back(edge_check(*params.m, limit));
    } else {
      hyps.push_back(Hypothesis{"m <= " + format_rational(limit), HypothesisStatus::assumed, "edge count not supplied"});
    }
  }

  BoundValue b = make_bound(id, k, spec->exponent(params.n, k, params), std::move(hyps));
  b.notes = spec->notes;
  if (spec->corollary_k != 0) {
    FamilyParams zero = params;
    zero.genus = 0;
    const std::int64_t ck = spec->corollary_k;
    const Rational at0 = spec->exponent(0, ck, zero);
    const Rational at1 = spec->exponent(1, ck, zero);
    b.corollary = std::to_string(ck) + "^{" + affine_form(at1 - at0, at0) + "}";
    if (id == "girth5-genus") b.corollary += " (planar case g = 0)";
  }
  return b;
}

}  // namespace dpcolor
