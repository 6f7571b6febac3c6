#include "dpcolor/covering.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "dpcolor/counting.hpp"

namespace dpcolor {

namespace {

std::uint32_t fsub(const Field& f, std::uint32_t a, std::uint32_t b) { return f.add_index(a, f.neg_index(b)); }

void check_perm(const Field& f, const Permutation& pi) {
  if (pi.size() != static_cast<int>(f.order())) throw CoveringError("permutation size differs from the field order");
}

}  // namespace

BivariatePoly::BivariatePoly(FieldPtr field) : field_(std::move(field)) {
  if (!field_) throw CoveringError("null field");
  if (field_->order() > 1024) throw CoveringError("bivariate polynomials need k <= 1024");
  k_ = static_cast<int>(field_->order());
  coeff_.assign(static_cast<std::size_t>(k_) * k_, 0);
}

BivariatePoly BivariatePoly::linear(FieldPtr field, std::uint32_t cx, std::uint32_t cy, std::uint32_t c0) {
  BivariatePoly p(std::move(field));
  p.set_coefficient(1, 0, cx);
  p.set_coefficient(0, 1, cy);
  p.set_coefficient(0, 0, c0);
  return p;
}

void BivariatePoly::set_coefficient(int a, int b, std::uint32_t value) {
  if (a < 0 || b < 0 || a >= k_ || b >= k_) throw CoveringError("monomial exponent out of range");
  coeff_[static_cast<std::size_t>(a) * k_ + b] = value;
}

int BivariatePoly::degree() const {
  int d = -1;
  for (int a = 0; a < k_; ++a) {
    for (int b = 0; b < k_; ++b) {
      if (coeff_[static_cast<std::size_t>(a) * k_ + b] != 0) d = std::max(d, a + b);
    }
  }
  return d;
}

std::uint32_t BivariatePoly::evaluate(std::uint32_t x, std::uint32_t y) const {
  const Field& f = *field_;
  std::uint32_t total = 0;
  std::uint32_t xa = 1;
  for (int a = 0; a < k_; ++a) {
    std::uint32_t term = xa;
    for (int b = 0; b < k_; ++b) {
      const std::uint32_t c = coeff_[static_cast<std::size_t>(a) * k_ + b];
      if (c != 0) total = f.add_index(total, f.mul_index(c, term));
      term = f.mul_index(term, y);
    }
    xa = f.mul_index(xa, x);
  }
  return total;
}

std::string BivariatePoly::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    for (int a = d; a >= 0; --a) {
      const int b = d - a;
      if (a >= k_ || b >= k_) continue;
      const std::uint32_t c = coefficient(a, b);
      if (c == 0) continue;
      if (!first) os << " + ";
      first = false;
      const bool bare = a + b > 0 && c == 1;
      if (!bare) os << c;
      if (a > 0) os << (bare ? "" : "*") << "x" << (a > 1 ? "^" + std::to_string(a) : "");
      if (b > 0) os << ((bare && a == 0) ? "" : "*") << "y" << (b > 1 ? "^" + std::to_string(b) : "");
    }
  }
  if (first) os << "0";
  return os.str();
}

LFactor l_polynomial(FieldPtr field, const Permutation& pi, std::uint32_t i, std::uint32_t j) {
  const Field& f = *field;
  check_perm(f, pi);
  if (i >= f.order() || j >= f.order()) throw CoveringError("L-polynomial index out of range");
  const std::uint32_t pi_i = static_cast<std::uint32_t>(pi(static_cast<int>(i)));
  const std::uint32_t pi_j = static_cast<std::uint32_t>(pi(static_cast<int>(j)));
  const std::uint32_t dx = fsub(f, j, i);
  const std::uint32_t dy = fsub(f, pi_j, pi_i);
  // dx*y - dy*x + (dy*i - dx*pi(i))
  const std::uint32_t c0 = fsub(f, f.mul_index(dy, i), f.mul_index(dx, pi_i));
  LFactor out{i, j, pi, BivariatePoly::linear(field, f.neg_index(dy), dx, c0)};
  return out;
}

Permutation corresponding_permutation(const Field& f, const Permutation& pi, std::uint32_t i, std::uint32_t j) {
  check_perm(f, pi);
  if (i == j) throw CoveringError("corresponding permutation needs i != j");
  const std::uint32_t pi_i = static_cast<std::uint32_t>(pi(static_cast<int>(i)));
  const std::uint32_t slope =
      f.mul_index(f.inv_index(fsub(f, j, i)), fsub(f, static_cast<std::uint32_t>(pi(static_cast<int>(j))), pi_i));
  std::vector<int> img(f.order());
  for (std::uint32_t x = 0; x < f.order(); ++x) img[x] = static_cast<int>(f.add_index(f.mul_index(slope, fsub(f, x, i)), pi_i));
  return Permutation(std::move(img));
}

std::vector<LFactor> cover_halfk(FieldPtr field, const Permutation& pi) {
  const Field& f = *field;
  check_perm(f, pi);
  const std::uint32_t k = f.order();
  std::vector<LFactor> out;
  std::vector<std::uint32_t> rest;
  if (k % 2 == 0) {
    for (std::uint32_t c = 0; c < k; ++c) rest.push_back(c);
  } else {
    auto slope = [&](std::uint32_t a, std::uint32_t b) {
      return f.mul_index(fsub(f, static_cast<std::uint32_t>(pi(static_cast<int>(b))),
                              static_cast<std::uint32_t>(pi(static_cast<int>(a)))),
                         f.inv_index(fsub(f, b, a)));
    };
    bool found = false;
    for (std::uint32_t a = 0; a < k && !found; ++a) {
      for (std::uint32_t b1 = 0; b1 < k && !found; ++b1) {
        if (b1 == a) continue;
        for (std::uint32_t b2 = b1 + 1; b2 < k && !found; ++b2) {
          if (b2 == a || slope(a, b1) != slope(a, b2)) continue;
          found = true;
          out.push_back(l_polynomial(field, pi, a, b1));
          for (std::uint32_t c = 0; c < k; ++c) {
            if (c != a && c != b1 && c != b2) rest.push_back(c);
          }
        }
      }
    }
    if (!found) throw CoveringError("no slope collision found");
  }
  for (std::size_t i = 0; i + 1 < rest.size(); i += 2) out.push_back(l_polynomial(field, pi, rest[i], rest[i + 1]));
  return out;
}

std::vector<LFactor> cover_km2_anchored(FieldPtr field, const Permutation& pi, std::uint32_t a, std::uint32_t b) {
  const Field& f = *field;
  check_perm(f, pi);
  const std::uint32_t k = f.order();
  if (k < 3) throw CoveringError("anchored cover needs k >= 3");
  if (a >= k || b >= k) throw CoveringError("anchor out of range");
  if (static_cast<std::uint32_t>(pi(static_cast<int>(a))) == b) throw CoveringError("anchor lies on the graph of pi");

  if (k == 3) {
    for (std::uint32_t i = 0; i < k; ++i) {
      for (std::uint32_t j = i + 1; j < k; ++j) {
        LFactor cand = l_polynomial(field, pi, i, j);
        bool vanishes = true;
        for (std::uint32_t c = 0; c < k; ++c) {
          vanishes = vanishes && cand.poly.evaluate(c, static_cast<std::uint32_t>(pi(static_cast<int>(c)))) == 0;
        }
        if (vanishes && cand.poly.evaluate(a, b) != 0) return {cand};
      }
    }
    throw CoveringError("no single L-factor fits the anchor");
  }

  const std::uint32_t a2 = static_cast<std::uint32_t>(pi.inverse()(static_cast<int>(b)));
  std::vector<std::uint32_t> others;
  for (std::uint32_t c = 0; c < k; ++c) {
    if (c != a && c != a2) others.push_back(c);
  }
  const std::uint32_t s = others[0];
  const std::uint32_t t = others[1];
  std::vector<LFactor> out{l_polynomial(field, pi, a, s), l_polynomial(field, pi, a2, t)};
  for (std::size_t i = 2; i < others.size(); ++i) out.push_back(l_polynomial(field, pi, a, others[i]));
  return out;
}

int CoverPolynomial::degree() const {
  int d = 0;
  for (const auto& fac : factors) d += fac.degree;
  return d;
}

std::uint32_t CoverPolynomial::evaluate(const std::vector<std::uint32_t>& point) const {
  if (static_cast<int>(point.size()) != n) throw CoveringError("point dimension differs from n");
  std::uint32_t value = 1;
  for (const auto& fac : factors) value = field->mul_index(value, fac.poly.evaluate(point[fac.tail], point[fac.head]));
  return value;
}

bool CoverPolynomial::nonzero_at(const std::vector<std::uint32_t>& point) const { return evaluate(point) != 0; }

std::int64_t halfk_cover_degree(std::int64_t n, std::int64_t m, std::int64_t k) { return (k / 2) * (m - n + 1) + n - 1; }
std::int64_t anchored_cover_degree(std::int64_t n, std::int64_t m, std::int64_t k) { return (k - 2) * (m - n + 1) + n - 1; }

namespace {

void check_normalized(const SLabeling& l, const SpanningTree& t) {
  l.validate();
  if (!l.graph.is_connected()) throw CoveringError("cover polynomials need a connected graph");
  if (static_cast<int>(t.edge_indices.size()) != l.graph.vertex_count() - 1) throw CoveringError("not a spanning tree");
  for (int e : t.edge_indices) {
    if (!l.perms[e].front().is_identity()) throw CoveringError("labeling is not the identity on the spanning tree");
  }
}

}  // namespace

CoverPolynomial graph_cover_polynomial(FieldPtr field, const SLabeling& l, const SpanningTree& t, CoverMode mode,
                                       const std::vector<int>& kappa) {
  const Field& f = *field;
  if (static_cast<int>(f.order()) != l.k) throw CoveringError("field order differs from the labeling's k");
  check_normalized(l, t);
  if (mode == CoverMode::anchored && !is_proper_coloring(l, kappa)) {
    throw CoveringError("anchored mode needs a proper coloring of the labeling");
  }
  CoverPolynomial out;
  out.field = field;
  out.n = l.graph.vertex_count();
  const BivariatePoly difference = BivariatePoly::linear(field, 1, f.neg_index(1), 0);
  for (int e = 0; e < l.graph.pair_count(); ++e) {
    const Arc a = l.orientation.arcs[e];
    for (std::size_t c = 0; c < l.perms[e].size(); ++c) {
      if (c == 0 && t.contains(e)) {
        out.factors.push_back(CoverFactor{a.tail, a.head, difference, 1});
        continue;
      }
      const Permutation& pi = l.perms[e][c];
      const auto factors = mode == CoverMode::halfk
                               ? cover_halfk(field, pi)
                               : cover_km2_anchored(field, pi, static_cast<std::uint32_t>(kappa[a.tail]),
                                                    static_cast<std::uint32_t>(kappa[a.head]));
      for (const auto& lf : factors) out.factors.push_back(CoverFactor{a.tail, a.head, lf.poly, lf.poly.degree()});
    }
  }
  return out;
}

SLabeling derived_multigraph_labeling(FieldPtr field, const SLabeling& l, const SpanningTree& t) {
  const Field& f = *field;
  if (static_cast<int>(f.order()) != l.k) throw CoveringError("field order differs from the labeling's k");
  if (!l.graph.is_simple()) throw CoveringError("derived labeling expects a simple graph");
  if (l.k < 2) throw CoveringError("derived labeling needs k >= 2");
  check_normalized(l, t);
  const int q = l.k / 2;
  SLabeling out;
  out.graph = add_parallel_edges(l.graph, t, q - 1);
  out.orientation = l.orientation;
  out.k = l.k;
  out.perms.resize(l.perms.size());
  for (int e = 0; e < l.graph.pair_count(); ++e) {
    if (t.contains(e)) {
      out.perms[e] = l.perms[e];
      continue;
    }
    for (const auto& lf : cover_halfk(field, l.perms[e].front())) {
      out.perms[e].push_back(corresponding_permutation(f, lf.pi, lf.i, lf.j));
    }
  }
  out.validate();
  return out;
}

std::uint64_t count_nonzeros(const CoverPolynomial& f, std::uint64_t budget) {
  const std::uint32_t k = f.field->order();
  std::uint64_t points = 1;
  for (int i = 0; i < f.n; ++i) {
    if (points > budget / k) throw CoverBudgetError("evaluation grid exceeds the budget");
    points *= k;
  }
  // Nonzero tables, grouped by the later of the two vertices.
  std::vector<std::vector<std::pair<const CoverFactor*, std::vector<char>>>> at(f.n);
  for (const auto& fac : f.factors) {
    std::vector<char> nz(static_cast<std::size_t>(k) * k);
    for (std::uint32_t x = 0; x < k; ++x) {
      for (std::uint32_t y = 0; y < k; ++y) nz[x * k + y] = fac.poly.evaluate(x, y) != 0;
    }
    at[std::max(fac.tail, fac.head)].push_back({&fac, std::move(nz)});
  }
  std::vector<std::uint32_t> point(f.n, 0);
  std::uint64_t count = 0;
  std::function<void(int)> walk = [&](int v) {
    if (v == f.n) {
      ++count;
      return;
    }
    for (std::uint32_t c = 0; c < k; ++c) {
      point[v] = c;
      bool ok = true;
      for (const auto& [fac, nz] : at[v]) {
        if (!nz[point[fac->tail] * k + point[fac->head]]) {
          ok = false;
          break;
        }
      }
      if (ok) walk(v + 1);
    }
  };
  walk(0);
  return count;
}

BigInt alon_furedi_exact(const std::vector<std::int64_t>& sizes, std::int64_t d) {
  if (d < 0) throw CoveringError("degree must be nonnegative");
  std::int64_t total = 0;
  for (auto s : sizes) {
    if (s < 1) throw CoveringError("set sizes must be positive");
    total += s;
  }
  const auto n = static_cast<std::int64_t>(sizes.size());
  const std::int64_t target = total - d;
  if (target <= n) return 1;
  std::vector<std::int64_t> desc = sizes;
  std::sort(desc.rbegin(), desc.rend());
  std::int64_t remaining = target - n;
  BigInt product = 1;
  for (auto s : desc) {
    const std::int64_t add = std::min(s - 1, remaining);
    remaining -= add;
    product *= (1 + add);
  }
  return product;
}

BoundValue alon_furedi_weak(std::int64_t n, std::int64_t total, std::int64_t t, std::int64_t d) {
  if (t < 2) throw BoundError("t must be at least 2");
  if (n < 1 || d < 0) throw BoundError("need n >= 1 and d >= 0");
  return make_bound("alon-furedi-weak", t, Rational(total - n - d, t - 1),
                    {Hypothesis{"S >= n + d", total >= n + d ? HypothesisStatus::satisfied : HypothesisStatus::violated,
                                "S = " + std::to_string(total) + ", n + d = " + std::to_string(n + d)},
                     Hypothesis{"t >= 2", HypothesisStatus::satisfied, {}}});
}

}  // namespace dpcolor
