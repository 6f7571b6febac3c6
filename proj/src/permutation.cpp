#include "dpcolor/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "dpcolor/finite_field.hpp"

namespace dpcolor {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<char> seen(image_.size(), 0);
  for (int x : image_) {
    if (x < 0 || x >= static_cast<int>(image_.size()) || seen[x]) {
      throw PermutationError("not a permutation of 0.." + std::to_string(image_.size() - 1));
    }
    seen[x] = 1;
  }
}

Permutation Permutation::identity(int k) {
  std::vector<int> img(k);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> img;
  if (text.empty()) throw PermutationError("empty permutation");
  if (text.find('.') == std::string_view::npos) {
    for (char c : text) {
      if (c < '0' || c > '9') throw PermutationError("bad permutation digit '" + std::string(1, c) + "'");
      img.push_back(c - '0');
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('.', start);
      if (end == std::string_view::npos) end = text.size();
      auto tok = text.substr(start, end - start);
      int v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw PermutationError("bad permutation entry '" + std::string(tok) + "'");
      }
      img.push_back(v);
      start = end + 1;
    }
  }
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i) {
    if (image_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int i = 0; i < size(); ++i) inv[image_[i]] = i;
  Permutation p;
  p.image_ = std::move(inv);
  return p;
}

std::string Permutation::to_string() const {
  std::string out;
  if (size() <= 10) {
    for (int x : image_) out.push_back(static_cast<char>('0' + x));
    return out;
  }
  for (int i = 0; i < size(); ++i) {
    if (i) out.push_back('.');
    out += std::to_string(image_[i]);
  }
  return out;
}

std::uint64_t Permutation::lehmer_rank() const {
  const int k = size();
  if (k > 20) throw PermutationError("Lehmer rank needs size <= 20");
  std::uint64_t rank = 0;
  std::vector<char> used(k, 0);
  for (int i = 0; i < k; ++i) {
    int smaller = 0;
    for (int v = 0; v < image_[i]; ++v) smaller += !used[v];
    used[image_[i]] = 1;
    rank = rank * static_cast<std::uint64_t>(k - i) + static_cast<std::uint64_t>(smaller);
  }
  return rank;
}

Permutation Permutation::from_lehmer_rank(int k, std::uint64_t rank) {
  std::vector<int> digits(k);
  for (int i = k - 1; i >= 0; --i) {
    const auto base = static_cast<std::uint64_t>(k - i);
    digits[i] = static_cast<int>(rank % base);
    rank /= base;
  }
  std::vector<int> pool(k);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> img(k);
  for (int i = 0; i < k; ++i) {
    img[i] = pool[digits[i]];
    pool.erase(pool.begin() + digits[i]);
  }
  return Permutation(std::move(img));
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw PermutationError("composing permutations of different sizes");
  std::vector<int> img(a.size());
  for (int x = 0; x < a.size(); ++x) img[x] = a(b(x));
  return Permutation(std::move(img));
}

Permutation conjugate_by(const Permutation& p, const Permutation& alpha) {
  return compose(alpha.inverse(), compose(p, alpha));
}

Permutation affine_permutation(const Field& f, std::uint32_t a, std::uint32_t b) {
  if (a == 0 || a >= f.order() || b >= f.order()) throw PermutationError("invalid affine coefficients");
  std::vector<int> img(f.order());
  for (std::uint32_t x = 0; x < f.order(); ++x) img[x] = static_cast<int>(f.add_index(f.mul_index(a, x), b));
  return Permutation(std::move(img));
}

bool is_affine(const Field& f, const Permutation& p) {
  if (p.size() != static_cast<int>(f.order()) || p.size() < 2) return false;
  const auto b = static_cast<std::uint32_t>(p(0));
  const auto a = f.add_index(static_cast<std::uint32_t>(p(1)), f.neg_index(b));
  if (a == 0) return false;
  for (std::uint32_t x = 0; x < f.order(); ++x) {
    if (static_cast<std::uint32_t>(p(static_cast<int>(x))) != f.add_index(f.mul_index(a, x), b)) return false;
  }
  return true;
}

// --- PermutationSet -----------------------------------------------------------

PermutationSet PermutationSet::symmetric(int k) {
  if (k < 1 || k > 9) throw PermutationError("symmetric group supported for 1 <= k <= 9");
  PermutationSet s;
  s.kind_ = Kind::symmetric;
  s.k_ = k;
  std::vector<int> img(k);
  std::iota(img.begin(), img.end(), 0);
  do {
    s.elements_.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  s.is_group_ = true;
  return s;
}

PermutationSet PermutationSet::affine(const Field& f) {
  PermutationSet s;
  s.kind_ = Kind::affine;
  s.k_ = static_cast<int>(f.order());
  for (std::uint32_t a = 1; a < f.order(); ++a) {
    for (std::uint32_t b = 0; b < f.order(); ++b) s.elements_.push_back(affine_permutation(f, a, b));
  }
  std::sort(s.elements_.begin(), s.elements_.end());
  s.is_group_ = true;
  return s;
}

PermutationSet PermutationSet::trivial(int k) {
  PermutationSet s;
  s.kind_ = Kind::trivial;
  s.k_ = k;
  s.elements_.push_back(Permutation::identity(k));
  s.is_group_ = true;
  return s;
}

PermutationSet PermutationSet::from_list(std::vector<Permutation> perms) {
  if (perms.empty()) throw PermutationError("permutation set must be nonempty");
  PermutationSet s;
  s.kind_ = Kind::explicit_list;
  s.k_ = perms.front().size();
  for (const auto& p : perms) {
    if (p.size() != s.k_) throw PermutationError("permutation set mixes sizes");
  }
  s.elements_ = std::move(perms);
  s.finish();
  return s;
}

void PermutationSet::finish() {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  is_group_ = true;
  for (const auto& a : elements_) {
    for (const auto& b : elements_) {
      if (!std::binary_search(elements_.begin(), elements_.end(), compose(a, b))) {
        is_group_ = false;
        return;
      }
    }
  }
}

int PermutationSet::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return -1;
  return static_cast<int>(it - elements_.begin());
}

bool PermutationSet::closed_under_inverse() const {
  return std::all_of(elements_.begin(), elements_.end(), [&](const Permutation& p) { return contains(p.inverse()); });
}

std::string PermutationSet::name() const {
  switch (kind_) {
    case Kind::symmetric: return "S_" + std::to_string(k_);
    case Kind::affine: return "L_" + std::to_string(k_);
    case Kind::trivial: return "I_" + std::to_string(k_);
    case Kind::explicit_list: break;
  }
  return "explicit(" + std::to_string(elements_.size()) + ")";
}

}  // namespace dpcolor
