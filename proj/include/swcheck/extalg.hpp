#pragma once

// Exterior algebra of an oriented 5-dimensional inner-product space with
// coframe {e^1, e^2, e^3, e^4, eta}. Index 5 is the eta (Reeb) direction.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "swcheck/scalar.hpp"

namespace swcheck {

inline constexpr int kDim = 5;
inline constexpr unsigned kEtaBit = 1u << 4;
inline constexpr unsigned kFullMask = (1u << kDim) - 1;

/// Multi-index encoded as a 5-bit mask, bit (i-1) for index i.
using FormMask = unsigned;

namespace detail {

struct MaskTables {
  std::array<std::array<FormMask, 10>, kDim + 1> masks{};  // lexicographic per degree
  std::array<int, kDim + 1> count{};
  std::array<int, 32> position{};
};

constexpr MaskTables build_mask_tables() {
  MaskTables t{};
  // Enumerate increasing index tuples in lexicographic order for every degree.
  for (int k = 0; k <= kDim; ++k) {
    int idx[kDim] = {};
    for (int j = 0; j < k; ++j) idx[j] = j;
    while (true) {
      FormMask mask = 0;
      for (int j = 0; j < k; ++j) mask |= 1u << idx[j];
      t.masks[k][t.count[k]] = mask;
      t.position[mask] = t.count[k];
      ++t.count[k];
      int j = k - 1;
      while (j >= 0 && idx[j] == kDim - k + j) --j;
      if (j < 0) break;
      ++idx[j];
      for (int l = j + 1; l < k; ++l) idx[l] = idx[l - 1] + 1;
    }
  }
  return t;
}

inline constexpr MaskTables kMaskTables = build_mask_tables();

}  // namespace detail

constexpr int form_dimension(int degree) { return detail::kMaskTables.count[degree]; }
constexpr FormMask mask_at(int degree, int pos) { return detail::kMaskTables.masks[degree][pos]; }
constexpr int position_of(FormMask mask) { return detail::kMaskTables.position[mask]; }
constexpr int degree_of(FormMask mask) { return std::popcount(mask); }

/// Mask of the multi-index {i1, ..., ik} (1-based, any order, no repeats).
constexpr FormMask mask_of(std::initializer_list<int> indices) {
  FormMask m = 0;
  for (int i : indices) m |= 1u << (i - 1);
  return m;
}

/// Sign of e^a ∧ e^b relative to e^{a|b} for disjoint masks a, b.
constexpr int wedge_sign(FormMask a, FormMask b) {
  int inversions = 0;
  for (int q = 0; q < kDim; ++q) {
    if (b & (1u << q)) inversions += std::popcount(a >> (q + 1));
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

enum class Orientation { standard, reversed };

/// A homogeneous k-form with coefficients over the lexicographic basis.
template <class C = Complex>
class KForm {
 public:
  explicit KForm(int degree = 0) : degree_(degree) {
    if (degree < 0 || degree > kDim) throw std::invalid_argument("KForm: degree out of range");
    coeffs_.assign(static_cast<std::size_t>(form_dimension(degree)), C{});
  }

  /// The basis form e^I for I given by mask, scaled by c.
  static KForm basis(FormMask mask, C c = ScalarTraits<C>::from_ints(1)) {
    KForm f(degree_of(mask));
    f.set(mask, c);
    return f;
  }

  int degree() const { return degree_; }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<C>& coeffs() const { return coeffs_; }

  C& operator[](std::size_t pos) { return coeffs_[pos]; }
  const C& operator[](std::size_t pos) const { return coeffs_[pos]; }

  C at(FormMask mask) const {
    check_mask(mask);
    return coeffs_[static_cast<std::size_t>(position_of(mask))];
  }
  void set(FormMask mask, C value) {
    check_mask(mask);
    coeffs_[static_cast<std::size_t>(position_of(mask))] = value;
  }

  /// True iff no coefficient involves the eta direction.
  bool is_horizontal() const {
    for (std::size_t p = 0; p < coeffs_.size(); ++p) {
      if ((mask_at(degree_, static_cast<int>(p)) & kEtaBit) && !is_zero(coeffs_[p])) return false;
    }
    return true;
  }

  KForm& operator+=(const KForm& o) {
    require_same_degree(o);
    for (std::size_t p = 0; p < coeffs_.size(); ++p) coeffs_[p] += o.coeffs_[p];
    return *this;
  }
  KForm& operator-=(const KForm& o) {
    require_same_degree(o);
    for (std::size_t p = 0; p < coeffs_.size(); ++p) coeffs_[p] -= o.coeffs_[p];
    return *this;
  }
  KForm& operator*=(const C& s) {
    for (auto& x : coeffs_) x *= s;
    return *this;
  }
  friend KForm operator+(KForm a, const KForm& b) { return a += b; }
  friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
  friend KForm operator*(const C& s, KForm a) { return a *= s; }
  friend KForm operator-(KForm a) { return a *= ScalarTraits<C>::from_ints(-1); }
  friend bool operator==(const KForm&, const KForm&) = default;

 private:
  void check_mask(FormMask mask) const {
    if (mask > kFullMask || degree_of(mask) != degree_) {
      throw std::invalid_argument("KForm: multi-index does not match form degree");
    }
  }
  void require_same_degree(const KForm& o) const {
    if (o.degree_ != degree_) throw std::invalid_argument("KForm: degree mismatch");
  }

  int degree_;
  std::vector<C> coeffs_;
};

template <class C>
double max_norm(const KForm<C>& f) {
  double m = 0.0;
  for (const auto& x : f.coeffs()) m = std::max(m, magnitude(x));
  return m;
}

/// Coefficient inner product <a, b> = sum a_I conj(b_I).
template <class C>
C inner(const KForm<C>& a, const KForm<C>& b) {
  using std::conj;
  if (a.degree() != b.degree()) throw std::invalid_argument("inner: degree mismatch");
  C sum{};
  for (std::size_t p = 0; p < a.size(); ++p) sum += a[p] * conj(b[p]);
  return sum;
}

template <class C = Complex>
KForm<C> deta_form() {
  KForm<C> f(2);
  f.set(mask_of({1, 2}), ScalarTraits<C>::from_ints(1));
  f.set(mask_of({3, 4}), ScalarTraits<C>::from_ints(1));
  return f;
}

template <class C = Complex>
KForm<C> volume_form() {
  return KForm<C>::basis(kFullMask);
}

template <class C>
KForm<C> wedge(const KForm<C>& a, const KForm<C>& b) {
  if (a.degree() + b.degree() > kDim) throw std::invalid_argument("wedge: degree overflow");
  KForm<C> r(a.degree() + b.degree());
  for (std::size_t p = 0; p < a.size(); ++p) {
    if (is_zero(a[p])) continue;
    const FormMask ma = mask_at(a.degree(), static_cast<int>(p));
    for (std::size_t q = 0; q < b.size(); ++q) {
      const FormMask mb = mask_at(b.degree(), static_cast<int>(q));
      if (ma & mb) continue;
      const C term = a[p] * b[q];
      const auto pos = static_cast<std::size_t>(position_of(ma | mb));
      if (wedge_sign(ma, mb) > 0) {
        r[pos] += term;
      } else {
        r[pos] -= term;
      }
    }
  }
  return r;
}

/// Interior product with the k-th frame vector (1-based).
template <class C>
KForm<C> interior(int k, const KForm<C>& a) {
  if (k < 1 || k > kDim) throw std::out_of_range("interior: frame index out of range");
  if (a.degree() == 0) throw std::invalid_argument("interior: degree-0 form");
  const FormMask bit = 1u << (k - 1);
  KForm<C> r(a.degree() - 1);
  for (std::size_t p = 0; p < a.size(); ++p) {
    const FormMask m = mask_at(a.degree(), static_cast<int>(p));
    if (!(m & bit)) continue;
    const bool odd = std::popcount(m & (bit - 1)) % 2 == 1;
    const auto pos = static_cast<std::size_t>(position_of(m & ~bit));
    r[pos] = odd ? -a[p] : a[p];
  }
  return r;
}

/// Hodge star for the Euclidean metric, with vol = e^1∧e^2∧e^3∧e^4∧eta for the
/// standard orientation.
template <class C>
KForm<C> hodge_star(const KForm<C>& a, Orientation orientation = Orientation::standard) {
  KForm<C> r(kDim - a.degree());
  for (std::size_t p = 0; p < a.size(); ++p) {
    const FormMask m = mask_at(a.degree(), static_cast<int>(p));
    const FormMask comp = kFullMask & ~m;
    int sign = wedge_sign(m, comp);
    if (orientation == Orientation::reversed) sign = -sign;
    r[static_cast<std::size_t>(position_of(comp))] = sign > 0 ? a[p] : -a[p];
  }
  return r;
}

template <class C>
struct HorizontalSplit {
  KForm<C> horizontal;
  KForm<C> vertical;
};

/// alpha = alpha_H + alpha_xi with alpha_xi = eta ∧ i(xi) alpha.
template <class C>
HorizontalSplit<C> horizontal_split(const KForm<C>& a) {
  if (a.degree() != 2) throw std::invalid_argument("horizontal_split: expected a 2-form");
  const KForm<C> eta = KForm<C>::basis(kEtaBit);
  KForm<C> vertical = wedge(eta, interior(kDim, a));
  KForm<C> horizontal = a - vertical;
  return {std::move(horizontal), std::move(vertical)};
}

inline void require_horizontal_two_form(int degree, bool horizontal, const char* who) {
  if (degree != 2) throw std::invalid_argument(std::string(who) + ": expected a 2-form");
  if (!horizontal) throw std::invalid_argument(std::string(who) + ": expected a horizontal 2-form");
}

/// The contact star beta -> *(eta ∧ beta) on horizontal 2-forms.
template <class C>
KForm<C> contact_star(const KForm<C>& b, Orientation orientation = Orientation::standard) {
  require_horizontal_two_form(b.degree(), b.is_horizontal(), "contact_star");
  return hodge_star(wedge(KForm<C>::basis(kEtaBit), b), orientation);
}

template <class C>
struct SelfDualSplit {
  KForm<C> plus;
  KForm<C> minus;
};

/// Projection onto the +1 / -1 eigenspaces of the contact star.
template <class C>
SelfDualSplit<C> sd_project(const KForm<C>& b, Orientation orientation = Orientation::standard) {
  const KForm<C> star = contact_star(b, orientation);
  const C half = ScalarTraits<C>::ratio(1, 2);
  return {half * (b + star), half * (b - star)};
}

/// Evaluates a 2-form on a pair of frame vectors.
template <class C, class V>
C evaluate(const KForm<C>& f, const V& x, const V& y) {
  if (f.degree() != 2) throw std::invalid_argument("evaluate: expected a 2-form");
  C sum{};
  for (std::size_t p = 0; p < f.size(); ++p) {
    const FormMask m = mask_at(2, static_cast<int>(p));
    const int i = std::countr_zero(m);
    const int j = std::countr_zero(m & (m - 1));
    sum += f[p] * (C(x[i]) * C(y[j]) - C(x[j]) * C(y[i]));
  }
  return sum;
}

/// Self-dual and anti-self-dual bases of the horizontal 2-forms.
template <class C = Complex>
std::array<KForm<C>, 3> self_dual_basis() {
  const auto one = ScalarTraits<C>::from_ints(1);
  auto pair = [&](FormMask a, FormMask b, C sb) {
    KForm<C> f(2);
    f.set(a, one);
    f.set(b, sb);
    return f;
  };
  return {pair(mask_of({1, 2}), mask_of({3, 4}), one), pair(mask_of({1, 3}), mask_of({2, 4}), -one),
          pair(mask_of({1, 4}), mask_of({2, 3}), one)};
}

template <class C = Complex>
std::array<KForm<C>, 3> anti_self_dual_basis() {
  const auto one = ScalarTraits<C>::from_ints(1);
  auto pair = [&](FormMask a, FormMask b, C sb) {
    KForm<C> f(2);
    f.set(a, one);
    f.set(b, sb);
    return f;
  };
  return {pair(mask_of({1, 2}), mask_of({3, 4}), -one), pair(mask_of({1, 3}), mask_of({2, 4}), one),
          pair(mask_of({1, 4}), mask_of({2, 3}), -one)};
}

/// Converts between coefficient types (e.g. exact to floating point).
template <class To, class From>
KForm<To> form_cast(const KForm<From>& f) {
  KForm<To> r(f.degree());
  for (std::size_t p = 0; p < f.size(); ++p) {
    if constexpr (std::is_same_v<To, From>) {
      r[p] = f[p];
    } else {
      r[p] = ScalarTraits<From>::to_complex(f[p]);
    }
  }
  return r;
}

}  // namespace swcheck
