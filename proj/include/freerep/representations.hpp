#pragma once

// Matrix representations over cyclotomic fields: scalar, induced,
// quaternionic and tensor-product constructions, plus freeness checks.

#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "freerep/binary_polyhedral.hpp"
#include "freerep/classifier.hpp"
#include "freerep/cyclotomic.hpp"
#include "freerep/error.hpp"
#include "freerep/group.hpp"
#include "freerep/isomorphism.hpp"
#include "freerep/quaternion.hpp"
#include "freerep/structure.hpp"
#include "freerep/subgroup.hpp"

namespace freerep {

/// Square matrix over Q(zeta_n); all entries share the conductor n.
class RepMatrix {
 public:
  RepMatrix() = default;
  RepMatrix(std::size_t degree, std::size_t conductor)
      : d_(degree), n_(conductor), e_(degree * degree, Cyclotomic::zero(conductor)) {}

  static RepMatrix identity(std::size_t degree, std::size_t conductor) {
    RepMatrix m(degree, conductor);
    for (std::size_t i = 0; i < degree; ++i) m.at(i, i) = Cyclotomic::one(conductor);
    return m;
  }
  static RepMatrix scalar(std::size_t degree, const Cyclotomic& s) {
    RepMatrix m(degree, s.conductor());
    for (std::size_t i = 0; i < degree; ++i) m.at(i, i) = s;
    return m;
  }

  std::size_t degree() const noexcept { return d_; }
  std::size_t conductor() const noexcept { return n_; }
  Cyclotomic& at(std::size_t r, std::size_t c) { return e_[r * d_ + c]; }
  const Cyclotomic& at(std::size_t r, std::size_t c) const { return e_[r * d_ + c]; }

  /// The same matrix over Q(zeta_m).
  RepMatrix lift(std::size_t m) const {
    RepMatrix out(d_, m);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i].lift(m);
    return out;
  }

  friend RepMatrix operator*(const RepMatrix& a, const RepMatrix& b) {
    check(a, b);
    RepMatrix out(a.d_, a.n_);
    for (std::size_t i = 0; i < a.d_; ++i)
      for (std::size_t k = 0; k < a.d_; ++k) {
        const auto& x = a.at(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < a.d_; ++j)
          if (!b.at(k, j).is_zero()) out.at(i, j) += x * b.at(k, j);
      }
    return out;
  }
  friend RepMatrix operator+(const RepMatrix& a, const RepMatrix& b) {
    check(a, b);
    RepMatrix out = a;
    for (std::size_t i = 0; i < out.e_.size(); ++i) out.e_[i] += b.e_[i];
    return out;
  }
  friend RepMatrix operator-(const RepMatrix& a, const RepMatrix& b) {
    check(a, b);
    RepMatrix out = a;
    for (std::size_t i = 0; i < out.e_.size(); ++i) out.e_[i] -= b.e_[i];
    return out;
  }
  friend bool operator==(const RepMatrix& a, const RepMatrix& b) { return a.d_ == b.d_ && a.e_ == b.e_; }

  bool is_zero() const {
    for (auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }

  /// Exact determinant by elimination over the field.
  Cyclotomic det() const {
    if (d_ == 0) return Cyclotomic::one(n_);
    if (d_ == 1) return e_[0];
    if (d_ == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    auto a = e_;
    auto result = Cyclotomic::one(n_);
    for (std::size_t c = 0; c < d_; ++c) {
      std::size_t piv = c;
      while (piv < d_ && a[piv * d_ + c].is_zero()) ++piv;
      if (piv == d_) return Cyclotomic::zero(n_);
      if (piv != c) {
        for (std::size_t j = 0; j < d_; ++j) std::swap(a[piv * d_ + j], a[c * d_ + j]);
        result = -result;
      }
      const auto& p = a[c * d_ + c];
      result *= p;
      auto inv = p.inverse();
      for (std::size_t r = c + 1; r < d_; ++r) {
        if (a[r * d_ + c].is_zero()) continue;
        auto f = a[r * d_ + c] * inv;
        for (std::size_t j = c; j < d_; ++j) a[r * d_ + j] -= f * a[c * d_ + j];
      }
    }
    return result;
  }

  /// Kronecker product a (x) b over the lcm conductor.
  friend RepMatrix kronecker(const RepMatrix& a, const RepMatrix& b) {
    const auto m = std::lcm(a.n_, b.n_);
    auto x = a.lift(m), y = b.lift(m);
    RepMatrix out(a.d_ * b.d_, m);
    for (std::size_t i = 0; i < a.d_; ++i)
      for (std::size_t j = 0; j < a.d_; ++j) {
        if (x.at(i, j).is_zero()) continue;
        for (std::size_t k = 0; k < b.d_; ++k)
          for (std::size_t l = 0; l < b.d_; ++l) out.at(i * b.d_ + k, j * b.d_ + l) = x.at(i, j) * y.at(k, l);
      }
    return out;
  }

 private:
  static void check(const RepMatrix& a, const RepMatrix& b) {
    if (a.d_ != b.d_ || a.n_ != b.n_) throw Error(ErrorKind::BadConductor, "matrix degree or conductor mismatch");
  }

  std::size_t d_ = 0;
  std::size_t n_ = 1;
  std::vector<Cyclotomic> e_;
};

struct Representation {
  Group group;
  std::size_t degree = 0;
  std::size_t conductor = 1;
  std::vector<RepMatrix> images;
  std::string construction;  // how it was built, for reports
};

namespace detail {

inline Representation finish(Group g, std::vector<RepMatrix> images, std::string construction) {
  Representation rep;
  rep.group = std::move(g);
  rep.degree = images.empty() ? 0 : images.front().degree();
  std::size_t n = 1;
  for (auto& m : images) n = std::lcm(n, m.conductor());
  for (auto& m : images)
    if (m.conductor() != n) m = m.lift(n);
  rep.conductor = n;
  rep.images = std::move(images);
  rep.construction = std::move(construction);
  return rep;
}

}  // namespace detail

/// images[0] = I and images[xy] = images[x] images[y]; every pair up to
/// limits.full_rep_check, sampled pairs above.
inline bool verify_homomorphism(const Representation& rep, const Limits& limits = {}) {
  const auto n = rep.group.order();
  if (rep.images.size() != n) return false;
  if (!(rep.images[0] == RepMatrix::identity(rep.degree, rep.conductor))) return false;
  if (n <= limits.full_rep_check) {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if (!(rep.images[rep.group.mul(x, y)] == rep.images[x] * rep.images[y])) return false;
    return true;
  }
  std::mt19937_64 rng(limits.seed);
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
  for (std::size_t t = 0; t < 20 * n; ++t) {
    auto x = pick(rng), y = pick(rng);
    if (!(rep.images[rep.group.mul(x, y)] == rep.images[x] * rep.images[y])) return false;
  }
  return true;
}

struct FreenessReport {
  bool free = false;
  std::optional<Element> failing_element;  // det(rho(g) - I) = 0
  bool annihilation_checked = false;
  std::optional<Subgroup> failing_subgroup;  // sum over H of rho(h) != 0
};

inline RepMatrix image_sum(const Representation& rep, const Subgroup& h) {
  RepMatrix s(rep.degree, rep.conductor);
  for (auto x : h.elements()) s = s + rep.images[x];
  return s;
}

/// Exact eigenvalue-1 test on every nonidentity element; when free, also
/// checks that the image of N(H) vanishes for every nontrivial cyclic H (or
/// every nontrivial subgroup, if given).
inline FreenessReport verify_free(const Representation& rep, const std::vector<Subgroup>* subgroups = nullptr) {
  FreenessReport r;
  const auto id = RepMatrix::identity(rep.degree, rep.conductor);
  for (Element g = 1; g < rep.group.order(); ++g)
    if ((rep.images[g] - id).det().is_zero()) {
      r.failing_element = g;
      return r;
    }
  r.free = true;
  std::vector<Subgroup> cyclic;
  if (!subgroups) {
    cyclic = cyclic_subgroups(rep.group);
    subgroups = &cyclic;
  }
  for (auto& h : *subgroups) {
    if (h.is_trivial()) continue;
    if (!image_sum(rep, h).is_zero()) {
      r.failing_subgroup = h;
      break;
    }
  }
  r.annihilation_checked = true;
  if (r.failing_subgroup) throw std::logic_error("verify_free: free representation with nonvanishing norm image");
  return r;
}

// --- Constructions -------------------------------------------------------------

/// Generator of C maps to zeta_N I_d.
inline Representation scalar_representation(const Group& c, std::size_t degree = 1) {
  const auto n = c.order();
  Element gen = 0;
  for (Element x = 0; x < n; ++x)
    if (c.element_order(x) == n) {
      gen = x;
      break;
    }
  if (c.element_order(gen) != n) throw Error(ErrorKind::NotCyclic, c.origin() + " is not cyclic");
  std::vector<RepMatrix> images(n);
  Element x = 0;
  for (std::size_t k = 0; k < n; ++k, x = c.mul(x, gen))
    images[x] = RepMatrix::scalar(degree, Cyclotomic::zeta(n, static_cast<long long>(k)));
  return detail::finish(c, std::move(images), "scalar");
}

/// Monomial representation induced from h -> zeta_m^(k log h) on a cyclic
/// subgroup H of order m. Coset representatives are the least indices.
inline Representation induced_representation(const Subgroup& h, long long character_exponent = 1) {
  const auto& g = h.parent();
  const auto m = h.order();
  if (!is_cyclic(h)) throw Error(ErrorKind::NotCyclic, "inducing subgroup is not cyclic");
  if (std::gcd(static_cast<std::size_t>(mod(character_exponent, static_cast<std::int64_t>(m))), m) != 1 && m > 1)
    throw Error(ErrorKind::NotFaithful, "gcd(k, |H|) != 1");
  Element gen = 0;
  for (auto x : h.elements())
    if (g.element_order(x) == m) {
      gen = x;
      break;
    }
  std::vector<long long> log(g.order(), -1);
  {
    Element x = 0;
    for (std::size_t k = 0; k < m; ++k, x = g.mul(x, gen)) log[x] = static_cast<long long>(k);
  }
  std::vector<Element> reps;
  std::vector<std::size_t> coset_of(g.order(), SIZE_MAX);
  for (Element x = 0; x < g.order(); ++x) {
    if (coset_of[x] != SIZE_MAX) continue;
    for (auto y : h.elements()) coset_of[g.mul(x, y)] = reps.size();
    reps.push_back(x);
  }
  const auto t = reps.size();
  std::vector<RepMatrix> images;
  images.reserve(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    RepMatrix mat(t, m);
    for (std::size_t j = 0; j < t; ++j) {
      auto y = g.mul(x, reps[j]);  // = reps[i] * hh
      auto i = coset_of[y];
      auto hh = g.mul(g.inv(reps[i]), y);
      mat.at(i, j) = Cyclotomic::zeta(m, character_exponent * log[hh]);
    }
    images.push_back(std::move(mat));
  }
  return detail::finish(g, std::move(images), "induced");
}

namespace detail {

/// a + b sqrt d inside Q(zeta_n) with sqrt 2 = z8 + z8^-1, sqrt 5 = 2(z5 + z5^-1) + 1.
inline Cyclotomic to_cyclotomic(const QuadField& x) {
  Cyclotomic a(x.rational_part());
  if (x.radical_part() == 0) return a;
  Cyclotomic root;
  if (x.radicand() == 2) root = Cyclotomic::zeta(8, 1) + Cyclotomic::zeta(8, -1);
  else root = Cyclotomic(Rational(2)) * (Cyclotomic::zeta(5, 1) + Cyclotomic::zeta(5, -1)) + Cyclotomic(Rational(1));
  return a + Cyclotomic(x.radical_part()) * root;
}

inline Cyclotomic to_cyclotomic(const Cyclotomic& x) { return x; }

template <class F>
RepMatrix quaternion_matrix(const Quaternion<F>& q) {
  auto a = to_cyclotomic(q.w), b = to_cyclotomic(q.x), c = to_cyclotomic(q.y), d = to_cyclotomic(q.z);
  auto i = Cyclotomic::zeta(4, 1);
  std::array<Cyclotomic, 4> e{a + b * i, c + d * i, -c + d * i, a - b * i};
  std::size_t n = 4;
  for (auto& v : e) n = std::lcm(n, v.conductor());
  RepMatrix m(2, n);
  m.at(0, 0) = e[0].lift(n);
  m.at(0, 1) = e[1].lift(n);
  m.at(1, 0) = e[2].lift(n);
  m.at(1, 1) = e[3].lift(n);
  return m;
}

}  // namespace detail

/// q = a + bi + cj + dk -> [[a+bi, c+di], [-c+di, a-bi]].
template <class F>
Representation quaternion_embedding_rep(const QuaternionGroup<F>& g) {
  std::vector<RepMatrix> images;
  for (auto& q : g.elements) images.push_back(detail::quaternion_matrix(q));
  return detail::finish(g.group, std::move(images), "quaternion");
}

/// The same for a group whose labels are quaternion literals.
inline Representation quaternion_embedding_rep(const Group& g) {
  auto coords = quaternion_coordinates(g);
  if (!coords) throw Error(ErrorKind::NoQuaternionLabels, g.origin() + " has no quaternion labels");
  return quaternion_embedding_rep(QuaternionGroup<QuadField>{g, std::move(*coords)});
}

/// rho o phi for phi: H -> rho.group.
inline Representation pullback(const Representation& rep, const Homomorphism& phi, std::string construction) {
  if (!(phi.target == rep.group)) throw Error(ErrorKind::ParentMismatch, "pullback along a map into another group");
  std::vector<RepMatrix> images;
  for (Element x = 0; x < phi.source.order(); ++x) images.push_back(rep.images[phi(x)]);
  return detail::finish(phi.source, std::move(images), std::move(construction));
}

/// (a, b) -> rho_A(a) (x) rho_B(b) on A x B (direct_product layout).
inline Representation tensor_product_rep(const Representation& ra, const Representation& rb, const Limits& limits = {}) {
  const auto na = ra.group.order(), nb = rb.group.order();
  if (std::gcd(na, nb) != 1) throw Error(ErrorKind::NotCoprime, "tensor product needs coprime orders");
  auto product = direct_product(ra.group, rb.group, limits);
  std::vector<RepMatrix> images;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) images.push_back(kronecker(ra.images[i], rb.images[j]));
  return detail::finish(product, std::move(images), "tensor");
}

/// Restriction to H, as a representation of H viewed as a group.
inline Representation restriction(const Representation& rep, const Subgroup& h) {
  auto sub = as_group(h);
  std::vector<RepMatrix> images;
  for (auto x : sub.embedding) images.push_back(rep.images[x]);
  return detail::finish(sub.group, std::move(images), rep.construction + " restricted");
}

// --- Dispatch ----------------------------------------------------------------------

namespace detail {

template <class F>
std::optional<Representation> try_quaternion_model(const Group& g, const QuaternionGroup<F>& model,
                                                   const char* name, const CancelToken* token) {
  auto iso = is_isomorphic(g, model.group, token);
  if (!iso) return std::nullopt;
  return pullback(quaternion_embedding_rep(model), *iso, std::string("quaternion (") + name + ")");
}

inline std::optional<Representation> build_unchecked(const Group& g, const Limits& limits, const CancelToken* token);

/// G = A x B internally with A, B normal of coprime orders.
inline std::optional<Representation> try_coprime_split(const Group& g, const Limits& limits, const CancelToken* token) {
  const auto n = g.order();
  for (auto& a : normal_subgroups(g, token)) {
    if (a.is_trivial() || a.is_whole()) continue;
    const auto na = a.order(), nb = n / na;
    if (std::gcd(na, nb) != 1 || na > nb) continue;
    // B is the unique (normal) subgroup of order nb: elements of order dividing nb.
    ElementSet mask(n);
    for (Element x = 0; x < n; ++x)
      if (nb % g.element_order(x) == 0) mask.set(x);
    if (mask.count() != nb) continue;
    auto b_elems = mask.to_vector();
    auto b = subgroup_generated(g, std::span<const Element>(b_elems));
    if (b.order() != nb) continue;
    auto ga = as_group(a, limits), gb = as_group(b, limits);
    auto ra = build_unchecked(ga.group, limits, token);
    if (!ra) continue;
    auto rb = build_unchecked(gb.group, limits, token);
    if (!rb) continue;
    std::vector<RepMatrix> images(n);
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < nb; ++j)
        images[g.mul(ga.embedding[i], gb.embedding[j])] = kronecker(ra->images[i], rb->images[j]);
    return finish(g, std::move(images), "tensor (" + ra->construction + ", " + rb->construction + ")");
  }
  return std::nullopt;
}

inline std::optional<Representation> build_unchecked(const Group& g, const Limits& limits, const CancelToken* token) {
  if (is_cyclic(whole_group(g))) return scalar_representation(g);
  if (quaternion_coordinates(g)) return quaternion_embedding_rep(g);
  const auto n = g.order();
  if (involutions(g).size() == 1) {
    if (n == 24)
      if (auto r = try_quaternion_model(g, binary_tetrahedral_quaternions(limits), "2T", token)) return r;
    if (n == 48)
      if (auto r = try_quaternion_model(g, binary_octahedral_quaternions(limits), "2O", token)) return r;
    if (n == 120)
      if (auto r = try_quaternion_model(g, binary_icosahedral_quaternions(limits), "2I", token)) return r;
    bool half_cyclic = false;  // 2D_n has an element of order 2n
    for (Element x = 0; x < n && !half_cyclic; ++x) half_cyclic = 2 * g.element_order(x) == n;
    if (n % 4 == 0 && n >= 8 && half_cyclic)
      if (auto r = try_quaternion_model(g, binary_dihedral_quaternions(n / 4, limits), "2D", token)) return r;
  }
  if (auto r = try_coprime_split(g, limits, token)) return r;
  // Induce from the subgroup generated by all elements of prime order.
  std::vector<Element> prime_elems;
  for (Element x = 1; x < n; ++x)
    if (is_prime(g.element_order(x))) prime_elems.push_back(x);
  auto hull = subgroup_generated(g, std::span<const Element>(prime_elems));
  if (is_cyclic(hull)) return induced_representation(hull, 1);
  return std::nullopt;
}

}  // namespace detail

/// A verified free representation, or nullopt for shapes without a
/// construction here. Throws NotFreelyRepresentable when none exists.
inline std::optional<Representation> build_free_representation(const Group& g, const Limits& limits = {},
                                                                const CancelToken* token = nullptr) {
  auto verdict = is_freely_representable(g, limits, token);
  if (!verdict.answer) throw Error(ErrorKind::NotFreelyRepresentable, g.origin() + " is not freely representable");
  auto rep = detail::build_unchecked(g, limits, token);
  if (!rep) return std::nullopt;
  if (!verify_homomorphism(*rep, limits)) throw std::logic_error("build_free_representation: not a homomorphism");
  if (!verify_free(*rep).free) throw std::logic_error("build_free_representation: representation is not free");
  return rep;
}

}  // namespace freerep
