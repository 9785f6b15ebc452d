#pragma once

// Exact quaternions over a commutative field, the double cover of SO(3)
// by unit quaternions, and finite groups of unit quaternions.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "freerep/closure.hpp"
#include "freerep/cyclotomic.hpp"
#include "freerep/error.hpp"
#include "freerep/group.hpp"
#include "freerep/quad_field.hpp"

namespace freerep {

/// Constants of a scalar field, taken "like" an existing value so that
/// cyclotomic scalars keep their conductor.
template <class F>
struct FieldTraits;

template <>
struct FieldTraits<QuadField> {
  static QuadField zero_like(const QuadField&) { return QuadField(0L); }
  static QuadField one_like(const QuadField&) { return QuadField(1L); }
  static QuadField unify(const QuadField& x, const QuadField&) { return x; }
};

template <>
struct FieldTraits<Cyclotomic> {
  static Cyclotomic zero_like(const Cyclotomic& x) { return Cyclotomic::zero(x.conductor()); }
  static Cyclotomic one_like(const Cyclotomic& x) { return Cyclotomic::one(x.conductor()); }
  /// x rewritten in the conductor of `like` (which must be a multiple).
  static Cyclotomic unify(const Cyclotomic& x, const Cyclotomic& like) { return x.lift(like.conductor()); }
};

/// w + x i + y j + z k
template <class F>
struct Quaternion {
  F w, x, y, z;

  static Quaternion one(const F& like = F()) {
    auto o = FieldTraits<F>::one_like(like), z0 = FieldTraits<F>::zero_like(like);
    return {o, z0, z0, z0};
  }
  static Quaternion unit_i(const F& like = F()) {
    auto o = FieldTraits<F>::one_like(like), z0 = FieldTraits<F>::zero_like(like);
    return {z0, o, z0, z0};
  }
  static Quaternion unit_j(const F& like = F()) {
    auto o = FieldTraits<F>::one_like(like), z0 = FieldTraits<F>::zero_like(like);
    return {z0, z0, o, z0};
  }
  static Quaternion unit_k(const F& like = F()) {
    auto o = FieldTraits<F>::one_like(like), z0 = FieldTraits<F>::zero_like(like);
    return {z0, z0, z0, o};
  }

  friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z, a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x, a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }
  friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
  }
  Quaternion operator-() const { return {-w, -x, -y, -z}; }
  Quaternion scaled(const F& s) const { return {s * w, s * x, s * y, s * z}; }

  Quaternion conj() const { return {w, -x, -y, -z}; }
  /// |q|^2 = q conj(q)
  F norm() const { return w * w + x * x + y * y + z * z; }

  Quaternion inverse() const {
    F n = norm();
    if (n == FieldTraits<F>::zero_like(n)) throw Error(ErrorKind::DivisionByZero, "inverse of the zero quaternion");
    return conj().scaled(FieldTraits<F>::one_like(n) / n);
  }

  friend bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
  }
  friend bool operator<(const Quaternion& a, const Quaternion& b) {
    if (!(a.w == b.w)) return a.w < b.w;
    if (!(a.x == b.x)) return a.x < b.x;
    if (!(a.y == b.y)) return a.y < b.y;
    return a.z < b.z;
  }

  std::string str() const { return "q(" + w.str() + "," + x.str() + "," + y.str() + "," + z.str() + ")"; }
};

using RealQuaternion = Quaternion<QuadField>;

/// Parses `q(w,x,y,z)`; components use the QuadField literal syntax.
inline RealQuaternion parse_quaternion(std::string_view text) {
  auto bad = [&](const std::string& why) {
    return Error(ErrorKind::BadParams, "quaternion literal '" + std::string(text) + "': " + why);
  };
  if (text.size() < 4 || (text[0] != 'q' && text[0] != 'Q') || text[1] != '(' || text.back() != ')')
    throw bad("expected q(w,x,y,z)");
  auto body = text.substr(2, text.size() - 3);
  std::array<QuadField, 4> parts;
  std::size_t count = 0;
  while (true) {
    auto comma = body.find(',');
    auto piece = body.substr(0, comma);
    if (count == 4) throw bad("too many components");
    parts[count++] = QuadField::parse(piece);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  if (count != 4) throw bad("expected 4 components");
  return {parts[0], parts[1], parts[2], parts[3]};
}

/// 3x3 matrix, row-major.
template <class F>
struct RotationMatrix3 {
  std::array<F, 9> m;

  const F& at(int r, int c) const { return m[static_cast<std::size_t>(3 * r + c)]; }

  friend RotationMatrix3 operator*(const RotationMatrix3& a, const RotationMatrix3& b) {
    RotationMatrix3 out{};
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        F s = a.at(r, 0) * b.at(0, c);
        s = s + a.at(r, 1) * b.at(1, c);
        s = s + a.at(r, 2) * b.at(2, c);
        out.m[static_cast<std::size_t>(3 * r + c)] = s;
      }
    return out;
  }

  RotationMatrix3 transpose() const {
    RotationMatrix3 t = *this;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) t.m[static_cast<std::size_t>(3 * r + c)] = at(c, r);
    return t;
  }

  F det() const {
    return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
           at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
           at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
  }

  bool is_identity() const {
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        const F& v = at(r, c);
        if (!(v == (r == c ? FieldTraits<F>::one_like(v) : FieldTraits<F>::zero_like(v)))) return false;
      }
    return true;
  }

  /// M^T M = I and det M = 1, both exact.
  bool is_rotation() const { return (transpose() * *this).is_identity() && det() == FieldTraits<F>::one_like(det()); }

  friend bool operator==(const RotationMatrix3& a, const RotationMatrix3& b) { return a.m == b.m; }
  friend bool operator<(const RotationMatrix3& a, const RotationMatrix3& b) {
    for (std::size_t i = 0; i < 9; ++i)
      if (!(a.m[i] == b.m[i])) return a.m[i] < b.m[i];
    return false;
  }
};

/// Matrix of v -> h v h^-1 on the pure quaternions, basis (i, j, k).
template <class F>
RotationMatrix3<F> rotation_of(const Quaternion<F>& h) {
  if (!(h.norm() == FieldTraits<F>::one_like(h.w)))
    throw Error(ErrorKind::NotUnit, "rotation_of needs a unit quaternion, got " + h.str());
  const auto hinv = h.conj();
  const std::array<Quaternion<F>, 3> basis{Quaternion<F>::unit_i(h.w), Quaternion<F>::unit_j(h.w),
                                           Quaternion<F>::unit_k(h.w)};
  RotationMatrix3<F> out{};
  for (int c = 0; c < 3; ++c) {
    auto v = h * basis[static_cast<std::size_t>(c)] * hinv;
    out.m[static_cast<std::size_t>(0 + c)] = v.x;
    out.m[static_cast<std::size_t>(3 + c)] = v.y;
    out.m[static_cast<std::size_t>(6 + c)] = v.z;
  }
  return out;
}

/// A finite group of unit quaternions: its table plus exact coordinates.
template <class F>
struct QuaternionGroup {
  Group group;
  std::vector<Quaternion<F>> elements;
};

namespace detail {

template <class F>
Quaternion<F> unify(const Quaternion<F>& q, const F& like) {
  using T = FieldTraits<F>;
  return {T::unify(q.w, like), T::unify(q.x, like), T::unify(q.y, like), T::unify(q.z, like)};
}

inline Cyclotomic common_scale(const std::vector<Quaternion<Cyclotomic>>& gens) {
  std::size_t n = 1;
  for (auto& q : gens)
    for (auto* c : {&q.w, &q.x, &q.y, &q.z}) n = std::lcm(n, c->conductor());
  return Cyclotomic::zero(n);
}

inline QuadField common_scale(const std::vector<Quaternion<QuadField>>&) { return QuadField(0L); }

}  // namespace detail

/// The multiplicative group generated by unit quaternions. Labels carry the
/// exact coordinates.
template <class F>
QuaternionGroup<F> finite_quaternion_group(std::vector<Quaternion<F>> gens, const Limits& limits = {},
                                           std::string origin = "quat") {
  auto like = detail::common_scale(gens);
  for (auto& q : gens) {
    q = detail::unify(q, like);
    if (!(q.norm() == FieldTraits<F>::one_like(like)))
      throw Error(ErrorKind::NotUnit, "generator " + q.str() + " is not a unit quaternion");
  }
  auto closure = close_under(Quaternion<F>::one(like), gens, [](const auto& a, const auto& b) { return a * b; },
                             limits.group_order, "finite_quaternion_group");
  std::vector<std::string> labels;
  for (auto& q : closure.elements) labels.push_back(q.str());
  const auto n = closure.elements.size();
  auto group = group_from_table(std::move(closure.table), n, std::move(labels), std::move(origin), limits);
  return {std::move(group), std::move(closure.elements)};
}

/// Recovers exact coordinates from `q(...)` labels, if every label parses.
inline std::optional<std::vector<RealQuaternion>> quaternion_coordinates(const Group& g) {
  if (!g.has_labels()) return std::nullopt;
  std::vector<RealQuaternion> out;
  try {
    for (auto& label : g.labels()) out.push_back(parse_quaternion(label));
  } catch (const Error&) {
    return std::nullopt;
  }
  return out;
}

// --- Named unit-quaternion groups -------------------------------------------

inline RealQuaternion hurwitz_unit() {
  QuadField h(Rational(1, 2));
  return {h, h, h, h};
}

inline QuaternionGroup<QuadField> binary_tetrahedral_quaternions(const Limits& limits = {}) {
  return finite_quaternion_group<QuadField>({hurwitz_unit(), RealQuaternion::unit_i()}, limits, "2T");
}

/// (1 + i)/sqrt 2 adjoined to the Hurwitz units.
inline QuaternionGroup<QuadField> binary_octahedral_quaternions(const Limits& limits = {}) {
  QuadField s(Rational(0), Rational(1, 2), 2);  // 1/sqrt 2 = sqrt 2 / 2
  RealQuaternion eighth{s, s, QuadField(0L), QuadField(0L)};
  return finite_quaternion_group<QuadField>({hurwitz_unit(), RealQuaternion::unit_i(), eighth}, limits, "2O");
}

/// (phi + phi^-1 i + j)/2 adjoined to the Hurwitz units (the icosians).
inline QuaternionGroup<QuadField> binary_icosahedral_quaternions(const Limits& limits = {}) {
  QuadField half_phi(Rational(1, 4), Rational(1, 4), 5);       // (1 + sqrt5)/4
  QuadField half_phi_inv(Rational(-1, 4), Rational(1, 4), 5);  // (sqrt5 - 1)/4
  RealQuaternion tenth{half_phi, half_phi_inv, QuadField(Rational(1, 2)), QuadField(0L)};
  return finite_quaternion_group<QuadField>({hurwitz_unit(), RealQuaternion::unit_i(), tenth}, limits, "2I");
}

/// cos(pi k / n) + sin(pi k / n) i in Q(zeta_4n), i.e. a 2n-th root of unity
/// in the plane spanned by 1 and i.
inline Quaternion<Cyclotomic> planar_root_of_unity(std::size_t n, long long k = 1) {
  const std::size_t c = 4 * n;
  auto zeta = Cyclotomic::zeta(c, 2 * k);  // exp(i pi k / n)
  auto zeta_inv = Cyclotomic::zeta(c, -2 * k);
  auto i = Cyclotomic::zeta(c, static_cast<long long>(n));
  Rational half(1, 2);
  auto cosine = (zeta + zeta_inv) * Cyclotomic(half, c);
  auto sine = (zeta - zeta_inv) * (i * Cyclotomic(Rational(2), c)).inverse();
  auto zero = Cyclotomic::zero(c);
  return {cosine, sine, zero, zero};
}

/// Binary dihedral group of order 4n generated by a planar 2n-th root of
/// unity and j.
inline QuaternionGroup<Cyclotomic> binary_dihedral_quaternions(std::size_t n, const Limits& limits = {}) {
  if (n < 2) throw Error(ErrorKind::BadParams, "binary dihedral group needs n >= 2");
  auto a = planar_root_of_unity(n);
  return finite_quaternion_group<Cyclotomic>({a, Quaternion<Cyclotomic>::unit_j(a.w)}, limits,
                                             "2D" + std::to_string(n));
}

// --- SO(3) image -------------------------------------------------------------

enum class BinaryKind { Cyclic, BinaryDihedral, BinaryTetrahedral, BinaryOctahedral, BinaryIcosahedral };

inline std::string_view to_string(BinaryKind k) {
  switch (k) {
    case BinaryKind::Cyclic: return "cyclic";
    case BinaryKind::BinaryDihedral: return "binary_dihedral";
    case BinaryKind::BinaryTetrahedral: return "2T";
    case BinaryKind::BinaryOctahedral: return "2O";
    case BinaryKind::BinaryIcosahedral: return "2I";
  }
  return "?";
}

struct So3Identification {
  BinaryKind kind = BinaryKind::Cyclic;
  std::size_t parameter = 1;  // order for cyclic, n for binary dihedral 2D_n
  std::size_t image_order = 1;
  bool contains_minus_one = false;
  Group image;
};

/// Classifies G through its image in SO(3) by order and element-order census.
template <class F>
So3Identification identify_so3_image(const QuaternionGroup<F>& g, const Limits& limits = {}) {
  if (g.elements.size() != g.group.order() || g.elements.empty())
    throw Error(ErrorKind::NotQuaternionGroup, "coordinates do not match the group");
  const auto like = g.elements.front().w;
  const auto minus_one = -Quaternion<F>::one(like);
  std::vector<RotationMatrix3<F>> gens;
  bool has_minus_one = false;
  for (auto& q : g.elements) {
    if (q == minus_one) has_minus_one = true;
    auto r = rotation_of(q);
    if (!r.is_rotation()) throw Error(ErrorKind::NotQuaternionGroup, "image of " + q.str() + " is not a rotation");
    gens.push_back(std::move(r));
  }
  RotationMatrix3<F> id{};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      id.m[static_cast<std::size_t>(3 * r + c)] = r == c ? FieldTraits<F>::one_like(like) : FieldTraits<F>::zero_like(like);
  auto closure = close_under(id, gens, [](const auto& a, const auto& b) { return a * b; }, limits.group_order,
                             "identify_so3_image");
  const auto n = closure.elements.size();
  auto image = group_from_table(std::move(closure.table), n, {}, "SO(3) image of " + g.group.origin(), limits);

  // The map must be 2-to-1 with kernel {+-1} or injective.
  const auto expected = has_minus_one ? 2 * n : n;
  if (expected != g.group.order())
    throw Error(ErrorKind::NotQuaternionGroup, "rotation map has unexpected kernel");

  std::vector<std::size_t> census(n + 1, 0);
  for (Element x = 0; x < n; ++x) ++census[image.element_order(x)];
  auto count = [&](std::size_t k) { return k <= n ? census[k] : 0; };

  So3Identification id_out;
  id_out.image_order = n;
  id_out.contains_minus_one = has_minus_one;
  id_out.image = image;
  if (count(n) > 0) {
    id_out.kind = BinaryKind::Cyclic;
    id_out.parameter = g.group.order();
  } else if (n % 2 == 0 && n >= 4 && count(n / 2) > 0 && count(2) == n / 2 + (n / 2 % 2 == 0 ? 1 : 0)) {
    id_out.kind = BinaryKind::BinaryDihedral;
    id_out.parameter = n / 2;
  } else if (n == 4 && count(2) == 3) {
    id_out.kind = BinaryKind::BinaryDihedral;
    id_out.parameter = 2;
  } else if (n == 12 && count(3) == 8 && count(2) == 3) {
    id_out.kind = BinaryKind::BinaryTetrahedral;
  } else if (n == 24 && count(4) == 6 && count(3) == 8 && count(2) == 9) {
    id_out.kind = BinaryKind::BinaryOctahedral;
  } else if (n == 60 && count(5) == 24 && count(3) == 20 && count(2) == 15) {
    id_out.kind = BinaryKind::BinaryIcosahedral;
  } else {
    throw Error(ErrorKind::NotQuaternionGroup, "image of order " + std::to_string(n) + " is not a finite rotation group");
  }
  if (!has_minus_one && id_out.kind != BinaryKind::Cyclic)
    throw Error(ErrorKind::NotQuaternionGroup, "noncyclic unit group without -1");
  if (id_out.kind != BinaryKind::Cyclic && id_out.kind != BinaryKind::BinaryDihedral) id_out.parameter = g.group.order();
  return id_out;
}

}  // namespace freerep
