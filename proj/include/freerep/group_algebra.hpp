#pragma once

// The rational group algebra Q[G] with dense coefficient vectors.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "freerep/error.hpp"
#include "freerep/group.hpp"
#include "freerep/rational.hpp"
#include "freerep/subgroup.hpp"

namespace freerep {

class GroupAlgebraElement {
 public:
  GroupAlgebraElement() = default;
  explicit GroupAlgebraElement(Group g) : parent_(std::move(g)), c_(parent_.order(), Rational(0)) {}
  GroupAlgebraElement(Group g, std::vector<Rational> coeffs) : parent_(std::move(g)), c_(std::move(coeffs)) {
    if (c_.size() != parent_.order()) throw Error(ErrorKind::BadParams, "coefficient vector has the wrong length");
  }

  static GroupAlgebraElement zero(const Group& g) { return GroupAlgebraElement(g); }
  static GroupAlgebraElement one(const Group& g) { return basis(g, 0); }
  static GroupAlgebraElement basis(const Group& g, Element x, Rational coeff = 1) {
    GroupAlgebraElement e(g);
    e.c_.at(x) = std::move(coeff);
    return e;
  }

  const Group& parent() const noexcept { return parent_; }
  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  const Rational& operator[](Element x) const { return c_[x]; }
  Rational& operator[](Element x) { return c_[x]; }

  bool is_zero() const {
    for (auto& q : c_)
      if (q != 0) return false;
    return true;
  }

  std::vector<Element> support() const {
    std::vector<Element> s;
    for (Element x = 0; x < c_.size(); ++x)
      if (c_[x] != 0) s.push_back(x);
    return s;
  }

  GroupAlgebraElement scaled(const Rational& s) const {
    GroupAlgebraElement r = *this;
    for (auto& q : r.c_) q *= s;
    return r;
  }

  friend GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    check_parent(a, b);
    GroupAlgebraElement r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    return r;
  }
  friend GroupAlgebraElement operator-(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    check_parent(a, b);
    GroupAlgebraElement r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
    return r;
  }
  /// Convolution: (x y)(k) = sum over g h = k of x(g) y(h).
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    check_parent(a, b);
    GroupAlgebraElement r(a.parent_);
    auto sb = b.support();
    for (Element g = 0; g < a.c_.size(); ++g) {
      if (a.c_[g] == 0) continue;
      for (auto h : sb) r.c_[a.parent_.mul(g, h)] += a.c_[g] * b.c_[h];
    }
    return r;
  }
  GroupAlgebraElement& operator+=(const GroupAlgebraElement& o) { return *this = *this + o; }
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& o) { return *this = *this - o; }

  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return a.parent_ == b.parent_ && a.c_ == b.c_;
  }

  /// "1/2*g + -1*h" using element names.
  std::string str() const {
    std::string out;
    for (Element x = 0; x < c_.size(); ++x) {
      if (c_[x] == 0) continue;
      if (!out.empty()) out += " + ";
      out += to_string(c_[x]) + "*" + parent_.name(x);
    }
    return out.empty() ? "0" : out;
  }

 private:
  static void check_parent(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    if (!(a.parent_ == b.parent_)) throw Error(ErrorKind::ParentMismatch, "group algebra elements of different groups");
  }

  Group parent_;
  std::vector<Rational> c_;
};

/// N(H): the sum of the elements of H.
inline GroupAlgebraElement norm_element(const Subgroup& h) {
  GroupAlgebraElement n(h.parent());
  for (auto x : h.elements()) n[x] = 1;
  return n;
}

}  // namespace freerep
