#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_n). Elements are rational
// coefficient vectors of length phi(n), i.e. polynomials in zeta_n reduced
// modulo the n-th cyclotomic polynomial.

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "freerep/error.hpp"
#include "freerep/number_theory.hpp"
#include "freerep/rational.hpp"

namespace freerep {

namespace poly {

using Poly = std::vector<Rational>;  // low degree first

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

/// Quotient and remainder; b must be nonzero.
inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  Poly q(a.size() - b.size() + 1);
  const Rational& lead = b.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    Rational c = a[k + b.size() - 1] / lead;
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

}  // namespace poly

namespace detail {

/// Phi_n plus the reductions of x^k (0 <= k < n) modulo Phi_n.
struct CyclotomicBasis {
  std::size_t n = 1;
  std::size_t degree = 1;
  poly::Poly phi;
  std::vector<std::vector<Rational>> power;  // power[k] has `degree` entries
};

inline poly::Poly cyclotomic_polynomial_uncached(std::size_t n);

inline std::shared_ptr<const CyclotomicBasis> cyclotomic_basis(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, std::shared_ptr<const CyclotomicBasis>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  auto basis = std::make_shared<CyclotomicBasis>();
  basis->n = n;
  basis->phi = cyclotomic_polynomial_uncached(n);
  basis->degree = basis->phi.size() - 1;
  for (std::size_t k = 0; k < n; ++k) {
    poly::Poly xk(k + 1);
    xk[k] = 1;
    auto r = poly::divmod(xk, basis->phi).second;
    r.resize(basis->degree);
    basis->power.push_back(std::move(r));
  }
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(basis)).first->second;
}

/// x^n - 1 divided by Phi_d for every proper divisor d.
inline poly::Poly cyclotomic_polynomial_uncached(std::size_t n) {
  poly::Poly p(n + 1);
  p[0] = -1;
  p[n] = 1;
  for (std::size_t d = 1; d < n; ++d)
    if (n % d == 0) p = poly::divmod(p, cyclotomic_basis(d)->phi).first;
  return p;
}

}  // namespace detail

inline poly::Poly cyclotomic_polynomial(std::size_t n) { return detail::cyclotomic_basis(n)->phi; }

/// Element of Q(zeta_n). Binary operations on different conductors lift both
/// operands to the lcm.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(1) {}
  explicit Cyclotomic(std::size_t conductor) : basis_(detail::cyclotomic_basis(conductor)) {
    c_.assign(basis_->degree, Rational(0));
  }
  Cyclotomic(const Rational& q, std::size_t conductor = 1) : Cyclotomic(conductor) { c_[0] = q; }  // NOLINT

  static Cyclotomic zero(std::size_t n = 1) { return Cyclotomic(n); }
  static Cyclotomic one(std::size_t n = 1) { return {Rational(1), n}; }

  /// zeta_n^k
  static Cyclotomic zeta(std::size_t n, long long k = 1) {
    if (n == 0) throw Error(ErrorKind::BadConductor, "conductor 0");
    Cyclotomic z(n);
    auto e = static_cast<std::size_t>(mod(k, static_cast<std::int64_t>(n)));
    z.c_ = z.basis_->power[e];
    return z;
  }

  /// Builds sum coeffs[k] zeta_n^k for arbitrary exponents.
  static Cyclotomic from_powers(std::size_t n, const std::vector<Rational>& coeffs) {
    Cyclotomic z(n);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      if (coeffs[k] != 0) z.add_power(k % n, coeffs[k]);
    return z;
  }

  std::size_t conductor() const noexcept { return basis_->n; }
  const std::vector<Rational>& coeffs() const noexcept { return c_; }

  bool is_zero() const noexcept {
    for (auto& q : c_)
      if (q != 0) return false;
    return true;
  }
  bool is_rational() const noexcept {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  bool is_one() const noexcept { return is_rational() && c_[0] == 1; }

  /// The same number viewed in Q(zeta_m), using zeta_n = zeta_m^(m/n).
  Cyclotomic lift(std::size_t m) const {
    if (m == 0 || m % conductor() != 0)
      throw Error(ErrorKind::BadConductor,
                  "cannot lift conductor " + std::to_string(conductor()) + " to " + std::to_string(m));
    if (m == conductor()) return *this;
    const auto step = m / conductor();
    Cyclotomic r(m);
    for (std::size_t k = 0; k < c_.size(); ++k)
      if (c_[k] != 0) r.add_power(k * step % m, c_[k]);
    return r;
  }

  Cyclotomic operator-() const {
    Cyclotomic r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
  }

  friend Cyclotomic operator+(const Cyclotomic& x, const Cyclotomic& y) {
    if (x.conductor() != y.conductor()) return combine(x, y, [](auto& a, auto& b) { return a + b; });
    Cyclotomic r = x;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += y.c_[i];
    return r;
  }
  friend Cyclotomic operator-(const Cyclotomic& x, const Cyclotomic& y) {
    if (x.conductor() != y.conductor()) return combine(x, y, [](auto& a, auto& b) { return a - b; });
    Cyclotomic r = x;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= y.c_[i];
    return r;
  }
  friend Cyclotomic operator*(const Cyclotomic& x, const Cyclotomic& y) {
    if (x.conductor() != y.conductor()) return combine(x, y, [](auto& a, auto& b) { return a * b; });
    const auto n = x.conductor();
    const auto deg = x.c_.size();
    std::vector<Rational> prod(2 * deg, Rational(0));
    bool any = false;
    for (std::size_t i = 0; i < deg; ++i) {
      if (x.c_[i] == 0) continue;
      for (std::size_t j = 0; j < deg; ++j) {
        if (y.c_[j] == 0) continue;
        prod[i + j] += x.c_[i] * y.c_[j];
        any = true;
      }
    }
    Cyclotomic r(n);
    if (!any) return r;
    for (std::size_t k = 0; k < prod.size(); ++k)
      if (prod[k] != 0) r.add_power(k % n, prod[k]);
    return r;
  }

  Cyclotomic inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero in Q(zeta_" + std::to_string(conductor()) + ")");
    poly::Poly r0 = basis_->phi, r1 = c_, s0{}, s1{Rational(1)};
    poly::trim(r1);
    while (!r1.empty()) {
      auto [q, rem] = poly::divmod(r0, r1);
      r0 = std::move(r1);
      r1 = std::move(rem);
      auto next = poly::sub(s0, poly::mul(q, s1));
      s0 = std::move(s1);
      s1 = std::move(next);
    }
    // r0 is a nonzero constant and s0 * this == r0 modulo Phi_n.
    Rational c = r0.front();
    std::vector<Rational> coeffs;
    for (auto& q : s0) coeffs.push_back(q / c);
    return from_powers(conductor(), coeffs);
  }
  friend Cyclotomic operator/(const Cyclotomic& x, const Cyclotomic& y) { return x * y.inverse(); }

  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  /// Complex conjugation, zeta -> zeta^-1.
  Cyclotomic conj() const {
    Cyclotomic r(conductor());
    const auto n = conductor();
    for (std::size_t k = 0; k < c_.size(); ++k)
      if (c_[k] != 0) r.add_power((n - k) % n, c_[k]);
    return r;
  }

  /// Exact equality; operands of different conductors are compared in the lcm.
  friend bool operator==(const Cyclotomic& x, const Cyclotomic& y) {
    if (x.conductor() == y.conductor()) return x.c_ == y.c_;
    return (x - y).is_zero();
  }
  /// Total order on representations (same conductor), for use as map keys.
  friend bool operator<(const Cyclotomic& x, const Cyclotomic& y) {
    if (x.conductor() != y.conductor()) return x.conductor() < y.conductor();
    return x.c_ < y.c_;
  }

  std::string str() const {
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == 0) continue;
      std::string coeff = to_string(c_[k]);
      std::string term;
      if (k == 0) term = coeff;
      else {
        std::string z = "z" + std::to_string(conductor()) + (k > 1 ? "^" + std::to_string(k) : "");
        term = c_[k] == 1 ? z : (c_[k] == -1 ? "-" + z : coeff + "*" + z);
      }
      if (!out.empty() && term.front() != '-') out += "+";
      out += term;
    }
    return out.empty() ? "0" : out;
  }

 private:
  void add_power(std::size_t k, const Rational& coeff) {
    const auto& row = basis_->power[k];
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (row[i] != 0) c_[i] += coeff * row[i];
  }

  template <class Op>
  static Cyclotomic combine(const Cyclotomic& x, const Cyclotomic& y, Op op) {
    auto m = std::lcm(x.conductor(), y.conductor());
    auto a = x.lift(m);
    auto b = y.lift(m);
    return op(a, b);
  }

  std::shared_ptr<const detail::CyclotomicBasis> basis_;
  std::vector<Rational> c_;
};

}  // namespace freerep
