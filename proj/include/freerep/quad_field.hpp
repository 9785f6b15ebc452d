#pragma once

// Exact arithmetic in Q, Q(sqrt 2) and Q(sqrt 5).

#include <cctype>
#include <string>
#include <string_view>
#include <tuple>

#include "freerep/error.hpp"
#include "freerep/rational.hpp"

namespace freerep {

/// a + b*sqrt(d) with d in {1, 2, 5}. Canonical form keeps d = 1 whenever
/// b = 0, so equality is plain component equality.
class QuadField {
 public:
  QuadField() = default;
  QuadField(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  QuadField(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QuadField(Rational a, Rational b, int d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (d != 1 && d != 2 && d != 5) throw Error(ErrorKind::BadParams, "unsupported radicand " + std::to_string(d));
    if (d == 1) {
      a_ += b_;
      b_ = 0;
    }
    normalize();
  }

  static QuadField sqrt(int d) { return {Rational(0), Rational(1), d}; }

  const Rational& rational_part() const noexcept { return a_; }
  const Rational& radical_part() const noexcept { return b_; }
  int radicand() const noexcept { return d_; }
  bool is_zero() const noexcept { return a_ == 0 && b_ == 0; }

  QuadField operator-() const { return {Rational(-a_), Rational(-b_), d_}; }

  friend QuadField operator+(const QuadField& x, const QuadField& y) {
    int d = common(x, y);
    return {Rational(x.a_ + y.a_), Rational(x.b_ + y.b_), d};
  }
  friend QuadField operator-(const QuadField& x, const QuadField& y) { return x + (-y); }
  friend QuadField operator*(const QuadField& x, const QuadField& y) {
    int d = common(x, y);
    return {Rational(x.a_ * y.a_ + d * x.b_ * y.b_), Rational(x.a_ * y.b_ + x.b_ * y.a_), d};
  }

  QuadField inverse() const {
    Rational n = a_ * a_ - d_ * b_ * b_;
    if (n == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero in quadratic field");
    return {Rational(a_ / n), Rational(-b_ / n), d_};
  }
  friend QuadField operator/(const QuadField& x, const QuadField& y) { return x * y.inverse(); }

  QuadField& operator+=(const QuadField& o) { return *this = *this + o; }
  QuadField& operator-=(const QuadField& o) { return *this = *this - o; }
  QuadField& operator*=(const QuadField& o) { return *this = *this * o; }

  friend bool operator==(const QuadField& x, const QuadField& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator<(const QuadField& x, const QuadField& y) {
    if (x.d_ != y.d_) return x.d_ < y.d_;
    if (x.a_ != y.a_) return x.a_ < y.a_;
    return x.b_ < y.b_;
  }

  /// "a", "c*r2", "a+c*r5" with rationals in p/q form.
  std::string str() const {
    if (b_ == 0) return to_string(a_);
    std::string rad = to_string(b_) + "*r" + std::to_string(d_);
    if (a_ == 0) return rad;
    return to_string(a_) + (b_ > 0 ? "+" : "") + rad;
  }

  /// Sum of signed terms "p", "p/q", "p/q*r2", "p/q*r5", e.g. "1/4+1/4*r5".
  static QuadField parse(std::string_view text) {
    if (text.empty()) throw Error(ErrorKind::BadParams, "empty quadratic-field literal");
    QuadField total;
    std::size_t i = 0;
    while (i < text.size()) {
      std::size_t start = i;
      if (text[i] == '+' || text[i] == '-') ++i;
      while (i < text.size() && text[i] != '+' && text[i] != '-') ++i;
      auto term = text.substr(start, i - start);
      bool negative = !term.empty() && term[0] == '-';
      if (!term.empty() && (term[0] == '+' || term[0] == '-')) term.remove_prefix(1);
      int d = 1;
      if (auto star = term.find('*'); star != std::string_view::npos) {
        auto rad = term.substr(star + 1);
        if (rad == "r2") d = 2;
        else if (rad == "r5") d = 5;
        else throw Error(ErrorKind::BadParams, "unknown radical '" + std::string(rad) + "'");
        term = term.substr(0, star);
      }
      Rational c = parse_rational(term);
      if (negative) c = -c;
      total += d == 1 ? QuadField(c) : QuadField(Rational(0), c, d);
    }
    return total;
  }

 private:
  void normalize() {
    a_.canonicalize();
    b_.canonicalize();
    if (b_ == 0) d_ = 1;
  }

  static int common(const QuadField& x, const QuadField& y) {
    if (x.d_ == 1) return y.d_;
    if (y.d_ == 1 || y.d_ == x.d_) return x.d_;
    throw Error(ErrorKind::BadParams, "mixed quadratic fields r" + std::to_string(x.d_) + " and r" +
                                          std::to_string(y.d_));
  }

  Rational a_ = 0;
  Rational b_ = 0;
  int d_ = 1;
};

}  // namespace freerep
