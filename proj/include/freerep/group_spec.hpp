#pragma once

// Group-spec mini-language (case-insensitive):
//   spec := atom | "prod(" spec "," spec ")" | "sd(" int "," int "," int ")"
//   atom := "C" int | "D" int | "Q" int | "SL2(" prime ")" | "2T" | "2O" | "2I"
//         | "2D" int | "quat(" q(...) { "," q(...) } ")"

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "freerep/binary_polyhedral.hpp"
#include "freerep/constructors.hpp"
#include "freerep/error.hpp"
#include "freerep/quaternion.hpp"

namespace freerep {

struct GroupSpec {
  enum class Kind { Cyclic, Dihedral, Quaternion, SL2, T2, O2, I2, BinaryDihedral, Quat, Product, Semidirect };
  Kind kind = Kind::Cyclic;
  std::vector<std::int64_t> ints;
  std::vector<RealQuaternion> quats;
  std::vector<GroupSpec> children;
};

namespace detail {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    auto s = spec();
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const { throw ParseError(pos_, why); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? static_cast<char>(std::tolower(static_cast<unsigned char>(text_[pos_ + ahead])))
                                       : '\0';
  }

  bool accept(std::string_view word) {
    skip();
    for (std::size_t i = 0; i < word.size(); ++i)
      if (peek(i) != word[i]) return false;
    pos_ += word.size();
    return true;
  }

  void expect(std::string_view word) {
    if (!accept(word)) fail("expected '" + std::string(word) + "'");
  }

  std::int64_t integer(bool allow_sign = false) {
    skip();
    bool negative = false;
    if (allow_sign && (peek() == '-' || peek() == '+')) {
      negative = peek() == '-';
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    std::int64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > (std::int64_t{1} << 40)) fail("integer too large");
      ++pos_;
    }
    return negative ? -v : v;
  }

  RealQuaternion quaternion_literal() {
    skip();
    const auto start = pos_;
    if (peek() != 'q' || peek(1) != '(') fail("expected a quaternion literal q(w,x,y,z)");
    auto close = text_.find(')', pos_);
    if (close == std::string_view::npos) fail("unterminated quaternion literal");
    std::string lit;
    for (auto c : text_.substr(start, close + 1 - start))
      if (!std::isspace(static_cast<unsigned char>(c))) lit += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    try {
      auto q = parse_quaternion(lit);
      pos_ = close + 1;
      return q;
    } catch (const Error& e) {
      throw ParseError(start, e.detail());
    }
  }

  GroupSpec spec() {
    skip();
    GroupSpec s;
    if (accept("prod(")) {
      s.kind = GroupSpec::Kind::Product;
      s.children.push_back(spec());
      expect(",");
      s.children.push_back(spec());
      expect(")");
    } else if (accept("sd(")) {
      s.kind = GroupSpec::Kind::Semidirect;
      s.ints.push_back(integer());
      expect(",");
      s.ints.push_back(integer());
      expect(",");
      s.ints.push_back(integer(true));
      expect(")");
    } else if (accept("sl2(")) {
      s.kind = GroupSpec::Kind::SL2;
      s.ints.push_back(integer());
      expect(")");
    } else if (accept("quat(")) {
      s.kind = GroupSpec::Kind::Quat;
      s.quats.push_back(quaternion_literal());
      while (accept(",")) s.quats.push_back(quaternion_literal());
      expect(")");
    } else if (accept("2t")) {
      s.kind = GroupSpec::Kind::T2;
    } else if (accept("2o")) {
      s.kind = GroupSpec::Kind::O2;
    } else if (accept("2i")) {
      s.kind = GroupSpec::Kind::I2;
    } else if (accept("2d")) {
      s.kind = GroupSpec::Kind::BinaryDihedral;
      s.ints.push_back(integer());
    } else if (accept("c")) {
      s.kind = GroupSpec::Kind::Cyclic;
      s.ints.push_back(integer());
    } else if (accept("d")) {
      s.kind = GroupSpec::Kind::Dihedral;
      s.ints.push_back(integer());
    } else if (accept("q")) {
      s.kind = GroupSpec::Kind::Quaternion;
      s.ints.push_back(integer());
    } else {
      fail("expected a group spec");
    }
    return s;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline GroupSpec parse_group_spec(std::string_view text) { return detail::SpecParser(text).parse(); }

/// Canonical form; parse_group_spec(to_string(s)) reproduces s.
inline std::string to_string(const GroupSpec& s) {
  using K = GroupSpec::Kind;
  auto n = [&](std::size_t i) { return std::to_string(s.ints.at(i)); };
  switch (s.kind) {
    case K::Cyclic: return "C" + n(0);
    case K::Dihedral: return "D" + n(0);
    case K::Quaternion: return "Q" + n(0);
    case K::SL2: return "SL2(" + n(0) + ")";
    case K::T2: return "2T";
    case K::O2: return "2O";
    case K::I2: return "2I";
    case K::BinaryDihedral: return "2D" + n(0);
    case K::Quat: {
      std::string out = "quat(";
      for (std::size_t i = 0; i < s.quats.size(); ++i) out += (i ? "," : "") + s.quats[i].str();
      return out + ")";
    }
    case K::Product: return "prod(" + to_string(s.children.at(0)) + "," + to_string(s.children.at(1)) + ")";
    case K::Semidirect: return "sd(" + n(0) + "," + n(1) + "," + n(2) + ")";
  }
  return "?";
}

inline bool operator==(const GroupSpec& a, const GroupSpec& b) { return to_string(a) == to_string(b); }

inline Group build_group_from_spec(const GroupSpec& s, const Limits& limits = {}) {
  using K = GroupSpec::Kind;
  auto positive = [&](std::int64_t v) {
    if (v < 1) throw Error(ErrorKind::BadParams, to_string(s) + ": parameter must be positive");
    return static_cast<std::size_t>(v);
  };
  switch (s.kind) {
    case K::Cyclic: return cyclic(positive(s.ints[0]), limits);
    case K::Dihedral: return dihedral(positive(s.ints[0]), limits);
    case K::Quaternion: return generalized_quaternion(positive(s.ints[0]), limits);
    case K::SL2: return sl2(s.ints[0], limits);
    case K::T2: return binary_tetrahedral(limits);
    case K::O2: return binary_octahedral(limits);
    case K::I2: return binary_icosahedral(limits);
    case K::BinaryDihedral: return binary_dihedral(positive(s.ints[0]), limits);
    case K::Quat: return finite_quaternion_group<QuadField>(s.quats, limits, to_string(s)).group;
    case K::Product:
      return direct_product(build_group_from_spec(s.children[0], limits), build_group_from_spec(s.children[1], limits),
                            limits);
    case K::Semidirect: return semidirect_cyclic({s.ints[0], s.ints[1], s.ints[2]}, limits);
  }
  throw Error(ErrorKind::BadParams, "unknown spec");
}

inline Group build_group_from_spec(std::string_view text, const Limits& limits = {}) {
  return build_group_from_spec(parse_group_spec(text), limits);
}

}  // namespace freerep
