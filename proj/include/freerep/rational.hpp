#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "freerep/error.hpp"

namespace freerep {

using Rational = mpq_class;

/// "p/q" in lowest terms, or "p" when q = 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p" or "p/q" with an optional sign.
inline Rational parse_rational(std::string_view text) {
  if (text.empty()) throw Error(ErrorKind::BadParams, "empty rational");
  Rational q;
  if (q.set_str(std::string(text), 10) != 0) throw Error(ErrorKind::BadParams, "bad rational '" + std::string(text) + "'");
  if (q.get_den() == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

}  // namespace freerep
