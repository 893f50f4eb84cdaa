#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace flagstab {

// Exact rational scalar. mpq_class keeps values canonical (reduced, positive
// denominator) through arithmetic; the helpers below enforce the same when a
// value enters from the outside world.
using Rat = mpq_class;
using Int = mpz_class;

// Parses "p", "-p", or "p/q" in base 10. Anything else (decimals, empty,
// zero denominator) is rejected.
inline Rat rat_from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  Rat value;
  try {
    value = Rat(text);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational literal: " + text);
  }
  if (value.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  value.canonicalize();
  return value;
}

// "p" when the denominator is 1, "p/q" otherwise. Round-trips exactly
// through rat_from_string.
inline std::string rat_to_string(const Rat& value) { return value.get_str(); }

inline int rat_sign(const Rat& value) { return sgn(value); }

inline bool rat_is_integer(const Rat& value) { return value.get_den() == 1; }

}  // namespace flagstab
