#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hafs {

using Rational = boost::rational<std::int64_t>;

/// Exact three-valued truth degree, ordered 0 < 1/2 < 1.
enum class Truth3 : std::uint8_t { Zero = 0, Half = 1, One = 2 };

inline constexpr Truth3 kTruthValues[] = {Truth3::Zero, Truth3::Half, Truth3::One};

inline Rational to_rational(Truth3 t) {
  switch (t) {
    case Truth3::Zero: return Rational(0);
    case Truth3::Half: return Rational(1, 2);
    case Truth3::One: return Rational(1);
  }
  return Rational(0);
}

inline double to_double(Truth3 t) { return static_cast<double>(static_cast<int>(t)) / 2.0; }
inline double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

inline std::string to_string(Truth3 t) {
  switch (t) {
    case Truth3::Zero: return "0";
    case Truth3::Half: return "1/2";
    case Truth3::One: return "1";
  }
  return "?";
}

/// "0", "1", "p/q" (reduced).
inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Parses an integer or "p/q". Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

/// Parses "0", "1/2", "1" only.
Truth3 parse_truth3(std::string_view text);

/// Maps a rational in {0, 1/2, 1} back to Truth3; anything else throws.
Truth3 to_truth3(const Rational& r);

}  // namespace hafs
