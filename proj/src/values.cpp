#include "hafs/values.hpp"

#include <charconv>

namespace hafs {

namespace {

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  auto den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

Truth3 parse_truth3(std::string_view text) {
  if (text == "0") return Truth3::Zero;
  if (text == "1/2") return Truth3::Half;
  if (text == "1") return Truth3::One;
  throw std::invalid_argument("not a three-valued label: '" + std::string(text) + "'");
}

Truth3 to_truth3(const Rational& r) {
  if (r == Rational(0)) return Truth3::Zero;
  if (r == Rational(1, 2)) return Truth3::Half;
  if (r == Rational(1)) return Truth3::One;
  throw std::invalid_argument("value " + to_string(r) + " is not in {0, 1/2, 1}");
}

}  // namespace hafs
