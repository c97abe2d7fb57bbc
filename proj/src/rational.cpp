#include "melonforge/rational.hpp"

#include "melonforge/error.hpp"

namespace melonforge {

Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Integer(text));
    const Integer den(text.substr(slash + 1));
    if (den == 0) throw Error(Errc::Parse, "zero denominator in '" + text + "'");
    return Rational(Integer(text.substr(0, slash)), den);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    throw Error(Errc::Parse, "not a rational number: '" + text + "'");
  }
}

}  // namespace melonforge
