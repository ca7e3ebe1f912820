#include "genchar/rational.hpp"

#include <stdexcept>

namespace genchar {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  auto slash = text.find('/');
  auto parse_int = [](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer in rational");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("missing digits in rational");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') {
        throw std::invalid_argument("invalid character in rational: '" + std::string(s) + "'");
      }
    }
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return mpz_class(digits, 10);
  };
  mpz_class num = parse_int(text.substr(0, slash));
  mpz_class den = 1;
  if (slash != std::string_view::npos) {
    den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

mpz_class factorial(int n) {
  mpz_class result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
  return result;
}

}  // namespace genchar
