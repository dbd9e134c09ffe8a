#include "eulerops/rational.hpp"

#include <stdexcept>

namespace eulerops {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::string_view body = text;
  if (body.front() == '-' || body.front() == '+') body.remove_prefix(1);
  const auto slash = body.find('/');
  auto digits_only = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  if (!digits_only(body.substr(0, slash)) ||
      (slash != std::string_view::npos && !digits_only(body.substr(slash + 1)))) {
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  }
  mpq_class q;
  if (q.set_str(std::string(text), 10) != 0)
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  if (q.get_den() == 0) throw std::domain_error("rational with zero denominator");
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::to_string() const { return value_.get_str(10); }

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational binomial(std::uint32_t n, std::uint32_t k) {
  if (k > n) return Rational(0);
  mpz_class result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return Rational(mpq_class(result));
}

}  // namespace eulerops
