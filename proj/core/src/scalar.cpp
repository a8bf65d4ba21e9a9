#include "homnambu/scalar.hpp"

#include <cctype>
#include <ostream>

#include "homnambu/errors.hpp"

namespace homnambu {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Scalar::Scalar(long num, long den) {
  if (den == 0) throw InputError("scalar with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Scalar::Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Scalar Scalar::parse(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!is_integer_literal(num)) throw InputError("malformed scalar '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Scalar(mpq_class(parse_integer(num)));
  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+')
    throw InputError("malformed scalar '" + std::string(text) + "'");
  mpz_class d = parse_integer(den);
  if (d == 0) throw InputError("scalar with zero denominator '" + std::string(text) + "'");
  return Scalar(mpq_class(parse_integer(num), d));
}

std::string Scalar::str() const { return q_.get_str(10); }

Scalar Scalar::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Scalar(mpq_class(num, den));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw SingularMap("division by zero");
  return Scalar(mpq_class(1) / q_);
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw SingularMap("division by zero");
  q_ /= o.q_;
  return *this;
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return;
  thread_local mpq_class tmp;
  mpq_mul(tmp.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
  mpq_add(q_.get_mpq_t(), q_.get_mpq_t(), tmp.get_mpq_t());
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace homnambu
