#include "vkcurve/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace vk {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  q_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  q_.canonicalize();
}

Rational Rational::parse(std::string const& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
  q.canonicalize();
  return Rational(std::move(q));
}

Rational& Rational::operator/=(Rational const& o) {
  if (o.sign() == 0) {
    throw std::domain_error("division by zero rational");
  }
  q_ /= o.q_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) {
    return q_.get_num().get_str();
  }
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::numerator() const { return q_.get_num().get_str(); }
std::string Rational::denominator() const { return q_.get_den().get_str(); }
bool Rational::is_integer() const { return q_.get_den() == 1; }

std::ostream& operator<<(std::ostream& os, Rational const& r) { return os << r.str(); }

}  // namespace vk
