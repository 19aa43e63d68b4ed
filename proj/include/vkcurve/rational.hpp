#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace vk {

/// Exact fraction in canonical form (gcd-reduced, positive denominator).
/// All curvature bookkeeping goes through this type; there is no floating
/// point anywhere on that path.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t v) : q_(static_cast<long>(v)) {}  // NOLINT
  Rational(std::int64_t num, std::int64_t den);

  /// Parses "p/q" or "p".
  static Rational parse(std::string const& text);

  [[nodiscard]] std::string str() const;  // "p/q", or "p" when q == 1
  [[nodiscard]] std::string numerator() const;
  [[nodiscard]] std::string denominator() const;
  [[nodiscard]] int sign() const { return sgn(q_); }
  [[nodiscard]] bool is_integer() const;

  Rational& operator+=(Rational const& o) { q_ += o.q_; return *this; }
  Rational& operator-=(Rational const& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(Rational const& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(Rational const& o);

  friend Rational operator+(Rational a, Rational const& b) { return a += b; }
  friend Rational operator-(Rational a, Rational const& b) { return a -= b; }
  friend Rational operator*(Rational a, Rational const& b) { return a *= b; }
  friend Rational operator/(Rational a, Rational const& b) { return a /= b; }
  friend Rational operator-(Rational a) { a.q_ = -a.q_; return a; }

  friend bool operator==(Rational const& a, Rational const& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(Rational const& a, Rational const& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, Rational const& r);

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_{0};
};

}  // namespace vk
