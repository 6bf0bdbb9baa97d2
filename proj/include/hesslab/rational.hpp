// Exact rational arithmetic with unbounded integers.
//
// Thin value wrapper around GMP's mpq_class. Invariants: always reduced,
// denominator > 0 (GMP canonical form). Serializes as "p" or "p/q".

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace hesslab {

class Rational {
public:
  Rational() : q_(0) {}
  Rational(long n) : q_(static_cast<long>(n)) {}
  Rational(long num, long den) : q_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    q_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }
  explicit Rational(const mpz_class& z) : q_(z) {}

  static Rational parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
      throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    q.canonicalize();
    return Rational(q);
  }

  const mpq_class& raw() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return q_ == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  Rational abs() const { return sign() < 0 ? -*this : *this; }
  Rational inverse() const {
    if (is_zero()) throw std::invalid_argument("Rational: inverse of zero");
    return Rational(mpq_class(1) / q_);
  }

  std::string str() const { return q_.get_str(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.q_.get_str();
  }

private:
  mpq_class q_;
};

}  // namespace hesslab

template <>
struct std::hash<hesslab::Rational> {
  size_t operator()(const hesslab::Rational& r) const {
    return std::hash<std::string>()(r.str());
  }
};
