#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <concepts>
#include <ostream>
#include <string>
#include <utility>

#include "nct/error.hpp"

namespace nct {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar, always kept in lowest terms with positive
/// denominator. Usable as an Eigen matrix scalar (see NumTraits below).
///
/// Deliberately not built on boost::multiprecision::cpp_rational: its
/// converting constructors trip a hard error in boost's byte-container
/// trait when Eigen probes expression types for scalar promotion.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}

  template <std::integral T>
  Rational(T v) : num_(v), den_(1) {}  // NOLINT: implicit by design

  template <typename T>
    requires std::same_as<std::decay_t<T>, BigInt>
  Rational(T&& v) : num_(std::forward<T>(v)), den_(1) {}

  Rational(BigInt numerator, BigInt denominator)
      : num_(std::move(numerator)), den_(std::move(denominator)) {
    normalize();
  }

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }
  bool is_integer() const noexcept { return den_ == 1; }
  int sign() const noexcept { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw Error("DivisionByZero", "rational division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    BigInt l = a.num_ * b.den_;
    BigInt r = b.num_ * a.den_;
    return l < r;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend Rational abs(const Rational& a) { return a.num_ < 0 ? -a : a; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.num_.str() << '/' << r.den_.str();
  }

 private:
  void normalize() {
    if (den_ == 0) throw Error("DivisionByZero", "zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  BigInt num_;
  BigInt den_;
};

/// Largest integer <= r.
BigInt floor_of(const Rational& r);

/// Representative of r mod 1 in [0, 1).
Rational mod_one(const Rational& r);

/// Nearest integer to r (half rounds up).
BigInt round_nearest(const Rational& r);

double to_double(const Rational& r);

/// Parses "p/q" or "p" (optional sign, q > 0 after normalization).
Rational parse_rational(const std::string& text);

/// Canonical I/O form "p/q" in lowest terms, q > 0 (integers as "p/1").
std::string to_string(const Rational& r);

using RMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

template <typename Derived>
bool is_antisymmetric(const Eigen::MatrixBase<Derived>& m) {
  return m.rows() == m.cols() && (m + m.transpose()).isZero(typename Derived::Scalar(0));
}

/// True iff every entry is an integer.
bool is_integer_matrix(const RMatrix& m);

}  // namespace nct

namespace Eigen {

template <>
struct NumTraits<nct::Rational> : GenericNumTraits<nct::Rational> {
  typedef nct::Rational Real;
  typedef nct::Rational NonInteger;
  typedef nct::Rational Nested;
  typedef nct::Rational Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60
  };
  static inline Real epsilon() { return nct::Rational(0); }
  static inline Real dummy_precision() { return nct::Rational(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
