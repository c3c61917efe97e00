#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace cpog {

// Arbitrary-precision signed integer.
//
// Thin wrapper over boost::multiprecision::cpp_int with a deliberately
// closed operator surface: no greedy constructor or operator templates are
// visible to overload resolution, so Eigen's expression machinery can probe
// conversions against this type without tripping over boost's internal
// byte-container detection (which is not SFINAE-safe against Eigen types).
class BigInt {
public:
  using rep = boost::multiprecision::cpp_int;

  BigInt() = default;
  BigInt(int v) : v_(v) {}
  BigInt(long v) : v_(v) {}
  BigInt(long long v) : v_(v) {}
  BigInt(unsigned v) : v_(v) {}
  BigInt(unsigned long v) : v_(v) {}
  BigInt(unsigned long long v) : v_(v) {}
  explicit BigInt(const std::string& digits) : v_(digits) {}
  explicit BigInt(rep v) : v_(std::move(v)) {}

  const rep& raw() const { return v_; }
  rep& raw() { return v_; }

  BigInt& operator+=(const BigInt& o) { v_ += o.v_; return *this; }
  BigInt& operator-=(const BigInt& o) { v_ -= o.v_; return *this; }
  BigInt& operator*=(const BigInt& o) { v_ *= o.v_; return *this; }
  BigInt& operator/=(const BigInt& o) { v_ /= o.v_; return *this; }
  BigInt& operator%=(const BigInt& o) { v_ %= o.v_; return *this; }
  BigInt operator-() const { return BigInt(rep(-v_)); }

  friend BigInt operator+(BigInt a, const BigInt& b) { a += b; return a; }
  friend BigInt operator-(BigInt a, const BigInt& b) { a -= b; return a; }
  friend BigInt operator*(BigInt a, const BigInt& b) { a *= b; return a; }
  friend BigInt operator/(BigInt a, const BigInt& b) { a /= b; return a; }
  friend BigInt operator%(BigInt a, const BigInt& b) { a %= b; return a; }

  friend bool operator==(const BigInt& a, const BigInt& b) { return a.v_ == b.v_; }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return a.v_ != b.v_; }
  friend bool operator<(const BigInt& a, const BigInt& b) { return a.v_ < b.v_; }
  friend bool operator>(const BigInt& a, const BigInt& b) { return a.v_ > b.v_; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return a.v_ <= b.v_; }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const BigInt& x) { return os << x.v_; }

  bool is_zero() const { return v_.is_zero(); }
  int sign() const { return v_.sign(); }

private:
  rep v_;
};

inline BigInt abs(const BigInt& x) {
  return BigInt(BigInt::rep(boost::multiprecision::abs(x.raw())));
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  return BigInt(BigInt::rep(boost::multiprecision::gcd(a.raw(), b.raw())));
}

inline void divide_qr(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  boost::multiprecision::divide_qr(a.raw(), b.raw(), q.raw(), r.raw());
}

/// Quotient a/b asserting that b divides a exactly.
inline BigInt exact_div(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  divide_qr(a, b, q, r);
  if (!r.is_zero()) throw std::logic_error("exact_div: division left a remainder");
  return q;
}

inline BigInt pow(const BigInt& base, unsigned exponent) {
  return BigInt(BigInt::rep(boost::multiprecision::pow(base.raw(), exponent)));
}

/// Number of bits in |x|; 0 for x = 0.
inline unsigned bit_length(const BigInt& x) {
  if (x.is_zero()) return 0;
  return static_cast<unsigned>(boost::multiprecision::msb(boost::multiprecision::abs(x.raw()))) + 1;
}

inline bool fits_int64(const BigInt& x) {
  return x >= BigInt(std::numeric_limits<std::int64_t>::min()) &&
         x <= BigInt(std::numeric_limits<std::int64_t>::max());
}

inline std::int64_t to_int64(const BigInt& x) {
  if (!fits_int64(x)) throw std::overflow_error("to_int64: value out of range");
  return x.raw().convert_to<std::int64_t>();
}

inline std::string to_string(const BigInt& x) { return x.raw().str(); }

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Dense square matrix of arbitrary-precision integers.
using ExactMatrix = DenseMatrix<BigInt>;

}  // namespace cpog

namespace Eigen {

template <>
struct NumTraits<cpog::BigInt> {
  using Real = cpog::BigInt;
  using NonInteger = cpog::BigInt;
  using Nested = cpog::BigInt;
  using Literal = cpog::BigInt;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 30,
    MulCost = 60,
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen
