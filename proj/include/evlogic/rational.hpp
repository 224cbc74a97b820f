#ifndef EVLOGIC_RATIONAL_HPP
#define EVLOGIC_RATIONAL_HPP

#include <gmpxx.h>

#include <Eigen/Core>

#include <compare>
#include <concepts>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

namespace evlogic {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Every probability and mass in the library is carried as a
/// Rational so that results compare by equality.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T n) {  // NOLINT: implicit on purpose, lets literals mix with Rationals
    if constexpr (std::is_signed_v<T>) {
      value_ = static_cast<long>(n);
    } else {
      value_ = static_cast<unsigned long>(n);
    }
  }

  Rational(long numerator, long denominator);

  /// Parses `a/b`, an integer, or an exact decimal such as `0.7` or `.25`.
  /// Throws std::invalid_argument on malformed text or a zero denominator.
  static Rational parse(std::string_view text);

  /// `a/b` in lowest terms, or just `a` when the denominator is one.
  std::string str() const;
  /// Fixed-point rendering with the given number of decimals, rounded half
  /// away from zero, computed exactly.
  std::string decimal(int places = 6) const;
  /// Nearest double (get_d truncates).
  double to_double() const;

  std::string numerator_str() const { return value_.get_num().get_str(); }
  std::string denominator_str() const { return value_.get_den().get_str(); }

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.value_ = -a.value_;
    return r;
  }
  friend Rational operator+(const Rational& a) { return a; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class value_{0};
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RationalVector = Vector<Rational>;

}  // namespace evlogic

namespace Eigen {

template <>
struct NumTraits<evlogic::Rational> : GenericNumTraits<evlogic::Rational> {
  using Real = evlogic::Rational;
  using NonInteger = evlogic::Rational;
  using Nested = evlogic::Rational;
  using Literal = evlogic::Rational;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16
  };

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // EVLOGIC_RATIONAL_HPP
