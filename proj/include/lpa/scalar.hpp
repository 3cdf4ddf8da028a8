#ifndef LPA_SCALAR_HPP
#define LPA_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "lpa/errors.hpp"

namespace lpa {

using Rational = boost::multiprecision::cpp_rational;

/// Coefficient field: the rationals (characteristic 0) or F_p for a prime p.
class Field {
public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint64_t p);

  std::uint64_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }

  bool operator==(const Field&) const = default;

  std::string to_string() const {
    return p_ == 0 ? "Q" : "F" + std::to_string(p_);
  }

private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

/// An exact field element. Rationals are kept in lowest terms with a
/// positive denominator (cpp_rational maintains this); prime-field
/// values are residues in [0, p).
class Scalar {
public:
  Scalar() : field_(Field::rationals()) {}
  Scalar(Field f, const Rational& q);
  static Scalar zero(Field f) { return Scalar(f, 0); }
  static Scalar one(Field f) { return Scalar(f, 1); }

  /// Parses "3", "-1/2", "(-1/2)". Residues are reduced for F_p.
  static Scalar parse(Field f, const std::string& text);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  bool is_negative() const;   // always false for F_p

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;     // throws on zero

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string to_string() const;

  const Rational& rational() const { return q_; }
  std::uint64_t residue() const { return r_; }

private:
  void check(const Scalar& o) const {
    if (!(field_ == o.field_))
      throw AlgebraMismatch("scalars over different fields");
  }
  Field field_;
  Rational q_;        // used when field is Q
  std::uint64_t r_ = 0; // used when field is F_p
};

} // namespace lpa

#endif
