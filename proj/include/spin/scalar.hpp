#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace spin {

// Base field of a coefficient ring: the rationals (characteristic 0) or a
// prime field F_p.
class Field {
 public:
  Field() = default;
  static Field rationals() { return Field{}; }
  static Field prime(std::uint32_t p);

  std::uint32_t characteristic() const { return characteristic_; }
  bool is_rational() const { return characteristic_ == 0; }

  // True iff r is invertible in the field.
  bool allows_order(unsigned r) const;
  // Number of r-th roots of unity lying in the field itself.
  unsigned roots_of_unity(unsigned r) const;

  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) : characteristic_(p) {}
  std::uint32_t characteristic_ = 0;
};

// Exact element of a Field.  Rationals are arbitrary precision; F_p values
// are kept as the canonical representative in [0, p).
class Scalar {
 public:
  explicit Scalar(Field field = Field{}) : field_(field) {}
  Scalar(Field field, long value);
  Scalar(Field field, const mpq_class& value);

  // Accepts "n" or "n/d".  Throws InputError when the text is not a number
  // or the denominator vanishes in the field.
  static Scalar parse(Field field, std::string_view text);

  const Field& field() const { return field_; }
  const mpq_class& value() const { return value_; }

  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  // Throws DomainError on division by zero.
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

  Scalar inverse() const;
  Scalar pow(unsigned e) const;

  // Some x in the field with x^r == *this, when one exists.
  std::optional<Scalar> rth_root(unsigned r) const;

  // "n" for integers, "n/d" otherwise.
  std::string to_string() const;

 private:
  void reduce();
  void check_same(const Scalar& o) const;

  Field field_;
  mpq_class value_{0};
};

}  // namespace spin
