#pragma once

// Exact scalar arithmetic over Q and prime fields F_p.
//
// Rationals are arbitrary-precision, always-reduced fractions (GMP mpq).
// Prime-field elements are canonical residues in [0, p).  Every Scalar is
// self-describing (it knows which field it lives in), arithmetic between
// scalars of different fields throws, and there is no floating point.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace ck {

struct malformed_input : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class FieldKind { rationals, prime };

struct Field {
  FieldKind kind = FieldKind::rationals;
  std::int64_t p = 0;  // modulus, meaningful only for prime fields

  static Field q() { return Field{FieldKind::rationals, 0}; }
  static Field fp(std::int64_t p);

  bool operator==(const Field&) const = default;
  std::string name() const;  // "q" or "fp:<p>"
  static Field parse(const std::string& name);
};

bool is_prime(std::int64_t n);

class Scalar {
 public:
  Scalar() = default;  // rational zero

  static Scalar of(const Field& f, std::int64_t num, std::int64_t den = 1);
  static Scalar of_mpq(const mpq_class& q);  // rational field
  static Scalar zero(const Field& f) { return of(f, 0); }
  static Scalar one(const Field& f) { return of(f, 1); }

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws on division by zero
  Scalar operator-() const;
  Scalar inv() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Canonical text form: reduced fraction ("-3/2") or residue ("4").
  std::string str() const;

  // Accessors for the rare places that need the raw value.
  const mpq_class& rational() const;
  std::int64_t residue() const;

 private:
  void check_same(const Scalar& o) const;

  Field field_ = Field::q();
  mpq_class q_ = 0;        // used when field_.kind == rationals
  std::int64_t r_ = 0;     // used when field_.kind == prime
};

}  // namespace ck
