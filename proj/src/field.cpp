#include "cobarkit/field.hpp"

namespace ck {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::fp(std::int64_t p) {
  if (!is_prime(p)) throw malformed_input("field modulus " + std::to_string(p) + " is not prime");
  return Field{FieldKind::prime, p};
}

std::string Field::name() const {
  return kind == FieldKind::rationals ? "q" : "fp:" + std::to_string(p);
}

Field Field::parse(const std::string& name) {
  if (name == "q" || name == "Q") return q();
  if (name.rfind("fp:", 0) == 0) {
    try {
      return fp(std::stoll(name.substr(3)));
    } catch (const std::invalid_argument&) {
      throw malformed_input("bad field name: " + name);
    }
  }
  throw malformed_input("bad field name: " + name + " (expected q or fp:<p>)");
}

static std::int64_t mod_reduce(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

Scalar Scalar::of(const Field& f, std::int64_t num, std::int64_t den) {
  if (den == 0) throw malformed_input("zero denominator");
  Scalar s;
  s.field_ = f;
  if (f.kind == FieldKind::rationals) {
    s.q_ = mpq_class(num, den);
    s.q_.canonicalize();
  } else {
    std::int64_t d = mod_reduce(den, f.p);
    if (d == 0) throw malformed_input("denominator not invertible mod p");
    Scalar dd;
    dd.field_ = f;
    dd.r_ = d;
    s.r_ = mod_reduce(num, f.p);
    if (d != 1) s = s * dd.inv();
  }
  return s;
}

Scalar Scalar::of_mpq(const mpq_class& q) {
  Scalar s;
  s.field_ = Field::q();
  s.q_ = q;
  s.q_.canonicalize();
  return s;
}

bool Scalar::is_zero() const {
  return field_.kind == FieldKind::rationals ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return field_.kind == FieldKind::rationals ? q_ == 1 : r_ == 1;
}

void Scalar::check_same(const Scalar& o) const {
  if (!(field_ == o.field_)) throw malformed_input("scalars from different fields");
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar s = *this;
  if (field_.kind == FieldKind::rationals)
    s.q_ = q_ + o.q_;
  else
    s.r_ = mod_reduce(r_ + o.r_, field_.p);
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  Scalar s = *this;
  if (field_.kind == FieldKind::rationals)
    s.q_ = q_ - o.q_;
  else
    s.r_ = mod_reduce(r_ - o.r_, field_.p);
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar s = *this;
  if (field_.kind == FieldKind::rationals)
    s.q_ = q_ * o.q_;
  else
    s.r_ = mod_reduce(r_ * o.r_, field_.p);  // p < 2^31 keeps this in range
  return s;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw malformed_input("division by zero");
  Scalar s = *this;
  if (field_.kind == FieldKind::rationals) {
    s.q_ = 1 / q_;
  } else {
    // extended Euclid: x with r_ * x ≡ 1 (mod p)
    std::int64_t t = 0, newt = 1, r = field_.p, newr = r_;
    while (newr != 0) {
      std::int64_t qt = r / newr;
      std::int64_t tmp = t - qt * newt;
      t = newt;
      newt = tmp;
      tmp = r - qt * newr;
      r = newr;
      newr = tmp;
    }
    s.r_ = mod_reduce(t, field_.p);
  }
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (field_.kind == FieldKind::rationals)
    s.q_ = -q_;
  else
    s.r_ = mod_reduce(-r_, field_.p);
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) return false;
  return field_.kind == FieldKind::rationals ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
  if (field_.kind == FieldKind::prime) return std::to_string(r_);
  return q_.get_str();
}

const mpq_class& Scalar::rational() const {
  if (field_.kind != FieldKind::rationals) throw malformed_input("not a rational scalar");
  return q_;
}

std::int64_t Scalar::residue() const {
  if (field_.kind != FieldKind::prime) throw malformed_input("not a prime-field scalar");
  return r_;
}

}  // namespace ck
