#pragma once

// Noncommutative polynomials: exact linear combinations of words in
// generator ids, with concatenation product.  Storage is a word -> nonzero
// coefficient map; display order (degree, then length, then lexicographic)
// is applied by the owning algebra, which knows the generator degrees.

#include <map>
#include <utility>
#include <vector>

#include "cobarkit/field.hpp"

namespace ck {

using GenWord = std::vector<int>;

struct NcPolynomial {
  std::map<GenWord, Scalar> terms;  // no zero coefficients

  static NcPolynomial zero() { return {}; }
  static NcPolynomial unit(const Field& f);        // empty word
  static NcPolynomial gen(const Field& f, int g);  // single letter
  static NcPolynomial mono(const Scalar& c, GenWord w);

  bool is_zero() const { return terms.empty(); }
  void add_term(const Scalar& c, const GenWord& w);

  NcPolynomial operator+(const NcPolynomial& o) const;
  NcPolynomial operator-(const NcPolynomial& o) const;
  NcPolynomial operator*(const NcPolynomial& o) const;
  NcPolynomial scaled(const Scalar& s) const;
  NcPolynomial operator-() const;
  bool operator==(const NcPolynomial& o) const = default;

  // largest word length appearing (0 for the zero polynomial)
  int max_length() const;
};

// elements of a tensor square: (word, word) -> coefficient
struct TensorPoly {
  std::map<std::pair<GenWord, GenWord>, Scalar> terms;

  static TensorPoly of(const NcPolynomial& a, const NcPolynomial& b);
  bool is_zero() const { return terms.empty(); }
  void add_term(const Scalar& c, const GenWord& l, const GenWord& r);
  TensorPoly operator+(const TensorPoly& o) const;
  TensorPoly operator-(const TensorPoly& o) const;
  // componentwise product (a (x) b)(c (x) d) = ac (x) bd with no sign; only
  // meaningful where all factors sit in degree zero
  TensorPoly operator*(const TensorPoly& o) const;
  TensorPoly scaled(const Scalar& s) const;
  bool operator==(const TensorPoly& o) const = default;
};

// display against explicit generator names, ordered by word length then
// lexicographically; the empty word prints as its coefficient alone
std::string nc_poly_str(const NcPolynomial& p, const std::vector<std::string>& names);
std::string tensor_poly_str(const TensorPoly& p, const std::vector<std::string>& names);

}  // namespace ck
