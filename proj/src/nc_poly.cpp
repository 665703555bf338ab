#include "cobarkit/nc_poly.hpp"

#include <algorithm>
#include <sstream>

namespace ck {

NcPolynomial NcPolynomial::unit(const Field& f) {
  NcPolynomial p;
  p.terms.emplace(GenWord{}, Scalar::of(f, 1));
  return p;
}

NcPolynomial NcPolynomial::gen(const Field& f, int g) {
  NcPolynomial p;
  p.terms.emplace(GenWord{g}, Scalar::of(f, 1));
  return p;
}

NcPolynomial NcPolynomial::mono(const Scalar& c, GenWord w) {
  NcPolynomial p;
  if (!c.is_zero()) p.terms.emplace(std::move(w), c);
  return p;
}

void NcPolynomial::add_term(const Scalar& c, const GenWord& w) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms.emplace(w, c);
  if (!fresh) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

NcPolynomial NcPolynomial::operator+(const NcPolynomial& o) const {
  NcPolynomial out = *this;
  for (const auto& [w, c] : o.terms) out.add_term(c, w);
  return out;
}

NcPolynomial NcPolynomial::operator-(const NcPolynomial& o) const {
  NcPolynomial out = *this;
  for (const auto& [w, c] : o.terms) out.add_term(-c, w);
  return out;
}

NcPolynomial NcPolynomial::operator*(const NcPolynomial& o) const {
  NcPolynomial out;
  for (const auto& [w1, c1] : terms)
    for (const auto& [w2, c2] : o.terms) {
      GenWord w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      out.add_term(c1 * c2, w);
    }
  return out;
}

NcPolynomial NcPolynomial::scaled(const Scalar& s) const {
  NcPolynomial out;
  if (s.is_zero()) return out;
  for (const auto& [w, c] : terms) out.terms.emplace(w, c * s);
  return out;
}

NcPolynomial NcPolynomial::operator-() const {
  NcPolynomial out;
  for (const auto& [w, c] : terms) out.terms.emplace(w, -c);
  return out;
}

int NcPolynomial::max_length() const {
  size_t n = 0;
  for (const auto& [w, c] : terms) n = std::max(n, w.size());
  return static_cast<int>(n);
}

TensorPoly TensorPoly::of(const NcPolynomial& a, const NcPolynomial& b) {
  TensorPoly t;
  for (const auto& [wa, ca] : a.terms)
    for (const auto& [wb, cb] : b.terms) t.add_term(ca * cb, wa, wb);
  return t;
}

void TensorPoly::add_term(const Scalar& c, const GenWord& l, const GenWord& r) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms.emplace(std::make_pair(l, r), c);
  if (!fresh) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

TensorPoly TensorPoly::operator+(const TensorPoly& o) const {
  TensorPoly out = *this;
  for (const auto& [k, c] : o.terms) out.add_term(c, k.first, k.second);
  return out;
}

TensorPoly TensorPoly::operator-(const TensorPoly& o) const {
  TensorPoly out = *this;
  for (const auto& [k, c] : o.terms) out.add_term(-c, k.first, k.second);
  return out;
}

TensorPoly TensorPoly::operator*(const TensorPoly& o) const {
  TensorPoly out;
  for (const auto& [k1, c1] : terms)
    for (const auto& [k2, c2] : o.terms) {
      GenWord l = k1.first;
      l.insert(l.end(), k2.first.begin(), k2.first.end());
      GenWord r = k1.second;
      r.insert(r.end(), k2.second.begin(), k2.second.end());
      out.add_term(c1 * c2, l, r);
    }
  return out;
}

TensorPoly TensorPoly::scaled(const Scalar& s) const {
  TensorPoly out;
  if (s.is_zero()) return out;
  for (const auto& [k, c] : terms) out.terms.emplace(k, c * s);
  return out;
}

namespace {

void append_term(std::ostringstream& os, bool& first, const Scalar& c,
                 const std::string& word_text) {
  std::string cs = c.str();
  if (!first)
    os << (cs[0] == '-' ? " - " : " + ");
  else if (cs[0] == '-')
    os << "-";
  first = false;
  std::string mag = cs[0] == '-' ? cs.substr(1) : cs;
  if (word_text.empty()) {
    os << mag;
    return;
  }
  if (mag != "1") os << mag << "*";
  os << word_text;
}

std::string word_text(const GenWord& w, const std::vector<std::string>& names) {
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << "*";
    os << names[static_cast<size_t>(w[i])];
  }
  return os.str();
}

}  // namespace

std::string nc_poly_str(const NcPolynomial& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<std::pair<size_t, GenWord>, const Scalar*>> ord;
  for (const auto& [w, c] : p.terms) ord.push_back({{w.size(), w}, &c});
  std::sort(ord.begin(), ord.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : ord) append_term(os, first, *c, word_text(key.second, names));
  return os.str();
}

std::string tensor_poly_str(const TensorPoly& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : p.terms) {
    std::string l = k.first.empty() ? "1" : word_text(k.first, names);
    std::string r = k.second.empty() ? "1" : word_text(k.second, names);
    append_term(os, first, c, "(" + l + ")(x)(" + r + ")");
  }
  return os.str();
}

}  // namespace ck
