#include "cobarkit/sparse_matrix.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ck {

SparseMatrix SparseMatrix::from_triplets(std::int64_t rows, std::int64_t cols,
                                         std::vector<Entry> triplets) {
  SparseMatrix m(rows, cols);
  std::map<std::pair<std::int64_t, std::int64_t>, Scalar> acc;
  for (auto& e : triplets) {
    if (e.row < 0 || e.row >= rows || e.col < 0 || e.col >= cols)
      throw malformed_input("matrix entry out of range");
    auto key = std::make_pair(e.row, e.col);
    auto it = acc.find(key);
    if (it == acc.end())
      acc.emplace(key, e.value);
    else
      it->second += e.value;
  }
  for (auto& [rc, v] : acc)
    if (!v.is_zero()) m.entries.push_back({rc.first, rc.second, v});
  return m;
}

SparseMatrix SparseMatrix::identity(std::int64_t n, const Field& f) {
  SparseMatrix m(n, n);
  for (std::int64_t i = 0; i < n; ++i) m.entries.push_back({i, i, Scalar::one(f)});
  return m;
}

Scalar SparseMatrix::at(std::int64_t r, std::int64_t c, const Field& f) const {
  for (auto& e : entries)
    if (e.row == r && e.col == c) return e.value;
  return Scalar::zero(f);
}

std::vector<Scalar> SparseMatrix::col_dense(std::int64_t c, const Field& f) const {
  std::vector<Scalar> v(rows, Scalar::zero(f));
  for (auto& e : entries)
    if (e.col == c) v[e.row] = e.value;
  return v;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
  if (cols != o.rows) throw malformed_input("matrix product shape mismatch");
  std::vector<Entry> trip;
  // index o by row
  std::map<std::int64_t, std::vector<const Entry*>> orows;
  for (auto& e : o.entries) orows[e.row].push_back(&e);
  for (auto& a : entries) {
    auto it = orows.find(a.col);
    if (it == orows.end()) continue;
    for (auto* b : it->second) trip.push_back({a.row, b->col, a.value * b->value});
  }
  return from_triplets(rows, o.cols, std::move(trip));
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const {
  if (rows != o.rows || cols != o.cols) throw malformed_input("matrix sum shape mismatch");
  std::vector<Entry> trip = entries;
  trip.insert(trip.end(), o.entries.begin(), o.entries.end());
  return from_triplets(rows, cols, std::move(trip));
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& o) const {
  if (rows != o.rows || cols != o.cols) throw malformed_input("matrix diff shape mismatch");
  std::vector<Entry> trip = entries;
  for (auto e : o.entries) {
    e.value = -e.value;
    trip.push_back(e);
  }
  return from_triplets(rows, cols, std::move(trip));
}

SparseMatrix SparseMatrix::scaled(const Scalar& s) const {
  std::vector<Entry> trip;
  for (auto e : entries) {
    e.value = e.value * s;
    trip.push_back(e);
  }
  return from_triplets(rows, cols, std::move(trip));
}

SparseMatrix SparseMatrix::transpose() const {
  std::vector<Entry> trip;
  for (auto& e : entries) trip.push_back({e.col, e.row, e.value});
  return from_triplets(cols, rows, std::move(trip));
}

bool SparseMatrix::operator==(const SparseMatrix& o) const {
  if (rows != o.rows || cols != o.cols || entries.size() != o.entries.size()) return false;
  for (size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].row != o.entries[i].row || entries[i].col != o.entries[i].col ||
        entries[i].value != o.entries[i].value)
      return false;
  }
  return true;
}

SparseMatrix SparseMatrix::hcat(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows != b.rows) throw malformed_input("hcat row mismatch");
  std::vector<Entry> trip = a.entries;
  for (auto e : b.entries) {
    e.col += a.cols;
    trip.push_back(e);
  }
  return from_triplets(a.rows, a.cols + b.cols, std::move(trip));
}

void SparseMatrix::check_well_formed(const Field& f) const {
  std::pair<std::int64_t, std::int64_t> prev{-1, -1};
  for (auto& e : entries) {
    if (e.row < 0 || e.row >= rows || e.col < 0 || e.col >= cols)
      throw malformed_input("entry out of range");
    if (e.value.is_zero()) throw malformed_input("stored zero entry");
    if (!(e.value.field() == f)) throw malformed_input("entry not in the stated field");
    auto key = std::make_pair(e.row, e.col);
    if (!(prev < key)) throw malformed_input("entries out of order or duplicated");
    prev = key;
  }
}

std::string SparseMatrix::str() const {
  std::ostringstream os;
  os << rows << "x" << cols << " {";
  for (auto& e : entries) os << " (" << e.row << "," << e.col << ")=" << e.value.str();
  os << " }";
  return os.str();
}

}  // namespace ck
