#include "cobarkit/linalg.hpp"

#include <map>

namespace ck {

namespace {

struct Work {
  std::vector<std::map<std::int64_t, Scalar>> rows;
  std::vector<std::int64_t> col_count;
  std::vector<bool> row_pivoted, col_pivoted;

  explicit Work(const SparseMatrix& m) {
    rows.resize(m.rows);
    col_count.assign(m.cols, 0);
    row_pivoted.assign(m.rows, false);
    col_pivoted.assign(m.cols, false);
    for (auto& e : m.entries) {
      rows[e.row].emplace(e.col, e.value);
      ++col_count[e.col];
    }
  }

  void erase_entry(std::int64_t r, std::int64_t c) {
    rows[r].erase(c);
    --col_count[c];
  }

  void set_entry(std::int64_t r, std::int64_t c, const Scalar& v) {
    auto it = rows[r].find(c);
    if (it == rows[r].end()) {
      if (!v.is_zero()) {
        rows[r].emplace(c, v);
        ++col_count[c];
      }
    } else if (v.is_zero()) {
      erase_entry(r, c);
    } else {
      it->second = v;
    }
  }

  // Markowitz pivot among active rows/cols; (-1,-1) when the active part is zero.
  std::pair<std::int64_t, std::int64_t> pick_pivot(std::int64_t col_limit) const {
    std::int64_t best_r = -1, best_c = -1;
    __int128 best_cost = 0;
    for (std::int64_t r = 0; r < static_cast<std::int64_t>(rows.size()); ++r) {
      if (row_pivoted[r]) continue;
      std::int64_t active_in_row = 0;
      for (auto& [c, v] : rows[r])
        if (!col_pivoted[c] && c < col_limit) ++active_in_row;
      if (active_in_row == 0) continue;
      for (auto& [c, v] : rows[r]) {
        if (col_pivoted[c] || c >= col_limit) continue;
        __int128 cost = static_cast<__int128>(active_in_row - 1) * (col_count[c] - 1);
        if (best_r < 0 || cost < best_cost ||
            (cost == best_cost && (r < best_r || (r == best_r && c < best_c)))) {
          best_r = r;
          best_c = c;
          best_cost = cost;
        }
      }
    }
    return {best_r, best_c};
  }
};

}  // namespace

RrefResult rref(const SparseMatrix& m, const Field& f, std::int64_t pivot_col_limit) {
  m.check_well_formed(f);
  Work w(m);
  RrefResult out;
  const std::int64_t col_limit = pivot_col_limit < 0 ? m.cols : pivot_col_limit;
  for (;;) {
    auto [pr, pc] = w.pick_pivot(col_limit);
    if (pr < 0) break;
    // normalize the pivot row
    Scalar pv = w.rows[pr].at(pc);
    if (!pv.is_one()) {
      Scalar inv = pv.inv();
      for (auto& [c, v] : w.rows[pr]) v = v * inv;
    }
    // eliminate the pivot column everywhere else (Gauss-Jordan)
    for (std::int64_t r = 0; r < static_cast<std::int64_t>(w.rows.size()); ++r) {
      if (r == pr) continue;
      auto it = w.rows[r].find(pc);
      if (it == w.rows[r].end()) continue;
      Scalar factor = it->second;
      // row_r -= factor * row_pr
      std::vector<std::pair<std::int64_t, Scalar>> updates(w.rows[pr].begin(), w.rows[pr].end());
      for (auto& [c, v] : updates) {
        Scalar cur = Scalar::zero(f);
        auto jt = w.rows[r].find(c);
        if (jt != w.rows[r].end()) cur = jt->second;
        w.set_entry(r, c, cur - factor * v);
      }
    }
    w.row_pivoted[pr] = true;
    w.col_pivoted[pc] = true;
    for (auto& [c, v] : w.rows[pr]) --w.col_count[c];  // counts track active rows only
    out.pivots.emplace_back(pr, pc);
  }
  std::vector<SparseMatrix::Entry> trip;
  for (std::int64_t r = 0; r < static_cast<std::int64_t>(w.rows.size()); ++r)
    for (auto& [c, v] : w.rows[r]) trip.push_back({r, c, v});
  out.reduced = SparseMatrix::from_triplets(m.rows, m.cols, std::move(trip));
  return out;
}

std::int64_t rank(const SparseMatrix& m, const Field& f) { return rref(m, f).rank(); }

SparseMatrix kernel_basis(const SparseMatrix& m, const Field& f) {
  RrefResult r = rref(m, f);
  std::vector<std::int64_t> pivot_row_of_col(m.cols, -1);
  for (auto& [pr, pc] : r.pivots) pivot_row_of_col[pc] = pr;
  std::vector<std::int64_t> free_cols;
  for (std::int64_t c = 0; c < m.cols; ++c)
    if (pivot_row_of_col[c] < 0) free_cols.push_back(c);

  // row entries of the reduced form, for reading off -coefficients
  std::vector<std::map<std::int64_t, Scalar>> rows(m.rows);
  for (auto& e : r.reduced.entries) rows[e.row].emplace(e.col, e.value);

  std::vector<SparseMatrix::Entry> trip;
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::int64_t fc = free_cols[k];
    trip.push_back({fc, static_cast<std::int64_t>(k), Scalar::one(f)});
    for (auto& [pr, pc] : r.pivots) {
      auto it = rows[pr].find(fc);
      if (it != rows[pr].end()) trip.push_back({pc, static_cast<std::int64_t>(k), -it->second});
    }
  }
  return SparseMatrix::from_triplets(m.cols, static_cast<std::int64_t>(free_cols.size()),
                                     std::move(trip));
}

bool cols_in_span(const SparseMatrix& a, const SparseMatrix& b, const Field& f) {
  if (b.is_zero()) return true;
  return rank(a, f) == rank(SparseMatrix::hcat(a, b), f);
}

std::optional<std::vector<Scalar>> solve(const SparseMatrix& a, const std::vector<Scalar>& b,
                                         const Field& f) {
  if (static_cast<std::int64_t>(b.size()) != a.rows) throw malformed_input("solve shape mismatch");
  std::vector<SparseMatrix::Entry> bt;
  for (std::int64_t i = 0; i < a.rows; ++i)
    if (!b[i].is_zero()) bt.push_back({i, 0, b[i]});
  SparseMatrix bm = SparseMatrix::from_triplets(a.rows, 1, std::move(bt));
  SparseMatrix aug = SparseMatrix::hcat(a, bm);
  RrefResult r = rref(aug, f, a.cols);  // pivots restricted to a's columns
  // after elimination a row with no pivot is zero on a's columns, so a
  // surviving entry in the appended column reads 0 = nonzero: inconsistent
  std::vector<bool> pivoted(aug.rows, false);
  for (auto& [pr, pc] : r.pivots) pivoted[pr] = true;
  for (auto& e : r.reduced.entries)
    if (e.col == a.cols && !pivoted[e.row]) return std::nullopt;
  std::vector<Scalar> x(a.cols, Scalar::zero(f));
  std::vector<std::map<std::int64_t, Scalar>> rows(aug.rows);
  for (auto& e : r.reduced.entries) rows[e.row].emplace(e.col, e.value);
  for (auto& [pr, pc] : r.pivots) {
    auto it = rows[pr].find(a.cols);
    x[pc] = it == rows[pr].end() ? Scalar::zero(f) : it->second;
  }
  return x;
}

}  // namespace ck
