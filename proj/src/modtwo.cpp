#include "fourdom/modtwo.hpp"

#include <utility>

#include "fourdom/error.hpp"

namespace fourdom {

int gf2_rank(std::vector<BitVector> rows) {
  int rank = 0;
  const std::size_t n = rows.empty() ? 0 : rows.front().size();
  for (std::size_t col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot][col]) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != static_cast<std::size_t>(rank) && rows[i][col]) rows[i] ^= rows[rank];
    ++rank;
  }
  return rank;
}

ModTwoForm ModTwoForm::from_rows(std::vector<BitVector> rows) {
  const std::size_t n = rows.size();
  for (const auto& row : rows)
    if (row.size() != n) throw Error(ErrorCode::NotSymmetric, "GF(2) Gram matrix is not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rows[i][j] != rows[j][i]) throw Error(ErrorCode::NotSymmetric, "GF(2) Gram matrix is not symmetric");
  if (gf2_rank(rows) != static_cast<int>(n)) throw Error(ErrorCode::Degenerate, "GF(2) form is degenerate");

  ModTwoForm f;
  f.rows_ = std::move(rows);
  for (std::size_t i = 0; i < n; ++i)
    if (f.rows_[i][i]) f.alternating_ = false;
  return f;
}

ModTwoForm ModTwoForm::make(const std::vector<std::vector<int>>& entries) {
  std::vector<BitVector> rows;
  rows.reserve(entries.size());
  for (const auto& row : entries) {
    BitVector bits(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) bits[j] = (row[j] % 2) != 0;
    rows.push_back(std::move(bits));
  }
  return from_rows(std::move(rows));
}

bool ModTwoForm::pair(const BitVector& x, const BitVector& y) const {
  bool acc = false;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (x[i]) acc ^= ((rows_[i] & y).count() % 2) != 0;
  return acc;
}

std::vector<std::vector<int>> ModTwoForm::to_matrix() const {
  std::vector<std::vector<int>> out(rows_.size(), std::vector<int>(rows_.size(), 0));
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < rows_.size(); ++j) out[i][j] = rows_[i][j] ? 1 : 0;
  return out;
}

ModTwoForm mod2_reduction(const IntForm& f) {
  std::vector<BitVector> rows;
  const int n = f.rank();
  for (int i = 0; i < n; ++i) {
    BitVector bits(n);
    for (int j = 0; j < n; ++j) bits[j] = (f(i, j) % 2) != 0;
    rows.push_back(std::move(bits));
  }
  return ModTwoForm::from_rows(std::move(rows));
}

BitVector characteristic_element(const ModTwoForm& f) {
  // Solve gram * c = diag(gram) by Gauss-Jordan on the augmented matrix.
  const std::size_t n = static_cast<std::size_t>(f.rank());
  std::vector<BitVector> aug;
  for (std::size_t i = 0; i < n; ++i) {
    BitVector row(n + 1);
    for (std::size_t j = 0; j < n; ++j) row[j] = f.entry(i, j);
    row[n] = f.entry(i, i);
    aug.push_back(std::move(row));
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && !aug[pivot][col]) ++pivot;
    if (pivot == n) throw Error(ErrorCode::Degenerate, "characteristic element is not unique");
    std::swap(aug[col], aug[pivot]);
    for (std::size_t i = 0; i < n; ++i)
      if (i != col && aug[i][col]) aug[i] ^= aug[col];
  }
  BitVector c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = aug[i][n];
  return c;
}

std::string Z2Class::label() const {
  return alternating ? "alternating(" + std::to_string(count) + " planes)"
                     : "non-alternating(rank " + std::to_string(count) + ")";
}

Z2Class classify_z2(const ModTwoForm& f) {
  if (f.alternating()) return {true, f.rank() / 2};
  return {false, f.rank()};
}

Z2Split split_off_z2(const ModTwoForm& x, const ModTwoForm& y) {
  const int r = x.rank() - y.rank();
  if (r < 0) return {false, "rank difference " + std::to_string(r) + " is negative"};
  if (x.alternating()) {
    if (!y.alternating()) return {false, "an alternating form has no non-alternating summand"};
    if (r % 2 != 0) return {false, "alternating complement would have odd rank"};
    return {true, ""};
  }
  if (r >= 1) return {true, ""};
  if (!y.alternating()) return {true, ""};
  return {false, "rank difference 0 and the classes differ (alternating vs non-alternating)"};
}

ModTwoForm direct_sum_z2(const ModTwoForm& f, const ModTwoForm& g) {
  const std::size_t a = f.rank(), b = g.rank();
  std::vector<BitVector> rows;
  for (std::size_t i = 0; i < a + b; ++i) {
    BitVector row(a + b);
    for (std::size_t j = 0; j < a + b; ++j) {
      if (i < a && j < a) row[j] = f.entry(i, j);
      else if (i >= a && j >= a) row[j] = g.entry(i - a, j - a);
    }
    rows.push_back(std::move(row));
  }
  return ModTwoForm::from_rows(std::move(rows));
}

namespace forms {

ModTwoForm hyperbolic_z2() { return ModTwoForm::make({{0, 1}, {1, 0}}); }

ModTwoForm identity_z2(int n) {
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return ModTwoForm::make(m);
}

}  // namespace forms

}  // namespace fourdom
