#include "fourdom/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "fourdom/error.hpp"

namespace fourdom {

LaurentPoly::LaurentPoly(long long constant) : LaurentPoly(BigInt(constant)) {}

LaurentPoly::LaurentPoly(const BigInt& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

LaurentPoly LaurentPoly::monomial(const BigInt& coefficient, int exponent) {
  LaurentPoly p(coefficient);
  p.low_ = exponent;
  p.normalize();
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::map<int, BigInt>& terms) {
  LaurentPoly p;
  for (const auto& [exp, coef] : terms) p += monomial(coef, exp);
  return p;
}

LaurentPoly LaurentPoly::s() { return monomial(1, 1) + monomial(1, -1); }

void LaurentPoly::normalize() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  std::size_t tail = coeffs_.size();
  while (coeffs_[tail - 1] == 0) --tail;
  coeffs_ = std::vector<BigInt>(coeffs_.begin() + static_cast<std::ptrdiff_t>(lead),
                                coeffs_.begin() + static_cast<std::ptrdiff_t>(tail));
  low_ += static_cast<int>(lead);
}

BigInt LaurentPoly::coefficient(int exponent) const {
  if (coeffs_.empty() || exponent < low_ || exponent > high_degree()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::map<int, BigInt> LaurentPoly::terms() const {
  std::map<int, BigInt> out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) out[low_ + static_cast<int>(k)] = coeffs_[k];
  return out;
}

LaurentPoly LaurentPoly::conjugate() const {
  LaurentPoly p;
  if (coeffs_.empty()) return p;
  p.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  p.low_ = -high_degree();
  return p;
}

bool LaurentPoly::is_unit() const {
  return coeffs_.size() == 1 && (coeffs_[0] == 1 || coeffs_[0] == -1);
}

BigInt LaurentPoly::evaluate_at_one() const {
  BigInt total = 0;
  for (const auto& c : coeffs_) total += c;
  return total;
}

std::string LaurentPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = high_degree(); k >= low_; --k) {
    const BigInt c = coefficient(k);
    if (c == 0) continue;
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) os << (c < 0 ? "-" : "");
    else os << (c < 0 ? " - " : " + ");
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "t";
    if (k != 1) os << "^" << k;
  }
  return os.str();
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (other.coeffs_.empty()) return *this;
  if (coeffs_.empty()) return *this = other;
  const int lo = std::min(low_, other.low_);
  const int hi = std::max(high_degree(), other.high_degree());
  std::vector<BigInt> sum(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) sum[static_cast<std::size_t>(low_ - lo) + k] += coeffs_[k];
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k)
    sum[static_cast<std::size_t>(other.low_ - lo) + k] += other.coeffs_[k];
  coeffs_ = std::move(sum);
  low_ = lo;
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) { return *this += -other; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  if (a.coeffs_.empty() || b.coeffs_.empty()) return p;
  p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  p.low_ = a.low_ + b.low_;
  p.normalize();
  return p;
}

LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by the zero Laurent polynomial");
  if (num.is_zero()) return {};
  // Both sides become ordinary polynomials with non-zero constant term.
  std::vector<BigInt> rem;
  for (int k = num.low_degree(); k <= num.high_degree(); ++k) rem.push_back(num.coefficient(k));
  std::vector<BigInt> div;
  for (int k = den.low_degree(); k <= den.high_degree(); ++k) div.push_back(den.coefficient(k));
  if (rem.size() < div.size()) throw Error(ErrorCode::InvalidArgument, "Laurent division is not exact");

  const std::size_t qlen = rem.size() - div.size() + 1;
  std::vector<BigInt> quot(qlen, 0);
  for (std::size_t step = qlen; step-- > 0;) {
    const BigInt& top = rem[step + div.size() - 1];
    if (top == 0) continue;
    if (top % div.back() != 0) throw Error(ErrorCode::InvalidArgument, "Laurent division is not exact");
    const BigInt q = top / div.back();
    quot[step] = q;
    for (std::size_t j = 0; j < div.size(); ++j) rem[step + j] -= q * div[j];
  }
  if (std::any_of(rem.begin(), rem.end(), [](const BigInt& c) { return c != 0; }))
    throw Error(ErrorCode::InvalidArgument, "Laurent division is not exact");

  LaurentPoly out;
  for (std::size_t k = 0; k < qlen; ++k)
    if (quot[k] != 0) out += LaurentPoly::monomial(quot[k], static_cast<int>(k));
  return out * LaurentPoly::monomial(1, num.low_degree() - den.low_degree());
}

LambdaMatrix identity_lambda(int n) {
  LambdaMatrix m(n, std::vector<LaurentPoly>(n));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

LambdaMatrix conjugate_transpose(const LambdaMatrix& m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  LambdaMatrix out(cols, std::vector<LaurentPoly>(rows));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out[j][i] = m[i][j].conjugate();
  return out;
}

LambdaMatrix multiply(const LambdaMatrix& a, const LambdaMatrix& b) {
  const std::size_t n = a.size(), inner = b.size(), m = inner ? b[0].size() : 0;
  LambdaMatrix out(n, std::vector<LaurentPoly>(m));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != inner) throw Error(ErrorCode::RankMismatch, "matrix dimensions do not agree");
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

LambdaMatrix block_sum(const LambdaMatrix& a, const LambdaMatrix& b) {
  const std::size_t p = a.size(), q = b.size();
  LambdaMatrix out(p + q, std::vector<LaurentPoly>(p + q));
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) out[i][j] = a[i][j];
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) out[p + i][p + j] = b[i][j];
  return out;
}

LaurentPoly determinant(const LambdaMatrix& input) {
  const std::size_t n = input.size();
  for (const auto& row : input)
    if (row.size() != n) throw Error(ErrorCode::RankMismatch, "determinant of a non-square matrix");
  if (n == 0) return 1;

  LambdaMatrix m = input;
  int shift = 0;
  for (auto& row : m) {
    int lowest = 0;
    bool any = false;
    for (const auto& e : row)
      if (!e.is_zero()) {
        lowest = any ? std::min(lowest, e.low_degree()) : e.low_degree();
        any = true;
      }
    if (!any) return {};
    const LaurentPoly unshift = LaurentPoly::monomial(1, -lowest);
    for (auto& e : row) e = e * unshift;
    shift += lowest;
  }

  int sign = 1;
  LaurentPoly previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return {};
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], previous);
      m[i][k] = LaurentPoly{};
    }
    previous = m[k][k];
  }
  return m[n - 1][n - 1] * LaurentPoly::monomial(sign, shift);
}

HermitianLambdaForm HermitianLambdaForm::make(LambdaMatrix entries) {
  const std::size_t n = entries.size();
  for (const auto& row : entries)
    if (row.size() != n) throw Error(ErrorCode::NotHermitian, "Laurent matrix is not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (entries[i][j].conjugate() != entries[j][i])
        throw Error(ErrorCode::NotHermitian, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                                 ") conjugated differs from entry (" + std::to_string(j) + "," +
                                                 std::to_string(i) + ")");
  HermitianLambdaForm f;
  f.entries_ = std::move(entries);
  return f;
}

HermitianLambdaForm direct_sum(const HermitianLambdaForm& a, const HermitianLambdaForm& b) {
  return HermitianLambdaForm::make(block_sum(a.entries(), b.entries()));
}

HermitianLambdaForm ht_matrix_A() {
  const LaurentPoly s = LaurentPoly::s();
  const LaurentPoly one = 1;
  const LaurentPoly s2 = s * s;
  return HermitianLambdaForm::make({
      {one + s + s2, s + s2, one + s, s},
      {s + s2, one + s + s2, s, one + s},
      {one + s, s, 2, 0},
      {s, one + s, 0, 2},
  });
}

LaurentPoly determinant(const HermitianLambdaForm& m) { return determinant(m.entries()); }

bool is_nonsingular(const HermitianLambdaForm& m) { return determinant(m).is_unit(); }

IntForm augment(const HermitianLambdaForm& m) {
  const int n = m.rank();
  IntMatrix g(n, IntVector(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g[i][j] = static_cast<std::int64_t>(m(i, j).evaluate_at_one());
  try {
    return IntForm::make(std::move(g));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotUnimodular)
      throw Error(ErrorCode::NotUnimodularAfterAugmentation, std::string("augmentation: ") + e.what());
    throw;
  }
}

HermitianLambdaForm extend_from_integer(const IntForm& f) {
  const int n = f.rank();
  LambdaMatrix m(n, std::vector<LaurentPoly>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = LaurentPoly(static_cast<long long>(f(i, j)));
  return HermitianLambdaForm::make(std::move(m));
}

bool verify_extension_witness(const HermitianLambdaForm& n, const LambdaMatrix& p, const IntForm& b) {
  const std::size_t r = static_cast<std::size_t>(n.rank());
  if (p.size() != r || static_cast<std::size_t>(b.rank()) != r)
    throw Error(ErrorCode::RankMismatch, "extension witness has the wrong rank");
  for (const auto& row : p)
    if (row.size() != r) throw Error(ErrorCode::RankMismatch, "extension witness is not square");
  if (!determinant(p).is_unit()) return false;
  const LambdaMatrix congruent = multiply(multiply(conjugate_transpose(p), extend_from_integer(b).entries()), p);
  return congruent == n.entries();
}

}  // namespace fourdom
