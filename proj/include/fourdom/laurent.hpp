#pragma once

// Integer Laurent polynomials Z[t, 1/t] and hermitian matrices over them.

#include <map>
#include <string>
#include <vector>

#include "fourdom/intforms.hpp"

namespace fourdom {

class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long long constant);  // NOLINT: integers embed as constants
  LaurentPoly(const BigInt& constant);  // NOLINT

  static LaurentPoly monomial(const BigInt& coefficient, int exponent);
  static LaurentPoly from_terms(const std::map<int, BigInt>& terms);
  /// t + 1/t
  static LaurentPoly s();

  bool is_zero() const { return coeffs_.empty(); }
  /// Lowest and highest exponents; only meaningful when non-zero.
  int low_degree() const { return low_; }
  int high_degree() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  BigInt coefficient(int exponent) const;
  std::map<int, BigInt> terms() const;

  /// t -> 1/t
  LaurentPoly conjugate() const;
  bool is_self_conjugate() const { return *this == conjugate(); }
  /// Units of the ring are exactly +-t^k.
  bool is_unit() const;
  BigInt evaluate_at_one() const;

  std::string to_string() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.coeffs_ == b.coeffs_ && (a.coeffs_.empty() || a.low_ == b.low_);
  }

 private:
  void normalize();

  int low_ = 0;
  std::vector<BigInt> coeffs_;  // coefficient of t^(low_ + k)
};

/// Exact quotient; throws InvalidArgument if `den` does not divide `num`.
LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den);

using LambdaMatrix = std::vector<std::vector<LaurentPoly>>;

LambdaMatrix identity_lambda(int n);
LambdaMatrix conjugate_transpose(const LambdaMatrix& m);
LambdaMatrix multiply(const LambdaMatrix& a, const LambdaMatrix& b);
LambdaMatrix block_sum(const LambdaMatrix& a, const LambdaMatrix& b);

/// Fraction-free Bareiss elimination over the Laurent ring, after factoring
/// the lowest power of t out of every row.
LaurentPoly determinant(const LambdaMatrix& m);

class HermitianLambdaForm {
 public:
  HermitianLambdaForm() = default;

  /// Throws NotHermitian unless entry (i,j) conjugated equals entry (j,i).
  static HermitianLambdaForm make(LambdaMatrix entries);

  int rank() const { return static_cast<int>(entries_.size()); }
  const LambdaMatrix& entries() const { return entries_; }
  const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return entries_[i][j]; }

  friend bool operator==(const HermitianLambdaForm&, const HermitianLambdaForm&) = default;

 private:
  LambdaMatrix entries_;
};

HermitianLambdaForm direct_sum(const HermitianLambdaForm& a, const HermitianLambdaForm& b);

/// The rank-4 hermitian form with entries built from s = t + 1/t that is
/// known not to be extended from the integers.
HermitianLambdaForm ht_matrix_A();

LaurentPoly determinant(const HermitianLambdaForm& m);
bool is_nonsingular(const HermitianLambdaForm& m);

/// Substitute t = 1. Throws NotUnimodularAfterAugmentation on a singular input.
IntForm augment(const HermitianLambdaForm& m);

HermitianLambdaForm extend_from_integer(const IntForm& f);

/// True iff p is invertible over the Laurent ring and p* extend(b) p == n.
/// Throws RankMismatch when the sizes disagree.
bool verify_extension_witness(const HermitianLambdaForm& n, const LambdaMatrix& p, const IntForm& b);

}  // namespace fourdom
