#pragma once

// Nondegenerate symmetric bilinear forms over GF(2).

#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "fourdom/intforms.hpp"

namespace fourdom {

using BitVector = boost::dynamic_bitset<>;

class ModTwoForm {
 public:
  ModTwoForm() = default;

  /// Entries are reduced mod 2. Throws NotSymmetric or Degenerate.
  static ModTwoForm make(const std::vector<std::vector<int>>& entries);
  static ModTwoForm from_rows(std::vector<BitVector> rows);

  int rank() const { return static_cast<int>(rows_.size()); }
  bool alternating() const { return alternating_; }
  bool entry(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  const std::vector<BitVector>& rows() const { return rows_; }

  /// x . y over GF(2).
  bool pair(const BitVector& x, const BitVector& y) const;

  std::vector<std::vector<int>> to_matrix() const;

  friend bool operator==(const ModTwoForm& a, const ModTwoForm& b) { return a.rows_ == b.rows_; }

 private:
  std::vector<BitVector> rows_;
  bool alternating_ = true;
};

/// Rank over GF(2) of a square bit matrix.
int gf2_rank(std::vector<BitVector> rows);

ModTwoForm mod2_reduction(const IntForm& f);

/// The unique c with c.x = x.x for all x (Wu class of the form).
BitVector characteristic_element(const ModTwoForm& f);

struct Z2Class {
  bool alternating = false;
  /// Plane count for alternating forms, rank otherwise.
  int count = 0;

  std::string label() const;
  friend bool operator==(const Z2Class&, const Z2Class&) = default;
};

Z2Class classify_z2(const ModTwoForm& f);

struct Z2Split {
  bool yes = false;
  std::string reason;
};

Z2Split split_off_z2(const ModTwoForm& x, const ModTwoForm& y);

ModTwoForm direct_sum_z2(const ModTwoForm& f, const ModTwoForm& g);

namespace forms {
ModTwoForm hyperbolic_z2();
ModTwoForm identity_z2(int n);
}  // namespace forms

}  // namespace fourdom
