#pragma once

// Symmetric unimodular bilinear forms over the integers.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fourdom {

using BigInt = boost::multiprecision::cpp_int;
using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;

enum class Parity { Even, Odd };

const char* to_string(Parity parity);

/// Parity of an orthogonal sum: Even only when both summands are Even.
constexpr Parity combine(Parity a, Parity b) {
  return (a == Parity::Even && b == Parity::Even) ? Parity::Even : Parity::Odd;
}

struct FormInvariants {
  int rank = 0;
  int signature = 0;
  Parity parity = Parity::Even;

  friend bool operator==(const FormInvariants&, const FormInvariants&) = default;
};

/// Three-valued answer used wherever a question may fall outside the
/// decidable range (definite forms above the rank cap).
enum class Verdict { Yes, No, Undecided };

const char* to_string(Verdict verdict);

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

/// Inertia of a symmetric integer matrix by exact rational symmetric
/// elimination. Zero diagonals are handled by pivoting on a 2x2 hyperbolic
/// block, which contributes one positive and one negative direction.
Inertia symmetric_inertia(const IntMatrix& gram);

/// Exact determinant by fraction-free (Bareiss) elimination. The empty
/// matrix has determinant 1.
BigInt integer_determinant(const IntMatrix& gram);

class IntForm {
 public:
  /// The rank-0 form (Even by convention).
  IntForm() = default;

  /// Validates symmetry and unimodularity; throws Error otherwise.
  static IntForm make(IntMatrix gram);

  const IntMatrix& gram() const { return gram_; }
  int rank() const { return static_cast<int>(gram_.size()); }
  int signature() const { return signature_; }
  Parity parity() const { return parity_; }
  FormInvariants invariants() const { return {rank(), signature_, parity_}; }

  /// Rank 0 counts as definite.
  bool is_definite() const { return signature_ == rank() || signature_ == -rank(); }
  bool is_indefinite() const { return !is_definite(); }

  std::int64_t operator()(std::size_t i, std::size_t j) const { return gram_[i][j]; }

  /// v . w in this form.
  BigInt pair(const IntVector& v, const IntVector& w) const;

  IntForm negated() const;

  friend bool operator==(const IntForm& a, const IntForm& b) { return a.gram_ == b.gram_; }

 private:
  friend IntForm direct_sum(const IntForm& f, const IntForm& g);

  IntForm(IntMatrix gram, int signature, Parity parity)
      : gram_(std::move(gram)), signature_(signature), parity_(parity) {}

  IntMatrix gram_;
  int signature_ = 0;
  Parity parity_ = Parity::Even;
};

/// Block-diagonal sum; invariants are combined without re-elimination.
IntForm direct_sum(const IntForm& f, const IntForm& g);

namespace forms {
IntForm hyperbolic();
IntForm e8();
/// Diagonal form with `plus` entries +1 followed by `minus` entries -1.
IntForm diagonal(int plus, int minus);
/// The t = 1 augmentation of the rank-4 hermitian Laurent matrix.
IntForm ht_augmentation();
IntForm repeat(const IntForm& f, int copies);
}  // namespace forms

// -- classification -----------------------------------------------------------

struct IndefiniteOdd {
  int plus = 0;
  int minus = 0;
};

struct IndefiniteEven {
  int hyperbolic = 0;  // b
  int e8 = 0;          // c, signed
};

/// Catalog entry sign * (E8^e8 + I_ones). Rank 0 is the empty catalog entry.
struct DefiniteCatalog {
  int sign = 1;
  int e8 = 0;
  int ones = 0;

  std::string label() const;
  IntForm representative() const;

  friend bool operator==(const DefiniteCatalog&, const DefiniteCatalog&) = default;
};

struct DefiniteUnclassified {
  FormInvariants invariants;
};

using FormClass = std::variant<IndefiniteOdd, IndefiniteEven, DefiniteCatalog, DefiniteUnclassified>;

std::string describe(const FormClass& cls);

/// Largest rank for which the definite catalog is complete.
inline constexpr int kDefiniteCatalogLimit = 9;

struct FormOptions {
  /// Definite forms above this rank are not searched (Undecided).
  int definite_cap = kDefiniteCatalogLimit;
  /// Coordinate box for the bounded search inside indefinite forms.
  int box_bound = 2;
};

FormClass classify(const IntForm& f, const FormOptions& options = {});

Verdict is_isomorphic(const IntForm& f, const IntForm& g, const FormOptions& options = {});

bool exists_unimodular(int rank, int signature, Parity parity);

/// Canonical representative of an indefinite invariant triple (or of a
/// definite catalog triple with rank <= 9). Throws if no form exists.
IntForm representative(const FormInvariants& inv);

// -- embeddings and split-off -------------------------------------------------

struct EmbeddingResult {
  bool found = false;
  /// Images of the basis vectors of the embedded form, in x's coordinates.
  std::vector<IntVector> basis;
  /// Orthogonal complement of the image (unimodular since the image is).
  std::optional<IntForm> complement;
  /// False when x is indefinite and only a coordinate box was searched.
  bool exhaustive = true;
};

/// Backtracking search for an isometric copy of y inside x. For definite x
/// the search enumerates every vector of the required norms (Fincke-Pohst
/// with exact rational bounds) and is exhaustive. For indefinite x only the
/// box |coordinate| <= box_bound is searched. Among all embeddings the
/// lexicographically smallest basis (in candidate order) is returned.
/// Throws RankTooLarge when rank(x) exceeds definite_cap.
EmbeddingResult embedding_oracle(const IntForm& x, const IntForm& y, const FormOptions& options = {});

/// All vectors v of a definite form with v.v == norm, sorted lexicographically.
std::vector<IntVector> vectors_of_norm(const IntForm& x, std::int64_t norm);

/// Integer basis of the orthogonal complement of span(vectors) in x.
std::vector<IntVector> orthogonal_complement_basis(const IntForm& x, const std::vector<IntVector>& vectors);

/// Gram matrix of x restricted to the given vectors.
IntMatrix restricted_gram(const IntForm& x, const std::vector<IntVector>& vectors);

enum class SplitObstruction {
  RankDeficit,
  SignatureGap,
  SignatureParity,
  EvenContainsOdd,
  NoComplement,
  NoEmbedding,
};

const char* to_string(SplitObstruction reason);

struct SplitDecision {
  Verdict outcome = Verdict::Undecided;
  FormInvariants complement;                // meaningful when outcome == Yes
  std::optional<IntForm> complement_form;   // present when an explicit complement is known
  std::vector<IntVector> witness;           // embedding basis, when the oracle was used
  std::optional<SplitObstruction> obstruction;
  std::string detail;
};

/// Decides whether a unimodular L exists with y + L isomorphic to x.
SplitDecision split_off(const IntForm& x, const IntForm& y, const FormOptions& options = {});

}  // namespace fourdom
