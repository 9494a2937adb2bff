#pragma once

// Descriptors of closed oriented 4-manifolds with fundamental group 1, Z or Z/n,
// recorded by the invariants that classify them up to homeomorphism.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fourdom/intforms.hpp"
#include "fourdom/laurent.hpp"
#include "fourdom/modtwo.hpp"

namespace fourdom {

/// TypeI/II/III only for even-order cyclic groups; Spin/NonSpin for odd order.
enum class W2Type { TypeI, TypeII, TypeIII, Spin, NonSpin };

/// "I", "II", "III", "spin", "nonspin".
const char* to_string(W2Type w2);
std::optional<W2Type> parse_w2(const std::string& text);
/// TypeII and Spin.
bool is_spin(W2Type w2);

struct ExtendedWitness {
  /// Base change over the Laurent ring with p* extend(b) p equal to the form.
  LambdaMatrix p;
  IntForm b;
  friend bool operator==(const ExtendedWitness&, const ExtendedWitness&) = default;
};

struct RegisteredNonExtended {
  std::string axiom_id;
  friend bool operator==(const RegisteredNonExtended&, const RegisteredNonExtended&) = default;
};

struct ExtensionUnknown {
  friend bool operator==(const ExtensionUnknown&, const ExtensionUnknown&) = default;
};

using ExtensionStatus = std::variant<ExtensionUnknown, ExtendedWitness, RegisteredNonExtended>;

struct SimplyConnected {
  IntForm form;
  int ks = 0;
  friend bool operator==(const SimplyConnected&, const SimplyConnected&) = default;
};

struct InfiniteCyclic {
  IntForm int_form;
  std::optional<HermitianLambdaForm> lambda_form;
  ExtensionStatus extension;
  int ks = 0;
  friend bool operator==(const InfiniteCyclic&, const InfiniteCyclic&) = default;
};

struct FiniteCyclic {
  int n = 2;
  IntForm form;
  W2Type w2 = W2Type::TypeII;
  int ks = 0;
  friend bool operator==(const FiniteCyclic&, const FiniteCyclic&) = default;
};

using ManifoldDescriptor = std::variant<SimplyConnected, InfiniteCyclic, FiniteCyclic>;

const IntForm& form_of(const ManifoldDescriptor& d);
int ks_of(const ManifoldDescriptor& d);
/// 1 for trivial, 0 for Z, n for Z/n.
int pi1_order(const ManifoldDescriptor& d);
std::string pi1_label(const ManifoldDescriptor& d);
bool same_pi1(const ManifoldDescriptor& a, const ManifoldDescriptor& b);

/// Hermitian forms known not to be extended from the integers, by id.
class AxiomRegistry {
 public:
  /// Contains only "A", the rank-4 Laurent matrix.
  static const AxiomRegistry& builtin();

  void add(const std::string& id, HermitianLambdaForm form);
  const HermitianLambdaForm* find(const std::string& id) const;
  const std::map<std::string, HermitianLambdaForm>& entries() const { return entries_; }

 private:
  std::map<std::string, HermitianLambdaForm> entries_;
};

struct Violation {
  std::string rule;
  std::string message;
};

std::vector<Violation> validate(const ManifoldDescriptor& d, const AxiomRegistry& axioms = AxiomRegistry::builtin());

/// Throws InvalidDescriptor listing the violated rules.
void require_valid(const ManifoldDescriptor& d, const AxiomRegistry& axioms = AxiomRegistry::builtin());

std::array<int, 5> betti(const ManifoldDescriptor& d);
int chi(const ManifoldDescriptor& d);

/// beta_2 - |signature|.
int indefinite_excess(const ManifoldDescriptor& d);

/// At most one summand may have non-trivial fundamental group.
ManifoldDescriptor connected_sum(const ManifoldDescriptor& a, const ManifoldDescriptor& b);

/// Connected sum with k copies of S2xS2.
ManifoldDescriptor stabilize(const ManifoldDescriptor& d, int k);

struct SigmaLabel {
  enum class Kind { Star, Zero, One };
  Kind kind = Kind::Zero;
  int n = 2;
  int i = 0;  // only for Kind::One

  /// "SigmaStar(3)", "Sigma0(2)", "Sigma1(2,1)".
  std::string name() const;
  FiniteCyclic descriptor() const;
  friend bool operator==(const SigmaLabel&, const SigmaLabel&) = default;
};

struct RhsEntry {
  SigmaLabel label;
  FiniteCyclic descriptor;
  /// The two type III spheres are homotopy equivalent but not homeomorphic.
  bool homotopy_equivalent_pair = false;
};

/// Rational homology spheres with fundamental group Z/n.
std::vector<RhsEntry> rhs_catalog(int n);

struct Decomposition {
  SigmaLabel sigma;
  SimplyConnected m;
};

/// X = Sigma # M. The primary decomposition comes first; type I descriptors
/// also list the two alternatives through the type III spheres.
std::vector<Decomposition> decompose(const FiniteCyclic& d);

/// Reassemble Sigma # M.
FiniteCyclic reassemble(const Decomposition& dec);

/// The Z/2-coefficient intersection form. For even n > 2 the rational
/// homology sphere block reuses the n = 2 models; without `extrapolate`
/// that case returns nullopt.
std::optional<ModTwoForm> z2_form(const FiniteCyclic& d, bool extrapolate = false);

/// Named descriptors: S4, S1xS3, S2xS2, CP2, CP2bar, E8mfd, MA1, XA, YA,
/// SigmaStar(n), Sigma0(n), Sigma1(n,i).
std::optional<ManifoldDescriptor> builtin_manifold(const std::string& name);
std::vector<std::string> builtin_manifold_names();

}  // namespace fourdom
