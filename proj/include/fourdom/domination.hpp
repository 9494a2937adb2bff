#pragma once

// Degree-one map decisions between descriptors, stable domination, minimal
// Euler characteristics and finiteness enumerators.

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fourdom/intforms.hpp"
#include "fourdom/manifolds.hpp"

namespace fourdom {

/// Every rule tag a Decision may carry.
const std::vector<std::string>& rule_tags();
bool is_rule_tag(const std::string& tag);

struct Certificate {
  std::string rule;
  std::vector<std::string> chain;
  /// Splitting of I_x by I_y (or of the stabilized forms) the rule relies on.
  std::optional<SplitDecision> split;
  std::optional<Decomposition> x_decomposition;
  std::optional<Decomposition> y_decomposition;
  int stabilization = 0;
};

struct Obstruction {
  std::string rule;
  std::string detail;
  std::map<std::string, std::string> values;
};

struct Undetermined {
  std::string reason;
  std::string detail;
};

enum class Outcome { Yes, No, Unknown };

/// "yes", "no", "unknown".
const char* to_string(Outcome outcome);

struct Decision {
  std::variant<Certificate, Obstruction, Undetermined> result;

  Outcome outcome() const;
  /// Rule tag of a certificate or obstruction, reason tag of an unknown.
  const std::string& tag() const;
};

struct EngineOptions {
  FormOptions forms;
  /// Use the n = 2 Z/2 models for even n > 2.
  bool z2_extrapolation = false;
  /// nullptr means AxiomRegistry::builtin().
  const AxiomRegistry* axioms = nullptr;

  const AxiomRegistry& registry() const { return axioms ? *axioms : AxiomRegistry::builtin(); }
};

Decision dominates(const ManifoldDescriptor& x, const ManifoldDescriptor& y, const EngineOptions& options = {});

/// Both arguments must have fundamental group Z (Pi1Mismatch otherwise).
Decision stably_dominates(const ManifoldDescriptor& x, const ManifoldDescriptor& y,
                          const EngineOptions& options = {});

/// Re-runs the module operations a Yes certificate cites. Non-Yes decisions
/// recheck trivially.
bool recheck_certificate(const ManifoldDescriptor& x, const ManifoldDescriptor& y, const Decision& decision,
                         const EngineOptions& options = {});

// -- groups and Euler characteristics ----------------------------------------

struct GroupDescriptor {
  enum class Kind { Trivial, InfiniteCyclic, FiniteCyclic, FiniteAbelian, General };
  Kind kind = Kind::Trivial;
  /// Order for FiniteCyclic.
  int n = 0;
  /// Invariant factors d1 | d2 | ... for FiniteAbelian.
  std::vector<int> factors;
  /// Rank of the free part of the abelianization.
  int beta1 = 0;

  static GroupDescriptor trivial();
  static GroupDescriptor infinite_cyclic();
  static GroupDescriptor cyclic(int n);
  static GroupDescriptor finite_abelian(std::vector<int> factors);
  /// A group known only through its first Betti number.
  static GroupDescriptor with_beta1(int beta1);

  /// "1", "Z", "Zn:7", "Ab:2,4", "beta1:2".
  std::string label() const;
};

/// Parses the label syntax above. Throws ParseError.
GroupDescriptor parse_group(const std::string& text);

GroupDescriptor pi1_group(const ManifoldDescriptor& d);

struct Chi4 {
  bool exact = true;
  int value = 0;
};

Chi4 chi4(const GroupDescriptor& g);

struct MinimalTarget {
  ManifoldDescriptor target;
  Decision decision;
};

MinimalTarget minimal_target(const ManifoldDescriptor& x, const EngineOptions& options = {});

bool rhs_realizable(const GroupDescriptor& g, int chi4_known);

enum class EulerCheck { Consistent, Violation };

/// Requires equal fundamental groups.
EulerCheck euler_check(const ManifoldDescriptor& x, const ManifoldDescriptor& y);

/// Report when a Yes decision between equal-chi descriptors forces a
/// homotopy equivalence.
std::optional<std::string> rigidity(const FiniteCyclic& x, const FiniteCyclic& y, const Decision& decision);

// -- enumeration ---------------------------------------------------------------

/// One isomorphism class of unimodular forms.
struct FormClassEntry {
  FormInvariants invariants;
  /// Number of E8 summands for definite catalog forms, 0 otherwise.
  int e8_blocks = 0;
  IntForm form;
};

/// All classes of rank <= max_rank (max_rank <= 9), ordered by rank,
/// signature, parity (even first) and E8 count.
std::vector<FormClassEntry> form_classes(int max_rank);

/// Homeomorphism classes with beta_2 <= bound (cumulative).
std::vector<SimplyConnected> enumerate_simply_connected(int bound);

struct StableClass {
  FormInvariants invariants;
  int ks = 0;
  IntForm form;
};

/// Stable classes of pi1 = Z targets stably dominated by x.
std::vector<StableClass> enumerate_stable_targets_Z(const InfiniteCyclic& x, const EngineOptions& options = {});

struct TargetDecision {
  FiniteCyclic target;
  Decision decision;
};

/// All valid Z/n descriptors with beta_2 <= beta_2(x), each with dominates(x, .).
std::vector<TargetDecision> enumerate_targets_Zn(const FiniteCyclic& x, const EngineOptions& options = {});

/// (connected sum of all simply connected classes with beta_2 <= n + 6) # S1xS3.
InfiniteCyclic universal_dominator_Z(int n);

struct FiniteAbelianBound {
  bool possible = false;
  int chi_min = 0;
  int chi_max = 0;
  std::string reason;
};

FiniteAbelianBound finite_abelian_targets_bound(const ManifoldDescriptor& x, const GroupDescriptor& g);

}  // namespace fourdom
