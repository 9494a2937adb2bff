#include "fourdom/domination.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

#include "fourdom/error.hpp"

namespace fourdom {

const std::vector<std::string>& rule_tags() {
  static const std::vector<std::string> tags = {
      "trivial:identity",
      "prop:dw",
      "lemma:pinch",
      "lemma:splitting",
      "lemma:splitting:z2",
      "lemma:splitting:h1",
      "lemma:spin",
      "pi1:surjection",
      "thm:euler-rigidity",
      "prop:q-star",
      "thm:ht-decomposition",
      "thm:infinite-cyclic",
      "thm:non-1dom",
      "thm:stably-1dom",
      "thm:1domn:case-a",
      "thm:1domn:case-b",
      "thm:1domn:case-c",
      "thm:1domn:case-d",
      "open-question",
      "open:pi1-z-sufficiency",
      "open:outside-classification",
      "undecided:definite-cap",
      "undecided:z2-extrapolation-off",
  };
  return tags;
}

bool is_rule_tag(const std::string& tag) {
  const auto& tags = rule_tags();
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

const char* to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Yes: return "yes";
    case Outcome::No: return "no";
    case Outcome::Unknown: return "unknown";
  }
  return "?";
}

Outcome Decision::outcome() const {
  if (std::holds_alternative<Certificate>(result)) return Outcome::Yes;
  if (std::holds_alternative<Obstruction>(result)) return Outcome::No;
  return Outcome::Unknown;
}

const std::string& Decision::tag() const {
  if (const auto* c = std::get_if<Certificate>(&result)) return c->rule;
  if (const auto* o = std::get_if<Obstruction>(&result)) return o->rule;
  return std::get<Undetermined>(result).reason;
}

namespace {

int mod2(int v) { return ((v % 2) + 2) % 2; }

std::string describe(const FormInvariants& inv) {
  std::ostringstream os;
  os << "(rank " << inv.rank << ", signature " << inv.signature << ", " << to_string(inv.parity) << ")";
  return os.str();
}

Decision yes(std::string rule, std::vector<std::string> chain, std::optional<SplitDecision> split = std::nullopt) {
  Certificate c;
  c.rule = std::move(rule);
  c.chain = std::move(chain);
  c.split = std::move(split);
  return {c};
}

Decision no(std::string rule, std::string detail, std::map<std::string, std::string> values = {}) {
  return {Obstruction{std::move(rule), std::move(detail), std::move(values)}};
}

Decision unknown(std::string reason, std::string detail) { return {Undetermined{std::move(reason), std::move(detail)}}; }

/// No or Unknown when I_y is not an orthogonal summand of I_x.
std::optional<Decision> split_gate(const IntForm& x, const IntForm& y, const SplitDecision& split) {
  if (split.outcome == Verdict::Yes) return std::nullopt;
  if (split.outcome == Verdict::Undecided)
    return unknown("undecided:definite-cap", "splitting of " + describe(x.invariants()) + " by " +
                                                 describe(y.invariants()) + " is beyond the definite rank cap");
  return no("lemma:splitting", "I_y is not an orthogonal summand of I_x: " + split.detail,
            {{"I_x", describe(x.invariants())},
             {"I_y", describe(y.invariants())},
             {"reason", split.obstruction ? to_string(*split.obstruction) : "none"}});
}

std::optional<Decision> euler_gate(const ManifoldDescriptor& x, const ManifoldDescriptor& y) {
  if (chi(x) >= chi(y)) return std::nullopt;
  return no("thm:euler-rigidity", "Euler characteristic would increase",
            {{"chi_x", std::to_string(chi(x))}, {"chi_y", std::to_string(chi(y))}});
}

IntForm stabilized(const IntForm& f) { return direct_sum(f, forms::repeat(forms::hyperbolic(), 3)); }

const char* kSplitStep = "I_x = I_y + L, so the simply connected pieces admit a degree-one map";

// Both simply connected.
Decision simply_connected_pair(const SimplyConnected& x, const SimplyConnected& y, const EngineOptions& opt) {
  auto split = split_off(x.form, y.form, opt.forms);
  if (auto gate = split_gate(x.form, y.form, split)) return *gate;
  if (auto gate = euler_gate(x, y)) return *gate;
  return yes("prop:dw", {kSplitStep}, split);
}

Decision infinite_cyclic_pair(const InfiniteCyclic& x, const InfiniteCyclic& y, const EngineOptions& opt) {
  auto split = split_off(x.int_form, y.int_form, opt.forms);
  if (auto gate = split_gate(x.int_form, y.int_form, split)) return *gate;
  if (auto gate = euler_gate(x, y)) return *gate;

  if (y.int_form.rank() == 0)
    return yes("prop:q-star", {"y has trivial intersection form and is S1xS3",
                               "x pinches onto a neighbourhood of a loop generating pi1, giving x -> S1xS3"},
               split);

  const int ex = indefinite_excess(x), ey = indefinite_excess(y);
  if (ex >= 6 && ey >= 6) {
    return yes("thm:ht-decomposition",
               {"beta2 - |signature| >= 6 for x, so x = M # S1xS3 with M simply connected",
                "likewise y = N # S1xS3",
                "I_M = I_x = I_y + L = I_N + L, so M dominates N",
                "M # S1xS3 dominates N # S1xS3 summand by summand"},
               split);
  }

  if (ex >= 6) {
    auto stable_split = split_off(x.int_form, stabilized(y.int_form), opt.forms);
    if (stable_split.outcome == Verdict::Yes) {
      return yes("thm:infinite-cyclic",
                 {"beta2 - |signature| >= 6 for x, so x = M # S1xS3 with M simply connected",
                  "y # 3(S2xS2) has beta2 - |signature| >= 6, so it is N # S1xS3 with I_N = I_y + 3H",
                  "I_M = I_N + L, so M dominates N and x dominates y # 3(S2xS2)",
                  "y # 3(S2xS2) pinches onto y"},
                 stable_split);
    }
  }

  if (x.int_form.rank() == y.int_form.rank() && std::holds_alternative<ExtendedWitness>(x.extension) &&
      std::holds_alternative<RegisteredNonExtended>(y.extension)) {
    const auto& axiom = std::get<RegisteredNonExtended>(y.extension).axiom_id;
    return no("thm:non-1dom",
              "equal beta2 makes a degree-one map an isometry of the Laurent forms on pi2, but x's form is "
              "extended from the integers and y's is the registered non-extended form '" + axiom + "'",
              {{"beta2", std::to_string(x.int_form.rank())}, {"axiom", axiom}});
  }

  const auto stable = split_off(stabilized(x.int_form), stabilized(y.int_form), opt.forms);
  return unknown("open:pi1-z-sufficiency",
                 std::string("the integral splitting holds but does not decide domination for pi1 = Z here; "
                             "stable domination: ") +
                     to_string(stable.outcome));
}

Decision finite_cyclic_pair(const FiniteCyclic& x, const FiniteCyclic& y, const EngineOptions& opt) {
  auto split = split_off(x.form, y.form, opt.forms);
  if (auto gate = split_gate(x.form, y.form, split)) return *gate;
  if (auto gate = euler_gate(x, y)) return *gate;

  if (is_spin(x.w2) && !is_spin(y.w2))
    return no("lemma:spin", "a spin manifold only dominates spin manifolds with the same pi1",
              {{"w2_x", to_string(x.w2)}, {"w2_y", to_string(y.w2)}});
  if (x.w2 == W2Type::TypeIII && y.w2 == W2Type::TypeI)
    return no("lemma:spin", "an almost spin manifold only dominates manifolds whose universal cover is spin",
              {{"w2_x", to_string(x.w2)}, {"w2_y", to_string(y.w2)}});

  const bool open_cell = x.w2 == W2Type::TypeIII && y.w2 == W2Type::TypeII;
  const bool z2_available = x.n % 2 == 1 || x.n == 2 || opt.z2_extrapolation;
  if (z2_available) {
    const auto zx = z2_form(x, true), zy = z2_form(y, true);
    const auto z2 = split_off_z2(*zx, *zy);
    if (!z2.yes)
      return no("lemma:splitting:z2", "I(y;Z/2) is not an orthogonal summand of I(x;Z/2): " + z2.reason,
                {{"z2_x", classify_z2(*zx).label()}, {"z2_y", classify_z2(*zy).label()}});
  }
  if (open_cell) {
    if (!z2_available)
      return unknown("undecided:z2-extrapolation-off",
                     "the Z/2 condition for even n > 2 needs the extrapolated sphere models");
    return unknown("open-question", "x is almost spin and y is spin; every necessary condition holds but no "
                                    "degree-one map is known");
  }

  const auto xs = decompose(x);
  const Decomposition ydec = decompose(y).front();
  Certificate c;
  c.split = split;
  c.y_decomposition = ydec;
  if (x.n % 2 == 1) {
    c.rule = "thm:1domn:case-a";
    c.x_decomposition = xs.front();
    c.chain.push_back("odd order: both sides are SigmaStar # (simply connected)");
  } else if (x.w2 == W2Type::TypeII) {
    c.rule = "thm:1domn:case-b";
    c.x_decomposition = xs.front();
    c.chain.push_back("both of type II: both sides are Sigma0 # (simply connected)");
  } else if (x.w2 == W2Type::TypeIII) {
    c.rule = "thm:1domn:case-c";
    c.x_decomposition = xs.front();
    c.chain.push_back("both of type III: the spheres " + xs.front().sigma.name() + " and " + ydec.sigma.name() +
                      " are homotopy equivalent");
  } else {
    c.rule = "thm:1domn:case-d";
    for (const auto& d : xs)
      if (d.sigma == ydec.sigma) c.x_decomposition = d;
    if (!c.x_decomposition) throw Error(ErrorCode::Internal, "no matching decomposition for a type I source");
    c.chain.push_back("x is of type I: choose the decomposition of x through " + ydec.sigma.name());
  }
  c.chain.push_back(kSplitStep);
  c.chain.push_back("the sphere summands and the simply connected summands map by degree one; combine across the "
                    "connected sum");
  return {c};
}

Decision pinch_to_simply_connected(const ManifoldDescriptor& x, const SimplyConnected& y, const EngineOptions& opt) {
  const IntForm& fx = form_of(x);
  auto split = split_off(fx, y.form, opt.forms);
  if (auto gate = split_gate(fx, y.form, split)) return *gate;
  if (const auto* fc = std::get_if<FiniteCyclic>(&x)) {
    Certificate c;
    c.rule = "lemma:pinch";
    c.split = split;
    c.x_decomposition = decompose(*fc).front();
    c.chain = {"x = " + c.x_decomposition->sigma.name() + " # M with I_M = I_x", "pinch the sphere summand: x -> M",
               kSplitStep};
    return {c};
  }
  return yes("thm:ht-decomposition",
             {"beta2 - |signature| >= 6 for x, so x = M # S1xS3 with M simply connected",
              "pinch the S1xS3 summand: x -> M", kSplitStep},
             split);
}

Decision mixed_pair(const ManifoldDescriptor& x, const ManifoldDescriptor& y, const EngineOptions& opt) {
  const int ox = pi1_order(x), oy = pi1_order(y);
  const std::map<std::string, std::string> groups = {{"pi1_x", pi1_label(x)}, {"pi1_y", pi1_label(y)}};
  if (oy != 1) {
    const bool surjects = ox == 0 || (ox > 1 && oy > 1 && ox % oy == 0);
    if (!surjects) return no("pi1:surjection", "no surjection pi1(x) -> pi1(y)", groups);
    // Degree-one maps split H_1(x) -> H_1(y), so H_1(y) is a direct summand.
    if (ox == 0) return no("lemma:splitting:h1", "a finite cyclic group is not a direct summand of Z", groups);
    if (std::gcd(oy, ox / oy) != 1)
      return no("lemma:splitting:h1",
                "Z/" + std::to_string(oy) + " is not a direct summand of Z/" + std::to_string(ox), groups);
  }
  auto split = split_off(form_of(x), form_of(y), opt.forms);
  if (auto gate = split_gate(form_of(x), form_of(y), split)) return *gate;
  return unknown("open:outside-classification",
                 "pi1 pair (" + pi1_label(x) + ", " + pi1_label(y) + ") passes the necessary checks only");
}

}  // namespace

Decision dominates(const ManifoldDescriptor& x, const ManifoldDescriptor& y, const EngineOptions& options) {
  require_valid(x, options.registry());
  require_valid(y, options.registry());
  if (x == y) return yes("trivial:identity", {"x and y are the same descriptor; the identity has degree one"});

  const int ox = pi1_order(x), oy = pi1_order(y);
  if (ox == oy) {
    if (ox == 1) return simply_connected_pair(std::get<SimplyConnected>(x), std::get<SimplyConnected>(y), options);
    if (ox == 0) return infinite_cyclic_pair(std::get<InfiniteCyclic>(x), std::get<InfiniteCyclic>(y), options);
    return finite_cyclic_pair(std::get<FiniteCyclic>(x), std::get<FiniteCyclic>(y), options);
  }
  if (oy == 1 && (ox > 1 || indefinite_excess(x) >= 6))
    return pinch_to_simply_connected(x, std::get<SimplyConnected>(y), options);
  return mixed_pair(x, y, options);
}

Decision stably_dominates(const ManifoldDescriptor& x, const ManifoldDescriptor& y, const EngineOptions& options) {
  if (!std::holds_alternative<InfiniteCyclic>(x) || !std::holds_alternative<InfiniteCyclic>(y))
    throw Error(ErrorCode::Pi1Mismatch, "stable domination is decided for pi1 = Z on both sides");
  require_valid(x, options.registry());
  require_valid(y, options.registry());

  const IntForm sx = stabilized(form_of(x)), sy = stabilized(form_of(y));
  auto split = split_off(sx, sy, options.forms);
  if (split.outcome == Verdict::No)
    return no("lemma:splitting", "I_y + 3H is not an orthogonal summand of I_x + 3H: " + split.detail,
              {{"I_x+3H", describe(sx.invariants())},
               {"I_y+3H", describe(sy.invariants())},
               {"reason", split.obstruction ? to_string(*split.obstruction) : "none"}});
  if (split.outcome == Verdict::Undecided)
    return unknown("undecided:definite-cap", "stabilized splitting undecided");

  Certificate c;
  c.rule = "thm:stably-1dom";
  c.split = split;
  c.stabilization = 3;
  c.chain = {"x* = x # 3(S2xS2) and y* = y # 3(S2xS2) keep pi1 = Z",
             "I_x* = I_y* + L",
             "beta2 - |signature| >= 6 on both, so x* = X1 # S1xS3 and y* = Y1 # S1xS3",
             "I_X1 = I_Y1 + L with X1, Y1 simply connected, so X1 dominates Y1",
             "X1 # S1xS3 dominates Y1 # S1xS3 summand by summand"};
  return {c};
}

bool recheck_certificate(const ManifoldDescriptor& x, const ManifoldDescriptor& y, const Decision& decision,
                         const EngineOptions& options) {
  const auto* c = std::get_if<Certificate>(&decision.result);
  if (!c) return true;
  if (!is_rule_tag(c->rule)) return false;
  if (c->rule == "trivial:identity") return x == y;

  if (c->split) {
    IntForm fx = form_of(x), fy = form_of(y);
    if (c->stabilization > 0) {
      fx = direct_sum(fx, forms::repeat(forms::hyperbolic(), c->stabilization));
      fy = direct_sum(fy, forms::repeat(forms::hyperbolic(), c->stabilization));
    } else if (c->rule == "thm:infinite-cyclic") {
      fy = stabilized(fy);
    }
    const auto again = split_off(fx, fy, options.forms);
    if (again.outcome != Verdict::Yes || again.complement != c->split->complement) return false;
    if (!c->split->witness.empty() && restricted_gram(fx, c->split->witness) != fy.gram()) return false;
  }

  auto same_class = [&](const FiniteCyclic& a, const ManifoldDescriptor& d) {
    const auto* b = std::get_if<FiniteCyclic>(&d);
    return b && a.n == b->n && a.w2 == b->w2 && a.ks == b->ks &&
           is_isomorphic(a.form, b->form, options.forms) == Verdict::Yes;
  };
  if (c->x_decomposition && !same_class(reassemble(*c->x_decomposition), x)) return false;
  if (c->y_decomposition && !same_class(reassemble(*c->y_decomposition), y)) return false;
  return true;
}

// -- groups -------------------------------------------------------------------

GroupDescriptor GroupDescriptor::trivial() { return {}; }

GroupDescriptor GroupDescriptor::infinite_cyclic() {
  GroupDescriptor g;
  g.kind = Kind::InfiniteCyclic;
  g.beta1 = 1;
  return g;
}

GroupDescriptor GroupDescriptor::cyclic(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "cyclic order must be at least 2");
  GroupDescriptor g;
  g.kind = Kind::FiniteCyclic;
  g.n = n;
  return g;
}

GroupDescriptor GroupDescriptor::finite_abelian(std::vector<int> factors) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] < 2) throw Error(ErrorCode::InvalidArgument, "invariant factors must be at least 2");
    if (i > 0 && factors[i] % factors[i - 1] != 0)
      throw Error(ErrorCode::InvalidArgument, "invariant factors must divide each other in order");
  }
  GroupDescriptor g;
  g.kind = Kind::FiniteAbelian;
  g.factors = std::move(factors);
  return g;
}

GroupDescriptor GroupDescriptor::with_beta1(int beta1) {
  if (beta1 < 0) throw Error(ErrorCode::InvalidArgument, "beta1 must be non-negative");
  GroupDescriptor g;
  g.kind = Kind::General;
  g.beta1 = beta1;
  return g;
}

std::string GroupDescriptor::label() const {
  switch (kind) {
    case Kind::Trivial: return "1";
    case Kind::InfiniteCyclic: return "Z";
    case Kind::FiniteCyclic: return "Zn:" + std::to_string(n);
    case Kind::FiniteAbelian: {
      std::string out = "Ab:";
      for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? "," : "") + std::to_string(factors[i]);
      return out;
    }
    case Kind::General: return "beta1:" + std::to_string(beta1);
  }
  return "?";
}

GroupDescriptor parse_group(const std::string& text) {
  auto number = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad number '" + s + "' in group '" + text + "'");
    }
  };
  try {
    if (text == "1" || text == "trivial") return GroupDescriptor::trivial();
    if (text == "Z") return GroupDescriptor::infinite_cyclic();
    if (text.rfind("Zn:", 0) == 0) return GroupDescriptor::cyclic(number(text.substr(3)));
    if (text.rfind("beta1:", 0) == 0) return GroupDescriptor::with_beta1(number(text.substr(6)));
    if (text.rfind("Ab:", 0) == 0) {
      std::vector<int> factors;
      std::stringstream ss(text.substr(3));
      std::string item;
      while (std::getline(ss, item, ',')) factors.push_back(number(item));
      return GroupDescriptor::finite_abelian(std::move(factors));
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    throw Error(ErrorCode::ParseError, e.what());
  }
  throw Error(ErrorCode::ParseError, "unrecognised group '" + text + "' (expected 1, Z, Zn:k, Ab:d1,d2,.. or beta1:k)");
}

GroupDescriptor pi1_group(const ManifoldDescriptor& d) {
  const int order = pi1_order(d);
  if (order == 1) return GroupDescriptor::trivial();
  if (order == 0) return GroupDescriptor::infinite_cyclic();
  return GroupDescriptor::cyclic(order);
}

Chi4 chi4(const GroupDescriptor& g) {
  switch (g.kind) {
    case GroupDescriptor::Kind::Trivial: return {true, 2};
    case GroupDescriptor::Kind::InfiniteCyclic: return {true, 0};
    case GroupDescriptor::Kind::FiniteCyclic: return {true, 2};
    case GroupDescriptor::Kind::FiniteAbelian: return {false, 2};
    case GroupDescriptor::Kind::General: return {false, 2 - 2 * g.beta1};
  }
  return {false, 0};
}

MinimalTarget minimal_target(const ManifoldDescriptor& x, const EngineOptions& options) {
  require_valid(x, options.registry());
  ManifoldDescriptor target;
  if (std::holds_alternative<SimplyConnected>(x)) target = SimplyConnected{};
  else if (std::holds_alternative<InfiniteCyclic>(x)) target = *builtin_manifold("S1xS3");
  else target = decompose(std::get<FiniteCyclic>(x)).front().sigma.descriptor();
  Decision decision = dominates(x, target, options);
  return {std::move(target), std::move(decision)};
}

bool rhs_realizable(const GroupDescriptor& g, int chi4_known) {
  return g.beta1 == 0 && g.kind != GroupDescriptor::Kind::InfiniteCyclic && chi4_known == 2;
}

EulerCheck euler_check(const ManifoldDescriptor& x, const ManifoldDescriptor& y) {
  if (!same_pi1(x, y))
    throw Error(ErrorCode::Pi1Mismatch, "the Euler inequality needs equal fundamental groups (" + pi1_label(x) +
                                            " vs " + pi1_label(y) + ")");
  return chi(x) >= chi(y) ? EulerCheck::Consistent : EulerCheck::Violation;
}

std::optional<std::string> rigidity(const FiniteCyclic& x, const FiniteCyclic& y, const Decision& decision) {
  if (decision.outcome() != Outcome::Yes || x.n != y.n || chi(x) != chi(y)) return std::nullopt;
  return "homotopy equivalent: a degree-one map between manifolds with pi1 = Z/" + std::to_string(x.n) +
         " and equal Euler characteristic " + std::to_string(chi(x)) + " is a homotopy equivalence";
}

// -- enumeration --------------------------------------------------------------

std::vector<FormClassEntry> form_classes(int max_rank) {
  if (max_rank < 0) throw Error(ErrorCode::InvalidArgument, "rank bound must be non-negative");
  if (max_rank > kDefiniteCatalogLimit)
    throw Error(ErrorCode::BoundTooLarge, "rank bound " + std::to_string(max_rank) + " exceeds the definite catalog limit " +
                                              std::to_string(kDefiniteCatalogLimit));
  std::vector<FormClassEntry> out;
  for (int r = 0; r <= max_rank; ++r) {
    for (int sig = -r; sig <= r; sig += 2) {
      // Even forms sort before odd ones with the same rank and signature.
      if (sig % 8 == 0 && r % 2 == 0) {
        const FormInvariants inv{r, sig, Parity::Even};
        if (std::abs(sig) < r) out.push_back({inv, 0, representative(inv)});
        else if (r == 0) out.push_back({inv, 0, IntForm{}});
        else if (r == 8) out.push_back({inv, 1, DefiniteCatalog{sig > 0 ? 1 : -1, 1, 0}.representative()});
      }
      if (r == 0) continue;
      const FormInvariants inv{r, sig, Parity::Odd};
      if (std::abs(sig) < r) {
        out.push_back({inv, 0, forms::diagonal((r + sig) / 2, (r - sig) / 2)});
      } else {
        const int sign = sig > 0 ? 1 : -1;
        out.push_back({inv, 0, DefiniteCatalog{sign, 0, r}.representative()});
        if (r >= 9) out.push_back({inv, 1, DefiniteCatalog{sign, 1, r - 8}.representative()});
      }
    }
  }
  return out;
}

std::vector<SimplyConnected> enumerate_simply_connected(int bound) {
  std::vector<SimplyConnected> out;
  for (const auto& cls : form_classes(bound)) {
    if (cls.invariants.parity == Parity::Even) {
      out.push_back({cls.form, mod2(cls.invariants.signature / 8)});
    } else {
      out.push_back({cls.form, 0});
      out.push_back({cls.form, 1});
    }
  }
  return out;
}

std::vector<StableClass> enumerate_stable_targets_Z(const InfiniteCyclic& x, const EngineOptions& options) {
  require_valid(x, options.registry());
  const int b2 = x.int_form.rank();
  if (b2 > kDefiniteCatalogLimit)
    throw Error(ErrorCode::BoundTooLarge, "beta2(x) = " + std::to_string(b2) + " exceeds the catalog limit");
  const IntForm sx = stabilized(x.int_form);
  std::vector<StableClass> out;
  for (const auto& cls : form_classes(b2)) {
    if (split_off(sx, stabilized(cls.form), options.forms).outcome != Verdict::Yes) continue;
    // Forms with equal invariants become isomorphic once stabilized.
    const bool seen = std::any_of(out.begin(), out.end(),
                                  [&](const StableClass& s) { return s.invariants == cls.invariants; });
    if (seen) continue;
    if (cls.invariants.parity == Parity::Even) {
      out.push_back({cls.invariants, mod2(cls.invariants.signature / 8), cls.form});
    } else {
      out.push_back({cls.invariants, 0, cls.form});
      out.push_back({cls.invariants, 1, cls.form});
    }
  }
  return out;
}

std::vector<TargetDecision> enumerate_targets_Zn(const FiniteCyclic& x, const EngineOptions& options) {
  require_valid(x, options.registry());
  const int b2 = x.form.rank();
  if (b2 > kDefiniteCatalogLimit)
    throw Error(ErrorCode::BoundTooLarge, "beta2(x) = " + std::to_string(b2) + " exceeds the catalog limit");
  std::vector<TargetDecision> out;
  auto add = [&](const IntForm& f, W2Type w2, int ks) {
    FiniteCyclic t{x.n, f, w2, ks};
    out.push_back({t, dominates(x, t, options)});
  };
  for (const auto& cls : form_classes(b2)) {
    const bool even = cls.invariants.parity == Parity::Even;
    const int forced = mod2(cls.invariants.signature / 8);
    if (x.n % 2 == 0) {
      if (even) {
        add(cls.form, W2Type::TypeII, forced);
        add(cls.form, W2Type::TypeIII, 0);
        add(cls.form, W2Type::TypeIII, 1);
      } else {
        add(cls.form, W2Type::TypeI, 0);
        add(cls.form, W2Type::TypeI, 1);
      }
    } else if (even) {
      add(cls.form, W2Type::Spin, forced);
    } else {
      add(cls.form, W2Type::NonSpin, 0);
      add(cls.form, W2Type::NonSpin, 1);
    }
  }
  return out;
}

InfiniteCyclic universal_dominator_Z(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "bound must be non-negative");
  if (n + 6 > kDefiniteCatalogLimit)
    throw Error(ErrorCode::BoundTooLarge, "bound " + std::to_string(n) + " + 6 exceeds the catalog limit " +
                                              std::to_string(kDefiniteCatalogLimit));
  InfiniteCyclic y;
  for (const auto& m : enumerate_simply_connected(n + 6)) {
    y.int_form = direct_sum(y.int_form, m.form);
    y.ks = mod2(y.ks + m.ks);
  }
  return y;
}

FiniteAbelianBound finite_abelian_targets_bound(const ManifoldDescriptor& x, const GroupDescriptor& g) {
  const int torsion = std::holds_alternative<FiniteCyclic>(x) ? std::get<FiniteCyclic>(x).n : 1;
  int order = 0;
  switch (g.kind) {
    case GroupDescriptor::Kind::Trivial: order = 1; break;
    case GroupDescriptor::Kind::FiniteCyclic: order = g.n; break;
    case GroupDescriptor::Kind::FiniteAbelian:
      if (g.factors.size() > 1) return {false, 0, 0, g.label() + " is not cyclic, but Tor H1(x) is"};
      order = g.factors.empty() ? 1 : g.factors.front();
      break;
    default:
      return {false, 0, 0, g.label() + " is not finite"};
  }
  if (torsion % order != 0)
    return {false, 0, 0,
            g.label() + " does not embed in Tor H1(x) of order " + std::to_string(torsion)};
  return {true, 2, 2 + form_of(x).rank(), ""};
}

}  // namespace fourdom
