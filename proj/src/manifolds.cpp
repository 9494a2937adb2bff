#include "fourdom/manifolds.hpp"

#include <cstdlib>
#include <regex>

#include "fourdom/error.hpp"

namespace fourdom {

namespace {

int mod2(int v) { return ((v % 2) + 2) % 2; }

/// ks forced on spin manifolds: signature / 8 mod 2.
int spin_ks(const IntForm& f) { return mod2(f.signature() / 8); }

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

}  // namespace

const char* to_string(W2Type w2) {
  switch (w2) {
    case W2Type::TypeI: return "I";
    case W2Type::TypeII: return "II";
    case W2Type::TypeIII: return "III";
    case W2Type::Spin: return "spin";
    case W2Type::NonSpin: return "nonspin";
  }
  return "?";
}

std::optional<W2Type> parse_w2(const std::string& text) {
  for (W2Type w : {W2Type::TypeI, W2Type::TypeII, W2Type::TypeIII, W2Type::Spin, W2Type::NonSpin})
    if (text == to_string(w)) return w;
  return std::nullopt;
}

bool is_spin(W2Type w2) { return w2 == W2Type::TypeII || w2 == W2Type::Spin; }

const IntForm& form_of(const ManifoldDescriptor& d) {
  return std::visit(Overloaded{[](const SimplyConnected& s) -> const IntForm& { return s.form; },
                               [](const InfiniteCyclic& s) -> const IntForm& { return s.int_form; },
                               [](const FiniteCyclic& s) -> const IntForm& { return s.form; }},
                    d);
}

int ks_of(const ManifoldDescriptor& d) {
  return std::visit([](const auto& s) { return s.ks; }, d);
}

int pi1_order(const ManifoldDescriptor& d) {
  if (std::holds_alternative<SimplyConnected>(d)) return 1;
  if (std::holds_alternative<InfiniteCyclic>(d)) return 0;
  return std::get<FiniteCyclic>(d).n;
}

std::string pi1_label(const ManifoldDescriptor& d) {
  const int order = pi1_order(d);
  if (order == 1) return "1";
  if (order == 0) return "Z";
  return "Z/" + std::to_string(order);
}

bool same_pi1(const ManifoldDescriptor& a, const ManifoldDescriptor& b) { return pi1_order(a) == pi1_order(b); }

// -- axioms -------------------------------------------------------------------

const AxiomRegistry& AxiomRegistry::builtin() {
  static const AxiomRegistry registry = [] {
    AxiomRegistry r;
    r.add("A", ht_matrix_A());
    return r;
  }();
  return registry;
}

void AxiomRegistry::add(const std::string& id, HermitianLambdaForm form) { entries_[id] = std::move(form); }

const HermitianLambdaForm* AxiomRegistry::find(const std::string& id) const {
  auto it = entries_.find(id);
  return it == entries_.end() ? nullptr : &it->second;
}

// -- validation ---------------------------------------------------------------

namespace {

void check_ks(int ks, std::vector<Violation>& out) {
  if (ks != 0 && ks != 1) out.push_back({"ks-range", "ks must be 0 or 1, got " + std::to_string(ks)});
}

void check(const SimplyConnected& d, const AxiomRegistry&, std::vector<Violation>& out) {
  check_ks(d.ks, out);
  if (d.form.parity() == Parity::Even && d.ks != spin_ks(d.form))
    out.push_back({"even-form-ks", "an even form forces ks = signature/8 mod 2 = " + std::to_string(spin_ks(d.form))});
}

void check(const InfiniteCyclic& d, const AxiomRegistry& axioms, std::vector<Violation>& out) {
  check_ks(d.ks, out);
  // H_1 = Z has no 2-torsion, so an even form means spin.
  if (d.int_form.parity() == Parity::Even && d.ks != spin_ks(d.int_form))
    out.push_back({"even-form-ks", "an even form forces ks = signature/8 mod 2 = " + std::to_string(spin_ks(d.int_form))});

  if (d.lambda_form) {
    const auto& lambda = *d.lambda_form;
    if (lambda.rank() != d.int_form.rank()) {
      out.push_back({"lambda-rank", "Laurent form rank " + std::to_string(lambda.rank()) +
                                        " differs from integer form rank " + std::to_string(d.int_form.rank())});
    } else if (!is_nonsingular(lambda)) {
      out.push_back({"lambda-nonsingular", "Laurent form determinant " + determinant(lambda).to_string() +
                                               " is not a unit"});
    } else {
      try {
        if (augment(lambda).invariants() != d.int_form.invariants())
          out.push_back({"lambda-augmentation", "t = 1 augmentation has different rank, signature or parity"});
      } catch (const Error& e) {
        out.push_back({"lambda-augmentation", e.what()});
      }
    }
  }

  if (const auto* w = std::get_if<ExtendedWitness>(&d.extension)) {
    if (!d.lambda_form) {
      out.push_back({"witness-without-lambda", "an extension witness needs a Laurent form"});
    } else {
      bool ok = false;
      try {
        ok = verify_extension_witness(*d.lambda_form, w->p, w->b);
      } catch (const Error&) {
        ok = false;
      }
      if (!ok) out.push_back({"witness-invalid", "p* extend(b) p does not reproduce the Laurent form"});
    }
  } else if (const auto* a = std::get_if<RegisteredNonExtended>(&d.extension)) {
    const HermitianLambdaForm* registered = axioms.find(a->axiom_id);
    if (!registered) {
      out.push_back({"axiom-unknown", "no registered axiom '" + a->axiom_id + "'"});
    } else if (!d.lambda_form || !(*d.lambda_form == *registered)) {
      out.push_back({"axiom-mismatch", "Laurent form differs from registered axiom '" + a->axiom_id + "'"});
    }
    // With beta_2 - |sigma| >= 6 the manifold splits off S1xS3 and its form is extended.
    if (d.int_form.rank() - std::abs(d.int_form.signature()) >= 6)
      out.push_back({"non-extended-in-stable-range",
                     "beta2 - |signature| >= 6 forces a form extended from the integers"});
  }
}

void check(const FiniteCyclic& d, const AxiomRegistry&, std::vector<Violation>& out) {
  check_ks(d.ks, out);
  if (d.n < 2) {
    out.push_back({"order", "cyclic order must be at least 2"});
    return;
  }
  const bool even_form = d.form.parity() == Parity::Even;
  if (d.n % 2 == 0) {
    if (d.w2 == W2Type::Spin || d.w2 == W2Type::NonSpin) {
      out.push_back({"w2-domain", "even order needs w2-type I, II or III"});
      return;
    }
    const bool spin_type = d.w2 == W2Type::TypeII || d.w2 == W2Type::TypeIII;
    if (even_form != spin_type)
      out.push_back({"w2-parity", even_form ? "an even form needs w2-type II or III"
                                            : "an odd form needs w2-type I"});
    if (d.w2 == W2Type::TypeII && d.ks != spin_ks(d.form))
      out.push_back({"type-ii-ks", "w2-type II forces ks = signature/8 mod 2 = " + std::to_string(spin_ks(d.form))});
  } else {
    if (d.w2 != W2Type::Spin && d.w2 != W2Type::NonSpin) {
      out.push_back({"w2-domain", "odd order needs w2 spin or nonspin"});
      return;
    }
    if (even_form != (d.w2 == W2Type::Spin))
      out.push_back({"spin-parity", "odd order: spin exactly when the form is even"});
    if (d.w2 == W2Type::Spin && d.ks != spin_ks(d.form))
      out.push_back({"spin-ks", "spin forces ks = signature/8 mod 2 = " + std::to_string(spin_ks(d.form))});
  }
}

}  // namespace

std::vector<Violation> validate(const ManifoldDescriptor& d, const AxiomRegistry& axioms) {
  std::vector<Violation> out;
  std::visit([&](const auto& s) { check(s, axioms, out); }, d);
  return out;
}

void require_valid(const ManifoldDescriptor& d, const AxiomRegistry& axioms) {
  const auto violations = validate(d, axioms);
  if (violations.empty()) return;
  std::string msg = "invalid descriptor:";
  for (const auto& v : violations) msg += " [" + v.rule + "] " + v.message + ";";
  throw Error(ErrorCode::InvalidDescriptor, msg);
}

std::array<int, 5> betti(const ManifoldDescriptor& d) {
  const int b1 = std::holds_alternative<InfiniteCyclic>(d) ? 1 : 0;
  return {1, b1, form_of(d).rank(), b1, 1};
}

int chi(const ManifoldDescriptor& d) {
  const auto b = betti(d);
  return 2 - 2 * b[1] + b[2];
}

int indefinite_excess(const ManifoldDescriptor& d) {
  const IntForm& f = form_of(d);
  return f.rank() - std::abs(f.signature());
}

// -- connected sums -----------------------------------------------------------

namespace {

/// nontrivial # simple, with the summand order recorded by `simple_first`.
ManifoldDescriptor sum_with_simple(const ManifoldDescriptor& other, const SimplyConnected& s, bool simple_first) {
  auto join = [&](const IntForm& f) { return simple_first ? direct_sum(s.form, f) : direct_sum(f, s.form); };
  const int ks = mod2(ks_of(other) + s.ks);

  if (const auto* sc = std::get_if<SimplyConnected>(&other)) return SimplyConnected{join(sc->form), ks};

  if (const auto* ic = std::get_if<InfiniteCyclic>(&other)) {
    InfiniteCyclic out;
    out.int_form = join(ic->int_form);
    out.ks = ks;
    if (s.form.rank() == 0) {
      out.lambda_form = ic->lambda_form;
      out.extension = ic->extension;
      return out;
    }
    if (ic->lambda_form) {
      const auto ext = extend_from_integer(s.form);
      out.lambda_form = simple_first ? direct_sum(ext, *ic->lambda_form) : direct_sum(*ic->lambda_form, ext);
    }
    if (const auto* w = std::get_if<ExtendedWitness>(&ic->extension)) {
      const LambdaMatrix id = identity_lambda(s.form.rank());
      out.extension = ExtendedWitness{simple_first ? block_sum(id, w->p) : block_sum(w->p, id), join(w->b)};
    } else {
      out.extension = ExtensionUnknown{};
    }
    return out;
  }

  const auto& fc = std::get<FiniteCyclic>(other);
  FiniteCyclic out{fc.n, join(fc.form), fc.w2, ks};
  const bool simple_even = s.form.parity() == Parity::Even;
  if (fc.n % 2 == 0) {
    if (!simple_even) out.w2 = W2Type::TypeI;
  } else {
    out.w2 = (fc.w2 == W2Type::Spin && simple_even) ? W2Type::Spin : W2Type::NonSpin;
  }
  return out;
}

}  // namespace

ManifoldDescriptor connected_sum(const ManifoldDescriptor& a, const ManifoldDescriptor& b) {
  if (const auto* sb = std::get_if<SimplyConnected>(&b)) return sum_with_simple(a, *sb, false);
  if (const auto* sa = std::get_if<SimplyConnected>(&a)) return sum_with_simple(b, *sa, true);
  throw Error(ErrorCode::UnsupportedPi1Combination,
              "connected sum of two manifolds with non-trivial fundamental group (" + pi1_label(a) + ", " +
                  pi1_label(b) + ") is not modeled");
}

ManifoldDescriptor stabilize(const ManifoldDescriptor& d, int k) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "stabilization count must be non-negative");
  ManifoldDescriptor out = d;
  const SimplyConnected s2xs2{forms::hyperbolic(), 0};
  for (int i = 0; i < k; ++i) out = connected_sum(out, s2xs2);
  return out;
}

// -- rational homology spheres and decompositions -----------------------------

std::string SigmaLabel::name() const {
  switch (kind) {
    case Kind::Star: return "SigmaStar(" + std::to_string(n) + ")";
    case Kind::Zero: return "Sigma0(" + std::to_string(n) + ")";
    case Kind::One: return "Sigma1(" + std::to_string(n) + "," + std::to_string(i) + ")";
  }
  return "?";
}

FiniteCyclic SigmaLabel::descriptor() const {
  switch (kind) {
    case Kind::Star:
      if (n < 3 || n % 2 == 0) throw Error(ErrorCode::InvalidDescriptor, name() + " needs odd order >= 3");
      return FiniteCyclic{n, IntForm{}, W2Type::Spin, 0};
    case Kind::Zero:
      if (n < 2 || n % 2 != 0) throw Error(ErrorCode::InvalidDescriptor, name() + " needs even order");
      return FiniteCyclic{n, IntForm{}, W2Type::TypeII, 0};
    case Kind::One:
      if (n < 2 || n % 2 != 0) throw Error(ErrorCode::InvalidDescriptor, name() + " needs even order");
      if (i != 0 && i != 1) throw Error(ErrorCode::InvalidDescriptor, name() + " needs i in {0,1}");
      return FiniteCyclic{n, IntForm{}, W2Type::TypeIII, i};
  }
  throw Error(ErrorCode::Internal, "unknown sigma kind");
}

std::vector<RhsEntry> rhs_catalog(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "cyclic order must be at least 2");
  std::vector<RhsEntry> out;
  auto push = [&](SigmaLabel label, bool pair) { out.push_back({label, label.descriptor(), pair}); };
  if (n % 2 == 1) {
    push({SigmaLabel::Kind::Star, n, 0}, false);
  } else {
    push({SigmaLabel::Kind::Zero, n, 0}, false);
    push({SigmaLabel::Kind::One, n, 0}, true);
    push({SigmaLabel::Kind::One, n, 1}, true);
  }
  return out;
}

std::vector<Decomposition> decompose(const FiniteCyclic& d) {
  require_valid(d);
  const int sig_ks = spin_ks(d.form);
  if (d.n % 2 == 1) return {{{SigmaLabel::Kind::Star, d.n, 0}, {d.form, d.ks}}};
  switch (d.w2) {
    case W2Type::TypeII:
      return {{{SigmaLabel::Kind::Zero, d.n, 0}, {d.form, sig_ks}}};
    case W2Type::TypeIII:
      return {{{SigmaLabel::Kind::One, d.n, mod2(d.ks - sig_ks)}, {d.form, sig_ks}}};
    case W2Type::TypeI:
      return {{{SigmaLabel::Kind::Zero, d.n, 0}, {d.form, d.ks}},
              {{SigmaLabel::Kind::One, d.n, 0}, {d.form, d.ks}},
              {{SigmaLabel::Kind::One, d.n, 1}, {d.form, mod2(1 - d.ks)}}};
    default:
      break;
  }
  throw Error(ErrorCode::InvalidDescriptor, "w2-type does not match the order");
}

FiniteCyclic reassemble(const Decomposition& dec) {
  return std::get<FiniteCyclic>(connected_sum(dec.sigma.descriptor(), dec.m));
}

std::optional<ModTwoForm> z2_form(const FiniteCyclic& d, bool extrapolate) {
  const ModTwoForm reduced = mod2_reduction(d.form);
  if (d.n % 2 == 1) return reduced;
  if (d.n > 2 && !extrapolate) return std::nullopt;
  const auto primary = decompose(d).front();
  const ModTwoForm block =
      primary.sigma.kind == SigmaLabel::Kind::Zero ? forms::hyperbolic_z2() : forms::identity_z2(2);
  return direct_sum_z2(reduced, block);
}

// -- built-ins ----------------------------------------------------------------

namespace {

InfiniteCyclic circle_times_sphere() {
  InfiniteCyclic d;
  d.lambda_form = HermitianLambdaForm::make({});
  d.extension = ExtendedWitness{{}, IntForm{}};
  return d;
}

}  // namespace

std::optional<ManifoldDescriptor> builtin_manifold(const std::string& name) {
  if (name == "S4") return SimplyConnected{};
  if (name == "S1xS3") return circle_times_sphere();
  if (name == "S2xS2") return SimplyConnected{forms::hyperbolic(), 0};
  if (name == "CP2") return SimplyConnected{forms::diagonal(1, 0), 0};
  if (name == "CP2bar") return SimplyConnected{forms::diagonal(0, 1), 0};
  if (name == "E8mfd") return SimplyConnected{forms::e8(), 1};
  if (name == "MA1") return SimplyConnected{forms::ht_augmentation(), 0};
  if (name == "XA") return connected_sum(SimplyConnected{forms::ht_augmentation(), 0}, circle_times_sphere());
  if (name == "YA") {
    InfiniteCyclic d;
    d.int_form = forms::ht_augmentation();
    d.lambda_form = ht_matrix_A();
    d.extension = RegisteredNonExtended{"A"};
    return d;
  }

  static const std::regex star(R"(SigmaStar\((\d+)\))");
  static const std::regex zero(R"(Sigma0\((\d+)\))");
  static const std::regex one(R"(Sigma1\((\d+),\s*(\d+)\))");
  std::smatch m;
  if (std::regex_match(name, m, star)) return SigmaLabel{SigmaLabel::Kind::Star, std::stoi(m[1]), 0}.descriptor();
  if (std::regex_match(name, m, zero)) return SigmaLabel{SigmaLabel::Kind::Zero, std::stoi(m[1]), 0}.descriptor();
  if (std::regex_match(name, m, one))
    return SigmaLabel{SigmaLabel::Kind::One, std::stoi(m[1]), std::stoi(m[2])}.descriptor();
  return std::nullopt;
}

std::vector<std::string> builtin_manifold_names() {
  return {"S4", "S1xS3", "S2xS2", "CP2", "CP2bar", "E8mfd", "MA1", "XA", "YA",
          "SigmaStar(n)", "Sigma0(n)", "Sigma1(n,i)"};
}

}  // namespace fourdom
