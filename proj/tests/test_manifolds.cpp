#include <doctest.h>

#include <algorithm>
#include <random>

#include "fourdom/error.hpp"
#include "fourdom/manifolds.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace fourdom;

namespace {

ManifoldDescriptor named(const std::string& name) {
  auto d = builtin_manifold(name);
  REQUIRE(d.has_value());
  return *d;
}

FiniteCyclic fc(const std::string& name) { return std::get<FiniteCyclic>(named(name)); }

bool has_rule(const std::vector<Violation>& vs, const std::string& rule) {
  return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.rule == rule; });
}

IntForm one(int v) { return IntForm::make({{v}}); }

}  // namespace

TEST_SUITE("manifolds") {
  TEST_CASE("validation") {
    CHECK(validate(SimplyConnected{forms::e8(), 1}).empty());
    CHECK_FALSE(validate(SimplyConnected{forms::e8(), 0}).empty());
    CHECK(has_rule(validate(FiniteCyclic{2, one(1), W2Type::TypeII, 0}), "w2-parity"));
    CHECK(has_rule(validate(SimplyConnected{forms::hyperbolic(), 1}), "even-form-ks"));
    CHECK(has_rule(validate(FiniteCyclic{3, IntForm{}, W2Type::TypeII, 0}), "w2-domain"));
    CHECK(has_rule(validate(FiniteCyclic{2, IntForm{}, W2Type::Spin, 0}), "w2-domain"));
    CHECK(has_rule(validate(FiniteCyclic{1, IntForm{}, W2Type::Spin, 0}), "order"));
    CHECK(has_rule(validate(FiniteCyclic{3, one(1), W2Type::Spin, 0}), "spin-parity"));
    CHECK(has_rule(validate(SimplyConnected{IntForm{}, 2}), "ks-range"));
    CHECK_THROWS_AS(require_valid(FiniteCyclic{2, one(1), W2Type::TypeII, 0}), Error);

    InfiniteCyclic bad_rank{forms::diagonal(1, 0), ht_matrix_A(), ExtensionUnknown{}, 0};
    CHECK(has_rule(validate(bad_rank), "lambda-rank"));
    InfiniteCyclic bad_aug{forms::diagonal(3, 1), ht_matrix_A(), ExtensionUnknown{}, 0};
    CHECK(has_rule(validate(bad_aug), "lambda-augmentation"));
    InfiniteCyclic unknown_axiom{forms::diagonal(4, 0), ht_matrix_A(), RegisteredNonExtended{"B"}, 0};
    CHECK(has_rule(validate(unknown_axiom), "axiom-unknown"));
    InfiniteCyclic bad_witness{forms::diagonal(4, 0), ht_matrix_A(),
                               ExtendedWitness{identity_lambda(4), forms::ht_augmentation()}, 0};
    CHECK(has_rule(validate(bad_witness), "witness-invalid"));
    InfiniteCyclic no_lambda{forms::hyperbolic(), std::nullopt, ExtendedWitness{identity_lambda(2), forms::hyperbolic()}, 0};
    CHECK(has_rule(validate(no_lambda), "witness-without-lambda"));
  }

  TEST_CASE("Betti numbers and Euler characteristic") {
    CHECK(chi(named("S1xS3")) == 0);
    CHECK(chi(named("Sigma0(2)")) == 2);
    CHECK(chi(named("S2xS2")) == 4);
    CHECK(betti(named("S1xS3")) == std::array<int, 5>{1, 1, 0, 1, 1});
    CHECK(betti(named("CP2"))[2] == 1);
    CHECK(indefinite_excess(named("S2xS2")) == 2);
  }

  TEST_CASE("connected sums") {
    const auto d = std::get<FiniteCyclic>(connected_sum(named("Sigma0(2)"), named("S2xS2")));
    CHECK(d == FiniteCyclic{2, forms::hyperbolic(), W2Type::TypeII, 0});

    const SimplyConnected odd{direct_sum(one(1), one(-1)), 0};
    const auto e = std::get<FiniteCyclic>(connected_sum(named("Sigma1(2,0)"), odd));
    CHECK(e.w2 == W2Type::TypeI);
    CHECK(validate(e).empty());

    for (const auto& x : corpus::all(3)) CHECK(connected_sum(x, named("S4")) == x);

    CHECK(std::get<FiniteCyclic>(connected_sum(named("SigmaStar(3)"), named("CP2"))).w2 == W2Type::NonSpin);
    CHECK(std::get<FiniteCyclic>(connected_sum(named("SigmaStar(3)"), named("S2xS2"))).w2 == W2Type::Spin);
    CHECK(std::get<FiniteCyclic>(connected_sum(named("CP2"), named("Sigma1(2,1)"))).ks == 1);

    try {
      connected_sum(named("S1xS3"), named("Sigma0(2)"));
      FAIL("expected an error");
    } catch (const Error& err) {
      CHECK(err.code() == ErrorCode::UnsupportedPi1Combination);
    }
  }

  TEST_CASE("rational homology sphere catalog") {
    const auto three = rhs_catalog(3);
    REQUIRE(three.size() == 1);
    CHECK(three[0].descriptor.w2 == W2Type::Spin);
    const auto two = rhs_catalog(2);
    REQUIRE(two.size() == 3);
    CHECK(two[0].descriptor.w2 == W2Type::TypeII);
    CHECK(two[1].homotopy_equivalent_pair);
    CHECK(two[2].homotopy_equivalent_pair);
    CHECK(two[2].descriptor.ks == 1);
    for (int n = 2; n <= 9; ++n)
      for (const auto& e : rhs_catalog(n)) {
        CHECK(validate(e.descriptor).empty());
        CHECK(chi(e.descriptor) == 2);
        CHECK(e.label.descriptor() == e.descriptor);
      }
  }

  TEST_CASE("Z/2 forms") {
    const auto s0 = z2_form(fc("Sigma0(2)"));
    REQUIRE(s0);
    CHECK(s0->alternating());
    CHECK(s0->rank() == 2);
    const auto s1 = z2_form(fc("Sigma1(2,0)"));
    REQUIRE(s1);
    CHECK(s1->to_matrix() == std::vector<std::vector<int>>{{1, 0}, {0, 1}});
    const auto odd = z2_form(FiniteCyclic{3, one(1), W2Type::NonSpin, 0});
    REQUIRE(odd);
    CHECK(odd->to_matrix() == std::vector<std::vector<int>>{{1}});
    CHECK_FALSE(z2_form(fc("Sigma0(4)")).has_value());
    CHECK(z2_form(fc("Sigma0(4)"), true).has_value());
  }

  TEST_CASE("decompositions") {
    auto decs = decompose(FiniteCyclic{2, forms::hyperbolic(), W2Type::TypeII, 0});
    REQUIRE(decs.size() == 1);
    CHECK(decs[0].sigma.kind == SigmaLabel::Kind::Zero);
    CHECK(decs[0].m == SimplyConnected{forms::hyperbolic(), 0});

    decs = decompose(FiniteCyclic{2, IntForm{}, W2Type::TypeIII, 1});
    REQUIRE(decs.size() == 1);
    CHECK(decs[0].sigma == SigmaLabel{SigmaLabel::Kind::One, 2, 1});
    CHECK(decs[0].m == SimplyConnected{});

    decs = decompose(FiniteCyclic{2, one(1), W2Type::TypeI, 0});
    REQUIRE(decs.size() == 3);
    CHECK(decs[0].sigma.kind == SigmaLabel::Kind::Zero);
    CHECK(decs[1].sigma == SigmaLabel{SigmaLabel::Kind::One, 2, 0});
    CHECK(decs[2].sigma == SigmaLabel{SigmaLabel::Kind::One, 2, 1});
    CHECK(decs[2].m.ks == 1);
  }

  TEST_CASE("stabilization") {
    const auto s = stabilize(named("S1xS3"), 3);
    CHECK(indefinite_excess(s) == 6);
    CHECK(stabilize(named("CP2"), 0) == named("CP2"));
    std::mt19937_64 rng(4);
    const auto pool = corpus::all(4);
    for (int t = 0; t < 60; ++t) {
      const auto& d = pool[rng() % pool.size()];
      const int k = static_cast<int>(rng() % 6);
      const auto e = stabilize(d, k);
      CHECK(form_of(e).signature() == form_of(d).signature());
      CHECK(form_of(e).rank() == form_of(d).rank() + 2 * k);
      CHECK(pi1_order(e) == pi1_order(d));
      CHECK(validate(e).empty());
      if (const auto* f = std::get_if<FiniteCyclic>(&d)) CHECK(std::get<FiniteCyclic>(e).w2 == f->w2);
    }
  }

  TEST_CASE("property: decompose then reassemble on the corpus") {
    for (const auto& d : corpus::finite_cyclic()) {
      const auto decs = decompose(d);
      REQUIRE_FALSE(decs.empty());
      for (const auto& dec : decs) {
        CHECK(validate(dec.m).empty());
        const auto back = reassemble(dec);
        CHECK(back.n == d.n);
        CHECK(back.w2 == d.w2);
        CHECK(back.ks == d.ks);
        CHECK(back.form.invariants() == d.form.invariants());
        CHECK(is_isomorphic(back.form, d.form) == Verdict::Yes);
        const auto zb = z2_form(back, true), zd = z2_form(d, true);
        REQUIRE(zb);
        REQUIRE(zd);
        CHECK(classify_z2(*zb) == classify_z2(*zd));
      }
      if (d.n % 2 == 0 && d.form.rank() == 0) CHECK(z2_form(d, true)->alternating() == (d.w2 == W2Type::TypeII));
    }
  }

  TEST_CASE("property: the corpus is valid and closed under sums with simply connected pieces") {
    const auto sc = corpus::simply_connected(2);
    for (const auto& d : corpus::all(3)) {
      CHECK(validate(d).empty());
      for (const auto& m : sc) CHECK(validate(connected_sum(d, m)).empty());
    }
  }
}
