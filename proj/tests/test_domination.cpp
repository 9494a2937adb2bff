#include <doctest.h>

#include <algorithm>
#include <set>

#include "fourdom/domination.hpp"
#include "fourdom/error.hpp"
#include "fourdom/serialize.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace fourdom;

namespace {

ManifoldDescriptor named(const std::string& name) { return parse_descriptor_text(name); }

/// Decision matrix over a descriptor list, computed once per list.
struct Table {
  std::vector<ManifoldDescriptor> items;
  std::vector<std::vector<Decision>> d;

  explicit Table(std::vector<ManifoldDescriptor> xs, const EngineOptions& opt = {}) : items(std::move(xs)) {
    d.resize(items.size());
    for (std::size_t i = 0; i < items.size(); ++i)
      for (std::size_t j = 0; j < items.size(); ++j) d[i].push_back(dominates(items[i], items[j], opt));
  }
};

const Table& finite_cyclic_table() {
  static const Table t = [] {
    std::vector<ManifoldDescriptor> xs;
    for (const auto& d : corpus::finite_cyclic()) xs.emplace_back(d);
    EngineOptions opt;
    opt.z2_extrapolation = true;
    return Table(xs, opt);
  }();
  return t;
}

const Table& mixed_table() {
  static const Table t(corpus::all(3));
  return t;
}

}  // namespace

TEST_SUITE("domination") {
  TEST_CASE("decision fixtures") {
    auto d = dominates(named("Sigma0(2)"), named("Sigma0(2)"));
    CHECK(d.outcome() == Outcome::Yes);
    CHECK(d.tag() == "trivial:identity");

    d = dominates(named("Sigma0(2)"), named("Sigma1(2,0)"));
    CHECK(d.outcome() == Outcome::No);
    CHECK(d.tag() == "lemma:spin");

    d = dominates(named("Sigma1(2,0)#S2xS2"), named("Sigma0(2)"));
    CHECK(d.outcome() == Outcome::Unknown);
    CHECK(d.tag() == "open-question");

    d = dominates(named("XA"), named("YA"));
    CHECK(d.outcome() == Outcome::No);
    CHECK(d.tag() == "thm:non-1dom");

    d = dominates(named("CP2"), named("S2xS2"));
    CHECK(d.outcome() == Outcome::No);
    d = dominates(named("CP2#CP2bar"), named("CP2"));
    CHECK(d.outcome() == Outcome::Yes);
    CHECK(d.tag() == "prop:dw");

    d = dominates(named("S1xS3#S2xS2"), named("S1xS3"));
    CHECK(d.outcome() == Outcome::Yes);
    CHECK(d.tag() == "prop:q-star");

    d = dominates(named("Sigma0(2)#S2xS2"), named("S2xS2"));
    CHECK(d.outcome() == Outcome::Yes);
    CHECK(d.tag() == "lemma:pinch");

    d = dominates(named("Sigma0(4)"), named("Sigma0(2)"));
    CHECK(d.outcome() == Outcome::No);

    d = dominates(named("S1xS3#CP2"), named("Sigma0(2)"));
    CHECK(d.outcome() == Outcome::No);
    CHECK(d.tag() == "lemma:splitting:h1");

    d = dominates(named("Sigma0(6)"), named("SigmaStar(3)"));
    CHECK(d.outcome() == Outcome::Unknown);
    CHECK(d.tag() == "open:outside-classification");

    d = dominates(named("S4"), named("Sigma0(2)"));
    CHECK(d.outcome() == Outcome::No);
    CHECK(d.tag() == "pi1:surjection");
  }

  TEST_CASE("z2 extrapolation flag") {
    const auto x = named("Sigma1(4,0)#S2xS2");
    const auto y = named("Sigma0(4)");
    CHECK(dominates(x, y).tag() == "undecided:z2-extrapolation-off");
    EngineOptions opt;
    opt.z2_extrapolation = true;
    CHECK(dominates(x, y, opt).tag() == "open-question");
  }

  TEST_CASE("definite cap") {
    const SimplyConnected x{forms::diagonal(10, 0), 0};
    const SimplyConnected y{forms::diagonal(1, 0), 0};
    const auto d = dominates(x, y);
    CHECK(d.outcome() == Outcome::Unknown);
    CHECK(d.tag() == "undecided:definite-cap");
  }

  TEST_CASE("stable domination") {
    const auto s = stably_dominates(named("XA"), named("YA"));
    CHECK(s.outcome() == Outcome::Yes);
    CHECK(std::get<Certificate>(s.result).stabilization == 3);
    CHECK(stably_dominates(named("S1xS3#CP2"), named("S1xS3")).outcome() == Outcome::Yes);
    CHECK(stably_dominates(named("S1xS3"), named("S1xS3#S2xS2")).outcome() == Outcome::No);
    try {
      stably_dominates(named("S4"), named("S1xS3"));
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Pi1Mismatch);
    }
    CHECK(dominates(stabilize(named("XA"), 3), stabilize(named("YA"), 3)).outcome() == Outcome::Yes);
  }

  TEST_CASE("groups and Euler characteristics") {
    CHECK(chi4(GroupDescriptor::infinite_cyclic()).value == 0);
    CHECK(chi4(GroupDescriptor::cyclic(5)).value == 2);
    const auto lb = chi4(GroupDescriptor::with_beta1(2));
    CHECK_FALSE(lb.exact);
    CHECK(lb.value == -2);
    CHECK_FALSE(chi4(GroupDescriptor::finite_abelian({2, 4})).exact);
    CHECK(parse_group("Zn:7").n == 7);
    CHECK(parse_group("Ab:2,4").factors == std::vector<int>{2, 4});
    CHECK_THROWS_AS(parse_group("Q8"), Error);

    CHECK(rhs_realizable(GroupDescriptor::cyclic(3), 2));
    CHECK_FALSE(rhs_realizable(GroupDescriptor::infinite_cyclic(), 0));
    CHECK(rhs_realizable(GroupDescriptor::trivial(), 2));

    const FiniteCyclic big{2, forms::hyperbolic(), W2Type::TypeII, 0};
    CHECK(euler_check(big, named("Sigma0(2)")) == EulerCheck::Consistent);
    CHECK(euler_check(named("Sigma0(2)"), big) == EulerCheck::Violation);
    CHECK_THROWS_AS(euler_check(named("S1xS3"), named("Sigma0(2)")), Error);
  }

  TEST_CASE("minimal targets") {
    auto t = minimal_target(named("S1xS3#CP2"));
    CHECK(chi(t.target) == 0);
    CHECK(t.decision.outcome() == Outcome::Yes);
    t = minimal_target(FiniteCyclic{2, forms::hyperbolic(), W2Type::TypeII, 0});
    CHECK(t.target == named("Sigma0(2)"));
    CHECK(t.decision.outcome() == Outcome::Yes);
    t = minimal_target(named("S4"));
    CHECK(t.target == named("S4"));
  }

  TEST_CASE("rigidity report") {
    const auto x = std::get<FiniteCyclic>(named("Sigma1(2,0)"));
    const auto y = std::get<FiniteCyclic>(named("Sigma1(2,1)"));
    const auto d = dominates(x, y);
    CHECK(d.tag() == "thm:1domn:case-c");
    CHECK(rigidity(x, y, d).has_value());
    const auto bigger = std::get<FiniteCyclic>(named("Sigma1(2,0)#S2xS2"));
    CHECK_FALSE(rigidity(bigger, x, dominates(bigger, x)).has_value());
    const auto open = std::get<FiniteCyclic>(named("Sigma0(2)"));
    CHECK_FALSE(rigidity(bigger, open, dominates(bigger, open)).has_value());
  }

  TEST_CASE("enumeration") {
    CHECK(enumerate_simply_connected(0).size() == 1);
    CHECK(enumerate_simply_connected(1).size() == 5);
    CHECK(enumerate_simply_connected(2).size() == 12);
    for (int b = 0; b <= 9; ++b)
      CHECK(static_cast<int>(enumerate_simply_connected(b).size()) == oracle::simply_connected_count(b));
    CHECK_THROWS_AS(enumerate_simply_connected(10), Error);

    const auto s0 = enumerate_stable_targets_Z(std::get<InfiniteCyclic>(named("S1xS3")));
    CHECK(s0.size() == 1);
    const auto sh = enumerate_stable_targets_Z(std::get<InfiniteCyclic>(named("S1xS3#S2xS2")));
    std::set<int> ranks;
    for (const auto& c : sh) {
      ranks.insert(c.invariants.rank);
      CHECK(!(c.invariants.rank == 2 && c.invariants.parity == Parity::Odd));
    }
    CHECK(ranks == std::set<int>{0, 2});

    const auto zn = enumerate_targets_Zn(std::get<FiniteCyclic>(named("Sigma0(2)")));
    REQUIRE(zn.size() == 3);
    CHECK(zn[0].decision.outcome() == Outcome::Yes);
    CHECK(zn[1].decision.outcome() == Outcome::No);
    CHECK(zn[2].decision.outcome() == Outcome::No);

    const auto open = enumerate_targets_Zn(std::get<FiniteCyclic>(named("Sigma1(2,0)#S2xS2")));
    CHECK(std::any_of(open.begin(), open.end(), [](const TargetDecision& t) {
      return t.target == FiniteCyclic{2, IntForm{}, W2Type::TypeII, 0} && t.decision.outcome() == Outcome::Unknown;
    }));
    const auto classes = form_classes(2).size();
    CHECK(open.size() <= classes * 3 * 2);
  }

  TEST_CASE("enumerators are deterministic, duplicate free and valid") {
    for (const auto& name : {"Sigma0(2)#S2xS2", "Sigma1(2,1)#CP2", "SigmaStar(3)#CP2#CP2bar"}) {
      const auto x = std::get<FiniteCyclic>(named(name));
      const auto a = enumerate_targets_Zn(x), b = enumerate_targets_Zn(x);
      REQUIRE(a.size() == b.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].target == b[i].target);
        CHECK(validate(a[i].target).empty());
        for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(a[i].target == a[j].target);
      }
    }
    const auto x = std::get<InfiniteCyclic>(named("S1xS3#CP2#CP2bar"));
    const auto s = enumerate_stable_targets_Z(x);
    CHECK(s.size() <= enumerate_simply_connected(x.int_form.rank() + 6).size());
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        CHECK_FALSE((s[i].invariants == s[j].invariants && s[i].ks == s[j].ks));
  }

  TEST_CASE("universal dominator") {
    const auto u = universal_dominator_Z(0);
    int rank = 0;
    for (const auto& m : enumerate_simply_connected(6)) rank += m.form.rank();
    CHECK(u.int_form.rank() == rank);
    CHECK(dominates(u, named("S1xS3")).outcome() == Outcome::Yes);
    CHECK_THROWS_AS(universal_dominator_Z(4), Error);
  }

  TEST_CASE("finite abelian target bounds") {
    const FiniteCyclic x{6, forms::diagonal(1, 1), W2Type::TypeI, 0};
    CHECK_FALSE(finite_abelian_targets_bound(x, GroupDescriptor::cyclic(4)).possible);
    const auto b = finite_abelian_targets_bound(x, GroupDescriptor::cyclic(3));
    CHECK(b.possible);
    CHECK(b.chi_min == 2);
    CHECK(b.chi_max == 4);
    CHECK_FALSE(finite_abelian_targets_bound(named("CP2"), GroupDescriptor::cyclic(2)).possible);
  }

  TEST_CASE("property: necessary conditions hold for every Yes") {
    for (const auto* t : {&finite_cyclic_table(), &mixed_table()})
      for (std::size_t i = 0; i < t->items.size(); ++i)
        for (std::size_t j = 0; j < t->items.size(); ++j) {
          const auto& x = t->items[i];
          const auto& y = t->items[j];
          const auto& d = t->d[i][j];
          CHECK(is_rule_tag(d.tag()));
          if (i == j) CHECK(d.outcome() == Outcome::Yes);
          if (d.outcome() != Outcome::Yes) continue;
          CHECK(split_off(form_of(x), form_of(y)).outcome == Verdict::Yes);
          CHECK(form_of(x).rank() >= form_of(y).rank());
          if (same_pi1(x, y)) CHECK(euler_check(x, y) == EulerCheck::Consistent);
          CHECK(recheck_certificate(x, y, d));
          if (const auto* fx = std::get_if<FiniteCyclic>(&x)) {
            if (const auto* fy = std::get_if<FiniteCyclic>(&y)) {
              if (is_spin(fx->w2)) CHECK(is_spin(fy->w2));
              if (fx->w2 == W2Type::TypeIII) CHECK((fy->w2 == W2Type::TypeII || fy->w2 == W2Type::TypeIII));
            }
          }
        }
  }

  TEST_CASE("property: Yes is transitive on the corpus") {
    for (const auto* t : {&finite_cyclic_table(), &mixed_table()}) {
      const std::size_t n = t->items.size();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (t->d[i][j].outcome() != Outcome::Yes) continue;
          for (std::size_t k = 0; k < n; ++k)
            if (t->d[j][k].outcome() == Outcome::Yes) CHECK(t->d[i][k].outcome() == Outcome::Yes);
        }
    }
  }

  TEST_CASE("property: stable domination mirrors domination after stabilization") {
    const auto ic = corpus::infinite_cyclic(3);
    for (const auto& x : ic)
      for (const auto& y : ic) {
        const auto s = stably_dominates(x, y);
        if (s.outcome() == Outcome::Yes) CHECK(dominates(stabilize(x, 3), stabilize(y, 3)).outcome() == Outcome::Yes);
        if (y.int_form.rank() == 0) CHECK(s.outcome() == Outcome::Yes);
      }
  }

  TEST_CASE("property: minimal targets realize chi4") {
    for (const auto& x : corpus::all(4)) {
      const auto t = minimal_target(x);
      CHECK(chi(t.target) == chi4(pi1_group(x)).value);
      CHECK(t.decision.outcome() == Outcome::Yes);
    }
  }
}
