// Acceptance suite: one PASS/FAIL line per criterion. Run all criteria, or a
// single one with --criterion N.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fourdom/domination.hpp"
#include "fourdom/error.hpp"
#include "fourdom/serialize.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace fourdom;

namespace {

struct Result {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("FAILED " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

oracle::Poly as_poly(const LaurentPoly& p) {
  oracle::Poly out;
  for (const auto& [e, c] : p.terms()) out[e] = c;
  return out;
}

bool same_class(const IntForm& a, const IntForm& b) {
  return a.invariants() == b.invariants() && is_isomorphic(a, b) == Verdict::Yes;
}

/// Whether some unimodular L has y + L isomorphic to an indefinite x, from the
/// classification of indefinite forms by rank, signature and parity.
bool indefinite_split_possible(const oracle::Mat& x, const oracle::Mat& y) {
  const int r = static_cast<int>(x.size() - y.size());
  const int s = oracle::eigen_signature(x) - oracle::eigen_signature(y);
  if (r < 0 || std::abs(s) > r || (r - s) % 2) return false;
  const bool x_even = oracle::is_even(x), y_even = oracle::is_even(y);
  if (x_even && !y_even) return false;
  auto exists = [&](bool even) {
    if (!even) return r >= 1;
    if (s % 8) return false;
    return std::abs(s) < r || r % 8 == 0;  // definite even needs rank divisible by 8
  };
  if (x_even) return exists(true);
  return y_even ? exists(false) : (exists(false) || exists(true));
}

bool oracle_split(const IntForm& x, const IntForm& y) {
  if (x.is_definite()) {
    if (x.rank() == 0) return y.rank() == 0;
    return oracle::embedding_in_box(x.gram(), y.gram(), oracle::definite_box(x.gram(), y.gram())).has_value();
  }
  return indefinite_split_possible(x.gram(), y.gram());
}

oracle::Bits bits_of(const ModTwoForm& f) { return f.to_matrix(); }

// -- criteria ---------------------------------------------------------------------

Result matrix_a_fixture() {
  Result r;
  const auto a = ht_matrix_A();
  bool hermitian = true;
  for (int i = 0; i < a.rank(); ++i)
    for (int j = 0; j < a.rank(); ++j) hermitian = hermitian && a(i, j).conjugate() == a(j, i);
  r.require(hermitian, "entrywise hermitian check");

  std::vector<std::vector<oracle::Poly>> polys(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) polys[i].push_back(as_poly(a(i, j)));
  const auto det_oracle = oracle::poly_determinant(polys);
  r.require(det_oracle == oracle::Poly{{0, 1}}, "oracle determinant over the Laurent ring is 1");
  r.require(determinant(a) == LaurentPoly(1), "library determinant is 1");
  r.require(is_nonsingular(a), "is_nonsingular");

  const oracle::Mat expected{{7, 6, 3, 2}, {6, 7, 2, 3}, {3, 2, 2, 0}, {2, 3, 0, 2}};
  const auto aug = augment(a);
  r.require(aug.gram() == expected, "augmentation matrix");
  r.require(oracle::determinant(expected) == 1, "oracle det of augmentation is 1");
  r.require(oracle::eigen_signature(expected) == 4 && aug.signature() == 4, "signature 4");
  r.require(!oracle::is_even(expected) && aug.parity() == Parity::Odd, "parity odd");

  const auto i4 = forms::diagonal(4, 0);
  const auto brute = oracle::embedding_in_box(expected, i4.gram(), oracle::definite_box(expected, i4.gram()));
  r.require(brute.has_value(), "oracle finds I4 inside A(1)");
  const auto lib = embedding_oracle(aug, i4);
  r.require(lib.found && lib.exhaustive, "embedding_oracle finds I4 inside A(1)");
  r.require(is_isomorphic(aug, i4) == Verdict::Yes, "A(1) isomorphic to I4");
  return r;
}

Result split_vs_oracle() {
  Result r;
  std::vector<std::vector<IntForm>> by_rank(5);
  for (std::size_t rank = 1; rank <= 4; ++rank)
    for (auto& m : oracle::all_unimodular(rank, 2)) by_rank[rank].push_back(IntForm::make(m));
  std::ostringstream sizes;
  for (int k = 1; k <= 4; ++k) sizes << (k > 1 ? "/" : "") << by_rank[k].size();
  r.note("unimodular matrices with entries in [-2,2] by rank 1/2/3/4: " + sizes.str());

  std::mt19937_64 rng(20240611);
  int pairs = 0, applicable = 0, agree = 0, oracle_agree = 0;
  for (int rx = 1; rx <= 4; ++rx)
    for (int ry = 1; ry <= rx; ++ry)
      for (int t = 0; t < 60; ++t) {
        const auto& xs = by_rank[rx];
        const auto& ys = by_rank[ry];
        const auto& x = xs[rng() % xs.size()];
        const auto& y = ys[rng() % ys.size()];
        ++pairs;
        const auto split = split_off(x, y);
        const auto emb = embedding_oracle(x, y);
        if (emb.exhaustive || emb.found) {
          ++applicable;
          const bool ok = (split.outcome == Verdict::Yes) == emb.found;
          agree += ok;
          if (!ok) r.require(false, "split_off vs embedding_oracle on rank " + std::to_string(rx) + "/" +
                                        std::to_string(ry));
        }
        const bool expected = oracle_split(x, y);
        const bool ok = (split.outcome == Verdict::Yes) == expected && split.outcome != Verdict::Undecided;
        oracle_agree += ok;
        if (!ok)
          r.require(false, "split_off vs test-side oracle: " + to_json(x).dump() + " / " + to_json(y).dump() +
                               " split " + to_string(split.outcome) + ", oracle " + (expected ? "yes" : "no"));
      }
  r.require(pairs >= 500, "at least 500 pairs");
  r.note(std::to_string(pairs) + " pairs, " + std::to_string(applicable) + " oracle-applicable, " +
         std::to_string(agree) + " agree with embedding_oracle, " + std::to_string(oracle_agree) +
         " agree with the test-side oracle");
  return r;
}

Result non_extended_pair() {
  Result r;
  const auto x = *builtin_manifold("XA");
  const auto y = *builtin_manifold("YA");
  const auto d = dominates(x, y);
  const auto s = stably_dominates(x, y);
  const auto st = dominates(stabilize(x, 3), stabilize(y, 3));
  r.note("dominates: " + std::string(to_string(d.outcome())) + " (" + d.tag() + "), stably: " +
         to_string(s.outcome()) + " (" + s.tag() + "), after 3 stabilizations: " + to_string(st.outcome()) + " (" +
         st.tag() + ")");
  r.require(d.outcome() == Outcome::No, "dominates = No");
  r.require(s.outcome() == Outcome::Yes, "stably_dominates = Yes");
  r.require(st.outcome() == Outcome::Yes, "dominates after stabilization = Yes");
  return r;
}

Result trichotomy() {
  Result r;
  const auto corpus = corpus::finite_cyclic();
  EngineOptions opt;
  opt.z2_extrapolation = true;
  int unknown = 0, expected_unknown = 0, pairs = 0;
  for (const auto& x : corpus)
    for (const auto& y : corpus) {
      ++pairs;
      const auto d = dominates(x, y, opt);
      bool open_cell = x.n == y.n && x.w2 == W2Type::TypeIII && y.w2 == W2Type::TypeII && oracle_split(x.form, y.form);
      if (open_cell) {
        const auto zx = z2_form(x, true), zy = z2_form(y, true);
        open_cell = zx && zy && oracle::gf2_embedding(bits_of(*zx), bits_of(*zy)).has_value();
      }
      expected_unknown += open_cell;
      unknown += d.outcome() == Outcome::Unknown;
      if ((d.outcome() == Outcome::Unknown) != open_cell)
        r.require(false, to_json(ManifoldDescriptor(x)).dump() + " -> " + to_json(ManifoldDescriptor(y)).dump() +
                             ": " + to_string(d.outcome()) + " " + d.tag());
      if (r.notes.size() > 12) return r;
    }
  r.note(std::to_string(corpus.size()) + " descriptors, " + std::to_string(pairs) + " pairs, " +
         std::to_string(unknown) + " unknown, " + std::to_string(expected_unknown) + " open cells");
  const auto q = dominates(parse_descriptor_text("Sigma1(2,0)#S2xS2"), *builtin_manifold("Sigma0(2)"));
  r.require(q.outcome() == Outcome::Unknown && q.tag() == "open-question", "the posed question stays open");
  return r;
}

Result decomposition_round_trip() {
  Result r;
  int checked = 0, type_one = 0;
  for (const auto& d : corpus::finite_cyclic()) {
    const auto decs = decompose(d);
    for (std::size_t k = 0; k < decs.size(); ++k) {
      const auto back = std::get<FiniteCyclic>(connected_sum(decs[k].sigma.descriptor(), decs[k].m));
      const bool ok = back.n == d.n && same_class(back.form, d.form) && back.w2 == d.w2 && back.ks == d.ks;
      r.require(ok, "round trip of " + to_json(ManifoldDescriptor(d)).dump() + " via " + decs[k].sigma.name());
      ++checked;
    }
    if (d.w2 == W2Type::TypeI) {
      ++type_one;
      r.require(decs.size() == 3, "type I has three decompositions");
    }
  }
  r.note(std::to_string(checked) + " decompositions reassembled, " + std::to_string(type_one) +
         " type I descriptors");
  return r;
}

std::vector<int> read_golden_counts(const std::string& path) {
  std::ifstream in(path);
  const auto j = Json::parse(in);
  return j.at("cumulative_counts").get<std::vector<int>>();
}

Result enumeration_counts(const std::string& golden) {
  Result r;
  const int literal[] = {1, 4, 12};
  for (int b = 0; b <= 2; ++b) {
    const int got = static_cast<int>(enumerate_simply_connected(b).size());
    r.note("bound " + std::to_string(b) + ": " + std::to_string(got) + " classes (oracle " +
           std::to_string(oracle::simply_connected_count(b)) + ", required " + std::to_string(literal[b]) + ")");
    r.require(got == literal[b], "count for bound " + std::to_string(b) + " equals " + std::to_string(literal[b]));
  }
  const auto expected = read_golden_counts(golden);
  for (int b = 0; b <= 9; ++b) {
    const auto first = enumerate_simply_connected(b);
    const auto second = enumerate_simply_connected(b);
    r.require(first == second, "deterministic output for bound " + std::to_string(b));
    r.require(static_cast<int>(first.size()) == expected[b], "golden count for bound " + std::to_string(b));
    r.require(static_cast<int>(first.size()) == oracle::simply_connected_count(b),
              "oracle count for bound " + std::to_string(b));
  }
  return r;
}

Result chi4_and_minimal_targets() {
  Result r;
  r.require(chi4(GroupDescriptor::infinite_cyclic()).value == 0, "chi4(Z) = 0");
  for (int n = 2; n <= 12; ++n) r.require(chi4(GroupDescriptor::cyclic(n)).value == 2, "chi4(Z/n) = 2");

  auto pool = corpus::all(6);
  std::mt19937_64 rng(7);
  std::shuffle(pool.begin(), pool.end(), rng);
  int checked = 0;
  for (const auto& x : pool) {
    if (checked == 100) break;
    ++checked;
    const auto t = minimal_target(x);
    const auto c = chi4(pi1_group(x));
    r.require(c.exact && chi(t.target) == c.value, "chi(target) = chi4 for " + to_json(x).dump());
    r.require(dominates(x, t.target).outcome() == Outcome::Yes, "x dominates its minimal target");
  }
  r.note(std::to_string(checked) + " random descriptors");
  return r;
}

Result rigidity_and_euler() {
  Result r;
  int yes = 0;
  auto check_pairs = [&](const auto& items) {
    for (const auto& a : items)
      for (const auto& b : items) {
        const ManifoldDescriptor x(a), y(b);
        if (!same_pi1(x, y)) continue;
        if (dominates(x, y).outcome() != Outcome::Yes) continue;
        ++yes;
        r.require(chi(x) >= chi(y), "chi(x) >= chi(y) for " + to_json(x).dump() + " -> " + to_json(y).dump());
      }
  };
  check_pairs(corpus::simply_connected());
  check_pairs(corpus::infinite_cyclic());
  check_pairs(corpus::finite_cyclic());
  r.note(std::to_string(yes) + " Yes pairs with equal pi1");

  const auto x = std::get<FiniteCyclic>(*builtin_manifold("Sigma1(2,0)"));
  const auto y = std::get<FiniteCyclic>(*builtin_manifold("Sigma1(2,1)"));
  const auto d = dominates(x, y);
  const auto report = rigidity(x, y, d);
  r.require(d.outcome() == Outcome::Yes, "Sigma1(2,0) dominates Sigma1(2,1)");
  r.require(report.has_value(), "homotopy-equivalence report");
  if (report) r.note(*report);
  return r;
}

Result gf2_layer() {
  Result r;
  std::mt19937_64 rng(11);
  int forms_checked = 0;
  for (const auto& f : corpus::forms(6)) {
    std::vector<IntForm> variants{f};
    for (int t = 0; t < 3 && f.rank() > 1; ++t)
      variants.push_back(IntForm::make(oracle::transform(f.gram(), oracle::random_unimodular(f.rank(), rng))));
    for (const auto& g : variants) {
      if (g.rank() == 0) continue;
      const auto m = mod2_reduction(g);
      const auto c = characteristic_element(m);
      std::uint32_t cv = 0;
      for (std::size_t i = 0; i < c.size(); ++i) cv |= static_cast<std::uint32_t>(c[i]) << i;
      const auto bits = bits_of(m);
      bool ok = true;
      for (std::uint32_t x = 0; x < (1u << g.rank()); ++x) ok = ok && oracle::pair2(bits, cv, x) == oracle::pair2(bits, x, x);
      r.require(ok, "c.x = x.x for all x");
      r.require(oracle::characteristic_vectors(bits) == std::vector<std::uint32_t>{cv}, "unique characteristic vector");
      ++forms_checked;
    }
  }
  r.note(std::to_string(forms_checked) + " forms checked exhaustively");

  const auto s0 = z2_form(std::get<FiniteCyclic>(*builtin_manifold("Sigma0(2)")));
  const auto s10 = z2_form(std::get<FiniteCyclic>(*builtin_manifold("Sigma1(2,0)")));
  r.require(s0 && s0->rank() == 2 && oracle::alternating2(bits_of(*s0)), "z2_form(Sigma0(2)) is the alternating plane");
  r.require(s10 && classify_z2(*s10) == classify_z2(forms::identity_z2(2)) &&
                bits_of(*s10) == oracle::Bits{{1, 0}, {0, 1}},
            "z2_form(Sigma1(2,0)) is the rank-2 identity");

  const auto x = z2_form(std::get<FiniteCyclic>(parse_descriptor_text("Sigma1(2,0)#S2xS2")));
  if (x && s0) {
    const auto split = split_off_z2(*x, *s0);
    r.require(split.yes, "split_off_z2(X, Y) = Yes");
    const auto emb = oracle::gf2_embedding(bits_of(*x), bits_of(*s0));
    r.require(emb.has_value(), "oracle embeds z2(Y) in z2(X)");
    if (emb) {
      r.note(std::string("complement of z2(Y) in z2(X) is ") +
             (emb->complement_alternating ? "alternating" : "not alternating"));
      r.require(emb->complement_alternating, "alternating complement");
    }
  } else {
    r.require(false, "z2 forms available");
  }
  return r;
}

Result universal_dominator() {
  Result r;
  const auto start = std::chrono::steady_clock::now();
  const ManifoldDescriptor u0 = universal_dominator_Z(0);
  int unstable = 0;
  auto targets = corpus::infinite_cyclic(4);
  targets.push_back(InfiniteCyclic{});
  for (const auto& x : targets) {
    if (x.int_form.rank() != 0) continue;
    ++unstable;
    const auto d = dominates(u0, x);
    r.require(d.outcome() == Outcome::Yes, "universal dominator dominates " + to_json(ManifoldDescriptor(x)).dump());
  }
  int stable = 0;
  for (int n = 0; n <= 3; ++n) {
    const ManifoldDescriptor u = universal_dominator_Z(n);
    for (const auto& x : targets) {
      if (x.int_form.rank() > n) continue;
      ++stable;
      r.require(stably_dominates(u, x).outcome() == Outcome::Yes,
                "stable domination by U(" + std::to_string(n) + ") of " + to_json(ManifoldDescriptor(x)).dump());
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.require(seconds < 60.0, "runtime under one minute");
  r.note(std::to_string(unstable) + " unstable and " + std::to_string(stable) + " stable checks in " +
         std::to_string(seconds) + " s");
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  std::string golden = FOURDOM_GOLDEN_DIR "/enumeration_counts.json";
  app.add_option("--criterion", only, "Run a single criterion (1-10)")->check(CLI::Range(1, 10));
  app.add_option("--golden", golden, "Enumeration count golden file");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
      {"matrix A: hermitian, determinant 1, augmentation isomorphic to I4", matrix_a_fixture},
      {"split_off agrees with the embedding oracle", split_vs_oracle},
      {"non-extended pair: No, stably Yes, Yes after stabilization", non_extended_pair},
      {"Z/n trichotomy: Unknown exactly on the open cells", trichotomy},
      {"decompose then connected_sum round trip", decomposition_round_trip},
      {"simply connected enumeration counts 1, 4, 12 and golden file",
       [&] { return enumeration_counts(golden); }},
      {"chi4 values and minimal targets", chi4_and_minimal_targets},
      {"Euler necessity and homotopy-equivalence report", rigidity_and_euler},
      {"GF(2) characteristic elements, sphere models and (*) splitting", gf2_layer},
      {"universal dominator for pi1 = Z", universal_dominator},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only && static_cast<int>(i) + 1 != only) continue;
    Result res;
    try {
      res = criteria[i].second();
    } catch (const std::exception& e) {
      res.pass = false;
      res.notes.push_back(std::string("exception: ") + e.what());
    }
    failures += !res.pass;
    std::cout << "criterion " << i + 1 << " " << (res.pass ? "PASS" : "FAIL") << ": " << criteria[i].first << "\n";
    for (const auto& n : res.notes) std::cout << "    " << n << "\n";
    std::cout.flush();
  }
  return failures ? 1 : 0;
}
