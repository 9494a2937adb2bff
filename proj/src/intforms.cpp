#include "fourdom/intforms.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "fourdom/error.hpp"

namespace fourdom {

using Rational = boost::multiprecision::cpp_rational;

const char* to_string(Parity parity) { return parity == Parity::Even ? "even" : "odd"; }

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Undecided: return "undecided";
  }
  return "undecided";
}

const char* to_string(SplitObstruction reason) {
  switch (reason) {
    case SplitObstruction::RankDeficit: return "rank-deficit";
    case SplitObstruction::SignatureGap: return "signature-gap";
    case SplitObstruction::SignatureParity: return "signature-parity";
    case SplitObstruction::EvenContainsOdd: return "even-contains-odd";
    case SplitObstruction::NoComplement: return "no-complement";
    case SplitObstruction::NoEmbedding: return "no-embedding";
  }
  return "unknown";
}

namespace {

std::int64_t to_int64(const BigInt& value) {
  if (value > std::numeric_limits<std::int64_t>::max() || value < std::numeric_limits<std::int64_t>::min())
    throw Error(ErrorCode::Internal, "integer overflow converting to int64");
  return static_cast<std::int64_t>(value);
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

BigInt floor_of(const Rational& r) {
  return floor_div(boost::multiprecision::numerator(r), boost::multiprecision::denominator(r));
}

void require_square(const IntMatrix& gram) {
  for (const auto& row : gram)
    if (row.size() != gram.size()) throw Error(ErrorCode::NotSymmetric, "Gram matrix is not square");
}

}  // namespace

Inertia symmetric_inertia(const IntMatrix& gram) {
  require_square(gram);
  const std::size_t n = gram.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = gram[i][j];

  std::vector<std::size_t> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;

  Inertia out;
  auto drop = [&active](std::size_t idx) { active.erase(std::find(active.begin(), active.end(), idx)); };

  while (!active.empty()) {
    auto diag = std::find_if(active.begin(), active.end(), [&](std::size_t i) { return m[i][i] != 0; });
    if (diag != active.end()) {
      const std::size_t p = *diag;
      const Rational pivot = m[p][p];
      (pivot > 0 ? out.positive : out.negative) += 1;
      drop(p);
      for (std::size_t j : active) {
        if (m[j][p] == 0) continue;
        const Rational factor = m[j][p] / pivot;
        for (std::size_t k : active) m[j][k] -= factor * m[p][k];
      }
      continue;
    }

    // Every remaining diagonal entry vanishes: pivot on a hyperbolic block.
    std::size_t bi = n, bj = n;
    for (std::size_t a = 0; a < active.size() && bi == n; ++a)
      for (std::size_t b = a + 1; b < active.size(); ++b)
        if (m[active[a]][active[b]] != 0) {
          bi = active[a];
          bj = active[b];
          break;
        }
    if (bi == n) {
      out.zero = static_cast<int>(active.size());
      break;
    }
    const Rational off = m[bi][bj];
    out.positive += 1;
    out.negative += 1;
    drop(bi);
    drop(bj);
    std::vector<std::vector<Rational>> update(active.size(), std::vector<Rational>(active.size()));
    for (std::size_t a = 0; a < active.size(); ++a)
      for (std::size_t b = 0; b < active.size(); ++b) {
        const std::size_t k = active[a], l = active[b];
        update[a][b] = (m[k][bi] * m[bj][l] + m[k][bj] * m[bi][l]) / off;
      }
    for (std::size_t a = 0; a < active.size(); ++a)
      for (std::size_t b = 0; b < active.size(); ++b) m[active[a]][active[b]] -= update[a][b];
  }
  return out;
}

BigInt integer_determinant(const IntMatrix& gram) {
  require_square(gram);
  const std::size_t n = gram.size();
  if (n == 0) return 1;
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = gram[i][j];

  BigInt sign = 1;
  BigInt previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / previous;
      m[i][k] = 0;
    }
    previous = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// -- IntForm ------------------------------------------------------------------

IntForm IntForm::make(IntMatrix gram) {
  require_square(gram);
  const std::size_t n = gram.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (gram[i][j] != gram[j][i]) throw Error(ErrorCode::NotSymmetric, "Gram matrix is not symmetric");

  const BigInt det = integer_determinant(gram);
  if (det != 1 && det != -1) {
    std::ostringstream os;
    os << "Gram matrix has determinant " << det << ", expected +1 or -1";
    throw Error(ErrorCode::NotUnimodular, os.str());
  }

  const Inertia inertia = symmetric_inertia(gram);
  if (inertia.zero != 0) throw Error(ErrorCode::Internal, "unimodular matrix reported degenerate");

  Parity parity = Parity::Even;
  for (std::size_t i = 0; i < n; ++i)
    if (gram[i][i] % 2 != 0) parity = Parity::Odd;

  const int signature = inertia.positive - inertia.negative;
  if (parity == Parity::Even && signature % 8 != 0)
    throw Error(ErrorCode::Internal, "even unimodular form with signature not divisible by 8");

  return IntForm(std::move(gram), signature, parity);
}

BigInt IntForm::pair(const IntVector& v, const IntVector& w) const {
  BigInt total = 0;
  for (std::size_t i = 0; i < gram_.size(); ++i) {
    if (v[i] == 0) continue;
    BigInt row = 0;
    for (std::size_t j = 0; j < gram_.size(); ++j) row += BigInt(gram_[i][j]) * w[j];
    total += row * v[i];
  }
  return total;
}

IntForm IntForm::negated() const {
  IntMatrix g = gram_;
  for (auto& row : g)
    for (auto& e : row) e = -e;
  return IntForm(std::move(g), -signature_, parity_);
}

IntForm direct_sum(const IntForm& f, const IntForm& g) {
  const std::size_t a = f.gram_.size(), b = g.gram_.size();
  IntMatrix m(a + b, IntVector(a + b, 0));
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < a; ++j) m[i][j] = f.gram_[i][j];
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j) m[a + i][a + j] = g.gram_[i][j];
  return IntForm(std::move(m), f.signature_ + g.signature_, combine(f.parity_, g.parity_));
}

namespace forms {

IntForm hyperbolic() { return IntForm::make({{0, 1}, {1, 0}}); }

IntForm e8() {
  // Cartan matrix of the E8 Dynkin diagram: chain 0-1-2-3-4-5-6, node 7 on node 4.
  IntMatrix m(8, IntVector(8, 0));
  for (int i = 0; i < 8; ++i) m[i][i] = 2;
  auto edge = [&m](int a, int b) { m[a][b] = m[b][a] = -1; };
  for (int i = 0; i < 6; ++i) edge(i, i + 1);
  edge(4, 7);
  return IntForm::make(std::move(m));
}

IntForm diagonal(int plus, int minus) {
  if (plus < 0 || minus < 0) throw Error(ErrorCode::InvalidArgument, "negative count in diagonal form");
  const int n = plus + minus;
  IntMatrix m(n, IntVector(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = i < plus ? 1 : -1;
  return IntForm::make(std::move(m));
}

IntForm ht_augmentation() {
  return IntForm::make({{7, 6, 3, 2}, {6, 7, 2, 3}, {3, 2, 2, 0}, {2, 3, 0, 2}});
}

IntForm repeat(const IntForm& f, int copies) {
  IntForm out;
  for (int i = 0; i < copies; ++i) out = direct_sum(out, f);
  return out;
}

}  // namespace forms

// -- classification -----------------------------------------------------------

std::string DefiniteCatalog::label() const {
  std::string body;
  if (e8 == 0 && ones == 0) return "0";
  if (e8 > 0) body = e8 == 1 ? "E8" : std::to_string(e8) + "E8";
  if (ones > 0) body += (body.empty() ? "" : "+") + std::string("I_") + std::to_string(ones);
  if (sign > 0) return body;
  const bool compound = e8 > 0 && ones > 0;
  return compound ? "-(" + body + ")" : "-" + body;
}

IntForm DefiniteCatalog::representative() const {
  IntForm out = direct_sum(forms::repeat(forms::e8(), e8), forms::diagonal(ones, 0));
  return sign > 0 ? out : out.negated();
}

std::string describe(const FormClass& cls) {
  struct Visitor {
    std::string operator()(const IndefiniteOdd& c) const {
      return "I(" + std::to_string(c.plus) + "," + std::to_string(c.minus) + ")";
    }
    std::string operator()(const IndefiniteEven& c) const {
      std::string out = std::to_string(c.hyperbolic) + "H";
      if (c.e8 != 0) out += (c.e8 > 0 ? "+" : "-") + std::to_string(std::abs(c.e8)) + "E8";
      return out;
    }
    std::string operator()(const DefiniteCatalog& c) const { return c.label(); }
    std::string operator()(const DefiniteUnclassified& c) const {
      return "definite(rank " + std::to_string(c.invariants.rank) + ", signature " +
             std::to_string(c.invariants.signature) + ", " + to_string(c.invariants.parity) + ")";
    }
  };
  return std::visit(Visitor{}, cls);
}

FormClass classify(const IntForm& f, const FormOptions& options) {
  const int r = f.rank(), s = f.signature();
  if (f.is_indefinite()) {
    if (f.parity() == Parity::Odd) return IndefiniteOdd{(r + s) / 2, (r - s) / 2};
    const int c = s / 8;
    return IndefiniteEven{(r - 8 * std::abs(c)) / 2, c};
  }
  if (r == 0) return DefiniteCatalog{};
  if (r > std::min(options.definite_cap, kDefiniteCatalogLimit)) return DefiniteUnclassified{f.invariants()};

  const int sign = s > 0 ? 1 : -1;
  std::vector<DefiniteCatalog> candidates;
  if (f.parity() == Parity::Even) {
    candidates.push_back({sign, r / 8, 0});
  } else {
    candidates.push_back({sign, 0, r});
    if (r >= 9) candidates.push_back({sign, 1, r - 8});
  }
  for (const auto& candidate : candidates)
    if (embedding_oracle(f, candidate.representative(), options).found) return candidate;
  throw Error(ErrorCode::Internal, "definite form of rank <= 9 matched no catalog entry");
}

Verdict is_isomorphic(const IntForm& f, const IntForm& g, const FormOptions& options) {
  if (f.invariants() != g.invariants()) return Verdict::No;
  if (f == g || f.is_indefinite() || f.rank() == 0) return Verdict::Yes;
  if (f.rank() > options.definite_cap) return Verdict::Undecided;
  return embedding_oracle(f, g, options).found ? Verdict::Yes : Verdict::No;
}

bool exists_unimodular(int rank, int signature, Parity parity) {
  if (rank < 0) return false;
  const int abs_sig = std::abs(signature);
  if (rank == 0) return signature == 0 && parity == Parity::Even;
  if (abs_sig > rank) return false;
  if ((rank - signature) % 2 != 0) return false;
  if (parity == Parity::Odd) return true;
  if (signature % 8 != 0) return false;
  return rank == abs_sig || rank - abs_sig >= 2;
}

IntForm representative(const FormInvariants& inv) {
  if (!exists_unimodular(inv.rank, inv.signature, inv.parity))
    throw Error(ErrorCode::InvalidArgument, "no unimodular form with the requested invariants");
  const int r = inv.rank, s = inv.signature;
  if (inv.parity == Parity::Odd) return forms::diagonal((r + s) / 2, (r - s) / 2);
  const int c = s / 8;
  IntForm e8s = forms::repeat(c >= 0 ? forms::e8() : forms::e8().negated(), std::abs(c));
  return direct_sum(forms::repeat(forms::hyperbolic(), (r - 8 * std::abs(c)) / 2), e8s);
}

// -- vector enumeration ---------------------------------------------------------

std::vector<IntVector> vectors_of_norm(const IntForm& x, std::int64_t norm) {
  if (!x.is_definite()) throw Error(ErrorCode::InvalidArgument, "vectors_of_norm requires a definite form");
  const int n = x.rank();
  const int sign = x.signature() >= 0 ? 1 : -1;
  const Rational target = Rational(norm * sign);
  if (n == 0 || target <= 0) return {};

  // G = L D L^T over the rationals, L unit lower triangular.
  std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g[i][j] = Rational(sign * x(i, j));
  std::vector<std::vector<Rational>> l(n, std::vector<Rational>(n));
  std::vector<Rational> d(n);
  for (int j = 0; j < n; ++j) {
    Rational acc = g[j][j];
    for (int k = 0; k < j; ++k) acc -= l[j][k] * l[j][k] * d[k];
    d[j] = acc;
    l[j][j] = 1;
    for (int i = j + 1; i < n; ++i) {
      Rational v = g[i][j];
      for (int k = 0; k < j; ++k) v -= l[i][k] * l[j][k] * d[k];
      l[i][j] = v / d[j];
    }
  }

  std::vector<IntVector> out;
  IntVector v(n, 0);
  // Q(v) = sum_i d_i (v_i - c_i)^2 with c_i = -sum_{j>i} l_ji v_j.
  std::function<void(int, const Rational&)> descend = [&](int i, const Rational& budget) {
    if (i < 0) {
      if (budget == 0 && std::any_of(v.begin(), v.end(), [](std::int64_t c) { return c != 0; }))
        out.push_back(v);
      return;
    }
    Rational center = 0;
    for (int j = i + 1; j < n; ++j) center -= l[j][i] * v[j];
    auto cost = [&](const BigInt& coord) -> Rational {
      const Rational diff = Rational(coord) - center;
      return d[i] * diff * diff;
    };
    const BigInt start = floor_of(center);
    for (BigInt c = start;; --c) {
      const Rational spend = cost(c);
      if (spend > budget) break;
      v[i] = to_int64(c);
      descend(i - 1, budget - spend);
    }
    for (BigInt c = start + 1;; ++c) {
      const Rational spend = cost(c);
      if (spend > budget) break;
      v[i] = to_int64(c);
      descend(i - 1, budget - spend);
    }
    v[i] = 0;
  };
  descend(n - 1, target);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<IntVector> box_vectors_of_norm(const IntForm& x, std::int64_t norm, int bound) {
  const int n = x.rank();
  std::vector<IntVector> out;
  if (n == 0) return out;
  IntVector v(n, -bound);
  while (true) {
    if (std::any_of(v.begin(), v.end(), [](std::int64_t c) { return c != 0; }) && x.pair(v, v) == norm)
      out.push_back(v);
    int k = n - 1;
    while (k >= 0 && v[k] == bound) v[k--] = -bound;
    if (k < 0) break;
    ++v[k];
  }
  return out;
}

IntVector apply_gram(const IntForm& x, const IntVector& v) {
  const int n = x.rank();
  IntVector out(n, 0);
  for (int i = 0; i < n; ++i) {
    BigInt acc = 0;
    for (int j = 0; j < n; ++j) acc += BigInt(x(i, j)) * v[j];
    out[i] = to_int64(acc);
  }
  return out;
}

std::int64_t dot(const IntVector& a, const IntVector& b) {
  BigInt acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += BigInt(a[i]) * b[i];
  return to_int64(acc);
}

}  // namespace

IntMatrix restricted_gram(const IntForm& x, const std::vector<IntVector>& vectors) {
  const std::size_t k = vectors.size();
  IntMatrix out(k, IntVector(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) out[i][j] = to_int64(x.pair(vectors[i], vectors[j]));
  return out;
}

std::vector<IntVector> orthogonal_complement_basis(const IntForm& x, const std::vector<IntVector>& vectors) {
  // Kernel of the k x n map w -> (v_i . w) by unimodular column operations.
  const std::size_t n = static_cast<std::size_t>(x.rank());
  const std::size_t k = vectors.size();
  std::vector<std::vector<BigInt>> m(k, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < k; ++i) {
    const IntVector row = apply_gram(x, vectors[i]);
    for (std::size_t j = 0; j < n; ++j) m[i][j] = row[j];
  }
  std::vector<std::vector<BigInt>> u(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;

  auto swap_cols = [&](std::size_t a, std::size_t b) {
    for (auto& row : m) std::swap(row[a], row[b]);
    for (auto& row : u) std::swap(row[a], row[b]);
  };
  auto axpy_col = [&](std::size_t dst, std::size_t src, const BigInt& q) {
    for (auto& row : m) row[dst] -= q * row[src];
    for (auto& row : u) row[dst] -= q * row[src];
  };

  std::size_t col = 0;
  for (std::size_t i = 0; i < k && col < n; ++i) {
    while (true) {
      std::size_t best = n;
      for (std::size_t j = col; j < n; ++j)
        if (m[i][j] != 0 && (best == n || abs(m[i][j]) < abs(m[i][best]))) best = j;
      if (best == n) break;
      if (best != col) swap_cols(col, best);
      bool done = true;
      for (std::size_t j = col + 1; j < n; ++j) {
        if (m[i][j] == 0) continue;
        axpy_col(j, col, m[i][j] / m[i][col]);
        if (m[i][j] != 0) done = false;
      }
      if (done) {
        ++col;
        break;
      }
    }
  }

  std::vector<IntVector> basis;
  for (std::size_t j = col; j < n; ++j) {
    IntVector w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = to_int64(u[i][j]);
    basis.push_back(std::move(w));
  }
  return basis;
}

EmbeddingResult embedding_oracle(const IntForm& x, const IntForm& y, const FormOptions& options) {
  if (x.rank() > options.definite_cap) {
    throw Error(ErrorCode::RankTooLarge, "embedding oracle: rank " + std::to_string(x.rank()) +
                                             " exceeds the configured cap " + std::to_string(options.definite_cap));
  }
  EmbeddingResult result;
  result.exhaustive = x.is_definite();
  const int k = y.rank();
  if (k == 0) {
    result.found = true;
    result.complement = x;
    return result;
  }
  if (k > x.rank()) {
    result.exhaustive = true;
    return result;
  }

  struct Candidate {
    IntVector v;
    IntVector gv;
  };
  std::map<std::int64_t, std::vector<Candidate>> by_norm;
  for (int i = 0; i < k; ++i) {
    const std::int64_t norm = y(i, i);
    if (by_norm.count(norm)) continue;
    std::vector<IntVector> vecs =
        x.is_definite() ? vectors_of_norm(x, norm) : box_vectors_of_norm(x, norm, options.box_bound);
    std::vector<Candidate> cands;
    cands.reserve(vecs.size());
    for (auto& v : vecs) cands.push_back({v, apply_gram(x, v)});
    by_norm.emplace(norm, std::move(cands));
  }

  std::vector<const Candidate*> chosen(k, nullptr);
  std::function<bool(int)> place = [&](int i) -> bool {
    if (i == k) return true;
    for (const Candidate& c : by_norm.at(y(i, i))) {
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = dot(c.gv, chosen[j]->v) == y(i, j);
      if (!ok) continue;
      chosen[i] = &c;
      if (place(i + 1)) return true;
    }
    return false;
  };
  if (!place(0)) return result;

  result.found = true;
  for (const Candidate* c : chosen) result.basis.push_back(c->v);
  const auto complement = orthogonal_complement_basis(x, result.basis);
  result.complement = IntForm::make(restricted_gram(x, complement));
  return result;
}

SplitDecision split_off(const IntForm& x, const IntForm& y, const FormOptions& options) {
  SplitDecision out;
  const int r = x.rank() - y.rank();
  const int s = x.signature() - y.signature();

  auto yes = [&out](const FormInvariants& inv) {
    out.outcome = Verdict::Yes;
    out.complement = inv;
    return out;
  };
  auto no = [&out](SplitObstruction reason, std::string detail) {
    out.outcome = Verdict::No;
    out.obstruction = reason;
    out.detail = std::move(detail);
    return out;
  };

  if (x == y) {
    out.complement_form = IntForm{};
    return yes({0, 0, Parity::Even});
  }
  if (y.rank() == 0) {
    out.complement_form = x;
    return yes(x.invariants());
  }
  if (r < 0)
    return no(SplitObstruction::RankDeficit, "rank difference " + std::to_string(r) + " is negative");
  if (std::abs(s) > r)
    return no(SplitObstruction::SignatureGap, "|signature difference| " + std::to_string(std::abs(s)) +
                                                  " exceeds rank difference " + std::to_string(r));
  if ((r - s) % 2 != 0)
    return no(SplitObstruction::SignatureParity, "signature difference and rank difference have different parity");
  if (x.parity() == Parity::Even && y.parity() == Parity::Odd)
    return no(SplitObstruction::EvenContainsOdd, "an even form has no odd orthogonal summand");

  if (x.is_indefinite()) {
    std::vector<Parity> choices;
    if (x.parity() == Parity::Even) choices = {Parity::Even};
    else if (y.parity() == Parity::Even) choices = {Parity::Odd};
    else choices = {Parity::Even, Parity::Odd};
    for (Parity p : choices)
      if (exists_unimodular(r, s, p)) return yes({r, s, p});
    return no(SplitObstruction::NoComplement, "no unimodular complement with rank " + std::to_string(r) +
                                                  " and signature " + std::to_string(s) + " has compatible parity");
  }

  if (x.rank() > options.definite_cap) {
    out.outcome = Verdict::Undecided;
    out.detail = "definite form of rank " + std::to_string(x.rank()) + " exceeds the cap " +
                 std::to_string(options.definite_cap);
    return out;
  }
  EmbeddingResult found = embedding_oracle(x, y, options);
  if (!found.found) return no(SplitObstruction::NoEmbedding, "no isometric copy of y inside the definite form x");
  out.witness = std::move(found.basis);
  out.complement_form = found.complement;
  return yes(found.complement->invariants());
}

}  // namespace fourdom
