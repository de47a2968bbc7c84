#pragma once

#include <kummer/lattice.hpp>

#include <cmath>
#include <cstdlib>
#include <optional>

namespace kummer {

// Raised where an answer exists mathematically but this operation cannot
// decide it (e.g. isometry of indefinite lattices).
class undecidable_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ShortVector {
  std::vector<long long> coords;  // one representative per +-pair
  Int norm;                       // v.v under the lattice's own Gram matrix
};

namespace detail {

inline Int eval_form(const IntMatrix& g, const std::vector<long long>& v) {
  Int q = 0;
  for (int i = 0; i < g.rows(); ++i) {
    if (v[i] == 0) continue;
    Int row = 0;
    for (int j = 0; j < g.cols(); ++j)
      if (v[j] != 0) row += g(i, j) * v[j];
    q += row * v[i];
  }
  return q;
}

// Rational LDL^T of a positive definite matrix: g = R^T diag(d) R with R
// unit upper triangular. Positive definiteness keeps every d[i] > 0, so no
// pivoting is needed.
struct RationalCholesky {
  std::vector<Rat> d;
  std::vector<std::vector<Rat>> r;
};

inline RationalCholesky ldlt_positive_definite(const IntMatrix& g) {
  const int n = g.rows();
  RationalCholesky ch;
  ch.d.assign(n, Rat(0));
  ch.r.assign(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    Rat di = Rat(g(i, i));
    for (int l = 0; l < i; ++l) di -= ch.d[l] * ch.r[l][i] * ch.r[l][i];
    ch.d[i] = di;
    ch.r[i][i] = 1;
    for (int j = i + 1; j < n; ++j) {
      Rat v = Rat(g(i, j));
      for (int l = 0; l < i; ++l) v -= ch.d[l] * ch.r[l][i] * ch.r[l][j];
      ch.r[i][j] = v / di;
    }
  }
  return ch;
}

// All x with 0 < x^T g x <= bound for positive definite g, one per +-pair.
// Fincke-Pohst: integer ranges per level come from a double estimate widened
// by a guard band, each candidate is then accepted by the exact rational
// inequality, so rounding can never lose a vector.
inline void enumerate_positive_definite(const IntMatrix& g, const Int& bound,
                                        std::vector<std::vector<long long>>& out) {
  const int n = g.rows();
  if (n == 0) return;
  const RationalCholesky ch = ldlt_positive_definite(g);
  const Rat budget = Rat(bound);

  std::vector<long long> x(n, 0);
  std::vector<Rat> centre(n, Rat(0));   // sum_{j>i} r[i][j] x[j]
  std::vector<Rat> used(n + 1, Rat(0)); // quadratic mass of levels > i

  auto recurse = [&](auto&& self, int i) -> void {
    if (i < 0) {
      for (int t = 0; t < n; ++t) {
        if (x[t] == 0) continue;
        if (x[t] > 0) out.push_back(x);  // canonical sign: first nonzero > 0
        return;
      }
      return;  // zero vector
    }
    Rat u = 0;
    for (int j = i + 1; j < n; ++j)
      if (x[j] != 0) u += ch.r[i][j] * x[j];
    centre[i] = u;
    const Rat room = (budget - used[i + 1]) / ch.d[i];  // (x_i + u)^2 <= room
    const double approx = std::sqrt(std::max(0.0, static_cast<double>(room)));
    const double uc = static_cast<double>(u);
    const long long lo = static_cast<long long>(std::floor(-uc - approx)) - 1;
    const long long hi = static_cast<long long>(std::ceil(-uc + approx)) + 1;
    for (long long c = lo; c <= hi; ++c) {
      const Rat y = Rat(c) + u;
      const Rat mass = ch.d[i] * y * y;
      if (used[i + 1] + mass > budget) continue;
      x[i] = c;
      used[i] = used[i + 1] + mass;
      self(self, i - 1);
    }
    x[i] = 0;
  };
  recurse(recurse, n - 1);
}

}  // namespace detail

// Complete list of vectors v with 0 < |v.v| <= bound in a definite lattice,
// one per +-pair, sorted by |norm| then coordinates.
inline std::vector<ShortVector> short_vectors(const IntegralLattice& L, const Int& bound) {
  if (bound <= 0) throw std::invalid_argument("short_vectors needs a positive bound");
  const Inertia s = inertia(L);
  if (s.zero > 0 || (s.positive > 0 && s.negative > 0))
    throw std::invalid_argument("short_vectors needs a definite lattice");

  IntMatrix g = L.gram();
  const bool negative = s.negative > 0;
  if (negative)
    for (int i = 0; i < g.rows(); ++i)
      for (int j = 0; j < g.cols(); ++j) g(i, j) = -g(i, j);

  std::vector<std::vector<long long>> raw;
  detail::enumerate_positive_definite(g, bound, raw);

  std::vector<ShortVector> res;
  res.reserve(raw.size());
  for (auto& v : raw) {
    Int q = detail::eval_form(L.gram(), v);
    res.push_back({std::move(v), std::move(q)});
  }
  std::sort(res.begin(), res.end(), [](const ShortVector& a, const ShortVector& b) {
    const Int na = a.norm < 0 ? Int(-a.norm) : a.norm;
    const Int nb = b.norm < 0 ? Int(-b.norm) : b.norm;
    if (na != nb) return na < nb;
    return a.coords < b.coords;
  });
  return res;
}

struct IsometryResult {
  bool isometric = false;
  std::optional<IntMatrix> certificate;  // s with s^T gram1 s = gram2
};

// Decides isometry of definite lattices by backtracking over short vectors:
// column j of the certificate must be a vector of norm gram2(j,j) in L1 whose
// pairwise products reproduce gram2 exactly. short_vectors is complete up to
// sign, so trying both signs of every candidate makes the search exhaustive.
inline IsometryResult is_isometric_definite(const IntegralLattice& L1,
                                            const IntegralLattice& L2,
                                            int max_rank = 8) {
  for (const IntegralLattice* L : {&L1, &L2}) {
    const Inertia s = inertia(*L);
    if (L->rank() > 0 && (s.zero > 0 || (s.positive > 0 && s.negative > 0)))
      throw undecidable_error(
          "isometry testing is only decided for definite lattices");
    if (L->rank() > max_rank)
      throw std::invalid_argument("isometry testing limited to rank <= " +
                                  std::to_string(max_rank));
  }
  if (L1.rank() != L2.rank()) return {false, std::nullopt};
  const int n = L1.rank();
  if (n == 0) return {true, IntMatrix(0, 0)};
  if (inertia(L1) != inertia(L2)) return {false, std::nullopt};
  if (discriminant(L1) != discriminant(L2)) return {false, std::nullopt};
  if (is_even(L1) != is_even(L2)) return {false, std::nullopt};

  Int maxdiag = 0;
  for (int j = 0; j < n; ++j) {
    Int a = L2.gram()(j, j) < 0 ? Int(-L2.gram()(j, j)) : Int(L2.gram()(j, j));
    if (a > maxdiag) maxdiag = a;
    if (a == 0) return {false, std::nullopt};  // definite => nonzero diagonal
  }

  const std::vector<ShortVector> pool = short_vectors(L1, maxdiag);
  // Candidates per column, both signs.
  std::vector<std::vector<std::vector<long long>>> cands(n);
  for (int j = 0; j < n; ++j) {
    for (const ShortVector& sv : pool) {
      if (sv.norm != L2.gram()(j, j)) continue;
      cands[j].push_back(sv.coords);
      std::vector<long long> neg(sv.coords.size());
      for (size_t t = 0; t < neg.size(); ++t) neg[t] = -sv.coords[t];
      cands[j].push_back(std::move(neg));
    }
    if (cands[j].empty()) return {false, std::nullopt};
  }

  std::vector<const std::vector<long long>*> chosen(n, nullptr);
  std::vector<std::vector<Int>> gcol(n);  // gram1 * chosen[j], cached

  auto pair_value = [&](const std::vector<Int>& gv, const std::vector<long long>& w) {
    Int s = 0;
    for (int t = 0; t < n; ++t)
      if (w[t] != 0) s += gv[t] * w[t];
    return s;
  };

  auto assign = [&](auto&& self, int j) -> bool {
    if (j == n) return true;
    for (const auto& v : cands[j]) {
      bool ok = true;
      for (int i = 0; i < j && ok; ++i)
        ok = pair_value(gcol[i], v) == L2.gram()(i, j);
      if (!ok) continue;
      chosen[j] = &v;
      gcol[j].assign(n, Int(0));
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
          if (v[c] != 0) gcol[j][r] += L1.gram()(r, c) * v[c];
      if (self(self, j + 1)) return true;
    }
    return false;
  };

  if (!assign(assign, 0)) return {false, std::nullopt};

  IntMatrix s(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) s(i, j) = (*chosen[j])[i];
  // The certificate is re-verified before it leaves this function.
  if (s.transposed() * L1.gram() * s != L2.gram())
    throw std::logic_error("isometry certificate failed verification");
  return {true, std::move(s)};
}

}  // namespace kummer
