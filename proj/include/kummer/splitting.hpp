#pragma once

#include <kummer/short_vectors.hpp>

#include <numeric>

namespace kummer {

// A found orthogonal splitting L = U (+) complement, with certificate data:
// e.e = f.f = 0, e.f = 1, and basis = [e f k_1 .. k_{r-2}] unimodular with
// basis^T gram basis = U (+) complement.gram.
struct HyperbolicSplit {
  std::vector<Int> e, f;
  IntegralLattice complement;
  IntMatrix basis;
};

namespace detail {

struct IsotropicVector {
  std::vector<long long> coords;
  std::vector<Int> gv;  // gram * coords
  long long maxabs;
};

// All primitive isotropic vectors with coordinates in [-bound, bound], one
// per +-pair, ordered by max-abs coordinate then lexicographically. The
// ordering puts sparse small vectors first so searches succeed early.
inline std::vector<IsotropicVector> isotropic_in_box(const IntMatrix& g, long long bound) {
  const int n = g.rows();
  std::vector<IsotropicVector> out;
  std::vector<long long> v(n, -bound);
  for (;;) {
    long long maxabs = 0;
    int first_nonzero = -1;
    for (int i = 0; i < n; ++i) {
      if (v[i] != 0 && first_nonzero < 0) first_nonzero = i;
      maxabs = std::max(maxabs, std::abs(v[i]));
    }
    if (first_nonzero >= 0 && v[first_nonzero] > 0) {  // canonical sign
      long long gcd = 0;
      for (long long c : v) gcd = std::gcd(gcd, c);
      if (gcd == 1 && eval_form(g, v) == 0) {
        std::vector<Int> gv(n, Int(0));
        for (int r = 0; r < n; ++r)
          for (int c = 0; c < n; ++c)
            if (v[c] != 0) gv[r] += g(r, c) * v[c];
        out.push_back({v, std::move(gv), maxabs});
      }
    }
    int i = n - 1;
    while (i >= 0 && v[i] == bound) v[i--] = -bound;
    if (i < 0) break;
    ++v[i];
  }
  std::sort(out.begin(), out.end(), [](const IsotropicVector& a, const IsotropicVector& b) {
    if (a.maxabs != b.maxabs) return a.maxabs < b.maxabs;
    return a.coords < b.coords;
  });
  return out;
}

// Basis of { x : x.e = 0, x.f = 0 } from the right Smith transform of the
// 2 x r matrix with rows (g e)^T and (g f)^T.
inline std::vector<std::vector<Int>> orthogonal_kernel(const std::vector<Int>& ge,
                                                       const std::vector<Int>& gf) {
  const int n = static_cast<int>(ge.size());
  IntMatrix a(2, n);
  for (int j = 0; j < n; ++j) {
    a(0, j) = ge[j];
    a(1, j) = gf[j];
  }
  const SmithNormalForm snf = smith_normal_form(a);
  std::vector<std::vector<Int>> kernel;
  for (int j = 2; j < n; ++j) {
    std::vector<Int> col(n);
    for (int i = 0; i < n; ++i) col[i] = snf.right(i, j);
    kernel.push_back(std::move(col));
  }
  return kernel;
}

inline HyperbolicSplit make_split(const IntMatrix& g, const std::vector<long long>& e,
                                  const std::vector<long long>& f,
                                  const std::vector<Int>& ge, const std::vector<Int>& gf) {
  const int n = g.rows();
  const std::vector<std::vector<Int>> kernel = orthogonal_kernel(ge, gf);

  IntMatrix basis(n, n);
  for (int i = 0; i < n; ++i) {
    basis(i, 0) = e[i];
    basis(i, 1) = f[i];
    for (size_t j = 0; j < kernel.size(); ++j) basis(i, 2 + static_cast<int>(j)) = kernel[j][i];
  }
  const IntMatrix full = basis.transposed() * g * basis;
  IntMatrix comp(n - 2, n - 2);
  for (int i = 2; i < n; ++i)
    for (int j = 2; j < n; ++j) comp(i - 2, j - 2) = full(i, j);

  // e and f span a unimodular plane, so the plane splits off orthogonally
  // and [e f | kernel] has to be a basis change.
  Int det = determinant(basis);
  if (det != 1 && det != -1)
    throw std::logic_error("hyperbolic split certificate is not unimodular");

  HyperbolicSplit split;
  split.e.assign(e.begin(), e.end());
  split.f.assign(f.begin(), f.end());
  split.complement = IntegralLattice(std::move(comp));
  split.basis = std::move(basis);
  return split;
}

// Visits hyperbolic pairs (e, f) with |coords| <= bound in deterministic
// order until fn returns true. Returns whether fn accepted a pair.
template <typename Fn>
bool scan_hyperbolic_splits(const IntegralLattice& L, long long bound, Fn&& fn) {
  const IntMatrix& g = L.gram();
  const std::vector<IsotropicVector> iso = isotropic_in_box(g, bound);
  for (const IsotropicVector& e : iso) {
    // e.f lies in gcd(g e) Z; only gcd 1 can reach 1.
    if (gcd_all(e.gv) != 1) continue;
    for (const IsotropicVector& f : iso) {
      Int pairing = 0;
      for (size_t t = 0; t < f.coords.size(); ++t)
        if (f.coords[t] != 0) pairing += e.gv[t] * f.coords[t];
      if (pairing != 1 && pairing != -1) continue;
      std::vector<long long> fc = f.coords;
      std::vector<Int> gf = f.gv;
      if (pairing == -1) {
        for (auto& c : fc) c = -c;
        for (auto& c : gf) c = -c;
      }
      if (fn(make_split(g, e.coords, fc, e.gv, gf))) return true;
    }
  }
  return false;
}

}  // namespace detail

// Bounded search for vectors e, f with e.e = f.f = 0, e.f = 1 inside the
// coordinate box |coords| <= search_bound. A miss is NOT a proof that no
// hyperbolic summand exists, only that none lives in the box.
inline std::optional<HyperbolicSplit> find_hyperbolic_summand(const IntegralLattice& L,
                                                              long long search_bound) {
  if (search_bound < 1) throw std::invalid_argument("search bound must be positive");
  if (L.rank() < 2)
    throw std::invalid_argument("hyperbolic summand search needs rank >= 2");
  const Inertia s = inertia(L);
  if (s.zero > 0)
    throw std::invalid_argument("hyperbolic summand search needs a nondegenerate lattice");
  if (s.positive == 0 || s.negative == 0) return std::nullopt;  // definite: no isotropic vectors

  std::optional<HyperbolicSplit> found;
  detail::scan_hyperbolic_splits(L, search_bound, [&](HyperbolicSplit split) {
    found = std::move(split);
    return true;
  });
  return found;
}

enum class MorrisonVerdict {
  Case_i_rho19,
  Case_i_rho20,
  Case_ii_U_summand,
  Case_iii_U2_summand,
  NotClassified,
};

inline const char* to_string(MorrisonVerdict v) {
  switch (v) {
    case MorrisonVerdict::Case_i_rho19: return "Case_i_rho19";
    case MorrisonVerdict::Case_i_rho20: return "Case_i_rho20";
    case MorrisonVerdict::Case_ii_U_summand: return "Case_ii_U_summand";
    case MorrisonVerdict::Case_iii_U2_summand: return "Case_iii_U2_summand";
    case MorrisonVerdict::NotClassified: return "NotClassified";
  }
  return "?";
}

struct MorrisonClass {
  MorrisonVerdict verdict = MorrisonVerdict::NotClassified;
  std::optional<IntegralLattice> complement;  // T' for cases (ii) and (iii)
  std::optional<IntMatrix> basis;             // gram-congruence onto U^m (+) T'
  long long search_bound = 0;
  int rho = 0;
};

// Classifies a transcendental lattice T of an algebraic K3 surface
// (signature (2, rank-2)) against the large-Picard-number trichotomy:
//   rho in {19,20}          -> case (i), nothing to verify;
//   rho = 18, T = U (+) T'  -> case (ii);
//   rho = 17, T = U^2 (+) T'-> case (iii).
// Splittings are searched inside |coords| <= search_bound, so a
// NotClassified verdict is "not decided within the bound", never a proof.
inline MorrisonClass morrison_classify(const IntegralLattice& T, long long search_bound = 5) {
  const Inertia s = inertia(T);
  if (s.positive != 2 || s.zero != 0)
    throw std::invalid_argument(
        "morrison_classify expects signature (2, rank-2, 0), got " + s.to_string());

  MorrisonClass result;
  result.search_bound = search_bound;
  result.rho = 22 - T.rank();

  if (result.rho >= 19) {
    result.verdict = result.rho >= 20 ? MorrisonVerdict::Case_i_rho20
                                      : MorrisonVerdict::Case_i_rho19;
    return result;
  }
  if (result.rho == 18) {
    if (auto split = find_hyperbolic_summand(T, search_bound)) {
      result.verdict = MorrisonVerdict::Case_ii_U_summand;
      result.complement = split->complement;
      result.basis = split->basis;
    }
    return result;
  }
  if (result.rho == 17) {
    // Try every first split until one of them also splits again.
    detail::scan_hyperbolic_splits(T, search_bound, [&](const HyperbolicSplit& outer) {
      std::optional<HyperbolicSplit> inner =
          find_hyperbolic_summand(outer.complement, search_bound);
      if (!inner) return false;
      result.verdict = MorrisonVerdict::Case_iii_U2_summand;
      result.complement = inner->complement;
      const int n = T.rank();
      IntMatrix lift = IntMatrix::identity(n);
      for (int i = 2; i < n; ++i)
        for (int j = 2; j < n; ++j) lift(i, j) = inner->basis(i - 2, j - 2);
      result.basis = outer.basis * lift;
      return true;
    });
    return result;
  }
  return result;  // rho <= 16: outside the trichotomy
}

enum class SurfaceKind { abelian, k3 };

// Rank/signature consistency of a candidate transcendental lattice: the
// Neron-Severi rank rho forces rank(T) = 6 - rho on an abelian surface and
// 22 - rho on a K3, always with two positive directions and no radical.
inline bool transcendental_consistency(const IntegralLattice& T, SurfaceKind surface, int rho) {
  const int max_rho = surface == SurfaceKind::abelian ? 4 : 20;
  if (rho < 1 || rho > max_rho)
    throw std::invalid_argument("rho out of range for this surface kind");
  const int expected_rank = (surface == SurfaceKind::abelian ? 6 : 22) - rho;
  if (T.rank() != expected_rank) return false;
  const Inertia s = inertia(T);
  return s.positive == 2 && s.zero == 0 && s.negative == expected_rank - 2;
}

}  // namespace kummer
