#pragma once

#include <kummer/matrix.hpp>

#include <cctype>
#include <string>
#include <vector>

namespace kummer {

// Free Z-module of finite rank with a symmetric integer Gram matrix.
// Degenerate forms are allowed at construction; operations that need
// det != 0 check for themselves.
class IntegralLattice {
 public:
  IntegralLattice() = default;

  explicit IntegralLattice(IntMatrix gram) : gram_(std::move(gram)) {
    if (!gram_.is_symmetric())
      throw std::invalid_argument("lattice Gram matrix must be symmetric");
  }

  int rank() const { return gram_.rows(); }
  const IntMatrix& gram() const { return gram_; }

  bool operator==(const IntegralLattice& o) const { return gram_ == o.gram_; }

 private:
  IntMatrix gram_;
};

inline Int discriminant(const IntegralLattice& L) { return determinant(L.gram()); }

inline bool is_even(const IntegralLattice& L) {
  for (int i = 0; i < L.rank(); ++i)
    if (L.gram()(i, i) % 2 != 0) return false;
  return true;
}

inline Inertia inertia(const IntegralLattice& L) { return symmetric_inertia(L.gram()); }

inline bool is_nondegenerate(const IntegralLattice& L) { return discriminant(L) != 0; }

inline bool is_definite(const IntegralLattice& L) {
  const Inertia s = inertia(L);
  return s.zero == 0 && (s.positive == 0 || s.negative == 0);
}

// Bilinear form scaled by n; the underlying module is unchanged.
inline IntegralLattice twist(const IntegralLattice& L, const Int& n) {
  if (n == 0) throw std::invalid_argument("twist by 0 degenerates the form");
  IntMatrix g = L.gram();
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) g(i, j) *= n;
  return IntegralLattice(std::move(g));
}

inline IntegralLattice direct_sum(const IntegralLattice& a, const IntegralLattice& b) {
  IntMatrix g(a.rank() + b.rank(), a.rank() + b.rank());
  for (int i = 0; i < a.rank(); ++i)
    for (int j = 0; j < a.rank(); ++j) g(i, j) = a.gram()(i, j);
  for (int i = 0; i < b.rank(); ++i)
    for (int j = 0; j < b.rank(); ++j) g(a.rank() + i, a.rank() + j) = b.gram()(i, j);
  return IntegralLattice(std::move(g));
}

// Invariant factors > 1 of the Gram matrix: the finite group L*/L.
inline std::vector<Int> discriminant_group(const IntegralLattice& L) {
  if (!is_nondegenerate(L))
    throw std::invalid_argument("discriminant group needs a nondegenerate lattice");
  std::vector<Int> factors;
  for (const Int& d : smith_normal_form(L.gram()).factors)
    if (d > 1) factors.push_back(d);
  return factors;
}

// Standard lattices by name: the hyperbolic plane U, and the ADE root
// lattices A_k (k>=1), D_k (k>=4), E_6, E_7, E_8. Root lattices are taken
// NEGATIVE definite (diagonal -2, +1 per Dynkin edge), matching the
// intersection form on the exceptional (-2)-curves of a resolved rational
// double point.
inline IntegralLattice make_standard(const std::string& name) {
  if (name == "U") return IntegralLattice(IntMatrix{{0, 1}, {1, 0}});

  if (name.size() < 2 || (name[0] != 'A' && name[0] != 'D' && name[0] != 'E'))
    throw std::invalid_argument("unknown lattice name: " + name);
  for (size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i])))
      throw std::invalid_argument("unknown lattice name: " + name);
  const int k = std::stoi(name.substr(1));

  std::vector<std::pair<int, int>> edges;
  int n = k;
  if (name[0] == 'A') {
    if (k < 1) throw std::invalid_argument("A_k needs k >= 1");
    for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  } else if (name[0] == 'D') {
    if (k < 4) throw std::invalid_argument("D_k needs k >= 4");
    for (int i = 0; i + 1 < k - 2; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(k - 3, k - 2);
    edges.emplace_back(k - 3, k - 1);
  } else {
    if (k < 6 || k > 8) throw std::invalid_argument("E_k needs k in {6,7,8}");
    // Bourbaki numbering: chain 1-3-4-5-..., node 2 hangs off node 4.
    edges = {{0, 2}, {2, 3}, {3, 4}, {1, 3}};
    for (int i = 4; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  }

  IntMatrix g(n, n);
  for (int i = 0; i < n; ++i) g(i, i) = -2;
  for (auto [u, v] : edges) {
    g(u, v) = 1;
    g(v, u) = 1;
  }
  return IntegralLattice(std::move(g));
}

}  // namespace kummer
