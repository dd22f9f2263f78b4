#pragma once

#include <utility>
#include <vector>

#include "vinberg/errors.hpp"
#include "vinberg/matrix.hpp"
#include "vinberg/rational.hpp"

namespace vinberg {

// Column-style Hermite normal form of the full-rank lattice generated by the
// columns of gens: upper triangular, positive diagonal, and every entry to
// the right of a pivot reduced into [0, pivot).  Canonical, so lattice
// equality is matrix equality.
//
// Works bottom row up: unimodular column combinations concentrate the gcd of
// row i into a single column, which becomes the pivot column for that row;
// the rest of the columns then vanish on rows >= i.
inline IntMatrix hnf_basis(const IntMatrix& gens) {
  const int n = gens.rows();
  require(n > 0, "hnf of an empty lattice");
  std::vector<std::vector<Int>> active;
  for (int j = 0; j < gens.cols(); ++j) {
    std::vector<Int> c = gens.col(j);
    bool zero = true;
    for (const Int& x : c)
      if (x != 0) {
        zero = false;
        break;
      }
    if (!zero) active.push_back(std::move(c));
  }

  std::vector<std::vector<Int>> pivot(n);
  for (int i = n - 1; i >= 0; --i) {
    int acc = -1;
    for (size_t k = 0; k < active.size(); ++k) {
      if (active[k][i] == 0) continue;
      if (acc < 0) {
        acc = static_cast<int>(k);
        continue;
      }
      Int g, u, v;
      xgcd(active[acc][i], active[k][i], g, u, v);
      Int fa = divexact(active[acc][i], g);
      Int fk = divexact(active[k][i], g);
      // [u v; -fk fa] has determinant 1, so the span is unchanged.
      for (int r = 0; r < n; ++r) {
        Int na = u * active[acc][r] + v * active[k][r];
        Int nk = fa * active[k][r] - fk * active[acc][r];
        active[acc][r] = std::move(na);
        active[k][r] = std::move(nk);
      }
      require(active[k][i] == 0, "hnf elimination left a residue");
    }
    if (acc < 0) fail(ErrorCode::InvalidArgument, "lattice generators are rank deficient");
    std::vector<Int> p = std::move(active[acc]);
    active.erase(active.begin() + acc);
    if (p[i] < 0)
      for (Int& x : p) x = -x;
    pivot[i] = std::move(p);
  }

  IntMatrix h(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i <= j; ++i) h(i, j) = pivot[j][i];

  // Reduce the entries right of each pivot.  Subtracting column i only
  // touches rows <= i, so sweeping i downward keeps earlier rows reducible.
  for (int j = 1; j < n; ++j)
    for (int i = j - 1; i >= 0; --i) {
      Int q = fdiv(h(i, j), h(i, i));
      if (q == 0) continue;
      for (int r = 0; r <= i; ++r) h(r, j) -= q * h(r, i);
    }
  return h;
}

// True iff v lies in the lattice whose basis is the HNF matrix h.
inline bool hnf_contains(const IntMatrix& h, const std::vector<Int>& v) {
  const int n = h.rows();
  require(static_cast<int>(v.size()) == n, "dimension mismatch in hnf_contains");
  std::vector<Int> rem = v;
  for (int i = n - 1; i >= 0; --i) {
    if (rem[i] % h(i, i) != 0) return false;
    Int q = divexact(rem[i], h(i, i));
    for (int r = 0; r <= i; ++r) rem[r] -= q * h(r, i);
  }
  return true;
}

}  // namespace vinberg
