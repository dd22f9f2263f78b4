#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vinberg/cartan.hpp"
#include "vinberg/coxeter.hpp"
#include "vinberg/errors.hpp"
#include "vinberg/matrix.hpp"
#include "vinberg/rational.hpp"
#include "vinberg/represent.hpp"

namespace vinberg {

namespace detail {

// Coxeter label of a reflection pair from its pairing product p = α(w)β(v).
// Supported in exact rationals: p ∈ {0,1,2,3} ↦ m ∈ {2,3,4,6}; p ≥ 4 ↦ ∞.
inline int label_from_product(const Rat& p, bool identical, const std::string& pair) {
  if (identical)
    fail(ErrorCode::UnsupportedPairing, "words " + pair + " evaluate to the same reflection");
  if (p == 0) return 2;
  if (p == 1) return 3;
  if (p == 2) return 4;
  if (p == 3) return 6;
  if (p >= 4) return kInfinity;
  fail(ErrorCode::UnsupportedPairing,
       "pairing product " + to_string(p) + " for " + pair + " is outside {0,1,2,3} ∪ [4,∞)");
}

}  // namespace detail

// Restriction of a representation to the reflections named by `words`:
// evaluates each word, factors it as Id − v⊗α, normalizes signs so the
// pairing matrix is a valid Cartan matrix, and packages a ReflectionRep of
// the subgroup with labels recovered from the pairing products.
inline ReflectionRep restrict_along_words(const ReflectionRep& rep,
                                          const std::vector<std::vector<int>>& words) {
  const int k = static_cast<int>(words.size());
  if (k < 1) fail(ErrorCode::InvalidArgument, "need at least one word");
  std::vector<RatMatrix> gens;
  std::vector<Reflection> refs;
  for (const auto& w : words) {
    RatMatrix g = evaluate_word(rep, w);
    // For a palindrome u s ũ the root data comes from the conjugation itself:
    // v = ρ(u)v_s and α = α_s ρ(u)⁻¹.  This keeps the scale of the ambient
    // roots, so the resulting pairing matrix does not depend on the basis.
    // Other words fall back to factoring g − Id, which fixes (v, α) only up
    // to scale; the pairing products are scale-free either way.
    bool palindrome = w.size() % 2 == 1;
    const size_t q = w.size() / 2;
    for (size_t t = 0; palindrome && t < q; ++t)
      if (w[t] != w[w.size() - 1 - t]) palindrome = false;
    if (palindrome) {
      int s = w[q];
      if (s < 0 || s >= rep.generator_count())
        fail(ErrorCode::InvalidArgument, "word letter out of range");
      std::vector<Rat> v = rep.vs[s], a = rep.alphas[s];
      for (size_t t = q; t-- > 0;) v = mat_vec(rep.generators[w[t]], v);
      for (size_t t = q + 1; t < w.size(); ++t) a = row_mat(a, rep.generators[w[t]]);
      require(g == RatMatrix::identity(rep.dim) - outer(v, a),
              "conjugated root data must reproduce the evaluated word");
      refs.push_back(Reflection{std::move(v), std::move(a)});
    } else {
      refs.push_back(extract_reflection(g));
    }
    gens.push_back(std::move(g));
  }

  RatMatrix raw(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) raw(i, j) = dot(refs[i].alpha, refs[j].v);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if ((raw(i, j) == 0) != (raw(j, i) == 0))
        fail(ErrorCode::UnsupportedPairing, "pairing zero pattern is not symmetric");

  // Extraction fixes each (v, α) only up to simultaneous sign; flipping
  // reflection i negates row i and column i of the pairing matrix.  A sign
  // choice making all off-diagonal entries ≤ 0 is found by propagation over a
  // spanning forest of the nonzero pattern, then checked on every pair.
  std::vector<int> sign(k, 0);
  for (int root = 0; root < k; ++root) {
    if (sign[root] != 0) continue;
    sign[root] = 1;
    std::vector<int> queue{root};
    for (size_t h = 0; h < queue.size(); ++h) {
      int u = queue[h];
      for (int w = 0; w < k; ++w) {
        if (sign[w] != 0 || raw(u, w) == 0) continue;
        sign[w] = (raw(u, w) > 0) ? -sign[u] : sign[u];
        queue.push_back(w);
      }
    }
  }
  RatMatrix cart(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) cart(i, j) = raw(i, j) * Rat(sign[i] * sign[j]);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && cart(i, j) > 0)
        fail(ErrorCode::UnsupportedPairing, "pairing signs cannot be normalized to a Cartan matrix");

  std::vector<std::vector<int>> labels(k, std::vector<int>(k, 1));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      Rat p = cart(i, j) * cart(j, i);
      bool identical = gens[i] == gens[j];
      std::string pair = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      labels[i][j] = labels[j][i] = detail::label_from_product(p, identical, pair);
    }

  std::vector<std::vector<Rat>> alphas, vs;
  for (int i = 0; i < k; ++i) {
    std::vector<Rat> a = refs[i].alpha, v = refs[i].v;
    if (sign[i] < 0)
      for (int t = 0; t < rep.dim; ++t) {
        a[t] = -a[t];
        v[t] = -v[t];
      }
    alphas.push_back(std::move(a));
    vs.push_back(std::move(v));
  }
  return ReflectionRep::make(rep.dim, std::move(gens), std::move(alphas), std::move(vs),
                             CartanMatrix::validate(cart), CoxeterMatrix::validate(labels));
}

// Coxeter matrix of the reflection subgroup generated by the given words.
inline CoxeterMatrix reflection_subgroup_matrix(const ReflectionRep& rep,
                                                const std::vector<std::vector<int>>& words) {
  return restrict_along_words(rep, words).coxeter;
}

// The symmetric Cartan matrix of the geometric representation of a
// right-angled group: 0 for commuting pairs, −2 for infinite ones.
inline CartanMatrix geometric_racg_cartan(const CoxeterMatrix& m) {
  if (!m.is_right_angled()) fail(ErrorCode::NotRightAngled, "labels must all be 2 or ∞");
  const int n = m.rank();
  RatMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a(i, j) = (i == j) ? Rat(2) : (m.label(i, j) == kInfinity ? Rat(-2) : Rat(0));
  return CartanMatrix::validate(a);
}

namespace detail {

inline ReflectionRep geometric_racg_rep(const CoxeterMatrix& m) {
  return rep_from_cartan(geometric_racg_cartan(m), m);
}

}  // namespace detail

// Index-2 reflection subgroup of a right-angled tree group with the same rank
// whose diagram acquires a triangle: replace the smallest leaf s₁ by the
// conjugate s₁s₂s₁ of its neighbor s₂ and keep every other generator.
inline SubgroupEmbedding double_tree_to_triangle(const CoxeterMatrix& m) {
  if (!m.is_right_angled()) fail(ErrorCode::NotRightAngled, "doubling moves need a right-angled group");
  const int n = m.rank();
  if (n < 3) fail(ErrorCode::RankTooSmall, "need rank at least 3");
  if (components(m).size() != 1 || m.edge_count() != n - 1)
    fail(ErrorCode::NotTree, "diagram must be a tree");
  int leaf = -1;
  for (int i = 0; i < n && leaf < 0; ++i)
    if (static_cast<int>(m.neighbors(i).size()) == 1) leaf = i;
  require(leaf >= 0, "a tree of rank >= 2 has a leaf");
  int nb = m.neighbors(leaf).front();

  std::vector<std::vector<int>> words;
  words.push_back({leaf, nb, leaf});
  for (int j = 0; j < n; ++j)
    if (j != leaf) words.push_back({j});

  CoxeterMatrix sub = reflection_subgroup_matrix(detail::geometric_racg_rep(m), words);
  require(sub.is_right_angled(), "reflection subgroups of right-angled groups are right-angled");
  return SubgroupEmbedding{std::move(sub), std::move(words), 2};
}

// Index-2 reflection subgroup of a right-angled group with strictly larger
// rank: conjugate every neighbor of the pivot through it and keep everything
// but the pivot, giving rank n + deg(pivot) − 1.
inline SubgroupEmbedding double_increase_rank(const CoxeterMatrix& m, int pivot) {
  const int n = m.rank();
  if (n < 3) fail(ErrorCode::RankTooSmall, "need rank at least 3");
  if (!m.is_right_angled()) fail(ErrorCode::NotRightAngled, "doubling moves need a right-angled group");
  if (!is_irreducible(m)) fail(ErrorCode::NotIrreducible, "diagram must be connected");
  if (pivot < 0 || pivot >= n) fail(ErrorCode::InvalidArgument, "pivot out of range");
  auto nb = m.neighbors(pivot);
  if (static_cast<int>(nb.size()) < 2)
    fail(ErrorCode::DegreeTooSmall, "pivot must have degree at least 2");

  std::vector<std::vector<int>> words;
  for (int j : nb) words.push_back({pivot, j, pivot});
  for (int j = 0; j < n; ++j)
    if (j != pivot) words.push_back({j});

  CoxeterMatrix sub = reflection_subgroup_matrix(detail::geometric_racg_rep(m), words);
  require(sub.is_right_angled(), "reflection subgroups of right-angled groups are right-angled");
  require(sub.rank() == n + static_cast<int>(nb.size()) - 1, "doubling rank count");
  return SubgroupEmbedding{std::move(sub), std::move(words), 2};
}

}  // namespace vinberg
