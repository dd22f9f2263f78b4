#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "vinberg/cartan.hpp"
#include "vinberg/coxeter.hpp"
#include "vinberg/errors.hpp"
#include "vinberg/matrix.hpp"
#include "vinberg/rational.hpp"

namespace vinberg {

namespace detail {

// Incremental row-echelon store for exact rank/membership bookkeeping.
// Rows are kept in insertion order; each stored row is reduced against all
// earlier rows, so a single pass over the store reduces a new vector fully.
class Echelon {
 public:
  // Absorbs v if independent of the rows seen so far; returns whether it was.
  bool insert(std::vector<Rat> v) {
    if (!reduce(v)) return false;
    rows_.push_back(std::move(v));
    return true;
  }

  bool contains(std::vector<Rat> v) const { return !reduce(v); }

  int dim() const { return static_cast<int>(rows_.size()); }

  const std::vector<std::vector<Rat>>& rows() const { return rows_; }

 private:
  // Reduces v against the store; true iff a nonzero remainder survives,
  // in which case v is normalized to lead with 1 at a fresh pivot.
  bool reduce(std::vector<Rat>& v) const {
    for (const auto& row : rows_) {
      int piv = pivot_of(row);
      if (v[piv] == 0) continue;
      Rat c = v[piv];
      for (size_t k = 0; k < v.size(); ++k) v[k] -= c * row[k];
    }
    int piv = -1;
    for (size_t k = 0; k < v.size(); ++k)
      if (v[k] != 0) {
        piv = static_cast<int>(k);
        break;
      }
    if (piv < 0) return false;
    Rat lead = v[piv];
    for (auto& x : v) x /= lead;
    return true;
  }

  static int pivot_of(const std::vector<Rat>& row) {
    for (size_t k = 0; k < row.size(); ++k)
      if (row[k] != 0) return static_cast<int>(k);
    return -1;
  }

  std::vector<std::vector<Rat>> rows_;
};

// Basis of span(a) ∩ span(b), both given as lists of dim-length vectors.
inline std::vector<std::vector<Rat>> span_intersection(const std::vector<std::vector<Rat>>& a,
                                                       const std::vector<std::vector<Rat>>& b,
                                                       int dim) {
  if (a.empty() || b.empty()) return {};
  const int ka = static_cast<int>(a.size()), kb = static_cast<int>(b.size());
  RatMatrix m(dim, ka + kb);
  for (int j = 0; j < ka; ++j)
    for (int i = 0; i < dim; ++i) m(i, j) = a[j][i];
  for (int j = 0; j < kb; ++j)
    for (int i = 0; i < dim; ++i) m(i, ka + j) = -b[j][i];
  Echelon ech;
  std::vector<std::vector<Rat>> out;
  for (const auto& ker : kernel_basis(m)) {
    std::vector<Rat> x(dim, Rat(0));
    for (int j = 0; j < ka; ++j)
      for (int i = 0; i < dim; ++i) x[i] += ker[j] * a[j][i];
    if (ech.insert(x)) out.push_back(std::move(x));
  }
  return out;
}

inline std::string word_to_string(const std::vector<int>& w) {
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << '.';
    os << w[i];
  }
  return os.str();
}

}  // namespace detail

// A representation s ↦ Id − v_s⊗α_s with α_s(v_s) = 2 and pairing matrix
// α_s(v_t) equal to the stored Cartan matrix.  `dim` is the ambient dimension
// and may differ from the generator count.
struct ReflectionRep {
  int dim = 0;
  std::vector<RatMatrix> generators;
  std::vector<std::vector<Rat>> alphas;
  std::vector<std::vector<Rat>> vs;
  CartanMatrix cartan;
  CoxeterMatrix coxeter;

  int generator_count() const { return static_cast<int>(generators.size()); }

  // Validates every structural invariant before admitting the data.
  static ReflectionRep make(int dim, std::vector<RatMatrix> generators,
                            std::vector<std::vector<Rat>> alphas, std::vector<std::vector<Rat>> vs,
                            CartanMatrix cartan, CoxeterMatrix coxeter) {
    const int k = static_cast<int>(generators.size());
    if (k < 1) fail(ErrorCode::InvalidArgument, "representation needs at least one generator");
    if (dim < 2) fail(ErrorCode::InvalidArgument, "dimension-1 representations are rejected");
    if (static_cast<int>(alphas.size()) != k || static_cast<int>(vs.size()) != k)
      fail(ErrorCode::InvalidArgument, "generator/alpha/v count mismatch");
    if (cartan.size() != k || coxeter.rank() != k)
      fail(ErrorCode::RankMismatch, "cartan/coxeter size does not match generator count");
    for (int s = 0; s < k; ++s) {
      if (static_cast<int>(alphas[s].size()) != dim || static_cast<int>(vs[s].size()) != dim)
        fail(ErrorCode::InvalidArgument, "alpha/v length does not match dimension");
      if (generators[s].rows() != dim || generators[s].cols() != dim)
        fail(ErrorCode::InvalidArgument, "generator shape does not match dimension");
      if (dot(alphas[s], vs[s]) != 2)
        fail(ErrorCode::InvalidArgument, "alpha_s(v_s) must equal 2");
    }
    for (int s = 0; s < k; ++s)
      for (int t = 0; t < k; ++t)
        if (dot(alphas[s], vs[t]) != cartan(s, t))
          fail(ErrorCode::InvalidArgument, "pairing alpha_s(v_t) disagrees with the Cartan matrix");
    for (int s = 0; s < k; ++s) {
      RatMatrix expect = RatMatrix::identity(dim) - outer(vs[s], alphas[s]);
      if (generators[s] != expect)
        fail(ErrorCode::InvalidArgument, "generator is not Id - v⊗alpha for its alpha, v");
    }
    auto compat = is_compatible(cartan, coxeter);
    if (!compat.compatible)
      fail(ErrorCode::Incompatible, "pairing matrix incompatible with the Coxeter labels");
    return ReflectionRep{dim,           std::move(generators), std::move(alphas),
                         std::move(vs), std::move(cartan),     std::move(coxeter)};
  }
};

// The standard representation on the coordinate space: v_s = e_s and α_s the
// s-th row of A, so that α_s(v_t) = A(s,t) holds on the nose.
inline ReflectionRep rep_from_cartan(const CartanMatrix& a, const CoxeterMatrix& m) {
  const int n = a.size();
  if (n != m.rank()) fail(ErrorCode::RankMismatch, "cartan and coxeter sizes differ");
  auto compat = is_compatible(a, m);
  if (!compat.compatible) {
    std::string why = "cartan matrix incompatible with coxeter labels";
    for (const auto& p : compat.pairs)
      if (!p.ok) {
        why += ": " + p.reason;
        break;
      }
    fail(ErrorCode::Incompatible, why);
  }
  if (!is_irreducible(m) || classify(m).kind != DiagramKind::Large)
    fail(ErrorCode::NotLargeIrreducible, "construction requires a large irreducible group");
  std::vector<RatMatrix> gens;
  std::vector<std::vector<Rat>> alphas, vs;
  for (int s = 0; s < n; ++s) {
    std::vector<Rat> alpha(n), v(n, Rat(0));
    for (int t = 0; t < n; ++t) alpha[t] = a(s, t);
    v[s] = 1;
    gens.push_back(RatMatrix::identity(n) - outer(v, alpha));
    alphas.push_back(std::move(alpha));
    vs.push_back(std::move(v));
  }
  return ReflectionRep::make(n, std::move(gens), std::move(alphas), std::move(vs), a, m);
}

struct InvariantSubspaces {
  std::vector<std::vector<Rat>> v_span_basis;
  std::vector<std::vector<Rat>> alpha_kernel_basis;
};

// V_v = span(v_s) and V_α = ∩ ker(α_s); both are preserved by the group.
inline InvariantSubspaces invariant_subspaces(const ReflectionRep& rep) {
  InvariantSubspaces out;
  detail::Echelon ech;
  for (const auto& v : rep.vs) {
    std::vector<Rat> copy = v;
    if (ech.insert(std::move(copy))) out.v_span_basis.push_back(v);
  }
  const int k = rep.generator_count();
  RatMatrix rows(k, rep.dim);
  for (int s = 0; s < k; ++s)
    for (int j = 0; j < rep.dim; ++j) rows(s, j) = rep.alphas[s][j];
  out.alpha_kernel_basis = kernel_basis(rows);
  return out;
}

// Criterion: irreducible iff V_v is everything and V_α is zero.
inline bool is_irreducible(const ReflectionRep& rep) {
  auto sub = invariant_subspaces(rep);
  return static_cast<int>(sub.v_span_basis.size()) == rep.dim && sub.alpha_kernel_basis.empty();
}

// Quotient representation on V_v/(V_α ∩ V_v).  The quotient basis extends a
// basis of the intersection by v_s images in increasing s; the reflection data
// descends with unchanged pairings, so the output has the same Cartan matrix
// and dimension rank(cartan).
inline ReflectionRep reduce_irreducible(const ReflectionRep& rep) {
  if (!is_irreducible(rep.coxeter) || classify(rep.coxeter).kind != DiagramKind::Large)
    fail(ErrorCode::NotLargeIrreducible, "reduction requires a large irreducible group");
  auto sub = invariant_subspaces(rep);
  auto core = detail::span_intersection(sub.alpha_kernel_basis, sub.v_span_basis, rep.dim);

  detail::Echelon ech;
  std::vector<std::vector<Rat>> columns;
  for (const auto& w : core) {
    std::vector<Rat> copy = w;
    require(ech.insert(std::move(copy)), "intersection basis is not independent");
    columns.push_back(w);
  }
  const int w_dim = static_cast<int>(columns.size());
  std::vector<std::vector<Rat>> quotient_basis;
  for (const auto& v : rep.vs) {
    std::vector<Rat> copy = v;
    if (ech.insert(std::move(copy))) {
      columns.push_back(v);
      quotient_basis.push_back(v);
    }
  }
  const int q = static_cast<int>(quotient_basis.size());
  require(q == rank_of(rep.cartan), "quotient dimension must equal the Cartan rank");

  RatMatrix basis(rep.dim, w_dim + q);
  for (int j = 0; j < w_dim + q; ++j)
    for (int i = 0; i < rep.dim; ++i) basis(i, j) = columns[j][i];

  const int k = rep.generator_count();
  std::vector<std::vector<Rat>> new_alphas, new_vs;
  for (int s = 0; s < k; ++s) {
    std::vector<Rat> alpha(q), v(q);
    for (int j = 0; j < q; ++j) alpha[j] = dot(rep.alphas[s], quotient_basis[j]);
    auto coords = solve(basis, rep.vs[s]);
    require(coords.has_value(), "v_s must lie in the chosen spanning set");
    for (int j = 0; j < q; ++j) v[j] = (*coords)[w_dim + j];
    new_alphas.push_back(std::move(alpha));
    new_vs.push_back(std::move(v));
  }
  std::vector<RatMatrix> gens;
  for (int s = 0; s < k; ++s)
    gens.push_back(RatMatrix::identity(q) - outer(new_vs[s], new_alphas[s]));
  return ReflectionRep::make(q, std::move(gens), std::move(new_alphas), std::move(new_vs),
                             rep.cartan, rep.coxeter);
}

inline RatMatrix evaluate_word(const ReflectionRep& rep, const std::vector<int>& word) {
  RatMatrix m = RatMatrix::identity(rep.dim);
  for (int letter : word) {
    if (letter < 0 || letter >= rep.generator_count())
      fail(ErrorCode::InvalidArgument, "word letter out of range");
    m = m * rep.generators[letter];
  }
  return m;
}

struct RelationReport {
  // order[s][t] = exact order of ρ(s)ρ(t) when finite; 0 when it exceeded the
  // cap (consistent with the ∞ label encoding).
  std::vector<std::vector<int>> orders;
  int order_cap = 0;
};

// Checks ρ(s)² = Id and that pairwise product orders match the Coxeter labels
// exactly: finite m means (ρ(s)ρ(t))^m = Id and no smaller positive power is;
// infinite m means no power up to order_cap is the identity.
inline RelationReport verify_relations(const ReflectionRep& rep, int order_cap = 64) {
  if (order_cap < 2) fail(ErrorCode::InvalidArgument, "order_cap must be at least 2");
  const int k = rep.generator_count();
  for (int s = 0; s < k; ++s)
    if (!(rep.generators[s] * rep.generators[s]).is_identity())
      fail(ErrorCode::RelationViolation,
           "generator " + std::to_string(s + 1) + " does not square to the identity");
  RelationReport report;
  report.order_cap = order_cap;
  report.orders.assign(k, std::vector<int>(k, 1));
  for (int s = 0; s < k; ++s)
    for (int t = s + 1; t < k; ++t) {
      const int label = rep.coxeter.label(s, t);
      RatMatrix prod = rep.generators[s] * rep.generators[t];
      RatMatrix power = prod;
      int order = 0;
      int cap = (label == kInfinity) ? order_cap : label;
      for (int e = 1; e <= cap; ++e) {
        if (power.is_identity()) {
          order = e;
          break;
        }
        if (e < cap) power = power * prod;
      }
      std::string pair = "(" + std::to_string(s + 1) + "," + std::to_string(t + 1) + ")";
      if (label == kInfinity) {
        if (order != 0)
          fail(ErrorCode::RelationViolation,
               "pair " + pair + " has finite order " + std::to_string(order) +
                   " but the label is infinite");
      } else if (order != label) {
        fail(ErrorCode::RelationViolation,
             "pair " + pair + " order " + (order ? std::to_string(order) : ">" + std::to_string(cap)) +
                 " does not match label " + std::to_string(label));
      }
      report.orders[s][t] = report.orders[t][s] = order;
    }
  return report;
}

// Exact basis of {B symmetric : gᵀBg = B for every generator g}.  Invariance
// under Id − v⊗α reduces to the linear condition B·v_s = λ_s·α_sᵀ with an
// auxiliary unknown λ_s per generator, so the space is a kernel computation.
inline std::vector<RatMatrix> invariant_symmetric_forms(const ReflectionRep& rep) {
  const int d = rep.dim, k = rep.generator_count();
  const int nb = d * (d + 1) / 2;
  std::vector<std::vector<int>> idx(d, std::vector<int>(d));
  {
    int next = 0;
    for (int i = 0; i < d; ++i)
      for (int j = i; j < d; ++j) {
        idx[i][j] = idx[j][i] = next;
        ++next;
      }
  }
  RatMatrix system(k * d, nb + k);
  for (int s = 0; s < k; ++s)
    for (int r = 0; r < d; ++r) {
      int row = s * d + r;
      for (int j = 0; j < d; ++j) system(row, idx[r][j]) += rep.vs[s][j];
      system(row, nb + s) -= rep.alphas[s][r];
    }
  std::vector<RatMatrix> out;
  for (const auto& sol : kernel_basis(system)) {
    RatMatrix b(d, d);
    bool nonzero = false;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        b(i, j) = sol[idx[i][j]];
        if (b(i, j) != 0) nonzero = true;
      }
    require(nonzero, "kernel vector with zero form part cannot arise");
    out.push_back(std::move(b));
  }
  return out;
}

// True certifies that products of generators span the full matrix algebra
// (absolute irreducibility); false only means the cap was reached first.
inline bool absolute_irreducibility_certificate(const ReflectionRep& rep, int word_cap = 0) {
  const int d = rep.dim, k = rep.generator_count();
  if (word_cap <= 0) word_cap = 2 * d * d;
  auto flatten = [d](const RatMatrix& m) {
    std::vector<Rat> v(static_cast<size_t>(d) * d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) v[static_cast<size_t>(i) * d + j] = m(i, j);
    return v;
  };
  detail::Echelon span;
  std::vector<RatMatrix> frontier;
  RatMatrix id = RatMatrix::identity(d);
  span.insert(flatten(id));
  frontier.push_back(id);
  // Frontier exhaustion is exact: every basis element eventually gets
  // multiplied by every generator, so an empty frontier certifies the span is
  // the full algebra generated by the ρ(s).
  for (int len = 1; len <= word_cap && !frontier.empty(); ++len) {
    std::vector<RatMatrix> next;
    for (const auto& m : frontier)
      for (int s = 0; s < k; ++s) {
        RatMatrix prod = m * rep.generators[s];
        if (span.insert(flatten(prod))) next.push_back(std::move(prod));
      }
    if (span.dim() == d * d) return true;
    frontier = std::move(next);
  }
  return span.dim() == d * d;
}

enum class ClosureKind { OrthogonalGroup, SpecialLinearPM, Indeterminate };

inline const char* closure_kind_name(ClosureKind k) {
  switch (k) {
    case ClosureKind::OrthogonalGroup: return "OrthogonalGroup";
    case ClosureKind::SpecialLinearPM: return "SpecialLinearPM";
    case ClosureKind::Indeterminate: return "Indeterminate";
  }
  return "?";
}

struct ClosureVerdict {
  ClosureKind kind = ClosureKind::Indeterminate;
  std::optional<RatMatrix> form;
  std::string reason;
};

// Zariski-closure dichotomy for large irreducible reflection groups: an
// invariant symmetric form forces the orthogonal group of that form; no form
// plus a full matrix-algebra certificate forces SL±.
inline ClosureVerdict closure_verdict(const ReflectionRep& rep, int word_cap = 0) {
  if (!is_irreducible(rep.coxeter) || classify(rep.coxeter).kind != DiagramKind::Large)
    fail(ErrorCode::PreconditionViolated, "closure verdict requires a large irreducible group");
  if (!is_irreducible(rep))
    fail(ErrorCode::PreconditionViolated, "closure verdict requires an irreducible representation");
  ClosureVerdict out;
  auto forms = invariant_symmetric_forms(rep);
  if (!forms.empty()) {
    require(forms.size() == 1, "irreducibility forces a unique invariant form up to scale");
    RatMatrix b = forms.front();
    if (b != b.transpose()) fail(ErrorCode::PreconditionViolated, "invariant form is not symmetric");
    if (rank_of(b) != rep.dim)
      fail(ErrorCode::PreconditionViolated, "invariant form of an irreducible rep must be nondegenerate");
    for (const auto& g : rep.generators)
      require(g.transpose() * b * g == b, "claimed invariant form is not invariant");
    out.kind = ClosureKind::OrthogonalGroup;
    out.form = std::move(b);
    out.reason = "nonzero invariant symmetric bilinear form found and verified";
    return out;
  }
  if (absolute_irreducibility_certificate(rep, word_cap)) {
    out.kind = ClosureKind::SpecialLinearPM;
    out.reason = "no invariant symmetric form; generator products span the full matrix algebra";
    return out;
  }
  out.kind = ClosureKind::Indeterminate;
  out.reason = "no invariant form, but the spanning certificate did not complete within the word cap";
  return out;
}

// A reflection Id − v⊗α recovered from a matrix, normalized so α(v) = 2.
struct Reflection {
  std::vector<Rat> v;
  std::vector<Rat> alpha;
};

// Decomposes g = Id − v⊗α or fails.  The rank-1 factorization is read off the
// first nonzero row/column of g − Id; the residual check certifies rank 1,
// and α(v) = 2 then forces g² = Id.
inline Reflection extract_reflection(const RatMatrix& g) {
  if (g.rows() != g.cols()) fail(ErrorCode::InvalidArgument, "reflection candidate must be square");
  const int d = g.rows();
  RatMatrix dev = g - RatMatrix::identity(d);
  int i0 = -1, j0 = -1;
  for (int j = 0; j < d && j0 < 0; ++j)
    for (int i = 0; i < d; ++i)
      if (dev(i, j) != 0) {
        j0 = j;
        break;
      }
  if (j0 < 0) fail(ErrorCode::NotAReflection, "matrix is the identity");
  for (int i = 0; i < d && i0 < 0; ++i)
    for (int j = 0; j < d; ++j)
      if (dev(i, j) != 0) {
        i0 = i;
        break;
      }
  Rat c = dev(i0, j0);
  require(c != 0, "pivot entry of the deviation must be nonzero");
  Reflection r;
  r.v.assign(d, Rat(0));
  r.alpha.assign(d, Rat(0));
  for (int i = 0; i < d; ++i) r.v[i] = -dev(i, j0);
  for (int j = 0; j < d; ++j) r.alpha[j] = -dev(i0, j) / (-c);
  if (g != RatMatrix::identity(d) - outer(r.v, r.alpha))
    fail(ErrorCode::NotAReflection, "deviation from the identity is not rank one");
  if (dot(r.alpha, r.v) != 2)
    fail(ErrorCode::NotAReflection, "normalized pairing alpha(v) is not 2, so the matrix is not an involution");
  return r;
}

struct PairingResult {
  Rat p;
  bool proximal = false;
  // The product of the two reflections acts on their shared plane with trace
  // p − 2, so its eigenvalue λ there satisfies λ + 1/λ = p − 2.
  Rat plane_trace;
};

// Pairing p = α(w)·β(v) of two reflections Id − v⊗α and Id − w⊗β; the product
// is conjugate to diag(λ,1,…,1,1/λ) with λ > 1 exactly when p > 4.
inline PairingResult dlambda_pairing(const ReflectionRep& rep, const std::vector<int>& word1,
                                     const std::vector<int>& word2) {
  Reflection r1 = extract_reflection(evaluate_word(rep, word1));
  Reflection r2 = extract_reflection(evaluate_word(rep, word2));
  PairingResult out;
  out.p = dot(r1.alpha, r2.v) * dot(r2.alpha, r1.v);
  out.proximal = out.p > 4;
  out.plane_trace = out.p - 2;
  return out;
}

struct ProximalWitness {
  std::vector<int> word1;
  std::vector<int> word2;
  Rat pairing;
};

// Breadth-first search over conjugated generator pairs for a pairing > 4.
// Conjugators run over words of length ≤ max_conj_len; reflections are
// deduplicated by a scale-normalized (α, v) key so each line is visited once.
inline std::optional<ProximalWitness> find_proximal_pair(const ReflectionRep& rep,
                                                         int max_conj_len = 4) {
  struct Node {
    std::vector<Rat> alpha, v;
    std::vector<int> word;
  };
  const int k = rep.generator_count();
  auto canonical_key = [&](const std::vector<Rat>& alpha, const std::vector<Rat>& v) {
    Rat scale(1);
    for (const auto& x : alpha)
      if (x != 0) {
        scale = x;
        break;
      }
    std::ostringstream os;
    for (const auto& x : alpha) os << to_string(Rat(x / scale)) << ',';
    os << ';';
    for (const auto& x : v) os << to_string(Rat(x * scale)) << ',';
    return os.str();
  };
  std::vector<Node> all;
  std::set<std::string> seen;
  for (int s = 0; s < k; ++s) {
    Node n{rep.alphas[s], rep.vs[s], {s}};
    if (seen.insert(canonical_key(n.alpha, n.v)).second) all.push_back(std::move(n));
  }
  auto scan_against_all = [&](size_t new_begin) -> std::optional<ProximalWitness> {
    for (size_t i = new_begin; i < all.size(); ++i)
      for (size_t j = 0; j < i; ++j) {
        Rat p = dot(all[i].alpha, all[j].v) * dot(all[j].alpha, all[i].v);
        if (p > 4) return ProximalWitness{all[j].word, all[i].word, p};
      }
    return std::nullopt;
  };
  if (auto w = scan_against_all(0)) return w;
  size_t level_begin = 0;
  for (int len = 1; len <= max_conj_len; ++len) {
    size_t level_end = all.size();
    for (size_t i = level_begin; i < level_end; ++i)
      for (int s = 0; s < k; ++s) {
        // Conjugating Id − v⊗α by ρ(s) sends (α, v) to (α∘ρ(s), ρ(s)v).
        Node n;
        n.alpha = row_mat(all[i].alpha, rep.generators[s]);
        n.v = mat_vec(rep.generators[s], all[i].v);
        n.word.reserve(all[i].word.size() + 2);
        n.word.push_back(s);
        n.word.insert(n.word.end(), all[i].word.begin(), all[i].word.end());
        n.word.push_back(s);
        if (seen.insert(canonical_key(n.alpha, n.v)).second) all.push_back(std::move(n));
      }
    if (auto w = scan_against_all(level_end)) return w;
    level_begin = level_end;
  }
  return std::nullopt;
}

}  // namespace vinberg
