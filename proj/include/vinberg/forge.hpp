#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "vinberg/cartan.hpp"
#include "vinberg/coxeter.hpp"
#include "vinberg/cycles.hpp"
#include "vinberg/errors.hpp"
#include "vinberg/integral.hpp"
#include "vinberg/matrix.hpp"
#include "vinberg/rational.hpp"
#include "vinberg/represent.hpp"
#include "vinberg/subgroups.hpp"

namespace vinberg {

// Properties re-checked on every forged matrix before it is returned.
struct Certificates {
  bool compatible = false;
  bool non_symmetrizable = false;
  int rank = 0;
  bool integer_cyclic_products = false;
};

struct ForgeOutput {
  CartanMatrix cartan;
  CoxeterMatrix coxeter;
  Int parameter = 0;
  Certificates certificates;
  // For the general forge: the cycle the construction is anchored on,
  // oriented so the forward product dominates the reverse one in absolute
  // value.  Empty for the right-angled forges.
  std::vector<int> cycle;
};

namespace detail {

inline Certificates certify(const CartanMatrix& a, const CoxeterMatrix& m) {
  Certificates c;
  c.compatible = is_compatible(a, m).compatible;
  c.non_symmetrizable = !is_symmetrizable(a).symmetrizable;
  c.rank = rank_of(a);
  c.integer_cyclic_products = integer_cyclic_certificate(a).all_integer;
  return c;
}

}  // namespace detail

// Non-symmetrizable full-rank integral Cartan matrix compatible with a
// right-angled irreducible non-tree diagram.  Every edge gets the entry −2t;
// opposite entries are −2t on a breadth-first spanning tree and −3t off it,
// so any fundamental cycle carries the asymmetric ratio 2/3.  At t = 0 the
// matrix is 2·Id, hence det(A_t) is a nonzero polynomial of degree ≤ n and
// some t ≤ n + 1 is full rank.
inline ForgeOutput forge_racg_spanning_tree(const CoxeterMatrix& m) {
  const int n = m.rank();
  if (!m.is_right_angled())
    fail(ErrorCode::NotRightAngled, "construction needs a right-angled group");
  if (!is_irreducible(m)) fail(ErrorCode::NotIrreducible, "diagram must be connected");
  if (n < 3) fail(ErrorCode::RankTooSmall, "rank must be at least 3");
  if (m.edge_count() == n - 1)
    fail(ErrorCode::IsTree, "tree diagrams admit no asymmetric cycle; double first");

  std::vector<std::vector<bool>> tree(n, std::vector<bool>(n, false));
  {
    std::vector<bool> seen(n, false);
    std::vector<int> queue{0};
    seen[0] = true;
    for (size_t h = 0; h < queue.size(); ++h)
      for (int w : m.neighbors(queue[h]))
        if (!seen[w]) {
          seen[w] = true;
          tree[queue[h]][w] = tree[w][queue[h]] = true;
          queue.push_back(w);
        }
  }
  for (Int t = 1; t <= n + 1; ++t) {
    RatMatrix a(n, n);
    for (int i = 0; i < n; ++i) a(i, i) = 2;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (!diagram_edge(m.label(i, j))) continue;
        a(i, j) = Rat(Int(-2 * t));
        a(j, i) = tree[i][j] ? Rat(Int(-2 * t)) : Rat(Int(-3 * t));
      }
    if (det(a) == 0) continue;
    CartanMatrix cart = CartanMatrix::validate(a);
    Certificates c = detail::certify(cart, m);
    require(c.compatible && c.non_symmetrizable && c.rank == n && c.integer_cyclic_products,
            "full-rank scaling must pass all certificates");
    return ForgeOutput{std::move(cart), m, t, c, {}};
  }
  fail(ErrorCode::InvalidArgument, "no scaling parameter gave full rank");  // unreachable
}

// First pair (lexicographic) of generators outside i_set ∪ j_set whose label
// is infinite, if any.
inline std::optional<std::pair<int, int>> find_bump_pair(const CoxeterMatrix& m,
                                                         const std::vector<int>& i_set,
                                                         const std::vector<int>& j_set) {
  std::vector<bool> used(m.rank(), false);
  for (int i : i_set) used.at(i) = true;
  for (int j : j_set) used.at(j) = true;
  for (int i = 0; i < m.rank(); ++i) {
    if (used[i]) continue;
    for (int j = i + 1; j < m.rank(); ++j)
      if (!used[j] && m.label(i, j) == kInfinity) return std::make_pair(i, j);
  }
  return std::nullopt;
}

// Rank bump: given an integral irreducible representation of a right-angled
// group of rank ≥ 3·dim + 1, scales one pairing entry chosen outside the
// supports of spanning subsets of the roots and the vectors.  The scaled
// matrix keeps the representation's pairings on those subsets, so its rank
// goes up by exactly one for a generic parameter.
inline ForgeOutput forge_rank_bump(const CoxeterMatrix& m, const ReflectionRep& rep) {
  const int big = m.rank();
  const int n = rep.dim;
  if (!m.is_right_angled())
    fail(ErrorCode::NotRightAngled, "construction needs a right-angled group");
  if (!is_irreducible(m)) fail(ErrorCode::NotIrreducible, "diagram must be connected");
  if (!(rep.coxeter == m))
    fail(ErrorCode::InvalidArgument, "representation does not belong to the given group");
  if (big < 3 * n + 1)
    fail(ErrorCode::RankGapTooSmall,
         "rank " + std::to_string(big) + " is below 3*dim+1 = " + std::to_string(3 * n + 1));
  for (const auto& g : rep.generators)
    if (!to_integer(g).has_value())
      fail(ErrorCode::InvalidArgument, "representation must have integer generators");
  if (!is_irreducible(rep))
    fail(ErrorCode::NotIrreducible, "representation must be irreducible");

  detail::Echelon alpha_span, v_span;
  std::vector<int> i_set, j_set;
  for (int s = 0; s < big && static_cast<int>(i_set.size()) < n; ++s)
    if (alpha_span.insert(rep.alphas[s])) i_set.push_back(s);
  for (int s = 0; s < big && static_cast<int>(j_set.size()) < n; ++s)
    if (v_span.insert(rep.vs[s])) j_set.push_back(s);
  require(static_cast<int>(i_set.size()) == n && static_cast<int>(j_set.size()) == n,
          "irreducible representation must span in both factors");

  auto pair = find_bump_pair(m, i_set, j_set);
  if (!pair)
    fail(ErrorCode::NoInfinitePairInK,
         "no infinite pair outside the spanning subsets; cannot place the bump");
  auto [i0, j0] = *pair;

  for (Int t = 1; t <= 64; ++t) {
    RatMatrix a = rep.cartan.entries();
    a(i0, j0) = a(i0, j0) * Rat(Int(t + 1));
    CartanMatrix cart = CartanMatrix::validate(a);
    Certificates c = detail::certify(cart, m);
    if (c.compatible && c.non_symmetrizable && c.rank == n + 1 && c.integer_cyclic_products)
      return ForgeOutput{std::move(cart), m, t, c, {}};
  }
  fail(ErrorCode::InvalidArgument, "no bump parameter passed the certificates");
}

// General forge: for any irreducible diagram with labels in {2,3,4,6,∞}
// containing a cycle that is not all-3, plus a set T of disjoint infinite
// pairs whose complement has only spherical or quasi-Lanner components,
// builds a full-rank non-symmetrizable integral compatible matrix.  The
// asymmetry lives on a chosen cycle: its first r−1 edges get (−1, −c) in
// cycle order while every other edge gets (−c, −1) by index order, where
// c(m) ∈ {0,1,2,3,4} is the integer with c(m)·1 the pairing product of the
// label.  Entries of T-pairs are scaled by the parameter until the
// determinant is nonzero, which happens within 2|T| + 1 attempts.
inline ForgeOutput forge_general(const CoxeterMatrix& m,
                                 const std::vector<std::pair<int, int>>& t_pairs,
                                 long cycle_budget = 1000000) {
  const int n = m.rank();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int label = m.label(i, j);
      if (label != 2 && label != 3 && label != 4 && label != 6 && label != kInfinity)
        fail(ErrorCode::BadLabels,
             "label " + std::to_string(label) + " at (" + std::to_string(i + 1) + "," +
                 std::to_string(j + 1) + ") is not realizable over the rationals");
    }
  if (!is_irreducible(m)) fail(ErrorCode::NotIrreducible, "diagram must be connected");

  auto adj = [&](int i, int j) { return diagram_edge(m.label(i, j)); };
  std::vector<int> cycle;
  for (const auto& c : simple_cycles(n, adj, n, cycle_budget)) {
    if (c.size() < 3) continue;
    bool all3 = true;
    for (size_t k = 0; k < c.size() && all3; ++k)
      if (m.label(c[k], c[(k + 1) % c.size()]) != 3) all3 = false;
    if (!all3) {
      cycle = c;
      break;
    }
  }
  if (cycle.empty())
    fail(ErrorCode::NoSuitableCycle, "no diagram cycle with an edge labelled other than 3");

  std::vector<bool> in_t(n, false);
  for (auto [i, j] : t_pairs) {
    if (i < 0 || i >= n || j < 0 || j >= n || i == j)
      fail(ErrorCode::InvalidArgument, "T pair indices out of range");
    if (m.label(i, j) != kInfinity)
      fail(ErrorCode::InvalidArgument, "T pairs must have infinite labels");
    if (in_t[i] || in_t[j]) fail(ErrorCode::InvalidArgument, "T pairs must be disjoint");
    in_t[i] = in_t[j] = true;
  }
  std::vector<int> complement;
  for (int v = 0; v < n; ++v)
    if (!in_t[v]) complement.push_back(v);
  if (!complement.empty()) {
    CoxeterMatrix rest = m.restrict(complement);
    for (const auto& comp : components(rest)) {
      CoxeterMatrix sub = rest.restrict(comp);
      DiagramKind kind = classify(sub).kind;
      bool ok = kind == DiagramKind::Spherical ||
                (kind == DiagramKind::Large && is_quasi_lanner(sub));
      if (!ok) {
        std::string verts;
        for (size_t t = 0; t < comp.size(); ++t)
          verts += (t ? "," : "") + std::to_string(complement[comp[t]] + 1);
        fail(ErrorCode::ComplementNotAdmissible,
             "complement component {" + verts + "} is neither spherical nor quasi-Lanner");
      }
    }
  }

  auto weight = [&](int label) {
    return label == kInfinity ? Rat(4) : rational_label_product(label);
  };
  const int r = static_cast<int>(cycle.size());
  std::vector<std::pair<int, int>> oriented;  // the first r−1 cycle edges, in order
  for (int k = 0; k + 1 < r; ++k) oriented.emplace_back(cycle[k], cycle[k + 1]);
  auto oriented_pos = [&](int i, int j) {
    for (const auto& e : oriented)
      if (e.first == i && e.second == j) return true;
    return false;
  };

  RatMatrix base(n, n);
  for (int i = 0; i < n; ++i) base(i, i) = 2;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int label = m.label(i, j);
      if (label == 2) continue;
      Rat c = weight(label);
      if (oriented_pos(i, j)) {
        base(i, j) = -1;
        base(j, i) = -c;
      } else if (oriented_pos(j, i)) {
        base(j, i) = -1;
        base(i, j) = -c;
      } else {
        base(i, j) = -c;
        base(j, i) = -1;
      }
    }

  const long cap = 2 * static_cast<long>(t_pairs.size()) + 1;
  for (Int t = 1; t <= cap; ++t) {
    RatMatrix a = base;
    for (auto [i, j] : t_pairs) {
      a(i, j) = a(i, j) * Rat(t);
      a(j, i) = a(j, i) * Rat(t);
    }
    if (det(a) == 0) continue;
    CartanMatrix cart = CartanMatrix::validate(a);
    Certificates c = detail::certify(cart, m);
    require(c.compatible && c.non_symmetrizable && c.rank == n && c.integer_cyclic_products,
            "full-rank scaling must pass all certificates");
    Rat fwd = detail::cycle_product(cart, cycle, true);
    Rat rev = detail::cycle_product(cart, cycle, false);
    require(Rat(abs(fwd)) != Rat(abs(rev)), "cycle products must differ in absolute value");
    if (Rat(abs(fwd)) < Rat(abs(rev))) std::reverse(cycle.begin() + 1, cycle.end());
    return ForgeOutput{std::move(cart), m, t, c, std::move(cycle)};
  }
  fail(ErrorCode::InvalidArgument, "base matrix is singular for every scaling parameter");
}

// --- reference corpus ---------------------------------------------------

struct CorpusExpected {
  DiagramKind kind = DiagramKind::Large;
  std::optional<int> cartan_rank;
  std::optional<bool> non_symmetrizable;
  std::optional<bool> integer_cyclic_products;
  std::optional<ClosureKind> closure;
};

struct CorpusEntry {
  std::string name;
  CoxeterMatrix coxeter;
  std::optional<CartanMatrix> cartan;
  CorpusExpected expected;
};

namespace detail {

inline CartanMatrix cartan_rows(const std::vector<std::vector<long>>& rows) {
  const int n = static_cast<int>(rows.size());
  RatMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = Rat(rows[i][j]);
  return CartanMatrix::validate(a);
}

}  // namespace detail

inline SubgroupEmbedding family_P(int k);
inline SubgroupEmbedding family_Q(int k);
inline SubgroupEmbedding family_cube(int p, int k);
inline CoxeterMatrix family_incoherence(int m);

// Worked examples with their externally-known certificates; entries without
// a Cartan matrix carry Coxeter data only.
inline const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = [] {
    std::vector<CorpusEntry> list;
    auto large = [](std::optional<int> rank, std::optional<bool> nonsym,
                    std::optional<bool> cyc, std::optional<ClosureKind> closure) {
      return CorpusExpected{DiagramKind::Large, rank, nonsym, cyc, closure};
    };

    list.push_back({"KacVinberg3",
                    CoxeterMatrix::build(3, {{0, 1, 4}, {0, 2, 3}, {1, 2, 3}}),
                    detail::cartan_rows({{2, -1, -1}, {-2, 2, -1}, {-1, -1, 2}}),
                    large(3, true, true, ClosureKind::SpecialLinearPM)});
    list.push_back({"Pentagon5",
                    CoxeterMatrix::build(5, {{0, 1, 0}, {1, 2, 0}, {2, 3, 0}, {3, 4, 0}, {0, 4, 0}}),
                    detail::cartan_rows({{2, -2, 0, 0, -1},
                                         {-4, 2, -2, 0, 0},
                                         {0, -4, 2, -2, 0},
                                         {0, 0, -4, 2, -2},
                                         {-12, 0, 0, -4, 2}}),
                    large(4, true, true, ClosureKind::SpecialLinearPM)});
    list.push_back({"Prism5",
                    CoxeterMatrix::build(5, {{0, 1, 0}, {0, 2, 4}, {1, 2, 4}, {2, 3, 3}, {2, 4, 3}, {3, 4, 4}}),
                    detail::cartan_rows({{2, -3, -1, 0, 0},
                                         {-8, 2, -1, 0, 0},
                                         {-2, -2, 2, -1, -1},
                                         {0, 0, -1, 2, -1},
                                         {0, 0, -1, -2, 2}}),
                    large(4, true, true, ClosureKind::SpecialLinearPM)});
    list.push_back({"FourManifold6",
                    CoxeterMatrix::build(6, {{0, 1, 0}, {0, 2, 4}, {1, 2, 4}, {2, 3, 3}, {2, 5, 3}, {3, 4, 4}, {4, 5, 3}}),
                    detail::cartan_rows({{2, -4, -1, 0, 0, 0},
                                         {-4, 2, -1, 0, 0, 0},
                                         {-2, -2, 2, -1, 0, -1},
                                         {0, 0, -1, 2, -1, 0},
                                         {0, 0, 0, -2, 2, -1},
                                         {0, 0, -1, 0, -1, 2}}),
                    large(5, true, true, ClosureKind::SpecialLinearPM)});
    list.push_back({"TriangleSym33Inf",
                    CoxeterMatrix::build(3, {{0, 1, 3}, {0, 2, 0}, {1, 2, 3}}),
                    detail::cartan_rows({{2, -1, -2}, {-1, 2, -1}, {-2, -1, 2}}),
                    large(3, false, true, ClosureKind::OrthogonalGroup)});
    list.push_back({"PentagonSym",
                    CoxeterMatrix::build(5, {{0, 1, 0}, {1, 2, 0}, {2, 3, 0}, {3, 4, 0}, {0, 4, 0}}),
                    detail::cartan_rows({{2, -2, 0, 0, -2},
                                         {-2, 2, -2, 0, 0},
                                         {0, -2, 2, -2, 0},
                                         {0, 0, -2, 2, -2},
                                         {-2, 0, 0, -2, 2}}),
                    large(5, false, true, ClosureKind::OrthogonalGroup)});
    list.push_back({"FamilyP2", family_P(2).new_matrix, std::nullopt,
                    large(std::nullopt, std::nullopt, std::nullopt, std::nullopt)});
    list.push_back({"FamilyP3", family_P(3).new_matrix, std::nullopt,
                    large(std::nullopt, std::nullopt, std::nullopt, std::nullopt)});
    list.push_back({"FamilyQ2", family_Q(2).new_matrix, std::nullopt,
                    large(std::nullopt, std::nullopt, std::nullopt, std::nullopt)});
    list.push_back({"CubeRank8", family_cube(4, 1).new_matrix, std::nullopt,
                    large(std::nullopt, std::nullopt, std::nullopt, std::nullopt)});
    list.push_back({"IncoherenceW2", family_incoherence(2), std::nullopt,
                    large(std::nullopt, std::nullopt, std::nullopt, std::nullopt)});
    return list;
  }();
  return entries;
}

inline const CorpusEntry& corpus_entry(const std::string& name) {
  for (const auto& e : corpus())
    if (e.name == name) return e;
  fail(ErrorCode::InvalidArgument, "no corpus entry named " + name);
}

// --- glued polytope families --------------------------------------------

namespace detail {

// Reflection group of the union of `copies` mirror images of the base
// domain, glued along the alternating wall sequence b, a, b, a, …  Copy i
// sits at the transversal element u_i (u_1 = e, u_{i+1} = u_i·g_i) and
// contributes the conjugates u_i s_j u_i⁻¹ of its walls; the two walls a
// copy shares with its neighbours are interior and dropped, and conjugates
// that coincide as reflections are merged, first occurrence kept.  The
// union is a fundamental domain, so the subgroup index equals `copies`.
inline SubgroupEmbedding glue_chain(const ReflectionRep& rep, int copies, int letter_b,
                                    int letter_a) {
  const int n = rep.generator_count();
  if (copies < 1) fail(ErrorCode::InvalidArgument, "need at least one copy");
  require(letter_a >= 0 && letter_b >= 0 && letter_a < n && letter_b < n && letter_a != letter_b,
          "gluing letters must be distinct generators");
  require(rep.coxeter.label(letter_a, letter_b) == kInfinity,
          "gluing walls must generate an infinite dihedral group");
  auto gluing = [&](int i) { return i % 2 == 1 ? letter_b : letter_a; };

  std::vector<std::vector<int>> words;
  std::vector<RatMatrix> seen;
  std::vector<int> u;
  for (int i = 1; i <= copies; ++i) {
    const int drop_prev = i >= 2 ? gluing(i - 1) : -1;
    const int drop_next = i <= copies - 1 ? gluing(i) : -1;
    for (int j = 0; j < n; ++j) {
      if (j == drop_prev || j == drop_next) continue;
      std::vector<int> w(u);
      w.push_back(j);
      w.insert(w.end(), u.rbegin(), u.rend());
      RatMatrix g = evaluate_word(rep, w);
      bool dup = false;
      for (const auto& s : seen)
        if (s == g) {
          dup = true;
          break;
        }
      if (dup) continue;
      seen.push_back(std::move(g));
      words.push_back(std::move(w));
    }
    if (i <= copies - 1) u.push_back(gluing(i));
  }
  CoxeterMatrix sub = reflection_subgroup_matrix(rep, words);
  return SubgroupEmbedding{std::move(sub), std::move(words), copies};
}

}  // namespace detail

// Index-k subgroups of the rank-5 prism group, acting on 4-dimensional
// space; rank grows as k + 4.
inline SubgroupEmbedding family_P(int k) {
  if (k < 1) fail(ErrorCode::InvalidArgument, "family index must be positive");
  CartanMatrix a = detail::cartan_rows(
      {{2, -3, -1, 0, 0}, {-8, 2, -1, 0, 0}, {-2, -2, 2, -1, -1}, {0, 0, -1, 2, -1}, {0, 0, -1, -2, 2}});
  CoxeterMatrix m =
      CoxeterMatrix::build(5, {{0, 1, 0}, {0, 2, 4}, {1, 2, 4}, {2, 3, 3}, {2, 4, 3}, {3, 4, 4}});
  ReflectionRep rep = rep_from_cartan(a, m);
  SubgroupEmbedding e = detail::glue_chain(rep, k, 1, 0);
  require(e.new_matrix.rank() == k + 4, "family rank must be k + 4");
  return e;
}

// Index-k subgroups of the rank-6 four-manifold group, acting on
// 5-dimensional space; rank grows as k + 5.
inline SubgroupEmbedding family_Q(int k) {
  if (k < 1) fail(ErrorCode::InvalidArgument, "family index must be positive");
  CartanMatrix a = detail::cartan_rows({{2, -4, -1, 0, 0, 0},
                                        {-4, 2, -1, 0, 0, 0},
                                        {-2, -2, 2, -1, 0, -1},
                                        {0, 0, -1, 2, -1, 0},
                                        {0, 0, 0, -2, 2, -1},
                                        {0, 0, -1, 0, -1, 2}});
  CoxeterMatrix m = CoxeterMatrix::build(
      6, {{0, 1, 0}, {0, 2, 4}, {1, 2, 4}, {2, 3, 3}, {2, 5, 3}, {3, 4, 4}, {4, 5, 3}});
  ReflectionRep rep = rep_from_cartan(a, m);
  SubgroupEmbedding e = detail::glue_chain(rep, k, 1, 0);
  require(e.new_matrix.rank() == k + 5, "family rank must be k + 5");
  return e;
}

// Index-k subgroups of the rank-2p cube-like group; rank grows as
// k + 2p − 1.
inline SubgroupEmbedding family_cube(int p, int k) {
  if (p < 2) fail(ErrorCode::InvalidArgument, "cube family needs p >= 2");
  if (k < 1) fail(ErrorCode::InvalidArgument, "family index must be positive");
  const int n = 2 * p;
  std::vector<std::tuple<int, int, int>> edges = {{0, 1, kInfinity}, {0, 2, 4}, {1, 2, 4}};
  for (int i = 2; i + 1 < n; ++i) edges.push_back({i, i + 1, i % 2 == 0 ? kInfinity : 3});
  CoxeterMatrix m = CoxeterMatrix::build(n, edges);
  RatMatrix raw(n, n);
  for (int i = 0; i < n; ++i) raw(i, i) = 2;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      switch (m.label(i, j)) {
        case 3: raw(i, j) = -1; raw(j, i) = -1; break;
        case 4: raw(i, j) = -1; raw(j, i) = -2; break;
        case kInfinity: raw(i, j) = -2; raw(j, i) = -2; break;
        default: break;
      }
    }
  ReflectionRep rep = rep_from_cartan(CartanMatrix::validate(raw), m);
  SubgroupEmbedding e = detail::glue_chain(rep, k, 1, 0);
  require(e.new_matrix.rank() == k + 2 * p - 1, "family rank must be k + 2p - 1");
  return e;
}

// Rank-(5 + m) witnesses for incoherence: a (3,3,4) triangle with a tail
// vertex joined to it by a 3 and to m + 1 further vertices by infinite
// labels.
inline CoxeterMatrix family_incoherence(int m) {
  if (m < 1) fail(ErrorCode::InvalidArgument, "family index must be positive");
  std::vector<std::tuple<int, int, int>> edges = {
      {0, 1, 4}, {0, 2, 3}, {1, 2, 3}, {2, 3, 3}, {3, 4, kInfinity}};
  for (int i = 0; i < m; ++i) edges.push_back({3, 5 + i, kInfinity});
  return CoxeterMatrix::build(5 + m, edges);
}

// --- thin-to-thick pipeline ----------------------------------------------

// One rank step of the pipeline: the subgroup the stage works in (words in
// the original generators), the forged matrix, and the integral form of the
// reduced representation.
struct PipelineStage {
  SubgroupEmbedding embedding;
  ForgeOutput forge;
  IntegralizationResult integralization;
};

// Drives a right-angled irreducible group from representations of dimension
// equal to its rank up to a prescribed target dimension: forge a full-rank
// matrix, reduce, make it integral, then alternate doubling moves (to open
// a rank gap of 3n+1) with rank bumps until the target is reached.  Every
// stage re-checks that the subgroup diagram predicted by the doubling move
// matches the one recovered from the restricted representation.
inline std::vector<PipelineStage> pipeline_thin_embedding(const CoxeterMatrix& m, int target_dim,
                                                          int max_iters = 64, int order_cap = 64) {
  if (!m.is_right_angled())
    fail(ErrorCode::NotRightAngled, "pipeline operates on right-angled groups");
  if (!is_irreducible(m)) fail(ErrorCode::NotIrreducible, "diagram must be connected");
  if (m.rank() < 3) fail(ErrorCode::RankTooSmall, "rank must be at least 3");
  if (target_dim < m.rank())
    fail(ErrorCode::InvalidArgument, "target dimension is below the starting rank");

  std::vector<PipelineStage> stages;
  CoxeterMatrix current = m;
  SubgroupEmbedding total = identity_embedding(m);
  if (current.edge_count() == current.rank() - 1) {
    SubgroupEmbedding e = double_tree_to_triangle(current);
    current = e.new_matrix;
    total = compose(total, e);
  }

  ForgeOutput forged = forge_racg_spanning_tree(current);
  ReflectionRep reduced = reduce_irreducible(rep_from_cartan(forged.cartan, current));
  IntegralizationResult integralized = conjugate_to_integers(reduced, max_iters, order_cap);
  ReflectionRep rep = apply_change_of_basis(reduced, integralized.change_of_basis);
  stages.push_back({total, std::move(forged), std::move(integralized)});

  int n = rep.dim;
  while (n < target_dim) {
    while (current.rank() < 3 * n + 1) {
      int pivot = 0;
      for (int v = 1; v < current.rank(); ++v)
        if (current.neighbors(v).size() > current.neighbors(pivot).size()) pivot = v;
      SubgroupEmbedding e = double_increase_rank(current, pivot);
      ReflectionRep restricted = restrict_along_words(rep, e.generator_words);
      require(restricted.coxeter == e.new_matrix,
              "doubled diagram must match the restricted representation");
      rep = std::move(restricted);
      current = e.new_matrix;
      total = compose(total, e);
    }
    ForgeOutput bump = forge_rank_bump(current, rep);
    ReflectionRep bumped = reduce_irreducible(rep_from_cartan(bump.cartan, current));
    IntegralizationResult integral = conjugate_to_integers(bumped, max_iters, order_cap);
    rep = apply_change_of_basis(bumped, integral.change_of_basis);
    stages.push_back({total, std::move(bump), std::move(integral)});
    n = rep.dim;
  }
  return stages;
}

}  // namespace vinberg
