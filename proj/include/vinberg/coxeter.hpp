#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "vinberg/errors.hpp"

namespace vinberg {

// Label encoding: 0 stands for the infinite label.  0 is never a legal
// finite Coxeter label, so the encoding is unambiguous and survives
// serialization unchanged.
constexpr int kInfinity = 0;

inline bool finite_label(int m) { return m != kInfinity; }

// Diagram edge: generators that do not commute (label 3.. or infinity).
inline bool diagram_edge(int m) { return m == kInfinity || m >= 3; }

class CoxeterMatrix {
 public:
  // Checks the defining conditions: 1 on the diagonal, symmetric, and every
  // off-diagonal label either >= 2 or infinite.
  static CoxeterMatrix validate(const std::vector<std::vector<int>>& raw) {
    const int n = static_cast<int>(raw.size());
    if (n == 0) fail(ErrorCode::InvalidArgument, "empty Coxeter matrix");
    for (const auto& row : raw)
      if (static_cast<int>(row.size()) != n)
        fail(ErrorCode::InvalidArgument, "Coxeter matrix is not square");
    for (int i = 0; i < n; ++i)
      if (raw[i][i] != 1)
        fail(ErrorCode::BadDiagonal,
             "diagonal entry at (" + std::to_string(i + 1) + "," + std::to_string(i + 1) +
                 ") is " + std::to_string(raw[i][i]) + ", expected 1");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (raw[i][j] != raw[j][i])
          fail(ErrorCode::NonSymmetric,
               "entries (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") and (" +
                   std::to_string(j + 1) + "," + std::to_string(i + 1) + ") differ");
        if (i != j && raw[i][j] != kInfinity && raw[i][j] < 2)
          fail(ErrorCode::BadOffDiagonal,
               "label " + std::to_string(raw[i][j]) + " at (" + std::to_string(i + 1) + "," +
                   std::to_string(j + 1) + ") is below 2");
      }
    return CoxeterMatrix(raw);
  }

  // Convenience builder: rank n, labels default to 2, edges listed as
  // (i, j, label) with 0-based indices.
  static CoxeterMatrix build(int n, const std::vector<std::tuple<int, int, int>>& edges) {
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    for (auto [i, j, label] : edges) {
      if (i < 0 || j < 0 || i >= n || j >= n || i == j)
        fail(ErrorCode::InvalidArgument, "edge endpoints must be distinct vertices below the rank");
      m[i][j] = label;
      m[j][i] = label;
    }
    return validate(m);
  }

  int rank() const { return static_cast<int>(m_.size()); }
  int label(int i, int j) const { return m_[i][j]; }
  const std::vector<std::vector<int>>& labels() const { return m_; }

  bool operator==(const CoxeterMatrix&) const = default;

  // The induced matrix on a subset of generators (0-based, kept in order).
  CoxeterMatrix restrict(const std::vector<int>& subset) const {
    std::vector<std::vector<int>> sub(subset.size(), std::vector<int>(subset.size()));
    for (size_t a = 0; a < subset.size(); ++a)
      for (size_t b = 0; b < subset.size(); ++b) sub[a][b] = m_[subset[a]][subset[b]];
    return CoxeterMatrix(sub);
  }

  bool is_right_angled() const {
    for (int i = 0; i < rank(); ++i)
      for (int j = i + 1; j < rank(); ++j)
        if (m_[i][j] != 2 && m_[i][j] != kInfinity) return false;
    return true;
  }

  std::vector<int> neighbors(int v) const {
    std::vector<int> nb;
    for (int j = 0; j < rank(); ++j)
      if (j != v && diagram_edge(m_[v][j])) nb.push_back(j);
    return nb;
  }

  int edge_count() const {
    int e = 0;
    for (int i = 0; i < rank(); ++i)
      for (int j = i + 1; j < rank(); ++j)
        if (diagram_edge(m_[i][j])) ++e;
    return e;
  }

 private:
  explicit CoxeterMatrix(std::vector<std::vector<int>> m) : m_(std::move(m)) {}
  std::vector<std::vector<int>> m_;
};

// Connected components of the Coxeter diagram, each sorted, listed by
// smallest member.
inline std::vector<std::vector<int>> components(const CoxeterMatrix& m) {
  const int n = m.rank();
  std::vector<int> comp(n, -1);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack = {s};
    comp[s] = count;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v)
        if (comp[v] < 0 && diagram_edge(m.label(u, v))) {
          comp[v] = count;
          stack.push_back(v);
        }
    }
    ++count;
  }
  std::vector<std::vector<int>> parts(count);
  for (int v = 0; v < n; ++v) parts[comp[v]].push_back(v);
  return parts;
}

inline bool is_irreducible(const CoxeterMatrix& m) { return components(m).size() == 1; }

enum class DiagramKind { Spherical, Affine, Large };

inline const char* diagram_kind_name(DiagramKind k) {
  switch (k) {
    case DiagramKind::Spherical: return "Spherical";
    case DiagramKind::Affine: return "Affine";
    case DiagramKind::Large: return "Large";
  }
  return "Unknown";
}

struct ComponentClass {
  std::vector<int> indices;
  DiagramKind kind;
};

struct GroupClass {
  // Worst kind over components: Large beats Affine beats Spherical.  A group
  // is finite iff every component is spherical, virtually abelian iff no
  // component is large.
  DiagramKind kind;
  std::vector<ComponentClass> component_classes;
};

namespace detail {

// Recognizes one connected diagram against the standard spherical and affine
// lists; everything else is large.  The targets are paths, cycles, and trees
// with at most two branch points, so direct structural matching is exact.
inline DiagramKind classify_component(const CoxeterMatrix& m, const std::vector<int>& comp) {
  const int n = static_cast<int>(comp.size());
  if (n == 1) return DiagramKind::Spherical;

  std::vector<std::vector<int>> adj(n);
  std::vector<std::pair<std::pair<int, int>, int>> edges;  // ((a,b), label), local indices
  bool has_infinity = false;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      int l = m.label(comp[a], comp[b]);
      if (!diagram_edge(l)) continue;
      adj[a].push_back(b);
      adj[b].push_back(a);
      edges.push_back({{a, b}, l});
      if (l == kInfinity) has_infinity = true;
    }

  if (n == 2) {
    // The component is connected, so the single pair is an edge.
    return has_infinity ? DiagramKind::Affine : DiagramKind::Spherical;
  }
  // No spherical or affine diagram of rank >= 3 carries an infinite label.
  if (has_infinity) return DiagramKind::Large;

  const int e = static_cast<int>(edges.size());
  auto all_labels_3 = [&] {
    for (const auto& ed : edges)
      if (ed.second != 3) return false;
    return true;
  };

  if (e > n) return DiagramKind::Large;
  if (e == n) {
    // Exactly one cycle; affine only as the pure all-3 cycle.
    bool pure_cycle = true;
    for (int a = 0; a < n; ++a)
      if (adj[a].size() != 2) pure_cycle = false;
    return (pure_cycle && all_labels_3()) ? DiagramKind::Affine : DiagramKind::Large;
  }

  // Tree from here on.
  int max_deg = 0;
  std::vector<int> branch, leaves;
  for (int a = 0; a < n; ++a) {
    max_deg = std::max(max_deg, static_cast<int>(adj[a].size()));
    if (adj[a].size() >= 3) branch.push_back(a);
    if (adj[a].size() == 1) leaves.push_back(a);
  }

  if (max_deg >= 4) {
    // The only standard diagram with a degree-4 vertex is the 5-vertex all-3
    // star (affine D of rank 4).
    if (n == 5 && max_deg == 4 && all_labels_3()) return DiagramKind::Affine;
    return DiagramKind::Large;
  }

  auto label_of = [&](int a, int b) { return m.label(comp[a], comp[b]); };

  if (branch.empty()) {
    // Path: walk from one end and collect the label word.
    int start = leaves[0];
    std::vector<int> word;
    int prev = -1, cur = start;
    for (int step = 0; step + 1 < n; ++step) {
      int next = (adj[cur][0] != prev) ? adj[cur][0] : adj[cur][1];
      word.push_back(label_of(cur, next));
      prev = cur;
      cur = next;
    }
    auto match = [&](const std::vector<int>& w) -> std::optional<DiagramKind> {
      const int k = static_cast<int>(w.size());
      auto all3 = [&](int from, int to) {  // half-open
        for (int i = from; i < to; ++i)
          if (w[i] != 3) return false;
        return true;
      };
      if (all3(0, k)) return DiagramKind::Spherical;                       // A
      if (w[0] == 4 && all3(1, k)) return DiagramKind::Spherical;          // B
      if (w == std::vector<int>{5, 3}) return DiagramKind::Spherical;      // H3
      if (w == std::vector<int>{5, 3, 3}) return DiagramKind::Spherical;   // H4
      if (w == std::vector<int>{3, 4, 3}) return DiagramKind::Spherical;   // F4
      if (w[0] == 4 && w[k - 1] == 4 && all3(1, k - 1)) return DiagramKind::Affine;  // affine C
      if (w == std::vector<int>{6, 3}) return DiagramKind::Affine;            // affine G2
      if (w == std::vector<int>{3, 3, 4, 3}) return DiagramKind::Affine;      // affine F4
      return std::nullopt;
    };
    std::vector<int> rev(word.rbegin(), word.rend());
    if (auto k = match(word)) return *k;
    if (auto k = match(rev)) return *k;
    return DiagramKind::Large;
  }

  if (branch.size() == 1) {
    const int c = branch[0];
    // Three legs off the center; record (vertex count, labels root-to-leaf).
    std::vector<std::pair<int, std::vector<int>>> legs;
    for (int first : adj[c]) {
      std::vector<int> labels = {label_of(c, first)};
      int prev = c, cur = first, len = 1;
      while (adj[cur].size() == 2) {
        int next = (adj[cur][0] != prev) ? adj[cur][0] : adj[cur][1];
        labels.push_back(label_of(cur, next));
        prev = cur;
        cur = next;
        ++len;
      }
      if (adj[cur].size() != 1) return DiagramKind::Large;  // second branch handled below
      legs.push_back({len, labels});
    }
    std::sort(legs.begin(), legs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<int> lens = {legs[0].first, legs[1].first, legs[2].first};
    int non3 = 0, label4_terminal = 0;
    for (const auto& leg : legs)
      for (size_t i = 0; i < leg.second.size(); ++i)
        if (leg.second[i] != 3) {
          ++non3;
          if (leg.second[i] == 4 && i + 1 == leg.second.size() && leg.first == lens[2])
            ++label4_terminal;
        }
    if (non3 == 0) {
      if (lens[0] == 1 && lens[1] == 1) return DiagramKind::Spherical;  // D
      if (lens == std::vector<int>{1, 2, 2}) return DiagramKind::Spherical;  // E6
      if (lens == std::vector<int>{1, 2, 3}) return DiagramKind::Spherical;  // E7
      if (lens == std::vector<int>{1, 2, 4}) return DiagramKind::Spherical;  // E8
      if (lens == std::vector<int>{2, 2, 2}) return DiagramKind::Affine;     // affine E6
      if (lens == std::vector<int>{1, 3, 3}) return DiagramKind::Affine;     // affine E7
      if (lens == std::vector<int>{1, 2, 5}) return DiagramKind::Affine;     // affine E8
      return DiagramKind::Large;
    }
    // Affine B: two length-1 legs, and a single 4 sitting on the far end of
    // the remaining leg.
    if (non3 == 1 && label4_terminal == 1 && lens[0] == 1 && lens[1] == 1)
      return DiagramKind::Affine;
    return DiagramKind::Large;
  }

  if (branch.size() == 2) {
    // Affine D: each branch vertex carries exactly two leaf legs, all labels 3.
    if (!all_labels_3()) return DiagramKind::Large;
    for (int b : branch) {
      int leaf_nb = 0;
      for (int u : adj[b])
        if (adj[u].size() == 1) ++leaf_nb;
      if (leaf_nb != 2) return DiagramKind::Large;
    }
    return DiagramKind::Affine;
  }

  return DiagramKind::Large;
}

}  // namespace detail

inline GroupClass classify(const CoxeterMatrix& m) {
  GroupClass g{DiagramKind::Spherical, {}};
  for (const auto& comp : components(m)) {
    DiagramKind k = detail::classify_component(m, comp);
    g.kind = std::max(g.kind, k);
    g.component_classes.push_back({comp, k});
  }
  return g;
}

// Quasi-Lanner: irreducible, large, and every one-generator deletion is
// spherical or irreducible affine.
inline bool is_quasi_lanner(const CoxeterMatrix& m) {
  if (!is_irreducible(m)) return false;
  if (classify(m).kind != DiagramKind::Large) return false;
  const int n = m.rank();
  for (int t = 0; t < n; ++t) {
    std::vector<int> rest;
    for (int i = 0; i < n; ++i)
      if (i != t) rest.push_back(i);
    if (rest.empty()) continue;
    CoxeterMatrix sub = m.restrict(rest);
    GroupClass g = classify(sub);
    bool spherical = g.kind == DiagramKind::Spherical;
    bool irr_affine = g.kind == DiagramKind::Affine && is_irreducible(sub);
    if (!spherical && !irr_affine) return false;
  }
  return true;
}

namespace detail {

// Lexicographic k-subsets of {0..n-1}.
inline bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace detail

// Smallest generator subset spanning an irreducible large subgroup, by
// (size, lexicographic) order; such a minimal subset is quasi-Lanner, which
// is re-checked rather than assumed.
inline std::vector<int> find_quasi_lanner_subset(const CoxeterMatrix& m) {
  bool any_large = false;
  for (const auto& c : classify(m).component_classes)
    if (c.kind == DiagramKind::Large) any_large = true;
  if (!any_large) fail(ErrorCode::NotLarge, "no large irreducible component");

  const int n = m.rank();
  for (int size = 3; size <= n; ++size) {
    std::vector<int> c(size);
    for (int i = 0; i < size; ++i) c[i] = i;
    do {
      CoxeterMatrix sub = m.restrict(c);
      if (!is_irreducible(sub)) continue;
      if (classify(sub).kind != DiagramKind::Large) continue;
      if (!is_quasi_lanner(sub)) continue;
      return c;
    } while (detail::next_combination(c, n));
  }
  fail(ErrorCode::NotLarge, "no quasi-Lanner subset found");  // unreachable for large inputs
}

// A reflection subgroup presented by words in the ambient generators, one
// odd-length word per new generator.
struct SubgroupEmbedding {
  CoxeterMatrix new_matrix;
  std::vector<std::vector<int>> generator_words;  // 0-based letters
  long index;  // index of the subgroup in the ambient group
};

// Embedding composition: outer picks generators of W'' as words in W',
// inner writes W' generators as words in W.
inline SubgroupEmbedding compose(const SubgroupEmbedding& inner, const SubgroupEmbedding& outer) {
  SubgroupEmbedding e{outer.new_matrix, {}, inner.index * outer.index};
  for (const auto& word : outer.generator_words) {
    std::vector<int> expanded;
    for (int letter : word) {
      const auto& w = inner.generator_words.at(letter);
      expanded.insert(expanded.end(), w.begin(), w.end());
    }
    e.generator_words.push_back(std::move(expanded));
  }
  return e;
}

inline SubgroupEmbedding identity_embedding(const CoxeterMatrix& m) {
  SubgroupEmbedding e{m, {}, 1};
  for (int i = 0; i < m.rank(); ++i) e.generator_words.push_back({i});
  return e;
}

}  // namespace vinberg
