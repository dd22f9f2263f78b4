#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "vinberg/coxeter.hpp"
#include "vinberg/cycles.hpp"
#include "vinberg/errors.hpp"
#include "vinberg/matrix.hpp"
#include "vinberg/polynomial.hpp"
#include "vinberg/rational.hpp"

namespace vinberg {

class CartanMatrix {
 public:
  // Defining conditions: 2 on the diagonal, nonpositive off the diagonal,
  // and a zero at (i,j) forces a zero at (j,i).
  static CartanMatrix validate(const RatMatrix& raw) {
    if (raw.rows() == 0 || raw.rows() != raw.cols())
      fail(ErrorCode::InvalidArgument, "Cartan matrix must be square and nonempty");
    const int n = raw.rows();
    for (int i = 0; i < n; ++i)
      if (raw(i, i) != 2)
        fail(ErrorCode::BadDiagonal,
             "diagonal entry at (" + std::to_string(i + 1) + "," + std::to_string(i + 1) +
                 ") is " + to_string(raw(i, i)) + ", expected 2");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        if (raw(i, j) > 0)
          fail(ErrorCode::PositiveOffDiagonal,
               "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") is " +
                   to_string(raw(i, j)) + " > 0");
        if ((raw(i, j) == 0) != (raw(j, i) == 0))
          fail(ErrorCode::ZeroAsymmetry,
               "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                   ") is zero but its mirror is not");
      }
    return CartanMatrix(raw);
  }

  int size() const { return a_.rows(); }
  const Rat& operator()(int i, int j) const { return a_(i, j); }
  const RatMatrix& entries() const { return a_; }

  bool operator==(const CartanMatrix&) const = default;

  CartanMatrix restrict(const std::vector<int>& subset) const {
    const int k = static_cast<int>(subset.size());
    RatMatrix sub(k, k);
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) sub(a, b) = a_(subset[a], subset[b]);
    return CartanMatrix(sub);
  }

  std::vector<std::vector<int>> support_components() const {
    const int n = size();
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
          if (comp[v] < 0 && a_(u, v) != 0) {
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

  bool is_indecomposable() const { return support_components().size() == 1; }

 private:
  explicit CartanMatrix(RatMatrix a) : a_(std::move(a)) {}
  RatMatrix a_;
};

inline int rank_of(const CartanMatrix& a) { return rank_of(a.entries()); }

// 4cos^2(pi/m) for the labels realizable over the rationals.
inline Rat rational_label_product(int m) {
  switch (m) {
    case 2: return Rat(0);
    case 3: return Rat(1);
    case 4: return Rat(2);
    case 6: return Rat(3);
  }
  fail(ErrorCode::UnsupportedLabel,
       "finite label " + std::to_string(m) + " has no rational Cartan realization");
}

struct CompatibilityReport {
  struct Pair {
    int i, j;  // 0-based, i < j
    int label;
    Rat product;
    bool ok;
    std::string reason;  // empty when ok
  };
  bool compatible;
  std::vector<Pair> pairs;
};

// Entrywise match between a Cartan matrix and a Coxeter matrix: commuting
// pairs must have zero entries, finite labels force the exact product
// 4cos^2(pi/m), and infinite labels force a product of at least 4.
inline CompatibilityReport is_compatible(const CartanMatrix& a, const CoxeterMatrix& m) {
  if (a.size() != m.rank())
    fail(ErrorCode::RankMismatch, "Cartan matrix is " + std::to_string(a.size()) +
                                      "x" + std::to_string(a.size()) + " but Coxeter matrix has rank " +
                                      std::to_string(m.rank()));
  CompatibilityReport rep{true, {}};
  const int n = a.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int label = m.label(i, j);
      Rat product = a(i, j) * a(j, i);
      CompatibilityReport::Pair p{i, j, label, product, true, ""};
      if (label == 2) {
        if (a(i, j) != 0) {
          p.ok = false;
          p.reason = "label 2 requires zero entries";
        }
      } else if (label == kInfinity) {
        if (a(i, j) == 0) {
          p.ok = false;
          p.reason = "infinite label requires nonzero entries";
        } else if (product < 4) {
          p.ok = false;
          p.reason = "product below 4 for infinite label";
        }
      } else {
        Rat target = rational_label_product(label);
        if (a(i, j) == 0) {
          p.ok = false;
          p.reason = "zero entry for noncommuting pair";
        } else if (product != target) {
          p.ok = false;
          p.reason = "product differs from 4cos^2(pi/" + std::to_string(label) + ")";
        }
      }
      if (!p.ok) rep.compatible = false;
      rep.pairs.push_back(std::move(p));
    }
  return rep;
}

// Diagonal conjugation witness: positive t_1..t_n with t_1 = 1 and
// t_i/t_j = (d_i/d_j)^2 for any positive diagonal D with D A D^{-1} = B.
// Ratios propagate along a spanning forest of the common support graph;
// every remaining pair is then checked.
inline std::optional<std::vector<Rat>> equivalent(const CartanMatrix& a, const CartanMatrix& b) {
  const int n = a.size();
  if (b.size() != n)
    fail(ErrorCode::RankMismatch, "matrices have different sizes");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((a(i, j) == 0) != (b(i, j) == 0))
        fail(ErrorCode::ZeroPatternMismatch,
             "zero patterns differ at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");

  // ratio[i] = d_i/d_base over each support component, base ratio 1.
  std::vector<Rat> ratio(n);
  std::vector<bool> seen(n, false);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = true;
    ratio[s] = 1;
    std::vector<int> queue = {s};
    for (size_t q = 0; q < queue.size(); ++q) {
      int u = queue[q];
      for (int v = 0; v < n; ++v) {
        if (seen[v] || u == v || a(u, v) == 0) continue;
        // d_u/d_v = B_uv/A_uv, so d_v = d_u * A_uv/B_uv.
        seen[v] = true;
        ratio[v] = ratio[u] * a(u, v) / b(u, v);
        queue.push_back(v);
      }
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || a(i, j) == 0) continue;
      if (ratio[i] * a(i, j) / ratio[j] != b(i, j)) return std::nullopt;
    }
  std::vector<Rat> t(n);
  for (int i = 0; i < n; ++i) t[i] = ratio[i] * ratio[i];
  return t;
}

struct SymmetrizabilityResult {
  bool symmetrizable;
  std::vector<Rat> weights;        // positive, t_i a_ij = t_j a_ji; empty otherwise
  std::vector<int> witness_cycle;  // 0-based, canonical orientation; empty when symmetrizable
  Rat forward, reverse;            // products of the witness cycle's two orientations
};

namespace detail {

// Canonical orientation: smallest vertex first, then the direction whose
// second vertex is smaller.
inline void canonicalize_cycle(std::vector<int>& c) {
  auto it = std::min_element(c.begin(), c.end());
  std::rotate(c.begin(), it, c.end());
  if (c.size() > 2 && c[1] > c.back()) std::reverse(c.begin() + 1, c.end());
}

inline Rat cycle_product(const CartanMatrix& a, const std::vector<int>& c, bool forward) {
  Rat p(1);
  const int k = static_cast<int>(c.size());
  for (int i = 0; i < k; ++i) {
    int u = c[i], v = c[(i + 1) % k];
    p *= forward ? a(u, v) : a(v, u);
  }
  return p;
}

}  // namespace detail

// Spanning-tree propagation of the weights t_i; the first pair that violates
// t_i a_ij = t_j a_ji closes a tree path into the witness cycle.
inline SymmetrizabilityResult is_symmetrizable(const CartanMatrix& a) {
  const int n = a.size();
  std::vector<Rat> t(n);
  std::vector<int> parent(n, -1);
  std::vector<bool> seen(n, false);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = true;
    t[s] = 1;
    std::vector<int> queue = {s};
    for (size_t q = 0; q < queue.size(); ++q) {
      int u = queue[q];
      for (int v = 0; v < n; ++v) {
        if (seen[v] || u == v || a(u, v) == 0) continue;
        seen[v] = true;
        parent[v] = u;
        t[v] = t[u] * a(u, v) / a(v, u);
        queue.push_back(v);
      }
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (a(i, j) == 0) continue;
      if (t[i] * a(i, j) == t[j] * a(j, i)) continue;
      // Tree path i -> root plus j -> root, joined at the lowest common
      // ancestor, closed by the violating edge.
      std::vector<int> up_i, up_j;
      for (int u = i; u != -1; u = parent[u]) up_i.push_back(u);
      for (int u = j; u != -1; u = parent[u]) up_j.push_back(u);
      while (up_i.size() > 1 && up_j.size() > 1 &&
             up_i[up_i.size() - 2] == up_j[up_j.size() - 2]) {
        up_i.pop_back();
        up_j.pop_back();
      }
      require(up_i.back() == up_j.back(), "witness paths must meet");
      std::vector<int> cycle(up_i.begin(), up_i.end());
      for (auto it = up_j.rbegin() + 1; it != up_j.rend(); ++it) cycle.push_back(*it);
      detail::canonicalize_cycle(cycle);
      SymmetrizabilityResult r{false, {}, cycle, 0, 0};
      r.forward = detail::cycle_product(a, cycle, true);
      r.reverse = detail::cycle_product(a, cycle, false);
      return r;
    }
  return SymmetrizabilityResult{true, t, {}, 0, 0};
}

enum class CartanType { Positive, Zero, Negative };

inline const char* cartan_type_name(CartanType t) {
  switch (t) {
    case CartanType::Positive: return "Positive";
    case CartanType::Zero: return "Zero";
    case CartanType::Negative: return "Negative";
  }
  return "Unknown";
}

// Sign of 2 - rho where rho is the Perron root of 2*Id - A, decided exactly:
// Positive iff no real eigenvalue reaches 2, Zero iff 2 is an eigenvalue and
// the largest real one, Negative otherwise.
inline CartanType cartan_type(const CartanMatrix& a) {
  if (!a.is_indecomposable())
    fail(ErrorCode::Decomposable, "type is defined for indecomposable matrices only");
  const int n = a.size();
  RatMatrix b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b(i, j) = (i == j) ? Rat(Rat(2) - a(i, j)) : Rat(-a(i, j));
  Poly p = charpoly(b);
  Poly sf = poly_squarefree(p);
  if (poly_eval(p, Rat(2)) != 0) {
    return count_roots_greater(sf, Rat(2)) == 0 ? CartanType::Positive : CartanType::Negative;
  }
  Poly deflated = poly_deflate_root(sf, Rat(2));
  if (poly_degree(deflated) <= 0) return CartanType::Zero;
  return count_roots_greater(deflated, Rat(2)) == 0 ? CartanType::Zero : CartanType::Negative;
}

struct CyclicProductReport {
  std::vector<std::vector<int>> checked_cycles;  // 0-based, sorted by (length, lex)
  bool all_integer;
  std::optional<std::pair<std::vector<int>, Rat>> witness;  // first non-integer product
  std::optional<std::tuple<std::vector<int>, Rat, Rat>> symmetrizable_witness;  // forward != reverse
};

// All simple cycles of the support graph up to max_len, both orientations'
// products recorded.  A forward/reverse mismatch doubles as a
// non-symmetrizability witness.
inline CyclicProductReport cyclic_products(const CartanMatrix& a, int max_len,
                                           long budget = 1000000) {
  if (max_len > a.size())
    fail(ErrorCode::InvalidArgument, "max_len exceeds the matrix size");
  auto adj = [&](int i, int j) { return a(i, j) != 0; };
  CyclicProductReport rep{{}, true, std::nullopt, std::nullopt};
  rep.checked_cycles = simple_cycles(a.size(), adj, max_len, budget);
  for (const auto& c : rep.checked_cycles) {
    Rat fwd = detail::cycle_product(a, c, true);
    Rat rev = detail::cycle_product(a, c, false);
    if (!rep.witness) {
      if (!is_integer(fwd))
        rep.witness = {c, fwd};
      else if (!is_integer(rev))
        rep.witness = {c, rev};
    }
    if (!rep.symmetrizable_witness && fwd != rev) rep.symmetrizable_witness = {c, fwd, rev};
  }
  rep.all_integer = !rep.witness.has_value();
  return rep;
}

struct CyclicIntegrality {
  bool all_integer = true;
  std::optional<std::pair<std::vector<int>, Rat>> witness;
};

namespace detail {

// First simple cycle of negative total weight in the digraph (has, w), or
// empty.  Shortest closed walks of each exact length are computed by dynamic
// programming; a negative closed walk is then spliced down to a simple cycle
// by cutting out nonnegative loops, which keeps the total negative.
inline std::vector<int> negative_cycle(const std::vector<std::vector<bool>>& has,
                                       const std::vector<std::vector<long>>& w) {
  const int n = static_cast<int>(has.size());
  const long inf = std::numeric_limits<long>::max() / 4;
  for (int v = 0; v < n; ++v) {
    std::vector<std::vector<long>> best(n + 1, std::vector<long>(n, inf));
    std::vector<std::vector<int>> from(n + 1, std::vector<int>(n, -1));
    best[0][v] = 0;
    int hit = -1;
    for (int len = 1; len <= n && hit < 0; ++len) {
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
          if (!has[i][j] || best[len - 1][i] >= inf) continue;
          long cand = best[len - 1][i] + w[i][j];
          if (cand < best[len][j]) {
            best[len][j] = cand;
            from[len][j] = i;
          }
        }
      if (best[len][v] < 0) hit = len;
    }
    if (hit < 0) continue;
    std::vector<int> walk(hit + 1);
    walk[hit] = v;
    for (int len = hit; len > 0; --len) walk[len - 1] = from[len][walk[len]];
    std::vector<int> stack{walk[0]};
    for (int k = 1; k <= hit; ++k) {
      int u = walk[k];
      int pos = -1;
      for (size_t t = 0; t < stack.size(); ++t)
        if (stack[t] == u) {
          pos = static_cast<int>(t);
          break;
        }
      if (pos < 0) {
        stack.push_back(u);
        continue;
      }
      long loop = 0;
      for (size_t t = pos; t + 1 < stack.size(); ++t) loop += w[stack[t]][stack[t + 1]];
      loop += w[stack.back()][u];
      if (loop < 0) return std::vector<int>(stack.begin() + pos, stack.end());
      stack.resize(pos + 1);
    }
    require(false, "negative closed walk must contain a negative simple cycle");
  }
  return {};
}

}  // namespace detail

// Decides integrality of all cyclic products without enumerating cycles.
// For a fixed prime p the products over every cycle are p-integral iff the
// digraph weighted by entrywise p-adic valuations has no negative cycle;
// closed walks decompose into simple cycles, so polynomial negative-cycle
// search per denominator prime replaces the exponential enumeration.
inline CyclicIntegrality integer_cyclic_certificate(const CartanMatrix& a) {
  const int n = a.size();
  std::set<Int> primes;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || a(i, j) == 0) continue;
      Int d = denominator(a(i, j));
      for (Int p = 2; p * p <= d; ++p) {
        if (d % p != 0) continue;
        primes.insert(p);
        while (d % p == 0) d = divexact(d, p);
      }
      if (d > 1) primes.insert(d);
    }
  auto valuation = [](Int x, const Int& p) {
    long v = 0;
    while (x % p == 0) {
      x = divexact(x, p);
      ++v;
    }
    return v;
  };
  for (const Int& p : primes) {
    std::vector<std::vector<long>> w(n, std::vector<long>(n, 0));
    std::vector<std::vector<bool>> has(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j || a(i, j) == 0) continue;
        has[i][j] = true;
        w[i][j] = valuation(numerator(a(i, j)), p) - valuation(denominator(a(i, j)), p);
      }
    std::vector<int> cycle = detail::negative_cycle(has, w);
    if (cycle.empty()) continue;
    Rat prod = detail::cycle_product(a, cycle, true);
    require(!is_integer(prod), "extracted negative-valuation cycle must witness non-integrality");
    return CyclicIntegrality{false, std::make_pair(std::move(cycle), std::move(prod))};
  }
  return CyclicIntegrality{true, std::nullopt};
}

}  // namespace vinberg
