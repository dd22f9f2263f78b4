#pragma once

#include <utility>
#include <vector>

#include "vinberg/errors.hpp"
#include "vinberg/rational.hpp"

namespace vinberg {

// Dense univariate polynomial over the rationals, low-to-high coefficients.
// The zero polynomial is the empty vector; every other value has a nonzero
// leading coefficient.
using Poly = std::vector<Rat>;

inline Poly poly_normalize(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline int poly_degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline bool poly_is_zero(const Poly& p) { return p.empty(); }

inline Rat poly_eval(const Poly& p, const Rat& x) {
  Rat v(0);
  for (size_t k = p.size(); k-- > 0;) v = v * x + p[k];
  return v;
}

inline Poly poly_derivative(const Poly& p) {
  if (p.size() <= 1) return {};
  Poly d(p.size() - 1);
  for (size_t k = 1; k < p.size(); ++k) d[k - 1] = p[k] * Rat(static_cast<long>(k));
  return poly_normalize(std::move(d));
}

inline Poly poly_scale(Poly p, const Rat& c) {
  if (c == 0) return {};
  for (Rat& a : p) a *= c;
  return p;
}

// quotient/remainder with divisor != 0
inline std::pair<Poly, Poly> poly_divmod(Poly num, const Poly& den) {
  require(!poly_is_zero(den), "polynomial division by zero");
  num = poly_normalize(std::move(num));
  Poly quot;
  if (num.size() >= den.size()) quot.assign(num.size() - den.size() + 1, Rat(0));
  while (num.size() >= den.size() && !num.empty()) {
    Rat f = num.back() / den.back();
    size_t shift = num.size() - den.size();
    quot[shift] = f;
    for (size_t k = 0; k < den.size(); ++k) num[shift + k] -= f * den[k];
    num = poly_normalize(std::move(num));
  }
  return {poly_normalize(std::move(quot)), std::move(num)};
}

inline Poly poly_monic(Poly p) {
  p = poly_normalize(std::move(p));
  if (p.empty()) return p;
  Rat inv = Rat(1) / p.back();
  for (Rat& a : p) a *= inv;
  return p;
}

inline Poly poly_gcd(Poly a, Poly b) {
  a = poly_normalize(std::move(a));
  b = poly_normalize(std::move(b));
  while (!b.empty()) {
    Poly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(std::move(a));
}

// p with all multiple roots collapsed to simple ones: p / gcd(p, p').
inline Poly poly_squarefree(const Poly& p) {
  Poly q = poly_normalize(p);
  if (q.size() <= 1) return q;
  Poly g = poly_gcd(q, poly_derivative(q));
  return poly_monic(poly_divmod(q, g).first);
}

// Divide out a known root r exactly; the remainder must vanish.
inline Poly poly_deflate_root(const Poly& p, const Rat& r) {
  Poly lin = {-r, Rat(1)};
  auto [q, rem] = poly_divmod(p, lin);
  require(poly_is_zero(rem), "deflating a non-root");
  return q;
}

// Sturm chain of a squarefree polynomial.
inline std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain;
  Poly a = poly_normalize(p);
  if (a.empty()) return chain;
  chain.push_back(a);
  Poly b = poly_derivative(a);
  while (!b.empty()) {
    chain.push_back(b);
    Poly r = poly_divmod(chain[chain.size() - 2], b).second;
    for (Rat& c : r) c = -c;
    b = poly_normalize(std::move(r));
  }
  return chain;
}

namespace detail {

inline int sign_of(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

inline int variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace detail

// Number of distinct real roots of squarefree p in the open interval
// (a, +infinity); requires p(a) != 0.
inline int count_roots_greater(const Poly& p, const Rat& a) {
  Poly q = poly_normalize(p);
  require(!q.empty(), "root counting on the zero polynomial");
  require(poly_eval(q, a) != 0, "count_roots_greater at a root");
  std::vector<Poly> chain = sturm_chain(q);
  std::vector<int> at_a, at_inf;
  at_a.reserve(chain.size());
  at_inf.reserve(chain.size());
  for (const Poly& s : chain) {
    at_a.push_back(detail::sign_of(poly_eval(s, a)));
    at_inf.push_back(detail::sign_of(s.back()));
  }
  return detail::variations(at_a) - detail::variations(at_inf);
}

}  // namespace vinberg
