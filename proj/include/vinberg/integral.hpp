#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vinberg/cartan.hpp"
#include "vinberg/errors.hpp"
#include "vinberg/hnf.hpp"
#include "vinberg/matrix.hpp"
#include "vinberg/rational.hpp"
#include "vinberg/represent.hpp"

namespace vinberg {

// A full-rank lattice (1/denominator)·H·ℤⁿ with H in column Hermite normal
// form and gcd(content(H), denominator) = 1, so equal lattices compare equal.
struct Lattice {
  int dim = 0;
  RatMatrix basis;
  Int denominator = 1;

  bool operator==(const Lattice&) const = default;

  // Canonicalizes the lattice generated by the given rational columns.
  static Lattice make_canonical(const std::vector<std::vector<Rat>>& columns) {
    if (columns.empty()) fail(ErrorCode::InvalidArgument, "lattice needs generators");
    const int n = static_cast<int>(columns.front().size());
    Int denom = 1;
    for (const auto& c : columns) {
      require(static_cast<int>(c.size()) == n, "lattice generator length mismatch");
      for (const auto& x : c) denom = lcm(denom, vinberg::denominator(x));
    }
    IntMatrix scaled(n, static_cast<int>(columns.size()));
    for (size_t j = 0; j < columns.size(); ++j)
      for (int i = 0; i < n; ++i) {
        Rat entry = columns[j][i] * Rat(denom);
        require(is_integer(entry), "denominator clearing failed");
        scaled(i, static_cast<int>(j)) = numerator(entry);
      }
    IntMatrix h = hnf_basis(scaled);
    Int content = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) content = gcd(content, h(i, j));
    Int g = gcd(content, denom);
    if (g > 1) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) h(i, j) = divexact(h(i, j), g);
      denom = divexact(denom, g);
    }
    Lattice out;
    out.dim = n;
    out.denominator = denom;
    out.basis = RatMatrix(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out.basis(i, j) = Rat(h(i, j)) / Rat(denom);
    return out;
  }
};

namespace detail {

inline std::vector<std::vector<Rat>> matrix_columns(const RatMatrix& m) {
  std::vector<std::vector<Rat>> cols;
  for (int j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
  return cols;
}

}  // namespace detail

// Smallest lattice containing ℤⁿ that every generator maps into itself,
// computed by saturating L ↦ canonical(L ∪ ρ(s)L).  Divergence (iteration or
// denominator watchdog) signals a non-integral cyclic product upstream.
inline Lattice invariant_lattice(const ReflectionRep& rep, int max_iters = 64,
                                 int* iterations_out = nullptr) {
  if (!is_irreducible(rep)) fail(ErrorCode::NotIrreducible, "lattice saturation needs an irreducible representation");
  const Int denom_cap = Int(1) << 1024;
  Lattice lat = Lattice::make_canonical(detail::matrix_columns(RatMatrix::identity(rep.dim)));
  int iterations = 0;
  bool converged = false;
  while (iterations < max_iters) {
    std::vector<std::vector<Rat>> cols = detail::matrix_columns(lat.basis);
    for (const auto& g : rep.generators)
      for (auto& c : detail::matrix_columns(g * lat.basis)) cols.push_back(std::move(c));
    Lattice next = Lattice::make_canonical(cols);
    ++iterations;
    if (next == lat) {
      converged = true;
      break;
    }
    if (next.denominator > denom_cap)
      fail(ErrorCode::NoConvergence, "lattice denominators exceed the watchdog bound");
    lat = std::move(next);
  }
  if (!converged)
    fail(ErrorCode::NoConvergence,
         "no invariant lattice after " + std::to_string(max_iters) + " saturation steps");
  for (const auto& g : rep.generators)
    require(Lattice::make_canonical(detail::matrix_columns(g * lat.basis)) == lat,
            "fixed-point lattice must be generator-invariant");
  if (iterations_out) *iterations_out = iterations;
  return lat;
}

struct IntegralizationResult {
  RatMatrix change_of_basis;
  std::vector<IntMatrix> integer_generators;
  int iterations = 0;
};

// Conjugated copy of the representation: generators P⁻¹ρ(s)P, roots α_s·P,
// vectors P⁻¹v_s.  Pairings, and hence the Cartan matrix, are unchanged.
inline ReflectionRep apply_change_of_basis(const ReflectionRep& rep, const RatMatrix& p) {
  auto p_inv = inverse(p);
  if (!p_inv.has_value()) fail(ErrorCode::InvalidArgument, "change of basis must be invertible");
  std::vector<std::vector<Rat>> alphas, vs;
  std::vector<RatMatrix> gens;
  for (int s = 0; s < rep.generator_count(); ++s) {
    gens.push_back(*p_inv * rep.generators[s] * p);
    alphas.push_back(row_mat(rep.alphas[s], p));
    vs.push_back(mat_vec(*p_inv, rep.vs[s]));
  }
  return ReflectionRep::make(rep.dim, std::move(gens), std::move(alphas), std::move(vs),
                             rep.cartan, rep.coxeter);
}

// Change of basis P with every P⁻¹ρ(s)P an integer matrix of determinant −1.
// Fails with the obstruction witness when some cyclic product of the Cartan
// matrix is not an integer; re-verifies all Coxeter relations on the output.
inline IntegralizationResult conjugate_to_integers(const ReflectionRep& rep, int max_iters = 64,
                                                   int order_cap = 64) {
  auto cyc = integer_cyclic_certificate(rep.cartan);
  if (!cyc.all_integer) {
    require(cyc.witness.has_value(), "non-integer verdict needs a witness");
    std::string cycle;
    for (size_t i = 0; i < cyc.witness->first.size(); ++i)
      cycle += (i ? "," : "") + std::to_string(cyc.witness->first[i] + 1);
    fail(ErrorCode::CyclicProductObstruction,
         "cyclic product over (" + cycle + ") equals " + to_string(cyc.witness->second));
  }
  IntegralizationResult out;
  Lattice lat = invariant_lattice(rep, max_iters, &out.iterations);
  out.change_of_basis = lat.basis;
  ReflectionRep check = apply_change_of_basis(rep, lat.basis);
  for (const auto& g : check.generators) {
    auto integral = to_integer(g);
    require(integral.has_value(), "conjugated generator must be integral");
    require(det(*integral) == -1, "reflection determinant must be -1");
    out.integer_generators.push_back(std::move(*integral));
  }
  verify_relations(check, order_cap);
  return out;
}

}  // namespace vinberg
