// Acceptance checks for the full toolchain: one PASS/FAIL line per criterion,
// exact arithmetic throughout, wall-clock budgets where stated.  Exits 0 only
// if every criterion passes.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "vinberg/forge.hpp"
#include "vinberg/subgroups.hpp"

using namespace vinberg;

namespace {

struct CheckFailure {
  std::string message;
};

#define ACCEPT(cond)                                                       \
  do {                                                                     \
    if (!(cond)) throw CheckFailure{std::string("line ") +                 \
                                    std::to_string(__LINE__) + ": " #cond}; \
  } while (0)

int failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Runs one criterion body, enforcing the time budget (0 = none).
template <typename F>
void criterion(int n, const std::string& label, double limit_s, F&& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string failure;
  try {
    body();
  } catch (const CheckFailure& f) {
    failure = f.message;
  } catch (const std::exception& e) {
    failure = e.what();
  }
  double secs = seconds_since(t0);
  if (failure.empty() && limit_s > 0 && secs >= limit_s) {
    std::ostringstream os;
    os << "exceeded time budget of " << limit_s << "s";
    failure = os.str();
  }
  std::cout << std::fixed << std::setprecision(2);
  if (failure.empty()) {
    std::cout << "PASS criterion " << n << ": " << label << " (" << secs << "s)\n";
  } else {
    std::cout << "FAIL criterion " << n << ": " << label << ": " << failure << " (" << secs
              << "s)\n";
    ++failures;
  }
}

RatMatrix rat_rows(const std::vector<std::vector<long>>& rows) {
  RatMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = Rat(rows[i][static_cast<size_t>(j)]);
  return m;
}

template <typename F>
bool throws_code(F&& f, ErrorCode c) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == c;
  }
  return false;
}

CartanMatrix kv_cartan() {
  return CartanMatrix::validate(rat_rows({{2, -1, -1}, {-2, 2, -1}, {-1, -1, 2}}));
}

CoxeterMatrix kv_coxeter() {
  return CoxeterMatrix::build(3, {{0, 1, 4}, {0, 2, 3}, {1, 2, 3}});
}

CoxeterMatrix pentagon_coxeter() {
  return CoxeterMatrix::build(5, {{0, 1, 0}, {1, 2, 0}, {2, 3, 0}, {3, 4, 0}, {0, 4, 0}});
}

// Entrywise re-verification of an integralization result: conjugating by the
// reported basis reproduces the reported integer matrices, each of
// determinant -1, and all group relations hold.
void reverify_integralization(const ReflectionRep& rep, const IntegralizationResult& res) {
  ReflectionRep conj = apply_change_of_basis(rep, res.change_of_basis);
  ACCEPT(res.integer_generators.size() == static_cast<size_t>(rep.generator_count()));
  for (int s = 0; s < rep.generator_count(); ++s) {
    auto integral = to_integer(conj.generators[s]);
    ACCEPT(integral.has_value());
    ACCEPT(*integral == res.integer_generators[static_cast<size_t>(s)]);
    ACCEPT(det(*integral) == -1);
  }
  verify_relations(conj);
}

// Random connected Coxeter diagram of rank 3..6 with at least one infinite
// label, plus a random compatible rational Cartan matrix for it.
std::pair<CartanMatrix, CoxeterMatrix> random_instance(std::mt19937& rng) {
  std::uniform_int_distribution<int> rank_dist(3, 6);
  const int n = rank_dist(rng);

  auto pick = [&](const std::vector<int>& xs) {
    std::uniform_int_distribution<size_t> d(0, xs.size() - 1);
    return xs[d(rng)];
  };

  std::vector<std::vector<int>> labels(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) labels[i][i] = 1;
  auto set_label = [&](int i, int j, int v) { labels[i][j] = labels[j][i] = v; };

  // Spanning path keeps the diagram connected; one guaranteed infinite edge.
  set_label(0, 1, 0);
  for (int i = 1; i + 1 < n; ++i) set_label(i, i + 1, pick({0, 3, 4, 6}));
  for (int i = 0; i < n; ++i)
    for (int j = i + 2; j < n; ++j) set_label(i, j, pick({2, 2, 2, 3, 4, 6, 0}));

  std::vector<std::tuple<int, int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (labels[i][j] != 2) edges.emplace_back(i, j, labels[i][j]);
  CoxeterMatrix m = CoxeterMatrix::build(n, edges);

  auto pick_rat = [&](const std::vector<Rat>& xs) {
    std::uniform_int_distribution<size_t> d(0, xs.size() - 1);
    return xs[d(rng)];
  };

  RatMatrix a(n, n);
  for (int i = 0; i < n; ++i) a(i, i) = 2;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int label = labels[i][j];
      if (label == 2) continue;
      Rat product;
      if (label == 0)
        product = pick_rat({Rat(4), Rat(9) / 2, Rat(5), Rat(16) / 3, Rat(6)});
      else
        product = rational_label_product(label);
      Rat split = pick_rat({Rat(1), Rat(2), Rat(3), Rat(1) / 2, Rat(3) / 2, Rat(2) / 3});
      a(i, j) = -split;
      a(j, i) = -(product / split);
    }
  return {CartanMatrix::validate(a), m};
}

}  // namespace

int main() {
  criterion(1, "asymmetric triangle certificates end to end", 1.0, [] {
    CartanMatrix a = kv_cartan();
    CoxeterMatrix m = kv_coxeter();
    ACCEPT(is_compatible(a, m).compatible);
    ACCEPT(rank_of(a) == 3);

    SymmetrizabilityResult sym = is_symmetrizable(a);
    ACCEPT(!sym.symmetrizable);
    ACCEPT((sym.witness_cycle == std::vector<int>{0, 1, 2}));
    ACCEPT(sym.forward == -1);
    ACCEPT(sym.reverse == -2);

    ACCEPT(cyclic_products(a, 3).all_integer);

    ReflectionRep rep = rep_from_cartan(a, m);
    IntegralizationResult res = conjugate_to_integers(rep);
    reverify_integralization(rep, res);

    RelationReport rr = verify_relations(rep);
    ACCEPT(rr.orders[0][1] == 4);
    ACCEPT(rr.orders[0][2] == 3);
    ACCEPT(rr.orders[1][2] == 3);

    ACCEPT(closure_verdict(rep).kind == ClosureKind::SpecialLinearPM);
  });

  criterion(2, "rank-four matrix over the right-angled pentagon", 5.0, [] {
    CartanMatrix a = CartanMatrix::validate(rat_rows({{2, -2, 0, 0, -1},
                                                      {-4, 2, -2, 0, 0},
                                                      {0, -4, 2, -2, 0},
                                                      {0, 0, -4, 2, -2},
                                                      {-12, 0, 0, -4, 2}}));
    CoxeterMatrix m = pentagon_coxeter();
    ACCEPT(is_compatible(a, m).compatible);
    ACCEPT(rank_of(a) == 4);

    SymmetrizabilityResult sym = is_symmetrizable(a);
    ACCEPT(!sym.symmetrizable);
    ACCEPT((sym.witness_cycle == std::vector<int>{0, 1, 2, 3, 4}));
    ACCEPT(sym.forward == -192);
    ACCEPT(sym.reverse == -256);

    ACCEPT(cyclic_products(a, 5).all_integer);

    ReflectionRep red = reduce_irreducible(rep_from_cartan(a, m));
    ACCEPT(red.dim == 4);
    ACCEPT(is_irreducible(red));

    IntegralizationResult res = conjugate_to_integers(red);
    for (const auto& g : res.integer_generators) ACCEPT(g.rows() == 4);
    reverify_integralization(red, res);

    ACCEPT(closure_verdict(red).kind == ClosureKind::SpecialLinearPM);
  });

  criterion(3, "prism and four-dimensional reflection instances", 5.0, [] {
    const CorpusEntry& prism = corpus_entry("Prism5");
    const CorpusEntry& four = corpus_entry("FourManifold6");
    ACCEPT(prism.cartan.has_value());
    ACCEPT(four.cartan.has_value());

    ACCEPT(prism.coxeter ==
           CoxeterMatrix::build(
               5, {{0, 1, 0}, {0, 2, 4}, {1, 2, 4}, {2, 3, 3}, {2, 4, 3}, {3, 4, 4}}));
    ACCEPT(four.coxeter ==
           CoxeterMatrix::build(6, {{0, 1, 0}, {0, 2, 4}, {1, 2, 4}, {2, 3, 3}, {2, 5, 3},
                                    {3, 4, 4}, {4, 5, 3}}));

    struct Case {
      const CorpusEntry* entry;
      int rank;
    };
    for (const Case& c : {Case{&prism, 4}, Case{&four, 5}}) {
      const CartanMatrix& a = *c.entry->cartan;
      ACCEPT(is_compatible(a, c.entry->coxeter).compatible);
      ACCEPT(rank_of(a) == c.rank);
      ACCEPT(!is_symmetrizable(a).symmetrizable);

      ReflectionRep red = reduce_irreducible(rep_from_cartan(a, c.entry->coxeter));
      ACCEPT(red.dim == c.rank);
      IntegralizationResult res = conjugate_to_integers(red);
      reverify_integralization(red, res);
      ACCEPT(closure_verdict(red).kind == ClosureKind::SpecialLinearPM);
    }
  });

  criterion(4, "integral conjugacy iff integer cyclic products, 21 instances", 60.0, [] {
    std::vector<std::pair<CartanMatrix, CoxeterMatrix>> instances;
    for (const auto& e : corpus())
      if (e.cartan) instances.emplace_back(*e.cartan, e.coxeter);

    // Control with a fractional triangle product: integer pairwise products,
    // cycle product -3/2.
    RatMatrix traw(3, 3);
    traw(0, 0) = traw(1, 1) = traw(2, 2) = 2;
    traw(0, 1) = Rat(-3) / 2;
    traw(1, 0) = -2;
    traw(0, 2) = -3;
    traw(2, 0) = -1;
    traw(1, 2) = -1;
    traw(2, 1) = -1;
    instances.emplace_back(CartanMatrix::validate(traw),
                           CoxeterMatrix::build(3, {{0, 1, 6}, {0, 2, 6}, {1, 2, 3}}));

    std::mt19937 rng(20260815);
    while (instances.size() < 21) instances.push_back(random_instance(rng));

    int obstructed = 0, integralized = 0;
    for (const auto& [a, m] : instances) {
      ACCEPT(is_compatible(a, m).compatible);
      bool expected = cyclic_products(a, a.size()).all_integer;
      ReflectionRep red = reduce_irreducible(rep_from_cartan(a, m));
      if (expected) {
        IntegralizationResult res = conjugate_to_integers(red);
        reverify_integralization(red, res);
        ++integralized;
      } else {
        ACCEPT(throws_code([&] { conjugate_to_integers(red); },
                           ErrorCode::CyclicProductObstruction));
        ++obstructed;
      }
    }
    ACCEPT(integralized + obstructed == 21);
    ACCEPT(integralized > 0);
    ACCEPT(obstructed > 0);
  });

  criterion(5, "symmetrizability matches invariant forms on every corpus matrix", 0, [] {
    for (const auto& e : corpus()) {
      if (!e.cartan) continue;
      const CartanMatrix& a = *e.cartan;
      ReflectionRep red = reduce_irreducible(rep_from_cartan(a, e.coxeter));
      ACCEPT(red.dim == rank_of(a));

      bool symmetrizable = is_symmetrizable(a).symmetrizable;
      auto forms = invariant_symmetric_forms(red);
      ACCEPT(symmetrizable == !forms.empty());

      if (symmetrizable) {
        ClosureVerdict v = closure_verdict(red);
        ACCEPT(v.kind == ClosureKind::OrthogonalGroup);
        ACCEPT(v.form.has_value());
        for (const auto& g : red.generators)
          ACCEPT(g.transpose() * *v.form * g == *v.form);
      }
    }
  });

  criterion(6, "non-symmetrizable matrices forged over three diagrams", 10.0, [] {
    CoxeterMatrix k4 = CoxeterMatrix::build(
        4, {{0, 1, 0}, {0, 2, 0}, {0, 3, 0}, {1, 2, 0}, {1, 3, 0}, {2, 3, 0}});
    CoxeterMatrix c7 = CoxeterMatrix::build(
        7, {{0, 1, 0}, {1, 2, 0}, {2, 3, 0}, {3, 4, 0}, {4, 5, 0}, {5, 6, 0}, {0, 6, 0}});
    for (const CoxeterMatrix& m : {pentagon_coxeter(), k4, c7}) {
      ForgeOutput f = forge_racg_spanning_tree(m);
      // Re-verify all four certificates independently of the bundle.
      ACCEPT(is_compatible(f.cartan, m).compatible);
      ACCEPT(rank_of(f.cartan) == m.rank());
      ACCEPT(!is_symmetrizable(f.cartan).symmetrizable);
      ACCEPT(integer_cyclic_certificate(f.cartan).all_integer);
      // Smallest parameter is stable across runs.
      ACCEPT(forge_racg_spanning_tree(m).parameter == f.parameter);
    }
  });

  criterion(7, "general forge scales a marked infinite pair of the prism", 0, [] {
    CoxeterMatrix prismm = CoxeterMatrix::build(
        5, {{0, 1, 0}, {0, 2, 4}, {1, 2, 4}, {2, 3, 3}, {2, 4, 3}, {3, 4, 4}});
    ForgeOutput f = forge_general(prismm, {{0, 1}});
    ACCEPT(is_compatible(f.cartan, prismm).compatible);
    ACCEPT(rank_of(f.cartan) == 5);
    ACCEPT(!is_symmetrizable(f.cartan).symmetrizable);
    ACCEPT(to_integer(f.cartan.entries()).has_value());
    ACCEPT(!f.cycle.empty());
    Rat fwd = detail::cycle_product(f.cartan, f.cycle, true);
    Rat rev = detail::cycle_product(f.cartan, f.cycle, false);
    ACCEPT(Rat(abs(fwd)) > Rat(abs(rev)));
  });

  criterion(8, "doubling moves verified by exact orders", 0, [] {
    CoxeterMatrix path3 = CoxeterMatrix::build(3, {{0, 1, 0}, {1, 2, 0}});
    SubgroupEmbedding tri = double_tree_to_triangle(path3);
    ACCEPT(tri.new_matrix == CoxeterMatrix::build(3, {{0, 1, 0}, {0, 2, 0}, {1, 2, 0}}));
    ACCEPT(tri.new_matrix.is_right_angled());

    CartanMatrix path_cartan =
        CartanMatrix::validate(rat_rows({{2, -2, 0}, {-2, 2, -2}, {0, -2, 2}}));
    ReflectionRep path_rep = rep_from_cartan(path_cartan, path3);
    ReflectionRep tri_rep = restrict_along_words(path_rep, tri.generator_words);
    ACCEPT(tri_rep.coxeter == tri.new_matrix);
    verify_relations(tri_rep, 8);

    CoxeterMatrix pentm = pentagon_coxeter();
    SubgroupEmbedding dbl = double_increase_rank(pentm, 0);
    ACCEPT(dbl.new_matrix.rank() == 6);
    ACCEPT(dbl.new_matrix.rank() > pentm.rank());
    ACCEPT(dbl.new_matrix.is_right_angled());

    CartanMatrix pent_sym = CartanMatrix::validate(rat_rows({{2, -2, 0, 0, -2},
                                                             {-2, 2, -2, 0, 0},
                                                             {0, -2, 2, -2, 0},
                                                             {0, 0, -2, 2, -2},
                                                             {-2, 0, 0, -2, 2}}));
    ReflectionRep pent_rep = rep_from_cartan(pent_sym, pentm);
    ReflectionRep dbl_rep = restrict_along_words(pent_rep, dbl.generator_words);
    ACCEPT(dbl_rep.coxeter == dbl.new_matrix);
    verify_relations(dbl_rep, 8);
  });

  criterion(9, "proximal pairing above four in every large corpus instance", 0, [] {
    for (const auto& e : corpus()) {
      if (!e.cartan) continue;
      ACCEPT(classify(e.coxeter).kind == DiagramKind::Large);
      auto t0 = std::chrono::steady_clock::now();
      ReflectionRep red = reduce_irreducible(rep_from_cartan(*e.cartan, e.coxeter));
      auto witness = find_proximal_pair(red);
      ACCEPT(witness.has_value());
      ACCEPT(witness->pairing > 4);
      // Recompute the pairing from the two words.
      PairingResult pr = dlambda_pairing(red, witness->word1, witness->word2);
      ACCEPT(pr.p == witness->pairing);
      ACCEPT(pr.proximal);
      ACCEPT(seconds_since(t0) < 10.0);
    }
  });

  criterion(10, "negative controls are rejected with the right reasons", 0, [] {
    // Two-generator data whose pairing product is the non-integer 3/2.
    RatMatrix craw(2, 2);
    craw(0, 0) = 2;
    craw(0, 1) = Rat(-3) / 2;
    craw(1, 0) = -1;
    craw(1, 1) = 2;
    CartanMatrix cart = CartanMatrix::validate(craw);
    CoxeterMatrix coxm = CoxeterMatrix::build(2, {{0, 1, 0}});
    std::vector<std::vector<Rat>> alphas = {{Rat(2), Rat(-3) / 2}, {Rat(-1), Rat(2)}};
    std::vector<std::vector<Rat>> vs = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
    std::vector<RatMatrix> gens;
    for (int s = 0; s < 2; ++s)
      gens.push_back(RatMatrix::identity(2) - outer(vs[static_cast<size_t>(s)],
                                                    alphas[static_cast<size_t>(s)]));
    ReflectionRep frac{2, gens, alphas, vs, cart, coxm};
    ACCEPT(throws_code([&] { conjugate_to_integers(frac); },
                       ErrorCode::CyclicProductObstruction));

    ReflectionRep bad = rep_from_cartan(kv_cartan(), kv_coxeter());
    bad.generators[0](0, 1) = bad.generators[0](0, 1) + 1;
    ACCEPT(throws_code([&] { verify_relations(bad); }, ErrorCode::RelationViolation));

    CoxeterMatrix spherical = CoxeterMatrix::build(3, {{0, 1, 3}, {1, 2, 3}});
    ACCEPT(throws_code([&] { find_quasi_lanner_subset(spherical); }, ErrorCode::NotLarge));
  });

  if (failures == 0) {
    std::cout << "all criteria passed\n";
    return 0;
  }
  std::cout << failures << " criteria failed\n";
  return 1;
}
