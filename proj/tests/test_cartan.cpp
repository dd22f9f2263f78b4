#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"
#include "vinberg/cartan.hpp"
#include "vinberg/coxeter.hpp"

using namespace vinberg;
using test::rat_rows;
using test::throws_code;

namespace {

CartanMatrix cartan(const std::vector<std::vector<long>>& rows) {
  return CartanMatrix::validate(rat_rows(rows));
}

const CartanMatrix kKV = cartan({{2, -1, -1}, {-2, 2, -1}, {-1, -1, 2}});
const CartanMatrix kPentagon = cartan({{2, -2, 0, 0, -1},
                                       {-4, 2, -2, 0, 0},
                                       {0, -4, 2, -2, 0},
                                       {0, 0, -4, 2, -2},
                                       {-12, 0, 0, -4, 2}});

}  // namespace

TEST_CASE("cartan matrix validation") {
  CHECK(kKV.size() == 3);
  CHECK(kKV(1, 0) == -2);
  CHECK(throws_code([] { cartan({{1, -1}, {-1, 2}}); }, ErrorCode::BadDiagonal));
  CHECK(throws_code([] { cartan({{2, 1}, {-1, 2}}); }, ErrorCode::PositiveOffDiagonal));
  CHECK(throws_code([] { cartan({{2, 0}, {-1, 2}}); }, ErrorCode::ZeroAsymmetry));
  CHECK(throws_code([] { CartanMatrix::validate(RatMatrix(2, 3)); }, ErrorCode::InvalidArgument));
  // Fractional entries are the point of the exercise.
  RatMatrix f(2, 2);
  f(0, 0) = 2;
  f(1, 1) = 2;
  f(0, 1) = Rat(-3) / 2;
  f(1, 0) = Rat(-8) / 3;
  CHECK(CartanMatrix::validate(f).size() == 2);
}

TEST_CASE("finite labels force exact products") {
  CHECK(rational_label_product(2) == 0);
  CHECK(rational_label_product(3) == 1);
  CHECK(rational_label_product(4) == 2);
  CHECK(rational_label_product(6) == 3);
  CHECK(throws_code([] { rational_label_product(5); }, ErrorCode::UnsupportedLabel));
  CHECK(throws_code([] { rational_label_product(7); }, ErrorCode::UnsupportedLabel));
}

TEST_CASE("compatibility is an entrywise check") {
  CoxeterMatrix kvm = CoxeterMatrix::build(3, {{0, 1, 4}, {0, 2, 3}, {1, 2, 3}});
  auto rep = is_compatible(kKV, kvm);
  CHECK(rep.compatible);
  REQUIRE(rep.pairs.size() == 3);
  CHECK(rep.pairs[0].product == 2);  // label 4
  CHECK(rep.pairs[1].product == 1);  // label 3
  for (const auto& p : rep.pairs) CHECK(p.ok);

  // Same Cartan against the wrong labels.
  CoxeterMatrix wrong = CoxeterMatrix::build(3, {{0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  auto bad = is_compatible(kKV, wrong);
  CHECK(!bad.compatible);
  CHECK(!bad.pairs[0].ok);
  CHECK(!bad.pairs[0].reason.empty());

  // Infinite labels need product >= 4; the pentagon matrix qualifies.
  CoxeterMatrix pentm = CoxeterMatrix::build(
      5, {{0, 1, 0}, {1, 2, 0}, {2, 3, 0}, {3, 4, 0}, {0, 4, 0}});
  CHECK(is_compatible(kPentagon, pentm).compatible);
  // Product 1 under an infinite label fails.
  CartanMatrix small = cartan({{2, -1}, {-1, 2}});
  CHECK(!is_compatible(small, CoxeterMatrix::build(2, {{0, 1, 0}})).compatible);
  // A commuting pair needs a zero entry and vice versa.
  CHECK(!is_compatible(small, CoxeterMatrix::build(2, {})).compatible);

  CHECK(throws_code([&] { is_compatible(small, kvm); }, ErrorCode::RankMismatch));
}

TEST_CASE("diagonal conjugation equivalence") {
  // B = D A D^{-1} with D = diag(1, 2, 1).
  RatMatrix braw(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) braw(i, j) = kKV(i, j);
  braw(0, 1) = Rat(-1) / 2;
  braw(1, 0) = -4;
  braw(1, 2) = -2;
  braw(2, 1) = Rat(-1) / 2;
  CartanMatrix b = CartanMatrix::validate(braw);
  auto t = equivalent(kKV, b);
  REQUIRE(t.has_value());
  CHECK(*t == std::vector<Rat>{Rat(1), Rat(4), Rat(1)});

  // Perturbing one entry breaks it.
  braw(0, 1) = Rat(-1) / 3;
  braw(1, 0) = -6;
  CHECK(!equivalent(kKV, CartanMatrix::validate(braw)).has_value());

  CHECK(throws_code([&] { equivalent(kKV, cartan({{2, -1}, {-1, 2}})); }, ErrorCode::RankMismatch));
  CartanMatrix sparse = cartan({{2, 0, -1}, {0, 2, -1}, {-1, -1, 2}});
  CHECK(throws_code([&] { equivalent(kKV, sparse); }, ErrorCode::ZeroPatternMismatch));
}

TEST_CASE("symmetrizable matrices produce verified weights") {
  // Symmetric input: weights are identically 1.
  CartanMatrix sym = cartan({{2, -1, -2}, {-1, 2, -1}, {-2, -1, 2}});
  auto r = is_symmetrizable(sym);
  REQUIRE(r.symmetrizable);
  CHECK(r.weights == std::vector<Rat>{Rat(1), Rat(1), Rat(1)});

  // Tree support is always symmetrizable; check the defining identity.
  CartanMatrix tree = cartan({{2, -1, 0}, {-4, 2, -1}, {0, -2, 2}});
  auto rt = is_symmetrizable(tree);
  REQUIRE(rt.symmetrizable);
  CHECK(rt.weights[0] == 1);
  for (int i = 0; i < 3; ++i) {
    CHECK(rt.weights[i] > 0);
    for (int j = 0; j < 3; ++j)
      CHECK(rt.weights[i] * tree(i, j) == rt.weights[j] * tree(j, i));
  }
}

TEST_CASE("non-symmetrizable witnesses carry both cycle products") {
  auto kv = is_symmetrizable(kKV);
  REQUIRE(!kv.symmetrizable);
  CHECK(kv.weights.empty());
  CHECK(kv.witness_cycle == std::vector<int>{0, 1, 2});
  CHECK(kv.forward == -1);
  CHECK(kv.reverse == -2);

  auto pent = is_symmetrizable(kPentagon);
  REQUIRE(!pent.symmetrizable);
  CHECK(pent.witness_cycle == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(pent.forward == -192);
  CHECK(pent.reverse == -256);
  // The two orientations really multiply to those values.
  CHECK(detail::cycle_product(kPentagon, pent.witness_cycle, true) == -192);
  CHECK(detail::cycle_product(kPentagon, pent.witness_cycle, false) == -256);
}

TEST_CASE("perron root sign decides the type") {
  CHECK(cartan_type(cartan({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}})) == CartanType::Positive);
  CHECK(cartan_type(cartan({{2, -1}, {-3, 2}})) == CartanType::Positive);  // product 3 < 4
  CHECK(cartan_type(cartan({{2, -2}, {-2, 2}})) == CartanType::Zero);
  CHECK(cartan_type(cartan({{2, -1}, {-4, 2}})) == CartanType::Zero);      // product exactly 4
  CHECK(cartan_type(cartan({{2, -1}, {-5, 2}})) == CartanType::Negative);
  CHECK(cartan_type(kKV) == CartanType::Negative);
  CHECK(cartan_type(kPentagon) == CartanType::Negative);
  // Affine type on more vertices: the all-3s triangle realization.
  CHECK(cartan_type(cartan({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}})) == CartanType::Zero);
  CHECK(throws_code([] { cartan_type(cartan({{2, 0}, {0, 2}})); }, ErrorCode::Decomposable));
}

TEST_CASE("cycle enumeration reports products and witnesses") {
  auto r = cyclic_products(kKV, 3);
  CHECK(r.all_integer);
  CHECK(r.checked_cycles.size() == 4);  // three edges and one triangle
  CHECK(!r.witness.has_value());
  REQUIRE(r.symmetrizable_witness.has_value());
  CHECK(std::get<0>(*r.symmetrizable_witness) == std::vector<int>{0, 1, 2});
  CHECK(std::get<1>(*r.symmetrizable_witness) == -1);
  CHECK(std::get<2>(*r.symmetrizable_witness) == -2);

  RatMatrix f(2, 2);
  f(0, 0) = 2;
  f(1, 1) = 2;
  f(0, 1) = Rat(-3) / 2;
  f(1, 0) = -1;
  auto fr = cyclic_products(CartanMatrix::validate(f), 2);
  CHECK(!fr.all_integer);
  REQUIRE(fr.witness.has_value());
  CHECK(fr.witness->first == std::vector<int>{0, 1});
  CHECK(fr.witness->second == Rat(3) / 2);

  CHECK(throws_code([] { cyclic_products(kKV, 4); }, ErrorCode::InvalidArgument));
  CHECK(throws_code([] { cyclic_products(kKV, 3, 2); }, ErrorCode::CycleBudgetExceeded));
}

TEST_CASE("integrality certificate agrees with enumeration") {
  auto agree = [](const CartanMatrix& a) {
    CyclicIntegrality cert = integer_cyclic_certificate(a);
    CyclicProductReport full = cyclic_products(a, a.size());
    if (cert.all_integer != full.all_integer) return false;
    if (!cert.all_integer) {
      // The certificate's witness must itself be a non-integer cycle product.
      if (!cert.witness.has_value()) return false;
      const auto& [cyc, prod] = *cert.witness;
      if (is_integer(prod)) return false;
      Rat recomputed = detail::cycle_product(a, cyc, true);
      if (recomputed != prod && detail::cycle_product(a, cyc, false) != prod) return false;
    }
    return true;
  };

  CHECK(agree(kKV));
  CHECK(agree(kPentagon));
  CHECK(integer_cyclic_certificate(kKV).all_integer);
  CHECK(integer_cyclic_certificate(kPentagon).all_integer);

  RatMatrix f(2, 2);
  f(0, 0) = 2;
  f(1, 1) = 2;
  f(0, 1) = Rat(-3) / 2;
  f(1, 0) = -1;
  CartanMatrix frac = CartanMatrix::validate(f);
  auto fc = integer_cyclic_certificate(frac);
  CHECK(!fc.all_integer);
  REQUIRE(fc.witness.has_value());
  CHECK(fc.witness->second == Rat(3) / 2);
  CHECK(agree(frac));

  // Fractional entries whose products are nevertheless integers.
  f(1, 0) = Rat(-8) / 3;
  CHECK(integer_cyclic_certificate(CartanMatrix::validate(f)).all_integer);
  CHECK(agree(CartanMatrix::validate(f)));

  // Randomized sweep: arbitrary supports and denominators.
  std::mt19937 rng(11);
  auto rnd = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const std::vector<Rat> entries{Rat(-1),     Rat(-2),     Rat(-3),     Rat(-1) / 2,
                                 Rat(-3) / 2, Rat(-2) / 3, Rat(-4) / 3, Rat(-9) / 4};
  for (int trial = 0; trial < 40; ++trial) {
    const int n = rnd(2, 5);
    RatMatrix raw(n, n);
    for (int i = 0; i < n; ++i) raw(i, i) = 2;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (rnd(0, 2) == 0) continue;  // leave the pair commuting
        raw(i, j) = entries[rnd(0, static_cast<int>(entries.size()) - 1)];
        raw(j, i) = entries[rnd(0, static_cast<int>(entries.size()) - 1)];
      }
    CHECK(agree(CartanMatrix::validate(raw)));
  }
}
