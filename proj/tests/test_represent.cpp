#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "vinberg/represent.hpp"

using namespace vinberg;
using test::rat_rows;
using test::throws_code;

namespace {

CartanMatrix cartan(const std::vector<std::vector<long>>& rows) {
  return CartanMatrix::validate(rat_rows(rows));
}

const CartanMatrix kKV = cartan({{2, -1, -1}, {-2, 2, -1}, {-1, -1, 2}});
const CoxeterMatrix kKVm = CoxeterMatrix::build(3, {{0, 1, 4}, {0, 2, 3}, {1, 2, 3}});

const CartanMatrix kPentagon = cartan({{2, -2, 0, 0, -1},
                                       {-4, 2, -2, 0, 0},
                                       {0, -4, 2, -2, 0},
                                       {0, 0, -4, 2, -2},
                                       {-12, 0, 0, -4, 2}});
const CoxeterMatrix kPentagonM = CoxeterMatrix::build(
    5, {{0, 1, 0}, {1, 2, 0}, {2, 3, 0}, {3, 4, 0}, {0, 4, 0}});

ReflectionRep kv_rep() { return rep_from_cartan(kKV, kKVm); }
ReflectionRep pentagon_reduced() {
  return reduce_irreducible(rep_from_cartan(kPentagon, kPentagonM));
}

}  // namespace

TEST_CASE("geometric representation from a cartan matrix") {
  ReflectionRep rep = kv_rep();
  CHECK(rep.dim == 3);
  CHECK(rep.generator_count() == 3);
  for (int s = 0; s < 3; ++s) {
    // v_s = e_s, alpha_s = row s, generator = Id - v⊗alpha.
    CHECK(rep.vs[s][s] == 1);
    for (int t = 0; t < 3; ++t) {
      CHECK(rep.alphas[s][t] == kKV(s, t));
      CHECK(dot(rep.alphas[s], rep.vs[t]) == kKV(s, t));
    }
    CHECK(rep.generators[s] == RatMatrix::identity(3) - outer(rep.vs[s], rep.alphas[s]));
    CHECK(rep.generators[s] * rep.generators[s] == RatMatrix::identity(3));
    CHECK(det(rep.generators[s]) == -1);
  }
}

TEST_CASE("construction guards") {
  CHECK(throws_code([] { rep_from_cartan(kKV, CoxeterMatrix::build(2, {{0, 1, 4}})); },
                    ErrorCode::RankMismatch));
  // Wrong labels for these pairings.
  CoxeterMatrix wrong = CoxeterMatrix::build(3, {{0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  CHECK(throws_code([&] { rep_from_cartan(kKV, wrong); }, ErrorCode::Incompatible));
  // Spherical and affine groups are refused.
  CartanMatrix a2 = cartan({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
  CoxeterMatrix a2m = CoxeterMatrix::build(3, {{0, 1, 3}, {1, 2, 3}});
  CHECK(throws_code([&] { rep_from_cartan(a2, a2m); }, ErrorCode::NotLargeIrreducible));
  CartanMatrix aff = cartan({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
  CoxeterMatrix affm = CoxeterMatrix::build(3, {{0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  CHECK(throws_code([&] { rep_from_cartan(aff, affm); }, ErrorCode::NotLargeIrreducible));

  // make() re-validates everything; tampered root data is refused.
  ReflectionRep rep = kv_rep();
  auto bad_alphas = rep.alphas;
  bad_alphas[0][1] += 1;
  CHECK(throws_code(
      [&] {
        ReflectionRep::make(rep.dim, rep.generators, bad_alphas, rep.vs, rep.cartan, rep.coxeter);
      },
      ErrorCode::InvalidArgument));
}

TEST_CASE("invariant subspaces and irreducibility") {
  CHECK(is_irreducible(kv_rep()));
  ReflectionRep prep = rep_from_cartan(kPentagon, kPentagonM);
  CHECK(!is_irreducible(prep));
  auto sub = invariant_subspaces(prep);
  // v_s span everything, but the alphas share a one-dimensional kernel
  // because the Cartan matrix drops rank by one.
  CHECK(sub.v_span_basis.size() == 5);
  CHECK(sub.alpha_kernel_basis.size() == 1);
  for (const auto& k : sub.alpha_kernel_basis)
    for (const auto& alpha : prep.alphas) CHECK(dot(alpha, k) == 0);
}

TEST_CASE("reduction to the irreducible subquotient") {
  ReflectionRep red = pentagon_reduced();
  CHECK(red.dim == 4);
  CHECK(red.dim == rank_of(kPentagon));
  CHECK(red.cartan == kPentagon);     // pairings survive the quotient
  CHECK(red.coxeter == kPentagonM);
  CHECK(is_irreducible(red));
  verify_relations(red);
  // Reducing an already irreducible representation is a no-op up to basis.
  ReflectionRep again = reduce_irreducible(kv_rep());
  CHECK(again.dim == 3);
  CHECK(again.cartan == kKV);
}

TEST_CASE("relation orders are computed exactly") {
  RelationReport rr = verify_relations(kv_rep());
  CHECK(rr.orders == std::vector<std::vector<int>>{{1, 4, 3}, {4, 1, 3}, {3, 3, 1}});
  CHECK(rr.order_cap == 64);

  // Infinite labels surface as 0, the same encoding the Coxeter matrix uses.
  RelationReport pr = verify_relations(pentagon_reduced(), 8);
  for (int s = 0; s < 5; ++s)
    for (int t = 0; t < 5; ++t) CHECK(pr.orders[s][t] == kPentagonM.label(s, t) % 1000);

  ReflectionRep bad = kv_rep();
  bad.generators[0](0, 1) += 1;
  CHECK(throws_code([&] { verify_relations(bad); }, ErrorCode::RelationViolation));
  // Swapping generators 0 and 2 breaks the order of the (0,1) pair: the
  // product picks up order 3 where the label demands 4.
  ReflectionRep swapped = kv_rep();
  std::swap(swapped.generators[0], swapped.generators[2]);
  CHECK(throws_code([&] { verify_relations(swapped); }, ErrorCode::RelationViolation));
}

TEST_CASE("word evaluation multiplies left to right") {
  ReflectionRep rep = kv_rep();
  CHECK(evaluate_word(rep, {}) == RatMatrix::identity(3));
  CHECK(evaluate_word(rep, {0, 1}) == rep.generators[0] * rep.generators[1]);
  CHECK(evaluate_word(rep, {0, 1, 0}) ==
        rep.generators[0] * rep.generators[1] * rep.generators[0]);
  CHECK(detail::word_to_string(std::vector<int>{0, 1, 2}) == "0.1.2");
}

TEST_CASE("invariant symmetric forms") {
  // Asymmetric Cartan matrix: no invariant form at all.
  CHECK(invariant_symmetric_forms(kv_rep()).empty());

  // Symmetric realization of a (3, inf, 3) triangle: one form, verified.
  CartanMatrix tri = cartan({{2, -1, -2}, {-1, 2, -1}, {-2, -1, 2}});
  CoxeterMatrix trim = CoxeterMatrix::build(3, {{0, 1, 3}, {0, 2, 0}, {1, 2, 3}});
  ReflectionRep trep = rep_from_cartan(tri, trim);
  auto forms = invariant_symmetric_forms(trep);
  REQUIRE(forms.size() == 1);
  const RatMatrix& b = forms.front();
  CHECK(b == b.transpose());
  for (const auto& g : trep.generators) CHECK(g.transpose() * b * g == b);
}

TEST_CASE("closure dichotomy") {
  ClosureVerdict cv = closure_verdict(kv_rep());
  CHECK(cv.kind == ClosureKind::SpecialLinearPM);
  CHECK(!cv.form.has_value());
  CHECK(absolute_irreducibility_certificate(kv_rep()));

  ClosureVerdict pv = closure_verdict(pentagon_reduced());
  CHECK(pv.kind == ClosureKind::SpecialLinearPM);

  CartanMatrix tri = cartan({{2, -1, -2}, {-1, 2, -1}, {-2, -1, 2}});
  CoxeterMatrix trim = CoxeterMatrix::build(3, {{0, 1, 3}, {0, 2, 0}, {1, 2, 3}});
  ClosureVerdict tv = closure_verdict(rep_from_cartan(tri, trim));
  CHECK(tv.kind == ClosureKind::OrthogonalGroup);
  REQUIRE(tv.form.has_value());
  for (const auto& g : rep_from_cartan(tri, trim).generators)
    CHECK(g.transpose() * *tv.form * g == *tv.form);

  // Choked word budget: length-1 words cannot span the matrix algebra, so
  // the certificate cannot finish and the verdict stays open.
  ClosureVerdict choked = closure_verdict(kv_rep(), 1);
  CHECK(choked.kind == ClosureKind::Indeterminate);

  // Reducible input is a precondition violation, not a verdict.
  ReflectionRep prep = rep_from_cartan(kPentagon, kPentagonM);
  CHECK(throws_code([&] { closure_verdict(prep); }, ErrorCode::PreconditionViolated));

  CHECK(closure_kind_name(ClosureKind::OrthogonalGroup) == std::string("OrthogonalGroup"));
  CHECK(closure_kind_name(ClosureKind::SpecialLinearPM) == std::string("SpecialLinearPM"));
}

TEST_CASE("reflection extraction round trips") {
  ReflectionRep red = pentagon_reduced();
  for (int s = 0; s < 5; ++s) {
    Reflection r = extract_reflection(red.generators[s]);
    CHECK(red.generators[s] == RatMatrix::identity(4) - outer(r.v, r.alpha));
    CHECK(dot(r.alpha, r.v) == 2);
  }
  // Conjugates of generators are reflections too.
  RatMatrix g = evaluate_word(red, {1, 0, 1});
  Reflection r = extract_reflection(g);
  CHECK(g == RatMatrix::identity(4) - outer(r.v, r.alpha));

  CHECK(throws_code([&] { extract_reflection(RatMatrix::identity(4)); },
                    ErrorCode::NotAReflection));
  RatMatrix prod = red.generators[0] * red.generators[1];
  CHECK(throws_code([&] { extract_reflection(prod); }, ErrorCode::NotAReflection));
}

TEST_CASE("pairings detect proximal pairs") {
  ReflectionRep red = pentagon_reduced();
  PairingResult pr01 = dlambda_pairing(red, {0}, {1});
  CHECK(pr01.p == 8);
  CHECK(pr01.proximal);
  CHECK(pr01.plane_trace == 6);
  PairingResult pr02 = dlambda_pairing(red, {0}, {2});
  CHECK(pr02.p == 0);
  CHECK(!pr02.proximal);
  // p = A(s,t) * A(t,s) on plain generator pairs.
  CHECK(pr01.p == kPentagon(0, 1) * kPentagon(1, 0));

  auto pw = find_proximal_pair(red);
  REQUIRE(pw.has_value());
  CHECK(pw->pairing > 4);
  CHECK(dlambda_pairing(red, pw->word1, pw->word2).p == pw->pairing);

  auto kw = find_proximal_pair(kv_rep());
  REQUIRE(kw.has_value());
  CHECK(kw->pairing > 4);
}
