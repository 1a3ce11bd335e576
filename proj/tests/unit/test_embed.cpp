#include "superrep/embed.hpp"

#include "doctest.h"

#include <set>
#include <stdexcept>

using namespace superrep;

namespace {

WeightMultiset ms(std::initializer_list<std::pair<Weight, long long>> items) {
  WeightMultiset out;
  for (const auto& [w, c] : items) out[w] = c;
  return out;
}

Embedding torus_in(const char* label) {
  return build_embedding(build_root_system(label), {});
}

// Named embeddings used across the suite.
Embedding a2_a1u1() {
  auto a2 = build_root_system("A2");
  return build_embedding(a2, {a2.simple_roots[0]});
}
Embedding b2_a1a1() {
  return build_embedding(build_root_system("B2"), {{2, -2}, {0, 2}});
}
Embedding g2_a2() {
  return build_embedding(build_root_system("G2"), {{-3, 2}, {3, -1}});
}
Embedding g2_a1a1() {
  return build_embedding(build_root_system("G2"), {{2, -1}, {0, 1}});
}

}  // namespace

TEST_CASE("torus embedding: whole positive system is the complement") {
  auto e = torus_in("A1");
  CHECK(e.h_simple.empty());
  CHECK(e.h_positive.empty());
  CHECK(e.complement == std::vector<Weight>{{2}});
  CHECK(e.rho_g == Weight{1});
  CHECK(e.rho_h_x2 == Weight{0});
  CHECK(e.rho_diff_x2 == Weight{2});
  CHECK_FALSE(e.half_lattice);

  auto e2 = torus_in("B2");
  CHECK(e2.complement.size() == 4);
  CHECK(e2.rho_diff_x2 == Weight{2, 2});
}

TEST_CASE("A2 over A1 plus center") {
  auto e = a2_a1u1();
  CHECK(e.h_simple == std::vector<Weight>{{2, -1}});
  CHECK(e.h_positive == std::vector<Weight>{{2, -1}});
  CHECK(e.complement == std::vector<Weight>{{-1, 2}, {1, 1}});
  CHECK(e.rho_h_x2 == Weight{2, -1});
  CHECK(e.rho_diff_x2 == Weight{0, 3});
  CHECK(e.half_lattice);  // rho_g - rho_h is off the weight lattice
}

TEST_CASE("B2 over the long-root A1 x A1") {
  auto e = b2_a1a1();
  CHECK(e.h_positive.size() == 2);
  // Complement = the two short positive roots.
  CHECK(e.complement == std::vector<Weight>{{-1, 2}, {1, 0}});
  CHECK(e.rho_diff_x2 == Weight{0, 2});
  CHECK_FALSE(e.half_lattice);
}

TEST_CASE("G2 over A2 and over A1 x A1") {
  auto e = g2_a2();
  CHECK(e.h_positive.size() == 3);
  CHECK(e.complement.size() == 3);
  CHECK(e.rho_diff_x2 == Weight{2, 0});
  CHECK_FALSE(e.half_lattice);

  auto e2 = g2_a1a1();
  CHECK(e2.h_positive.size() == 2);
  CHECK(e2.complement.size() == 4);
  CHECK(e2.rho_diff_x2 == Weight{0, 2});
}

TEST_CASE("embedding field consistency across the catalog") {
  for (const Embedding& e :
       {torus_in("A1"), torus_in("A2"), torus_in("B2"), torus_in("G2"), a2_a1u1(),
        b2_a1a1(), g2_a2(), g2_a1a1()}) {
    CHECK(e.h_positive.size() + e.complement.size() == e.g.positive_roots.size());
    Weight sum(e.g.rank, 0);
    for (const auto& beta : e.complement) sum = weight_add(sum, beta);
    CHECK(e.rho_diff_x2 == sum);
    CHECK(weight_add(e.rho_h_x2, e.rho_diff_x2) ==
          weight_scale(e.rho_g, 2));
    CHECK(e.h_frame.positive == e.h_positive);
  }
}

TEST_CASE("build_embedding rejects bad designations with witnesses") {
  auto a2 = build_root_system("A2");
  CHECK_THROWS_WITH_AS((void)build_embedding(a2, {{1, 0}}),
                       doctest::Contains("not a root"), std::invalid_argument);
  // alpha1 and alpha1+alpha2 pair positively: not a simple system.
  CHECK_THROWS_WITH_AS((void)build_embedding(a2, {{2, -1}, {1, 1}}),
                       doctest::Contains("simple system"), std::invalid_argument);
  // A positive root and its negative: passes the pairing screen but is
  // dependent. Frames accept negative roots, embeddings do not.
  CHECK_THROWS_WITH_AS((void)sub_frame(a2, {{2, -1}, {-2, 1}}),
                       doctest::Contains("dependent"), std::invalid_argument);
  CHECK_THROWS_WITH_AS((void)build_embedding(a2, {{2, -1}, {-2, 1}}),
                       doctest::Contains("not positive"), std::invalid_argument);
  CHECK_THROWS_AS((void)build_embedding(a2, {{2, -1, 0}}), std::invalid_argument);

  // Orthogonal short roots of B2 whose sum is a root: reflection-closed but
  // not additively closed, hence not a subalgebra.
  auto b2 = build_root_system("B2");
  CHECK_THROWS_WITH_AS((void)build_embedding(b2, {{-1, 2}, {1, 0}}),
                       doctest::Contains("closed"), std::invalid_argument);

  // Negative of a positive root is rejected (chamber compatibility).
  CHECK_THROWS_AS((void)build_embedding(a2, {{-2, 1}}), std::invalid_argument);
}

TEST_CASE("whole-algebra embedding is allowed and has empty complement") {
  auto a2 = build_root_system("A2");
  auto e = build_embedding(a2, a2.simple_roots);
  CHECK(e.complement.empty());
  CHECK(e.rho_diff_x2 == Weight{0, 0});
  auto s = spin_module(e);
  CHECK(s.s0_x2 == ms({{{0, 0}, 1}}));
  CHECK(s.s1_x2.empty());
}

TEST_CASE("spin module weights, parities, and counts") {
  auto e = torus_in("A1");
  auto s = spin_module(e);
  CHECK(s.s0_x2 == ms({{{2}, 1}}));
  CHECK(s.s1_x2 == ms({{{-2}, 1}}));
  CHECK_FALSE(s.half_lattice);

  auto e2 = a2_a1u1();
  auto s2 = spin_module(e2);
  CHECK(s2.s0_x2 == ms({{{0, 3}, 1}, {{0, -3}, 1}}));
  CHECK(s2.s1_x2 == ms({{{2, -1}, 1}, {{-2, 1}, 1}}));
  CHECK(s2.half_lattice);

  for (const Embedding& emb :
       {torus_in("B2"), torus_in("G2"), b2_a1a1(), g2_a2(), g2_a1a1()}) {
    auto sp = spin_module(emb);
    long long m = static_cast<long long>(emb.complement.size());
    CHECK(multiset_total(sp.s0_x2) + multiset_total(sp.s1_x2) == (1LL << m));
    if (m >= 1) CHECK(multiset_total(sp.s0_x2) == multiset_total(sp.s1_x2));
    CHECK(sp.s0_x2.count(emb.rho_diff_x2) == 1);
    CHECK(sp.half_lattice == emb.half_lattice);
  }
}

TEST_CASE("signed spin character factors as a product over complement roots") {
  for (const Embedding& e :
       {torus_in("A1"), torus_in("A2"), torus_in("B2"), a2_a1u1(), b2_a1a1(),
        g2_a2(), g2_a1a1()}) {
    auto s = spin_module(e);
    WeightMultiset signed_char = multiset_sum(s.s0_x2, multiset_negate(s.s1_x2));

    WeightMultiset prod;
    prod[Weight(e.g.rank, 0)] = 1;
    for (const auto& beta : e.complement) {
      WeightMultiset factor;
      factor[beta] = 1;
      factor[weight_neg(beta)] = -1;
      prod = multiset_convolve(prod, factor);
    }
    CHECK(signed_char == prod);
  }
}

TEST_CASE("restriction is the identity on weight supports") {
  auto e = a2_a1u1();
  CHECK(restrict_character(e, {1, 0}) ==
        ms({{{1, 0}, 1}, {{-1, 1}, 1}, {{0, -1}, 1}}));
  CHECK(restrict_character(e, {0, 0}) == ms({{{0, 0}, 1}}));
  CHECK(restrict_character(e, {1, 1}) == freudenthal_character(e.g, {1, 1}));
  CHECK_THROWS_AS((void)restrict_character(e, {-1, 0}), std::invalid_argument);

  auto t = torus_in("A1");
  CHECK(restrict_character(t, {2}) == ms({{{2}, 1}, {{0}, 1}, {{-2}, 1}}));
}

TEST_CASE("restricted characters decompose over h with memoization") {
  auto e = a2_a1u1();
  const auto& dec = restrict_decomposed_x2(e, {1, 0});
  VirtualDecomposition want;
  want[{2, 0}] = 1;
  want[{0, -2}] = 1;
  CHECK(dec == want);
  CHECK(&restrict_decomposed_x2(e, {1, 0}) == &dec);

  // Total dimension is preserved by the decomposition.
  auto e2 = g2_a2();
  long long total = 0;
  for (const auto& [mu2, c] : restrict_decomposed_x2(e2, {1, 0})) {
    total += c * weyl_dimension_x2(e2.h_frame, mu2);
  }
  CHECK(total == 7);
}

TEST_CASE("coset representatives for the torus recover the signed orbit") {
  auto e = torus_in("A1");
  std::vector<CosetTerm> want = {{+1, {3}}, {-1, {-3}}};
  CHECK(coset_representatives(e, {3}) == want);

  auto a2t = torus_in("A2");
  auto reps = coset_representatives(a2t, {1, 1});
  CHECK(reps.size() == 6);
  WeightMultiset numer;
  for (const auto& r : reps) numer[r.weight] += r.sign;
  WeightMultiset direct;
  for (const auto& w : weyl_elements(a2t.g)) {
    direct[apply_matrix(w.matrix, Weight{1, 1})] += w.sign;
  }
  CHECK(numer == direct);
}

TEST_CASE("coset representatives are h-dominant, distinct, and counted") {
  auto e = a2_a1u1();
  auto reps = coset_representatives(e, {1, 1});
  std::vector<CosetTerm> want = {{+1, {1, -2}}, {+1, {1, 1}}, {-1, {2, -1}}};
  CHECK(reps == want);

  for (const Embedding& emb : {a2_a1u1(), b2_a1a1(), g2_a2(), g2_a1a1()}) {
    auto rs = coset_representatives(emb, emb.rho_g);
    long long wg = static_cast<long long>(weyl_elements(emb.g).size());
    long long wh = reflection_subgroup_order(emb.g, emb.h_positive);
    CHECK(static_cast<long long>(rs.size()) * wh == wg);
    std::set<Weight> seen;
    for (const auto& r : rs) {
      CHECK(seen.insert(r.weight).second);
      for (const auto& beta : emb.h_simple) {
        CHECK(coroot_pairing(emb.g, r.weight, beta) > 0);
      }
    }
  }

  CHECK(coset_representatives(b2_a1a1(), {1, 1}).size() == 2);
  CHECK(coset_representatives(g2_a2(), {1, 1}).size() == 2);
  CHECK(coset_representatives(g2_a1a1(), {1, 1}).size() == 3);
}

TEST_CASE("coset representatives reject singular arguments") {
  auto e = a2_a1u1();
  CHECK_THROWS_AS((void)coset_representatives(e, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS((void)coset_representatives(e, {1}), std::invalid_argument);
}
