#include "superrep/chars.hpp"

#include "doctest.h"

#include <algorithm>
#include <stdexcept>

using namespace superrep;

namespace {

WeightMultiset ms(std::initializer_list<std::pair<Weight, long long>> items) {
  WeightMultiset out;
  for (const auto& [w, c] : items) out[w] = c;
  return out;
}

// Multiset image under the reflection fixing the hyperplane of `root`.
WeightMultiset reflect_multiset(const RootSystem& rs, const WeightMultiset& m,
                                const Weight& root) {
  WeightMultiset out;
  for (const auto& [w, c] : m) {
    Weight img = weight_sub(w, weight_scale(root, coroot_pairing(rs, w, root)));
    out[img] += c;
  }
  return out;
}

}  // namespace

TEST_CASE("freudenthal characters match small closed forms") {
  auto a1 = build_root_system("A1");
  CHECK(freudenthal_character(a1, {0}) == ms({{{0}, 1}}));
  CHECK(freudenthal_character(a1, {2}) == ms({{{2}, 1}, {{0}, 1}, {{-2}, 1}}));
  CHECK(freudenthal_character(a1, {3}) ==
        ms({{{3}, 1}, {{1}, 1}, {{-1}, 1}, {{-3}, 1}}));

  auto a2 = build_root_system("A2");
  CHECK(freudenthal_character(a2, {1, 0}) ==
        ms({{{1, 0}, 1}, {{-1, 1}, 1}, {{0, -1}, 1}}));

  // Adjoint of A2: six roots with multiplicity 1, zero with multiplicity 2.
  auto adj = freudenthal_character(a2, {1, 1});
  CHECK(adj.size() == 7);
  CHECK(multiset_total(adj) == 8);
  CHECK(adj[{0, 0}] == 2);
  for (const auto& alpha : a2.positive_roots) {
    CHECK(adj[alpha] == 1);
    CHECK(adj[weight_neg(alpha)] == 1);
  }

  auto b2 = build_root_system("B2");
  CHECK(freudenthal_character(b2, {0, 1}) ==
        ms({{{0, 1}, 1}, {{1, -1}, 1}, {{-1, 1}, 1}, {{0, -1}, 1}}));

  auto g2 = build_root_system("G2");
  auto seven = freudenthal_character(g2, {1, 0});
  CHECK(seven.size() == 7);
  CHECK(multiset_total(seven) == 7);
  CHECK(seven[{0, 0}] == 1);
  CHECK(seven[{1, 0}] == 1);
  CHECK(seven[{-1, 1}] == 1);
}

TEST_CASE("freudenthal characters are Weyl invariant") {
  for (const char* label : {"A2", "B2", "G2"}) {
    auto rs = build_root_system(label);
    for (Weight lam : {Weight{1, 0}, Weight{1, 1}, Weight{0, 2}}) {
      auto ch = freudenthal_character(rs, lam);
      for (const auto& alpha : rs.simple_roots) {
        CHECK(reflect_multiset(rs, ch, alpha) == ch);
      }
    }
  }
}

TEST_CASE("freudenthal rejects non-dominant highest weights") {
  auto a2 = build_root_system("A2");
  CHECK_THROWS_AS((void)freudenthal_character(a2, {-1, 0}), std::invalid_argument);
  CHECK_THROWS_AS((void)weyl_dimension(a2, {0, -2}), std::invalid_argument);
  CHECK_THROWS_AS((void)freudenthal_character(a2, {1}), std::invalid_argument);
}

TEST_CASE("weyl dimension formula on catalogued irreducibles") {
  auto a1 = build_root_system("A1");
  CHECK(weyl_dimension(a1, {0}) == 1);
  CHECK(weyl_dimension(a1, {3}) == 4);
  CHECK(weyl_dimension(a1, {7}) == 8);

  auto a2 = build_root_system("A2");
  CHECK(weyl_dimension(a2, {1, 0}) == 3);
  CHECK(weyl_dimension(a2, {0, 1}) == 3);
  CHECK(weyl_dimension(a2, {1, 1}) == 8);
  CHECK(weyl_dimension(a2, {3, 0}) == 10);

  auto b2 = build_root_system("B2");
  CHECK(weyl_dimension(b2, {1, 0}) == 5);
  CHECK(weyl_dimension(b2, {0, 1}) == 4);
  CHECK(weyl_dimension(b2, {1, 1}) == 16);

  auto g2 = build_root_system("G2");
  CHECK(weyl_dimension(g2, {1, 0}) == 7);
  CHECK(weyl_dimension(g2, {0, 1}) == 14);

  auto a3 = build_root_system("A3");
  CHECK(weyl_dimension(a3, {1, 0, 0}) == 4);
  CHECK(weyl_dimension(a3, {0, 1, 0}) == 6);
  CHECK(weyl_dimension(a3, {1, 0, 1}) == 15);

  auto d4 = build_root_system("D4");
  CHECK(weyl_dimension(d4, {1, 0, 0, 0}) == 8);
  CHECK(weyl_dimension(d4, {0, 0, 1, 0}) == 8);
  CHECK(weyl_dimension(d4, {0, 0, 0, 1}) == 8);
  CHECK(weyl_dimension(d4, {0, 1, 0, 0}) == 28);

  auto a1b2 = build_root_system("A1xB2");
  CHECK(weyl_dimension(a1b2, {2, 0, 1}) == 12);
}

TEST_CASE("character totals agree with the dimension formula") {
  for (const char* label : {"A1", "A2", "B2", "C2", "G2"}) {
    auto rs = build_root_system(label);
    Weight lam(rs.rank, 0);
    for (lam[0] = 0; lam[0] <= 2; ++lam[0]) {
      for (Coord c = 0; c <= 2 && rs.rank > 1; ++c) {
        lam[1] = c;
        CHECK(multiset_total(freudenthal_character(rs, lam)) ==
              weyl_dimension(rs, lam));
      }
      if (rs.rank == 1) {
        CHECK(multiset_total(freudenthal_character(rs, lam)) ==
              weyl_dimension(rs, lam));
      }
    }
  }
}

TEST_CASE("tensor products match Clebsch-Gordan tables") {
  auto a1 = build_root_system("A1");
  VirtualDecomposition cg;
  cg[{2}] = 1;
  cg[{0}] = 1;
  CHECK(tensor_decompose(a1, {1}, {1}) == cg);

  VirtualDecomposition big;
  big[{5}] = 1;
  big[{3}] = 1;
  big[{1}] = 1;
  CHECK(tensor_decompose(a1, {2}, {3}) == big);

  auto a2 = build_root_system("A2");
  VirtualDecomposition fund_dual;
  fund_dual[{1, 1}] = 1;
  fund_dual[{0, 0}] = 1;
  CHECK(tensor_decompose(a2, {1, 0}, {0, 1}) == fund_dual);

  VirtualDecomposition fund_fund;
  fund_fund[{2, 0}] = 1;
  fund_fund[{0, 1}] = 1;
  CHECK(tensor_decompose(a2, {1, 0}, {1, 0}) == fund_fund);

  // Tensoring with the trivial module is the identity.
  VirtualDecomposition only;
  only[{1, 1}] = 1;
  CHECK(tensor_decompose(a2, {1, 1}, {0, 0}) == only);
}

TEST_CASE("tensor product coefficients are dimension-consistent") {
  auto b2 = build_root_system("B2");
  for (Weight lam : {Weight{1, 0}, Weight{0, 1}, Weight{1, 1}}) {
    for (Weight mu : {Weight{1, 0}, Weight{0, 1}}) {
      auto dec = tensor_decompose(b2, lam, mu);
      long long total = 0;
      for (const auto& [nu, c] : dec) {
        CHECK(c > 0);
        total += c * weyl_dimension(b2, nu);
      }
      CHECK(total == weyl_dimension(b2, lam) * weyl_dimension(b2, mu));
    }
  }
}

TEST_CASE("decompose_virtual recovers signed combinations") {
  auto a1 = build_root_system("A1");
  CHECK(decompose_virtual(a1, freudenthal_character(a1, {2})) ==
        VirtualDecomposition{{{2}, 1}});

  auto sum = multiset_sum(freudenthal_character(a1, {3}),
                          freudenthal_character(a1, {1}));
  VirtualDecomposition expect;
  expect[{3}] = 1;
  expect[{1}] = 1;
  CHECK(decompose_virtual(a1, sum) == expect);

  auto a2 = build_root_system("A2");
  WeightMultiset mix = multiset_sum(
      freudenthal_character(a2, {1, 1}),
      multiset_sum(freudenthal_character(a2, {1, 1}),
                   multiset_negate(freudenthal_character(a2, {1, 0}))));
  VirtualDecomposition want;
  want[{1, 1}] = 2;
  want[{1, 0}] = -1;
  CHECK(decompose_virtual(a2, mix) == want);

  CHECK(decompose_virtual(a2, WeightMultiset{}).empty());
}

TEST_CASE("decompose_virtual round-trips over a grid of virtual modules") {
  auto b2 = build_root_system("B2");
  std::vector<Weight> basis = {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}};
  std::vector<long long> coeffs = {1, -2, 0, 3, -1};
  WeightMultiset ch;
  VirtualDecomposition want;
  for (size_t i = 0; i < basis.size(); ++i) {
    if (coeffs[i] == 0) continue;
    want[basis[i]] = coeffs[i];
    for (const auto& [w, m] : freudenthal_character(b2, basis[i])) {
      ch[w] += coeffs[i] * m;
      if (ch[w] == 0) ch.erase(w);
    }
  }
  CHECK(decompose_virtual(b2, ch) == want);
}

TEST_CASE("decompose_virtual rejects non-invariant multisets with a witness") {
  auto a1 = build_root_system("A1");
  WeightMultiset bad;
  bad[{1}] = 1;
  bad[{-1}] = -1;
  CHECK_THROWS_WITH_AS((void)decompose_virtual(a1, bad),
                       doctest::Contains("invariant"), std::invalid_argument);

  auto a2 = build_root_system("A2");
  WeightMultiset skew;
  skew[{1, 0}] = 1;
  CHECK_THROWS_AS((void)decompose_virtual(a2, skew), std::invalid_argument);
}

TEST_CASE("decompose_virtual over a designated coroot subset") {
  auto a2 = build_root_system("A2");
  // Restriction of the 3-dimensional module to the subalgebra on alpha_1:
  // a doublet plus a singlet.
  WeightMultiset ch;
  ch[{1, 0}] = 1;
  ch[{-1, 1}] = 1;
  ch[{0, -1}] = 1;
  VirtualDecomposition want;
  want[{1, 0}] = 1;
  want[{0, -1}] = 1;
  CHECK(decompose_virtual(a2, ch, {a2.simple_roots[0]}) == want);

  // Empty designated set: every weight is its own one-dimensional module.
  VirtualDecomposition torus;
  torus[{1, 0}] = 1;
  torus[{-1, 1}] = 1;
  torus[{0, -1}] = 1;
  CHECK(decompose_virtual(a2, ch, {}) == torus);

  // A bare doublet for alpha_1 is not invariant under the other subalgebra.
  WeightMultiset doublet;
  doublet[{1, 0}] = 1;
  doublet[{-1, 1}] = 1;
  CHECK(decompose_virtual(a2, doublet, {a2.simple_roots[0]}) ==
        VirtualDecomposition{{{1, 0}, 1}});
  CHECK_THROWS_AS((void)decompose_virtual(a2, doublet, {a2.simple_roots[1]}),
                  std::invalid_argument);
}

TEST_CASE("numerator form of the character identity") {
  // sum_w (-1)^w delta_{w(lam+rho)} equals ch(lam) * sum_w (-1)^w delta_{w rho}.
  for (const char* label : {"A1", "A2", "B2"}) {
    auto rs = build_root_system(label);
    auto elems = weyl_elements(rs);
    Weight lam(rs.rank, 1);
    Weight lam_rho = weight_add(lam, rs.rho);

    WeightMultiset lhs, denom;
    for (const auto& w : elems) {
      lhs[apply_matrix(w.matrix, lam_rho)] += w.sign;
      denom[apply_matrix(w.matrix, rs.rho)] += w.sign;
    }
    auto rhs = multiset_convolve(freudenthal_character(rs, lam), denom);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("doubled-coordinate frames handle half-integral weights") {
  auto a1 = build_root_system("A1");
  auto f = full_frame(a1);
  CHECK(f.rho_x2 == Weight{2});

  auto ch = freudenthal_x2(f, {2});
  CHECK(ch == ms({{{2}, 1}, {{-2}, 1}}));
  CHECK(weyl_dimension_x2(f, {2}) == 2);
  CHECK(weyl_dimension_x2(f, {6}) == 4);
  CHECK(decompose_x2(f, ch) == VirtualDecomposition{{{2}, 1}});

  // A weight off the doubled lattice has a half-integral coroot pairing and
  // is not the highest weight of any module.
  CHECK_THROWS_AS((void)freudenthal_x2(f, {1}), std::invalid_argument);

  // Subsystem frame on A2 whose simple root pairs trivially with part of
  // the lattice: doubled weights with odd coordinates are legitimate there.
  auto a2 = build_root_system("A2");
  auto h = sub_frame(a2, {{2, -1}});
  CHECK(h.rho_x2 == Weight{2, -1});
  CHECK(freudenthal_x2(h, {0, 3}) == ms({{{0, 3}, 1}}));
  CHECK(freudenthal_x2(h, {2, 2}) == ms({{{2, 2}, 1}, {{-2, 4}, 1}}));
  CHECK(weyl_dimension_x2(h, {2, 2}) == 2);

  WeightMultiset mixed;
  mixed[{0, 3}] = 1;
  mixed[{0, -3}] = 1;
  mixed[{2, -1}] = -1;
  mixed[{-2, 1}] = -1;
  auto dec = decompose_x2(h, mixed);
  VirtualDecomposition want;
  want[{0, 3}] = 1;
  want[{0, -3}] = 1;
  want[{2, -1}] = -1;
  CHECK(dec == want);

  // Torus frame: no reflections, decomposition echoes the multiset.
  auto t = sub_frame(a1, {});
  CHECK(t.rho_x2 == Weight{0});
  WeightMultiset torus_ch;
  torus_ch[{3}] = 2;
  torus_ch[{-1}] = -1;
  auto torus_dec = decompose_x2(t, torus_ch);
  CHECK(torus_dec.size() == 2);
  CHECK(torus_dec[{3}] == 2);
  CHECK(torus_dec[{-1}] == -1);
}

TEST_CASE("sub_frame closure finds all subsystem positives") {
  auto b2 = build_root_system("B2");
  // Long roots of B2 form an A1 x A1 subsystem.
  std::vector<Weight> longs = {{2, -2}, {0, 2}};
  auto pos = subsystem_positive_roots(b2, longs);
  CHECK(pos.size() == 2);
  auto f = sub_frame(b2, longs);
  CHECK(f.rho_x2 == Weight{2, 0});
  CHECK(f.sub_cartan == IMatrix{{2, 0}, {0, 2}});

  auto a2 = build_root_system("A2");
  auto whole = subsystem_positive_roots(a2, {a2.simple_roots[0], a2.simple_roots[1]});
  CHECK(whole.size() == 3);
}

TEST_CASE("cached characters are reused by reference") {
  auto a2 = build_root_system("A2");
  auto f = full_frame(a2);
  const auto& first = cached_character_x2(f, {2, 2});
  const auto& second = cached_character_x2(f, {2, 2});
  CHECK(&first == &second);
  CHECK(multiset_total(first) == 8);
}
