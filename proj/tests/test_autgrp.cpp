#include "doctest.h"

#include "z2z4had/autgrp.hpp"
#include "z2z4had/equiv.hpp"
#include "z2z4had/invariants.hpp"

#include <random>
#include <set>

using namespace z2z4had;

TEST_SUITE("autgrp") {

TEST_CASE("affine bijection counts") {
  CHECK(count_affine_bijections(0, 1) == 8);
  CHECK(count_affine_bijections(1, 1) == 64);
  CHECK(count_affine_bijections(2, 0) == 24);
  CHECK(count_affine_bijections(0, 2) == 1536);
  CHECK(count_affine_bijections(2, 1) == 3072);
  CHECK(count_affine_bijections(1, 2) == 49152);
  CHECK(count_affine_bijections(0, 3) == 5505024);

  CHECK(affine_group_order(2) == 24);
  CHECK(affine_group_order(3) == 1344);
  CHECK(affine_group_order(4) == 322560);
  CHECK(affine_group_order(5) == 319979520);

  for (auto [a, b] : std::vector<std::pair<std::size_t, std::size_t>>{
           {0, 1}, {1, 1}, {2, 0}, {3, 0}, {0, 2}, {2, 1}}) {
    std::vector<AffineMap> maps = enumerate_affine_bijections(a, b);
    CHECK(BigInt(maps.size()) == count_affine_bijections(a, b));
    std::set<std::vector<std::size_t>> tables;
    for (const AffineMap& m : maps) {
      CHECK(affine_is_bijection(m));
      std::vector<std::size_t> tab(m.dom.size());
      for (std::size_t c = 0; c < m.dom.size(); ++c)
        tab[c] = point_index(affine_apply(m, point_at(m.dom, c)));
      tables.insert(std::move(tab));
    }
    CHECK(tables.size() == maps.size());  // all distinct as maps
  }
  CHECK_THROWS_AS(enumerate_affine_bijections(0, 6), CapExceeded);
}

TEST_CASE("random affine bijections are uniform enough to be valid") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 50; ++it) {
    AffineMap m = random_affine_bijection(1, 2, rng);
    CHECK(affine_is_bijection(m));
  }
}

TEST_CASE("negation preservation is the order <= 2 translation criterion") {
  Domain d{1, 1};
  CHECK(is_negation_preserving(identity_affine(d)));
  for (const AffineMap& m : enumerate_affine_bijections(1, 1)) {
    bool pointwise = true;
    for (std::size_t c = 0; c < d.size(); ++c) {
      GroupPoint p = point_at(d, c);
      pointwise = pointwise && point_index(affine_apply(m, negate_point(p))) ==
                                   point_index(negate_point(affine_apply(m, p)));
    }
    CHECK(pointwise == is_negation_preserving(m));
    CHECK(is_negation_preserving(m) == point_has_order_le2(m.trans));
  }
}

TEST_CASE("monomial group orders from the factor products") {
  CHECK(monomial_aut_order_B(0, 1).order == 32);
  CHECK(monomial_aut_order_B(1, 1).order == 512);
  CHECK(monomial_aut_order_B(0, 2).order == 12288);
  CHECK(monomial_aut_order_C(0, 1).order == 4);
  CHECK(monomial_aut_order_C(1, 1).order == 32);
  CHECK(monomial_aut_order_C(0, 2).order == 384);
  CHECK(monomial_aut_order_C(2, 1).order == 1536);
  CHECK(monomial_aut_order_C(2, 0).order == 24);
  GroupOrderReport rep = monomial_aut_order_B(1, 1);
  BigInt prod = 1;
  for (const auto& [name, f] : rep.factors) prod *= f;
  CHECK(prod == rep.order);
}

TEST_CASE("permutation group orders") {
  CHECK(perm_aut_order_C(0, 2).order == 9216);
  CHECK(perm_aut_order_C(1, 2).order == 294912);
  CHECK(perm_aut_order_C(2, 1).order == 322560);  // delta <= 1: the binary affine group
  CHECK(perm_aut_order_C(4, 0).order == 322560);
  CHECK(perm_aut_order_C(0, 3).order == 5505024);
}

TEST_CASE("brute force monomial counts match the formulas") {
  CHECK(brute_force_monomial_count(build_B(0, 1).additive) == 32);
  CHECK(brute_force_monomial_count(build_C(0, 1).additive) == 4);
  CHECK(brute_force_monomial_count(build_C(1, 1).additive) == 32);
  CHECK_THROWS_AS(brute_force_monomial_count(build_C(1, 2).additive), CapExceeded);
  CHECK_THROWS_AS(brute_force_monomial_count(build_B(0, 1).additive, 16), CapExceeded);
}

TEST_CASE("brute force automorphism search matches the formulas") {
  CHECK(brute_force_automorphisms(build_C(1, 1).bin).order == 1344);
  CHECK(brute_force_automorphisms(build_C(2, 0).bin).order == 24);
  CHECK_THROWS_AS(brute_force_automorphisms(build_C(0, 3).bin), CapExceeded);
}

TEST_CASE("sign and affine pairs realize distinct monomial automorphisms") {
  ConstructedCode code = build_B(0, 1);
  std::vector<SignFunction> signs = enumerate_sign_functions(0, 1);
  CHECK(signs.size() == 4);
  std::set<MonomialTransform> uniq;
  for (const AffineMap& sg : enumerate_affine_bijections(0, 1))
    for (const SignFunction& r : signs) {
      MonomialTransform mt = monomial_from_sign_and_affine(r, sg);
      for (const MixedWord& w : code.additive.words)
        CHECK(code.additive.contains(apply_monomial(mt, w)));
      uniq.insert(mt);
    }
  CHECK(BigInt(uniq.size()) == monomial_aut_order_B(0, 1).order);
}

TEST_CASE("affine maps act on family C as monomial transforms") {
  ConstructedCode code = build_C(1, 1);
  std::size_t npres = 0;
  for (const AffineMap& sg : enumerate_affine_bijections(1, 1)) {
    if (!is_negation_preserving(sg)) continue;
    ++npres;
    MonomialTransform mt = monomial_from_affine(sg, code.layout);
    for (const MixedWord& w : code.additive.words)
      CHECK(code.additive.contains(apply_monomial(mt, w)));
    CHECK(flat_perm_from_monomial(mt, code.layout).img ==
          coord_perm_from_affine(sg, code.layout).img);
  }
  CHECK(BigInt(npres) == monomial_aut_order_C(1, 1).order);
}

TEST_CASE("flat permutations of family B monomials track the Gray pairs") {
  ConstructedCode code = build_B(1, 1);
  std::mt19937_64 rng(9);
  std::vector<SignFunction> signs = enumerate_sign_functions(1, 1);
  for (int it = 0; it < 20; ++it) {
    AffineMap sg = random_affine_bijection(1, 1, rng);
    MonomialTransform mt = monomial_from_sign_and_affine(signs[rng() % signs.size()], sg);
    CoordPerm fp = flat_perm_from_monomial(mt, code.layout);
    CHECK(is_permutation(fp));
    for (const MixedWord& w : code.additive.words)
      CHECK(apply_perm(code.layout.to_flat(w), fp) == code.layout.to_flat(apply_monomial(mt, w)));
  }
}

TEST_CASE("coordinate permutations recover their affine map or reject") {
  ConstructedCode code = build_C(0, 2);
  std::mt19937_64 rng(5);
  for (int it = 0; it < 20; ++it) {
    AffineMap m = random_affine_bijection(0, 2, rng);
    CoordPerm p = coord_perm_from_affine(m, code.layout);
    std::optional<AffineMap> back = affine_from_coord_perm(p, code.layout.dom);
    REQUIRE(back.has_value());
    for (std::size_t c = 0; c < code.layout.dom.size(); ++c)
      CHECK(point_index(affine_apply(*back, point_at(code.layout.dom, c))) == p.img[c]);
  }
}

TEST_CASE("the six coset label maps at delta 2") {
  std::vector<CoordPerm> ex = exceptional_delta2_automorphisms(0);
  ConstructedCode code = build_C(0, 2);
  REQUIRE(ex.size() == 6);
  CHECK(ex[0].img == identity_perm(16).img);
  std::size_t affine = 0;
  for (const CoordPerm& psi : ex) {
    CHECK(is_permutation(psi));
    CHECK(apply_coord_perm(code.bin, psi) == code.bin);
    if (affine_from_coord_perm(psi, code.layout.dom)) ++affine;
  }
  CHECK(affine == 1);
}

}  // TEST_SUITE
