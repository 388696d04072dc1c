#include "doctest.h"

#include "fixtures.hpp"
#include "z2z4had/construct.hpp"
#include "z2z4had/invariants.hpp"

#include <set>

using namespace z2z4had;

TEST_SUITE("construct") {

TEST_CASE("functional enumeration counts") {
  CHECK(enumerate_functionals_B(0, 1).size() == 16);
  CHECK(enumerate_functionals_B(1, 1).size() == 32);
  CHECK(enumerate_functionals_C(1, 2).size() == 64);
  CHECK(enumerate_functionals_C(3, 0).size() == 16);
  // family C keeps only constants of order <= 2
  for (const AffineFunctional& f : enumerate_functionals_C(1, 1))
    CHECK((f.c == 0 || f.c == 2));
}

TEST_CASE("built codes have the promised shape") {
  ConstructedCode b = build_B(0, 1);
  CHECK(b.bin.n == 8);
  CHECK(b.bin.words.size() == 16);
  CHECK(b.type == CodeType{0, 4, 0, 2});
  CHECK(is_hadamard(b.bin));

  ConstructedCode c = build_C(1, 2);
  CHECK(c.bin.n == 32);
  CHECK(c.bin.words.size() == 64);
  CHECK(c.type == CodeType{8, 12, 2, 2});
  CHECK(is_hadamard(c.bin));

  ConstructedCode lin = build_C(3, 0);
  CHECK(lin.bin.n == 8);
  CHECK(lin.bin.words.size() == 16);
  CHECK(lin.type == CodeType{8, 0, 4, 0});
  CHECK(is_hadamard(lin.bin));
}

TEST_CASE("family C layout pairs points with their negatives") {
  PointLayout L = make_layout_C(1, 2);
  CHECK(L.bin_coords.size() == 8);
  CHECK(L.pair_rep.size() == 12);
  for (std::size_t c = 0; c < L.points.size(); ++c) {
    CHECK(L.opposite[L.opposite[c]] == c);
    CHECK(L.is_bin[c] == (L.opposite[c] == c));
  }
  for (std::size_t j = 0; j < L.pair_rep.size(); ++j) {
    std::size_t rep = L.pair_rep[j];
    CHECK(rep < L.opposite[rep]);
    CHECK(L.slot[rep] == j);
    CHECK(L.slot[L.opposite[rep]] == j);
  }
}

TEST_CASE("flat and mixed forms round trip") {
  for (const ConstructedCode& code : {build_C(1, 2), build_C(2, 1), build_B(1, 1)}) {
    CHECK(code.layout.flat_length() == code.bin.n);
    for (const BinaryWord& w : code.bin.words) {
      MixedWord m = code.layout.to_mixed(w);
      CHECK(code.layout.to_flat(m) == w);
      CHECK(code.additive.contains(m));
    }
    CoordPerm sp = code.layout.standard_perm();
    CHECK(is_permutation(sp));
    for (const BinaryWord& w : code.bin.words)
      CHECK(code.layout.from_standard(code.layout.to_standard(w)) == w);
  }
}

TEST_CASE("star closure of G reproduces the code") {
  for (const ConstructedCode& code : {build_C(0, 2), build_B(1, 1)}) {
    GeneratorMatrices gm = build_GKS(code);
    std::set<BinaryWord> have;
    std::vector<BinaryWord> work;
    BinaryWord zero(code.bin.n, 0);
    have.insert(zero);
    work.push_back(zero);
    while (!work.empty()) {
      BinaryWord w = work.back();
      work.pop_back();
      for (const BinaryWord& g : gm.G) {
        BinaryWord s = code.layout.star_flat(w, g);
        if (have.insert(s).second) work.push_back(s);
      }
    }
    CHECK(std::vector<BinaryWord>(have.begin(), have.end()) == code.bin.words);
  }
}

TEST_CASE("generator matrix fixtures at (1,2)") {
  ConstructedCode code = build_C(1, 2);
  GeneratorMatrices gm = build_GKS(code);
  CHECK(fixtures::render(fixtures::g_display_order(gm), code.layout) == fixtures::kG12);
  CHECK(fixtures::render(gm.K, code.layout) == fixtures::kK12);
  CHECK(fixtures::render(gm.S, code.layout) == fixtures::kS12);
}

TEST_CASE("generator matrix fixtures at (0,3)") {
  ConstructedCode code = build_C(0, 3);
  GeneratorMatrices gm = build_GKS(code);
  CHECK(fixtures::render(fixtures::g_display_order(gm), code.layout) == fixtures::kG03);
  CHECK(fixtures::render(gm.K, code.layout) == fixtures::kK03);
  CHECK(fixtures::render(gm.S, code.layout) == fixtures::kS03);
}

TEST_CASE("coset representatives follow the xor form") {
  ConstructedCode code = build_C(1, 2);
  GeneratorMatrices gm = build_GKS(code);
  REQUIRE(gm.v.size() == 2);
  CHECK(gm.S.size() == 4);
  for (std::size_t l = 0; l < gm.S.size(); ++l) {
    std::vector<Bit> s = {static_cast<Bit>(l & 1), static_cast<Bit>((l >> 1) & 1)};
    CHECK(coset_rep_xor_form(s, code) == gm.S[l]);
    CHECK(code.bin.contains(gm.S[l]));
  }
}

TEST_CASE("family names") {
  CHECK(family_name(Family::B) == "B");
  CHECK(family_name(Family::C) == "C");
}

}  // TEST_SUITE
