// Acceptance checks, one line of output per criterion.  Exits nonzero if
// any of them fails.

#include "fixtures.hpp"
#include "z2z4had/autgrp.hpp"
#include "z2z4had/equiv.hpp"
#include "z2z4had/invariants.hpp"

#include <algorithm>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace {

using namespace z2z4had;

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail = "") {
  std::cout << name << ": " << (ok ? "PASS" : "FAIL");
  if (!ok && !detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  if (!ok) ++failures;
}

std::vector<ConstructedCode> all_codes(std::size_t t_max) {
  std::vector<ConstructedCode> out;
  for (std::size_t t = 1; t <= t_max; ++t) {
    for (std::size_t d = 0; 2 * d <= t; ++d) out.push_back(build_C(t - 2 * d, d));
    for (std::size_t dd = 0; 2 * dd + 1 <= t; ++dd) out.push_back(build_B(t - 1 - 2 * dd, dd));
  }
  return out;
}

std::string code_label(const ConstructedCode& c) {
  return family_name(c.family) + "(" + std::to_string(c.par_a) + "," + std::to_string(c.par_b) +
         ")";
}

void construction_fidelity() {
  std::string bad;
  for (const ConstructedCode& code : all_codes(7)) {
    std::size_t n = code.bin.n;
    std::vector<std::size_t> want = {0, n / 2, n};
    bool ok = code.bin.words.size() == 2 * n && is_hadamard(code.bin) &&
              distance_spectrum(code.bin) == want;
    if (!ok && bad.empty()) bad = code_label(code);
  }
  report("construction-fidelity", bad.empty(), bad);
}

void matrix_fixtures() {
  ConstructedCode c12 = build_C(1, 2);
  GeneratorMatrices gm12 = build_GKS(c12);
  ConstructedCode c03 = build_C(0, 3);
  GeneratorMatrices gm03 = build_GKS(c03);
  bool ok = fixtures::render(fixtures::g_display_order(gm12), c12.layout) == fixtures::kG12 &&
            fixtures::render(gm12.K, c12.layout) == fixtures::kK12 &&
            fixtures::render(gm12.S, c12.layout) == fixtures::kS12 &&
            fixtures::render(fixtures::g_display_order(gm03), c03.layout) == fixtures::kG03 &&
            fixtures::render(gm03.K, c03.layout) == fixtures::kK03 &&
            fixtures::render(gm03.S, c03.layout) == fixtures::kS03;
  report("matrix-fixtures", ok);
}

void kernel_agreement() {
  std::string bad;
  for (const ConstructedCode& code : all_codes(6)) {
    CodeType ct = code.additive.type;
    GeneratorMatrices gm = build_GKS(code);
    std::vector<BinaryWord> kspan = gf2_span(gm.K);
    BinaryCode ker = kernel_of(code.bin);
    std::vector<BinaryWord> std_words;
    for (const BinaryWord& w : code.bin.words) std_words.push_back(code.layout.to_standard(w));
    BinaryCode star_std =
        kernel_via_star(make_binary_code(code.bin.n, std::move(std_words)), ct);
    std::vector<BinaryWord> kstar;
    for (const BinaryWord& w : star_std.words) kstar.push_back(code.layout.from_standard(w));
    std::sort(kstar.begin(), kstar.end());
    std::size_t dim = ct.gamma + ct.delta;  // 1 + delta + gamma_dot
    bool ok = kspan == kstar && gf2_dim(gm.K) == dim &&
              std::includes(ker.words.begin(), ker.words.end(), kspan.begin(), kspan.end());
    if (code.family == Family::C && ct.delta != 1) {
      ok = ok && kspan == ker.words;
    } else if (code.family == Family::C || code.par_b <= 1) {
      // the linear cases: the kernel is the whole code, strictly above K
      ok = ok && ker.words == code.bin.words && ker.words.size() > kspan.size();
    } else {
      // family B beyond the linear range: kernel exceeds K by one dimension,
      // matching the kernel of the equivalent mixed code one step up
      ok = ok && ker.words.size() == kspan.size() * 2 && ker.words != code.bin.words;
    }
    if (!ok && bad.empty()) bad = code_label(code);
  }
  report("kernel-agreement", bad.empty(), bad);
}

void coset_representatives() {
  std::string bad;
  for (const ConstructedCode& code : all_codes(6)) {
    GeneratorMatrices gm = build_GKS(code);
    std::size_t r = gm.v.size();
    bool ok = gm.S.size() == (std::size_t{1} << r);
    for (std::size_t l = 0; ok && l < gm.S.size(); ++l) {
      std::vector<Bit> s(r);
      for (std::size_t j = 0; j < r; ++j) s[j] = static_cast<Bit>((l >> j) & 1);
      ok = code.bin.contains(gm.S[l]) && coset_rep_xor_form(s, code) == gm.S[l];
    }
    std::vector<BinaryWord> kspan = gf2_span(gm.K);
    std::set<BinaryWord> kset(kspan.begin(), kspan.end());
    for (std::size_t wi = 0; ok && wi < code.bin.words.size(); ++wi) {
      const BinaryWord& w = code.bin.words[wi];
      std::size_t hits = 0;
      for (const BinaryWord& rep : gm.S) {
        BinaryWord x(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) x[i] = w[i] ^ rep[i];
        if (kset.count(x)) ++hits;
      }
      ok = hits == 1;
    }
    if (!ok && bad.empty()) bad = code_label(code);
  }
  report("coset-representatives", bad.empty(), bad);
}

void family_bridge() {
  std::string bad;
  for (std::size_t t = 1; t <= 7; ++t)
    for (std::size_t dd = 0; 2 * dd + 1 <= t; ++dd) {
      std::size_t g = t - 1 - 2 * dd;
      CoordPerm p = b_to_c_permutation(g, dd);
      bool ok =
          is_permutation(p) && apply_coord_perm(build_B(g, dd).bin, p) == build_C(g + 1, dd).bin;
      if (!ok && bad.empty()) bad = "B(" + std::to_string(g) + "," + std::to_string(dd) + ")";
    }
  report("family-bridge", bad.empty(), bad);
}

void classification() {
  std::string bad;
  for (std::size_t t = 3; t <= 8; ++t) {
    std::vector<ClassificationRow> rows = classify(t);
    bool ok = rows.size() == t / 2 + 1 && count_classes(rows) == t / 2 &&
              rows[0].class_id == rows[1].class_id;
    for (const ClassificationRow& a : rows)
      for (const ClassificationRow& b : rows)
        ok = ok && (a.class_id == b.class_id) == (a.sig == b.sig);
    if (!ok && bad.empty()) bad = "t=" + std::to_string(t);
  }
  report("classification", bad.empty(), bad);
}

void monomial_group_B() {
  BigInt o01 = monomial_aut_order_B(0, 1).order;
  BigInt b01 = brute_force_monomial_count(build_B(0, 1).additive);
  BigInt o11 = monomial_aut_order_B(1, 1).order;
  BigInt b11 = brute_force_monomial_count(build_B(1, 1).additive);
  bool ok = o01 == 32 && b01 == o01 && o11 == 512 && b11 == o11;
  report("monomial-group-B", ok,
         "(0,1) brute " + b01.str() + " vs " + o01.str() + ", (1,1) brute " + b11.str() +
             " vs " + o11.str());
}

void monomial_group_C() {
  BigInt o11 = monomial_aut_order_C(1, 1).order;
  BigInt b11 = brute_force_monomial_count(build_C(1, 1).additive);
  auto filtered = [](std::size_t gd, std::size_t d) {
    std::size_t count = 0;
    for (const AffineMap& m : enumerate_affine_bijections(gd, d))
      if (is_negation_preserving(m)) ++count;
    return count;
  };
  std::size_t f01 = filtered(0, 1);
  std::size_t f02 = filtered(0, 2);
  bool ok = o11 == 32 && b11 == o11 && f01 == 4 && BigInt(f01) == monomial_aut_order_C(0, 1).order &&
            f02 == 384 && BigInt(f02) == monomial_aut_order_C(0, 2).order;
  report("monomial-group-C", ok,
         "C(1,1) brute " + b11.str() + ", filtered (0,1)=" + std::to_string(f01) + " (0,2)=" +
             std::to_string(f02));
}

void automorphism_brute_force() {
  BigInt a02 = brute_force_automorphisms(build_C(0, 2).bin).order;
  BigInt f02 = perm_aut_order_C(0, 2).order;
  BigInt a40 = brute_force_automorphisms(build_C(4, 0).bin).order;
  BigInt ga4 = affine_group_order(4);
  bool ok = a02 == 9216 && a02 == f02 && a40 == 322560 && a40 == ga4;
  report("automorphism-brute-force", ok,
         "C(0,2) " + a02.str() + " vs " + f02.str() + ", linear n=16 " + a40.str() + " vs " +
             ga4.str());
}

void affine_sampling() {
  ConstructedCode code = build_C(0, 3);
  std::mt19937_64 rng(0);
  bool all_aut = true;
  for (int k = 0; k < 10000; ++k) {
    AffineMap m = random_affine_bijection(0, 3, rng);
    CoordPerm p = coord_perm_from_affine(m, code.layout);
    all_aut = all_aut && apply_coord_perm(code.bin, p) == code.bin;
  }
  bool ok = all_aut && count_affine_bijections(0, 3) == 5505024;
  report("affine-sampling", ok);
}

void exceptional_delta2() {
  std::string bad;
  for (std::size_t gd : {std::size_t{0}, std::size_t{1}}) {
    ConstructedCode code = build_C(gd, 2);
    Partition blocks = block_partition(code).first;
    std::vector<CoordPerm> ex = exceptional_delta2_automorphisms(gd);
    bool ok = ex.size() == 6 && ex[0].img == identity_perm(code.bin.n).img;
    std::size_t affine = 0;
    for (const CoordPerm& psi : ex) {
      ok = ok && is_permutation(psi) && apply_coord_perm(code.bin, psi) == code.bin;
      for (std::size_t i = 0; ok && i < psi.img.size(); ++i)
        ok = blocks.class_of[psi.img[i]] == blocks.class_of[i];
      if (affine_from_coord_perm(psi, code.layout.dom)) ++affine;
    }
    ok = ok && affine == 1;
    if (!ok && bad.empty()) bad = "C(" + std::to_string(gd) + ",2)";
  }
  report("exceptional-delta2", bad.empty(), bad);
}

void block_stability() {
  std::string bad;
  std::mt19937_64 rng(1);
  for (const ConstructedCode& code : all_codes(6)) {
    auto [blocks, macros] = block_partition(code);
    bool ok = true;
    std::vector<SignFunction> signs;
    if (code.family == Family::B) signs = enumerate_sign_functions(code.par_a, code.par_b);
    for (int k = 0; ok && k < 100; ++k) {
      AffineMap sg = random_affine_bijection(code.par_a, code.par_b, rng);
      CoordPerm p;
      if (code.family == Family::B) {
        p = flat_perm_from_monomial(
            monomial_from_sign_and_affine(signs[rng() % signs.size()], sg), code.layout);
      } else {
        p = coord_perm_from_affine(sg, code.layout);
      }
      ok = apply_coord_perm(code.bin, p) == code.bin && partition_preserved(blocks, p) &&
           partition_preserved(macros, p);
    }
    if (ok && code.family == Family::C && code.par_b == 2 && code.par_a <= 1) {
      for (const CoordPerm& psi : exceptional_delta2_automorphisms(code.par_a)) {
        AffineMap sg = random_affine_bijection(code.par_a, 2, rng);
        CoordPerm comp = compose_perm(coord_perm_from_affine(sg, code.layout), psi);
        ok = ok && partition_preserved(blocks, psi) && partition_preserved(macros, psi) &&
             partition_preserved(blocks, comp) && partition_preserved(macros, comp);
      }
    }
    if (!ok && bad.empty()) bad = code_label(code);
  }
  report("block-stability", bad.empty(), bad);
}

}  // namespace

int main() {
  construction_fidelity();
  matrix_fixtures();
  kernel_agreement();
  coset_representatives();
  family_bridge();
  classification();
  monomial_group_B();
  monomial_group_C();
  automorphism_brute_force();
  affine_sampling();
  exceptional_delta2();
  block_stability();
  return failures == 0 ? 0 : 1;
}
