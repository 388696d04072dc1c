#include "doctest.h"

#include "z2z4had/algebra.hpp"

#include <random>
#include <stdexcept>

using namespace z2z4had;

TEST_SUITE("algebra") {

TEST_CASE("gray map table") {
  QuatWord all = {0, 1, 2, 3};
  BinaryWord img = gray(all);
  BinaryWord want = {0, 0, 0, 1, 1, 1, 1, 0};
  CHECK(img == want);
  CHECK(gray_inv(img) == all);
  CHECK(gray_pair_inv(0, 0) == 0);
  CHECK(gray_pair_inv(0, 1) == 1);
  CHECK(gray_pair_inv(1, 1) == 2);
  CHECK(gray_pair_inv(1, 0) == 3);
  CHECK(phi_plus(0) == 0);
  CHECK(phi_plus(1) == 1);
  CHECK(phi_plus(2) == 1);
  CHECK(phi_plus(3) == 0);
}

TEST_CASE("quaternary arithmetic") {
  CHECK(qadd(3, 2) == 1);
  CHECK(qneg(0) == 0);
  CHECK(qneg(1) == 3);
  CHECK(qneg(2) == 2);
  CHECK(qscale(3, 3) == 1);
  for (Quat q = 0; q < 4; ++q) CHECK(qadd(q, qneg(q)) == 0);
}

TEST_CASE("mixed words and the extended Gray image") {
  MixedWord w = mixed_zero(2, 3);
  w.bits = {1, 0};
  w.quats = {0, 2, 3};
  BinaryWord img = phi_ext(w);
  CHECK(img.size() == 8);
  BinaryWord want = {1, 0, 0, 0, 1, 1, 1, 0};
  CHECK(img == want);
  CHECK(phi_ext_inv(img, 2) == w);
  MixedWord s = mixed_add(w, w);
  CHECK(s.bits == BinaryWord{0, 0});
  CHECK(s.quats == QuatWord{0, 0, 2});
  CHECK(mixed_add(w, mixed_neg(w)) == mixed_zero(2, 3));
  CHECK(!has_order_le2(w));
  CHECK(has_order_le2(s));
}

TEST_CASE("permutation conventions") {
  CoordPerm p{{1, 2, 0}};
  CHECK(is_permutation(p));
  BinaryWord w = {1, 0, 1};
  BinaryWord moved = apply_perm(w, p);
  // value at i lands at img[i]
  CHECK(moved[1] == w[0]);
  CHECK(moved[2] == w[1]);
  CHECK(moved[0] == w[2]);
  CHECK(apply_perm(moved, inverse_perm(p)) == w);
  CoordPerm q{{2, 0, 1}};
  CoordPerm pq = compose_perm(p, q);  // p first, then q
  for (std::size_t i = 0; i < 3; ++i) CHECK(pq.img[i] == q.img[p.img[i]]);
  CHECK(identity_perm(3).img == std::vector<std::size_t>{0, 1, 2});
  CHECK(!is_permutation(CoordPerm{{0, 0, 1}}));
}

TEST_CASE("pi_x swaps exactly the pairs where the bits differ") {
  CodeType t{2, 3, 0, 0};  // alpha=2, beta=3 in the standard layout
  BinaryWord x = {1, 0, /*pairs*/ 0, 1, 1, 1, 1, 0};
  BinaryWord y = {1, 1, /*pairs*/ 0, 1, 0, 0, 1, 1};
  BinaryWord px = apply_perm(y, pi_x(x, t));
  // binary part untouched
  CHECK(px[0] == y[0]);
  CHECK(px[1] == y[1]);
  // pair one: x bits 01 differ, swap
  CHECK(px[2] == y[3]);
  CHECK(px[3] == y[2]);
  // pair two: x bits 11 equal, keep
  CHECK(px[4] == y[4]);
  CHECK(px[5] == y[5]);
  // pair three: x bits 10 differ, swap
  CHECK(px[6] == y[7]);
  CHECK(px[7] == y[6]);
  // star against the zero word is plain xor
  BinaryWord zero(8, 0);
  BinaryWord s = star(zero, y, t);
  CHECK(s == y);
}

TEST_CASE("star matches the Gray image of quaternary addition") {
  CodeType t{0, 4, 0, 0};
  std::mt19937_64 rng(7);
  for (int it = 0; it < 50; ++it) {
    QuatWord a(4), b(4);
    for (auto& q : a) q = static_cast<Quat>(rng() & 3);
    for (auto& q : b) q = static_cast<Quat>(rng() & 3);
    QuatWord sum(4);
    for (std::size_t j = 0; j < 4; ++j) sum[j] = qadd(a[j], b[j]);
    CHECK(star(gray(a), gray(b), t) == gray(sum));
  }
}

TEST_CASE("points order binary digits first and earlier digits heavier") {
  Domain d{1, 2};
  CHECK(d.size() == 32);
  GroupPoint p;
  p.x = {1};
  p.y = {2, 3};
  CHECK(point_index(p) == 16 + 2 * 4 + 3);
  CHECK(point_index(point_at(d, 27)) == 27);
  std::vector<GroupPoint> pts = enumerate_points(1, 2);
  CHECK(pts.size() == 32);
  for (std::size_t i = 0; i < pts.size(); ++i) CHECK(point_index(pts[i]) == i);
  std::size_t invol = 0;
  for (const GroupPoint& q : pts)
    if (point_has_order_le2(q)) ++invol;
  CHECK(invol == 8);  // 2^(1+2)
  CHECK(point_index(point_add(p, negate_point(p))) == 0);
  CHECK(point_index(point_scale(2, p)) == point_index(point_add(p, p)));
}

TEST_CASE("affine maps compose, invert, and validate generator orders") {
  Domain d{1, 1};
  AffineMap id = identity_affine(d);
  for (std::size_t c = 0; c < d.size(); ++c)
    CHECK(point_index(affine_apply(id, point_at(d, c))) == c);

  // x generator image must have order <= 2
  GroupPoint order4 = point_at(d, 1);  // y = 1
  std::vector<GroupPoint> bad_gens = {order4, order4};
  CHECK_THROWS_AS(make_affine(d, bad_gens, point_zero(d)), std::invalid_argument);

  std::mt19937_64 rng(11);
  auto random_map = [&] {
    for (;;) {
      std::vector<GroupPoint> gi;
      GroupPoint gx = point_at(d, rng() % d.size());
      if (!point_has_order_le2(gx)) continue;
      gi.push_back(gx);
      gi.push_back(point_at(d, rng() % d.size()));
      AffineMap m = make_affine(d, std::move(gi), point_at(d, rng() % d.size()));
      if (affine_is_bijection(m)) return m;
    }
  };
  for (int it = 0; it < 20; ++it) {
    AffineMap f = random_map(), g = random_map();
    AffineMap fg = affine_compose(f, g);  // f after g
    AffineMap finv = affine_inverse(f);
    for (std::size_t c = 0; c < d.size(); ++c) {
      GroupPoint p = point_at(d, c);
      CHECK(point_index(affine_apply(fg, p)) ==
            point_index(affine_apply(f, affine_apply(g, p))));
      CHECK(point_index(affine_apply(finv, affine_apply(f, p))) == c);
    }
  }
}

TEST_CASE("monomial transforms negate by target index") {
  MonomialTransform mt;
  mt.bin_perm = {1, 0};
  mt.quat_perm = {1, 0};
  mt.negate = {0, 1};  // negate whatever lands on quaternary coordinate 1
  MixedWord w = mixed_zero(2, 2);
  w.bits = {1, 0};
  w.quats = {1, 2};
  MixedWord out = apply_monomial(mt, w);
  CHECK(out.bits == BinaryWord{0, 1});
  CHECK(out.quats[1] == qneg(w.quats[0]));
  CHECK(out.quats[0] == w.quats[1]);
}

}  // TEST_SUITE
