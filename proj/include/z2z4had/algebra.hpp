#pragma once
// Arithmetic for mixed binary/quaternary words and for the point groups
// Z2^a x Z4^b that index the coordinates of the constructed codes.
//
// Conventions used throughout the library:
//  - A mixed word has alpha binary symbols followed by beta quaternary
//    symbols.  Its Gray expansion keeps the alpha bits and replaces each
//    quaternary symbol q by the pair gray(q): 0->00, 1->01, 2->11, 3->10.
//  - A coordinate permutation p moves the symbol at position i to position
//    p.img[i], i.e. (p applied to w)[p.img[i]] = w[i].
//  - Points of Z2^a x Z4^b are indexed with the binary digits most
//    significant and earlier digits heavier; for (a,b) = (1,1) the order is
//    (0|0),(0|1),(0|2),(0|3),(1|0),(1|1),(1|2),(1|3).

#include <cstddef>
#include <cstdint>
#include <vector>

namespace z2z4had {

using Bit = std::uint8_t;
using Quat = std::uint8_t;
using BinaryWord = std::vector<Bit>;
using QuatWord = std::vector<Quat>;

inline Quat qadd(Quat x, Quat y) { return static_cast<Quat>((x + y) & 3); }
inline Quat qneg(Quat x) { return static_cast<Quat>((4 - x) & 3); }
inline Quat qscale(unsigned k, Quat x) { return static_cast<Quat>((k * x) & 3); }

BinaryWord gray(const QuatWord& w);
QuatWord gray_inv(const BinaryWord& w);  // throws std::invalid_argument on odd length
Quat gray_pair_inv(Bit hi, Bit lo);      // the symbol whose Gray pair is (hi, lo)
Bit phi_plus(Quat q);                    // 0,3 -> 0 and 1,2 -> 1; phi_plus(q) = phi_plus(-q)
BinaryWord phi_plus_word(const QuatWord& w);

struct CodeType {
  std::size_t alpha = 0, beta = 0, gamma = 0, delta = 0;
  std::size_t length() const { return alpha + 2 * beta; }
  bool operator==(const CodeType&) const = default;
};

struct MixedWord {
  std::size_t alpha = 0, beta = 0;
  BinaryWord bits;
  QuatWord quats;
  bool operator==(const MixedWord&) const = default;
};
bool operator<(const MixedWord& x, const MixedWord& y);
MixedWord mixed_zero(std::size_t alpha, std::size_t beta);
MixedWord mixed_add(const MixedWord& x, const MixedWord& y);
MixedWord mixed_neg(const MixedWord& x);
bool has_order_le2(const MixedWord& x);

BinaryWord phi_ext(const MixedWord& x);
MixedWord phi_ext_inv(const BinaryWord& w, std::size_t alpha);

struct CoordPerm {
  std::vector<std::size_t> img;
  std::size_t size() const { return img.size(); }
  bool operator==(const CoordPerm&) const = default;
};
bool operator<(const CoordPerm& p, const CoordPerm& q);
CoordPerm identity_perm(std::size_t n);
bool is_permutation(const CoordPerm& p);
CoordPerm inverse_perm(const CoordPerm& p);
CoordPerm compose_perm(const CoordPerm& p, const CoordPerm& q);  // apply p first, then q
BinaryWord apply_perm(const BinaryWord& w, const CoordPerm& p);

// Pair swap induced by a word of the given type: the Gray pair at positions
// (alpha + 2i, alpha + 2i + 1) is swapped exactly when the word's bits
// there differ (values 01 and 10).  star(x, y) = x + pi_x(y) realizes the
// group operation transported from the mixed words through the Gray
// expansion: phi_ext(u) star phi_ext(v) = phi_ext(u + v).
CoordPerm pi_x(const BinaryWord& c, const CodeType& t);
BinaryWord star(const BinaryWord& x, const BinaryWord& y, const CodeType& t);

// Permutation of the mixed coordinates combined with negation of selected
// quaternary coordinates.  negate is indexed by target coordinate: after
// moving symbol j to quat_perm[j], every target coordinate with a set flag
// is negated.
struct MonomialTransform {
  std::vector<std::size_t> bin_perm;
  std::vector<std::size_t> quat_perm;
  std::vector<Bit> negate;
  bool operator==(const MonomialTransform&) const = default;
};
bool operator<(const MonomialTransform& a, const MonomialTransform& b);
MixedWord apply_monomial(const MonomialTransform& m, const MixedWord& x);

// ---- points of Z2^a x Z4^b ----

struct Domain {
  std::size_t a = 0, b = 0;
  std::size_t size() const { return std::size_t{1} << (a + 2 * b); }
  bool operator==(const Domain&) const = default;
};

struct GroupPoint {
  std::vector<Bit> x;
  QuatWord y;
  bool operator==(const GroupPoint&) const = default;
};

std::size_t point_index(const GroupPoint& p);
GroupPoint point_at(const Domain& d, std::size_t idx);
std::vector<GroupPoint> enumerate_points(std::size_t a, std::size_t b);
GroupPoint point_zero(const Domain& d);
GroupPoint point_add(const GroupPoint& p, const GroupPoint& q);
GroupPoint negate_point(const GroupPoint& p);
GroupPoint point_scale(unsigned k, const GroupPoint& p);  // k in Z4, binary part scaled by k mod 2
bool point_has_order_le2(const GroupPoint& p);

// Affine self-map of Z2^a x Z4^b: p gets trans plus the generator images
// scaled by p's digits.  gen_img lists the images of the a order-2
// generators first, then the b order-4 generators; images of order-2
// generators must themselves have order at most 2 (checked by make_affine).
struct AffineMap {
  Domain dom;
  std::vector<GroupPoint> gen_img;
  GroupPoint trans;
  bool operator==(const AffineMap&) const = default;
};
AffineMap make_affine(Domain dom, std::vector<GroupPoint> gen_img, GroupPoint trans);
AffineMap identity_affine(const Domain& d);
GroupPoint affine_apply(const AffineMap& m, const GroupPoint& p);
AffineMap affine_compose(const AffineMap& f, const AffineMap& g);  // p -> f(g(p))
bool affine_is_bijection(const AffineMap& m);
AffineMap affine_inverse(const AffineMap& m);  // m must be a bijection

}  // namespace z2z4had
