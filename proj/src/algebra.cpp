#include "z2z4had/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace z2z4had {

namespace {
constexpr Bit kGrayHi[4] = {0, 0, 1, 1};
constexpr Bit kGrayLo[4] = {0, 1, 1, 0};
}  // namespace

BinaryWord gray(const QuatWord& w) {
  BinaryWord out;
  out.reserve(2 * w.size());
  for (Quat q : w) {
    out.push_back(kGrayHi[q & 3]);
    out.push_back(kGrayLo[q & 3]);
  }
  return out;
}

Quat gray_pair_inv(Bit hi, Bit lo) {
  if (hi == 0) return lo ? Quat{1} : Quat{0};
  return lo ? Quat{2} : Quat{3};
}

QuatWord gray_inv(const BinaryWord& w) {
  if (w.size() % 2 != 0)
    throw std::invalid_argument("gray_inv: word length must be even");
  QuatWord out;
  out.reserve(w.size() / 2);
  for (std::size_t i = 0; i < w.size(); i += 2)
    out.push_back(gray_pair_inv(w[i], w[i + 1]));
  return out;
}

Bit phi_plus(Quat q) { return static_cast<Bit>(((q & 3) == 1 || (q & 3) == 2) ? 1 : 0); }

BinaryWord phi_plus_word(const QuatWord& w) {
  BinaryWord out;
  out.reserve(w.size());
  for (Quat q : w) out.push_back(phi_plus(q));
  return out;
}

bool operator<(const MixedWord& x, const MixedWord& y) {
  if (x.bits != y.bits) return x.bits < y.bits;
  return x.quats < y.quats;
}

MixedWord mixed_zero(std::size_t alpha, std::size_t beta) {
  return MixedWord{alpha, beta, BinaryWord(alpha, 0), QuatWord(beta, 0)};
}

MixedWord mixed_add(const MixedWord& x, const MixedWord& y) {
  if (x.alpha != y.alpha || x.beta != y.beta)
    throw std::invalid_argument("mixed_add: shape mismatch");
  MixedWord out = x;
  for (std::size_t i = 0; i < x.alpha; ++i) out.bits[i] ^= y.bits[i];
  for (std::size_t j = 0; j < x.beta; ++j) out.quats[j] = qadd(out.quats[j], y.quats[j]);
  return out;
}

MixedWord mixed_neg(const MixedWord& x) {
  MixedWord out = x;
  for (std::size_t j = 0; j < x.beta; ++j) out.quats[j] = qneg(out.quats[j]);
  return out;
}

bool has_order_le2(const MixedWord& x) {
  return std::all_of(x.quats.begin(), x.quats.end(), [](Quat q) { return (q & 1) == 0; });
}

BinaryWord phi_ext(const MixedWord& x) {
  BinaryWord out = x.bits;
  out.reserve(x.alpha + 2 * x.beta);
  for (Quat q : x.quats) {
    out.push_back(kGrayHi[q & 3]);
    out.push_back(kGrayLo[q & 3]);
  }
  return out;
}

MixedWord phi_ext_inv(const BinaryWord& w, std::size_t alpha) {
  if (w.size() < alpha || (w.size() - alpha) % 2 != 0)
    throw std::invalid_argument("phi_ext_inv: bad length");
  MixedWord out;
  out.alpha = alpha;
  out.beta = (w.size() - alpha) / 2;
  out.bits.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(alpha));
  out.quats.reserve(out.beta);
  for (std::size_t i = alpha; i < w.size(); i += 2)
    out.quats.push_back(gray_pair_inv(w[i], w[i + 1]));
  return out;
}

bool operator<(const CoordPerm& p, const CoordPerm& q) { return p.img < q.img; }

CoordPerm identity_perm(std::size_t n) {
  CoordPerm p;
  p.img.resize(n);
  for (std::size_t i = 0; i < n; ++i) p.img[i] = i;
  return p;
}

bool is_permutation(const CoordPerm& p) {
  std::vector<bool> seen(p.size(), false);
  for (std::size_t v : p.img) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

CoordPerm inverse_perm(const CoordPerm& p) {
  CoordPerm q;
  q.img.resize(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q.img[p.img[i]] = i;
  return q;
}

CoordPerm compose_perm(const CoordPerm& p, const CoordPerm& q) {
  if (p.size() != q.size()) throw std::invalid_argument("compose_perm: size mismatch");
  CoordPerm r;
  r.img.resize(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r.img[i] = q.img[p.img[i]];
  return r;
}

BinaryWord apply_perm(const BinaryWord& w, const CoordPerm& p) {
  if (w.size() != p.size()) throw std::invalid_argument("apply_perm: size mismatch");
  BinaryWord out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[p.img[i]] = w[i];
  return out;
}

CoordPerm pi_x(const BinaryWord& c, const CodeType& t) {
  if (c.size() != t.length()) throw std::invalid_argument("pi_x: word does not match type");
  CoordPerm p = identity_perm(c.size());
  for (std::size_t i = 0; i < t.beta; ++i) {
    std::size_t a = t.alpha + 2 * i, b = a + 1;
    // a pair reading 01 or 10 comes from a quaternary symbol of order 4,
    // and exactly those pairs are transposed
    if (c[a] != c[b]) std::swap(p.img[a], p.img[b]);
  }
  return p;
}

BinaryWord star(const BinaryWord& x, const BinaryWord& y, const CodeType& t) {
  if (x.size() != y.size() || x.size() != t.length())
    throw std::invalid_argument("star: word does not match type");
  BinaryWord moved = apply_perm(y, pi_x(x, t));
  for (std::size_t i = 0; i < moved.size(); ++i) moved[i] ^= x[i];
  return moved;
}

bool operator<(const MonomialTransform& a, const MonomialTransform& b) {
  if (a.bin_perm != b.bin_perm) return a.bin_perm < b.bin_perm;
  if (a.quat_perm != b.quat_perm) return a.quat_perm < b.quat_perm;
  return a.negate < b.negate;
}

MixedWord apply_monomial(const MonomialTransform& m, const MixedWord& x) {
  if (m.bin_perm.size() != x.alpha || m.quat_perm.size() != x.beta)
    throw std::invalid_argument("apply_monomial: shape mismatch");
  MixedWord out = mixed_zero(x.alpha, x.beta);
  for (std::size_t i = 0; i < x.alpha; ++i) out.bits[m.bin_perm[i]] = x.bits[i];
  for (std::size_t j = 0; j < x.beta; ++j) {
    std::size_t tgt = m.quat_perm[j];
    out.quats[tgt] = m.negate[tgt] ? qneg(x.quats[j]) : x.quats[j];
  }
  return out;
}

std::size_t point_index(const GroupPoint& p) {
  std::size_t idx = 0;
  for (Bit xb : p.x) idx = idx * 2 + xb;
  for (Quat yq : p.y) idx = idx * 4 + yq;
  return idx;
}

GroupPoint point_at(const Domain& d, std::size_t idx) {
  GroupPoint p;
  p.x.resize(d.a);
  p.y.resize(d.b);
  for (std::size_t j = d.b; j-- > 0;) {
    p.y[j] = static_cast<Quat>(idx & 3);
    idx >>= 2;
  }
  for (std::size_t i = d.a; i-- > 0;) {
    p.x[i] = static_cast<Bit>(idx & 1);
    idx >>= 1;
  }
  return p;
}

std::vector<GroupPoint> enumerate_points(std::size_t a, std::size_t b) {
  Domain d{a, b};
  std::vector<GroupPoint> pts;
  pts.reserve(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) pts.push_back(point_at(d, i));
  return pts;
}

GroupPoint point_zero(const Domain& d) {
  return GroupPoint{std::vector<Bit>(d.a, 0), QuatWord(d.b, 0)};
}

GroupPoint point_add(const GroupPoint& p, const GroupPoint& q) {
  if (p.x.size() != q.x.size() || p.y.size() != q.y.size())
    throw std::invalid_argument("point_add: shape mismatch");
  GroupPoint out = p;
  for (std::size_t i = 0; i < p.x.size(); ++i) out.x[i] ^= q.x[i];
  for (std::size_t j = 0; j < p.y.size(); ++j) out.y[j] = qadd(out.y[j], q.y[j]);
  return out;
}

GroupPoint negate_point(const GroupPoint& p) {
  GroupPoint out = p;
  for (std::size_t j = 0; j < p.y.size(); ++j) out.y[j] = qneg(out.y[j]);
  return out;
}

GroupPoint point_scale(unsigned k, const GroupPoint& p) {
  GroupPoint out = p;
  for (std::size_t i = 0; i < p.x.size(); ++i) out.x[i] = static_cast<Bit>((k & 1) * p.x[i]);
  for (std::size_t j = 0; j < p.y.size(); ++j) out.y[j] = qscale(k, p.y[j]);
  return out;
}

bool point_has_order_le2(const GroupPoint& p) {
  return std::all_of(p.y.begin(), p.y.end(), [](Quat q) { return (q & 1) == 0; });
}

AffineMap make_affine(Domain dom, std::vector<GroupPoint> gen_img, GroupPoint trans) {
  if (gen_img.size() != dom.a + dom.b)
    throw std::invalid_argument("make_affine: expected one image per generator");
  auto shape_ok = [&](const GroupPoint& p) {
    return p.x.size() == dom.a && p.y.size() == dom.b;
  };
  for (const GroupPoint& p : gen_img)
    if (!shape_ok(p)) throw std::invalid_argument("make_affine: image shape mismatch");
  if (!shape_ok(trans)) throw std::invalid_argument("make_affine: translation shape mismatch");
  for (std::size_t i = 0; i < dom.a; ++i)
    if (!point_has_order_le2(gen_img[i]))
      throw std::invalid_argument("make_affine: order-2 generator mapped to an order-4 point");
  return AffineMap{dom, std::move(gen_img), std::move(trans)};
}

AffineMap identity_affine(const Domain& d) {
  std::vector<GroupPoint> gens;
  gens.reserve(d.a + d.b);
  for (std::size_t i = 0; i < d.a; ++i) {
    GroupPoint g = point_zero(d);
    g.x[i] = 1;
    gens.push_back(g);
  }
  for (std::size_t j = 0; j < d.b; ++j) {
    GroupPoint g = point_zero(d);
    g.y[j] = 1;
    gens.push_back(g);
  }
  return AffineMap{d, std::move(gens), point_zero(d)};
}

GroupPoint affine_apply(const AffineMap& m, const GroupPoint& p) {
  GroupPoint acc = m.trans;
  for (std::size_t i = 0; i < m.dom.a; ++i)
    if (p.x[i]) acc = point_add(acc, m.gen_img[i]);
  for (std::size_t j = 0; j < m.dom.b; ++j)
    if (p.y[j]) acc = point_add(acc, point_scale(p.y[j], m.gen_img[m.dom.a + j]));
  return acc;
}

AffineMap affine_compose(const AffineMap& f, const AffineMap& g) {
  if (!(f.dom == g.dom)) throw std::invalid_argument("affine_compose: domain mismatch");
  std::vector<GroupPoint> gens;
  gens.reserve(g.gen_img.size());
  GroupPoint f0 = affine_apply(f, g.trans);
  for (std::size_t k = 0; k < g.gen_img.size(); ++k) {
    GroupPoint img = affine_apply(f, point_add(g.trans, g.gen_img[k]));
    gens.push_back(point_add(img, negate_point(f0)));
  }
  return AffineMap{f.dom, std::move(gens), std::move(f0)};
}

bool affine_is_bijection(const AffineMap& m) {
  std::vector<bool> hit(m.dom.size(), false);
  for (std::size_t i = 0; i < m.dom.size(); ++i) {
    std::size_t j = point_index(affine_apply(m, point_at(m.dom, i)));
    if (hit[j]) return false;
    hit[j] = true;
  }
  return true;
}

AffineMap affine_inverse(const AffineMap& m) {
  const Domain& d = m.dom;
  std::vector<std::size_t> inv(d.size(), SIZE_MAX);
  for (std::size_t i = 0; i < d.size(); ++i) {
    std::size_t j = point_index(affine_apply(m, point_at(d, i)));
    if (inv[j] != SIZE_MAX) throw std::invalid_argument("affine_inverse: map is not a bijection");
    inv[j] = i;
  }
  // the inverse of an affine bijection is affine, so its data can be read
  // off the value table: translation = preimage of 0, generator images =
  // preimage of each generator minus the translation
  GroupPoint trans = point_at(d, inv[0]);
  std::vector<GroupPoint> gens;
  gens.reserve(d.a + d.b);
  AffineMap id = identity_affine(d);
  for (const GroupPoint& e : id.gen_img) {
    GroupPoint pre = point_at(d, inv[point_index(e)]);
    gens.push_back(point_add(pre, negate_point(trans)));
  }
  return make_affine(d, std::move(gens), std::move(trans));
}

}  // namespace z2z4had
