#include "z2z4had/autgrp.hpp"

#include "permsearch.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

namespace z2z4had {

namespace {

BigInt pow2(std::size_t e) { return BigInt(1) << e; }

// sequential counts of generator image choices for a bijective linear part
BigInt order4_image_choices(std::size_t a, std::size_t b) {
  BigInt y = 1;
  for (std::size_t j = 1; j <= b; ++j) y *= pow2(a + 2 * b) - pow2(a + b + j - 1);
  return y;
}
BigInt order2_image_choices(std::size_t a, std::size_t b) {
  BigInt x = 1;
  for (std::size_t i = 1; i <= a; ++i) x *= pow2(a + b) - pow2(b + i - 1);
  return x;
}

}  // namespace

BigInt count_affine_bijections(std::size_t a, std::size_t b) {
  return pow2(a + 2 * b) * order4_image_choices(a, b) * order2_image_choices(a, b);
}

BigInt affine_group_order(std::size_t t) {
  BigInt total = pow2(t);
  for (std::size_t i = 0; i < t; ++i) total *= pow2(t) - pow2(i);
  return total;
}

std::vector<AffineMap> enumerate_affine_bijections(std::size_t a, std::size_t b) {
  Domain dom{a, b};
  if (dom.size() > (std::size_t{1} << 12))
    throw CapExceeded("enumerate_affine_bijections: domain larger than 2^12 points");
  std::vector<GroupPoint> pts = enumerate_points(a, b);
  std::vector<GroupPoint> invol;
  for (const GroupPoint& p : pts)
    if (point_has_order_le2(p)) invol.push_back(p);

  BigInt cand = BigInt(pts.size());  // translation
  for (std::size_t j = 0; j < b; ++j) cand *= pts.size();
  for (std::size_t i = 0; i < a; ++i) cand *= invol.size();
  if (cand > (BigInt(1) << 21))
    throw CapExceeded("enumerate_affine_bijections: more than 2^21 candidate maps");

  // odometer over the a involution picks, the b point picks and the translation
  std::vector<std::size_t> pick(a + b + 1, 0);
  auto limit = [&](std::size_t i) { return i < a ? invol.size() : pts.size(); };
  std::vector<AffineMap> out;
  for (;;) {
    std::vector<GroupPoint> gi;
    gi.reserve(a + b);
    for (std::size_t i = 0; i < a; ++i) gi.push_back(invol[pick[i]]);
    for (std::size_t j = 0; j < b; ++j) gi.push_back(pts[pick[a + j]]);
    AffineMap m = make_affine(dom, std::move(gi), pts[pick[a + b]]);
    if (affine_is_bijection(m)) out.push_back(std::move(m));
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == limit(i)) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  return out;
}

AffineMap random_affine_bijection(std::size_t a, std::size_t b, std::mt19937_64& rng) {
  Domain dom{a, b};
  std::vector<GroupPoint> pts = enumerate_points(a, b);
  std::vector<GroupPoint> invol;
  for (const GroupPoint& p : pts)
    if (point_has_order_le2(p)) invol.push_back(p);
  std::uniform_int_distribution<std::size_t> dpt(0, pts.size() - 1);
  std::uniform_int_distribution<std::size_t> dinv(0, invol.size() - 1);
  // rejection sampling is uniform: each bijection comes from exactly one
  // (generator images, translation) tuple, and at least a third of the
  // tuples are bijective for every domain
  for (;;) {
    std::vector<GroupPoint> gi;
    gi.reserve(a + b);
    for (std::size_t i = 0; i < a; ++i) gi.push_back(invol[dinv(rng)]);
    for (std::size_t j = 0; j < b; ++j) gi.push_back(pts[dpt(rng)]);
    AffineMap m = make_affine(dom, std::move(gi), pts[dpt(rng)]);
    if (affine_is_bijection(m)) return m;
  }
}

bool is_negation_preserving(const AffineMap& m) {
  // m(-p) + m(p) = 2 m(0) for affine m, so the condition is m(0) = trans
  // having order at most 2
  return point_has_order_le2(m.trans);
}

std::vector<SignFunction> enumerate_sign_functions(std::size_t gamma, std::size_t delta_dot) {
  Domain dom{gamma, delta_dot};
  std::vector<SignFunction> out;
  for (std::size_t mv = 0; mv < (std::size_t{1} << gamma); ++mv)
    for (std::size_t kv = 0; kv < (std::size_t{1} << delta_dot); ++kv)
      for (Quat c : {Quat{1}, Quat{3}}) {
        AffineFunctional f;
        f.dom = dom;
        f.m.resize(gamma);
        f.k.resize(delta_dot);
        for (std::size_t i = 0; i < gamma; ++i)
          f.m[i] = static_cast<Bit>((mv >> (gamma - 1 - i)) & 1);
        for (std::size_t j = 0; j < delta_dot; ++j)
          f.k[j] = static_cast<Quat>(((kv >> (delta_dot - 1 - j)) & 1) ? 2 : 0);
        f.c = c;
        out.push_back(SignFunction{f});
      }
  return out;
}

MonomialTransform monomial_from_sign_and_affine(const SignFunction& r, const AffineMap& sigma) {
  const Domain& dom = sigma.dom;
  if (r.f.dom != dom)
    throw std::invalid_argument("monomial_from_sign_and_affine: domain mismatch");
  std::size_t sz = dom.size();
  MonomialTransform mt;
  mt.quat_perm.resize(sz);
  mt.negate.assign(sz, 0);
  for (std::size_t u = 0; u < sz; ++u) {
    GroupPoint q = affine_apply(sigma, point_at(dom, u));
    Quat rq = functional_eval(r.f, q);
    // r is constant on {q, -q}, so r takes the same value at the target
    std::size_t tgt = point_index(point_scale(rq, q));
    mt.quat_perm[u] = tgt;
    mt.negate[tgt] = (rq == 3);
  }
  return mt;
}

CoordPerm coord_perm_from_affine(const AffineMap& m, const PointLayout& layout) {
  if (layout.family != Family::C)
    throw std::invalid_argument("coord_perm_from_affine: needs a mixed-family layout");
  if (m.dom != layout.dom)
    throw std::invalid_argument("coord_perm_from_affine: domain mismatch");
  CoordPerm p;
  p.img.resize(layout.points.size());
  for (std::size_t c = 0; c < layout.points.size(); ++c)
    p.img[c] = point_index(affine_apply(m, layout.points[c]));
  return p;
}

MonomialTransform monomial_from_affine(const AffineMap& m, const PointLayout& layout) {
  if (layout.family != Family::C)
    throw std::invalid_argument("monomial_from_affine: needs a mixed-family layout");
  if (m.dom != layout.dom) throw std::invalid_argument("monomial_from_affine: domain mismatch");
  if (!is_negation_preserving(m))
    throw std::invalid_argument("monomial_from_affine: map does not commute with negation");
  std::size_t alpha = layout.bin_coords.size();
  std::size_t beta = layout.pair_rep.size();
  MonomialTransform mt;
  mt.bin_perm.resize(alpha);
  mt.quat_perm.resize(beta);
  mt.negate.assign(beta, 0);
  for (std::size_t i = 0; i < alpha; ++i) {
    std::size_t c = layout.bin_coords[i];
    std::size_t ic = point_index(affine_apply(m, layout.points[c]));
    mt.bin_perm[i] = layout.slot[ic];
  }
  for (std::size_t j = 0; j < beta; ++j) {
    std::size_t rep = layout.pair_rep[j];
    std::size_t irep = point_index(affine_apply(m, layout.points[rep]));
    std::size_t tj = layout.slot[irep];
    mt.quat_perm[j] = tj;
    // landing on the target pair's negated point swaps the Gray pair,
    // which negates the quaternary symbol
    mt.negate[tj] = (layout.pair_rep[tj] != irep) ? 1 : 0;
  }
  return mt;
}

CoordPerm flat_perm_from_monomial(const MonomialTransform& m, const PointLayout& layout) {
  CoordPerm p;
  p.img.resize(layout.flat_length());
  if (layout.family == Family::B) {
    std::size_t beta = layout.points.size();
    if (m.quat_perm.size() != beta || !m.bin_perm.empty())
      throw std::invalid_argument("flat_perm_from_monomial: shape mismatch");
    for (std::size_t j = 0; j < beta; ++j) {
      std::size_t tj = m.quat_perm[j];
      bool neg = m.negate[tj] != 0;
      p.img[2 * j] = 2 * tj + (neg ? 1 : 0);
      p.img[2 * j + 1] = 2 * tj + (neg ? 0 : 1);
    }
    return p;
  }
  if (m.bin_perm.size() != layout.bin_coords.size() ||
      m.quat_perm.size() != layout.pair_rep.size())
    throw std::invalid_argument("flat_perm_from_monomial: shape mismatch");
  for (std::size_t i = 0; i < layout.bin_coords.size(); ++i)
    p.img[layout.bin_coords[i]] = layout.bin_coords[m.bin_perm[i]];
  for (std::size_t j = 0; j < layout.pair_rep.size(); ++j) {
    std::size_t tj = m.quat_perm[j];
    std::size_t rep = layout.pair_rep[j];
    std::size_t trep = layout.pair_rep[tj];
    std::size_t tmate = layout.opposite[trep];
    if (m.negate[tj]) std::swap(trep, tmate);
    p.img[rep] = trep;
    p.img[layout.opposite[rep]] = tmate;
  }
  return p;
}

std::optional<AffineMap> affine_from_coord_perm(const CoordPerm& p, const Domain& d) {
  if (p.img.size() != d.size() || !is_permutation(p)) return std::nullopt;
  GroupPoint trans = point_at(d, p.img[0]);  // the zero point has index 0
  GroupPoint nt = negate_point(trans);
  std::vector<GroupPoint> gi;
  gi.reserve(d.a + d.b);
  auto image_of = [&](const GroupPoint& e) {
    return point_add(point_at(d, p.img[point_index(e)]), nt);
  };
  for (std::size_t i = 0; i < d.a; ++i) {
    GroupPoint e = point_zero(d);
    e.x[i] = 1;
    GroupPoint img = image_of(e);
    if (!point_has_order_le2(img)) return std::nullopt;
    gi.push_back(std::move(img));
  }
  for (std::size_t j = 0; j < d.b; ++j) {
    GroupPoint e = point_zero(d);
    e.y[j] = 1;
    gi.push_back(image_of(e));
  }
  AffineMap m = make_affine(d, std::move(gi), std::move(trans));
  if (!affine_is_bijection(m)) return std::nullopt;
  for (std::size_t c = 0; c < d.size(); ++c)
    if (point_index(affine_apply(m, point_at(d, c))) != p.img[c]) return std::nullopt;
  return m;
}

GroupOrderReport monomial_aut_order_B(std::size_t gamma, std::size_t delta_dot) {
  GroupOrderReport r;
  r.group = "MAut B(" + std::to_string(gamma) + "," + std::to_string(delta_dot) + ")";
  r.factors = {{"translations", pow2(gamma + 2 * delta_dot)},
               {"order-4 generator images", order4_image_choices(gamma, delta_dot)},
               {"order-2 generator images", order2_image_choices(gamma, delta_dot)},
               {"sign functions", pow2(gamma + delta_dot + 1)}};
  r.order = 1;
  for (const auto& [name, f] : r.factors) r.order *= f;
  return r;
}

GroupOrderReport monomial_aut_order_C(std::size_t gamma_dot, std::size_t delta) {
  GroupOrderReport r;
  r.group = "MAut C(" + std::to_string(gamma_dot) + "," + std::to_string(delta) + ")";
  r.factors = {{"order-2 translations", pow2(gamma_dot + delta)},
               {"order-4 generator images", order4_image_choices(gamma_dot, delta)},
               {"order-2 generator images", order2_image_choices(gamma_dot, delta)}};
  r.order = 1;
  for (const auto& [name, f] : r.factors) r.order *= f;
  return r;
}

GroupOrderReport perm_aut_order_C(std::size_t gamma_dot, std::size_t delta) {
  GroupOrderReport r;
  r.group = "Aut C(" + std::to_string(gamma_dot) + "," + std::to_string(delta) + ")";
  if (delta >= 3) {
    r.factors = {{"affine bijections", count_affine_bijections(gamma_dot, delta)}};
  } else if (delta == 2) {
    r.factors = {{"coset label maps", BigInt(6)},
                 {"affine bijections", count_affine_bijections(gamma_dot, delta)}};
  } else {
    // the code is linear and its automorphisms form the general affine group
    std::size_t t = gamma_dot + 2 * delta;
    r.factors = {{"general affine group", affine_group_order(t)}};
  }
  r.order = 1;
  for (const auto& [name, f] : r.factors) r.order *= f;
  return r;
}

std::vector<CoordPerm> exceptional_delta2_automorphisms(std::size_t gamma_dot) {
  // search directly while the code fits the backtracking engine, else
  // search the gamma_dot = 0 core and extend over the binary part
  std::size_t search_gd = gamma_dot <= 1 ? gamma_dot : 0;
  ConstructedCode base = build_C(search_gd, 2);
  Partition blocks = block_partition(base).first;
  detail::PermSearchResult found = detail::perm_search(base.bin, base.bin, true, true,
                                                       &blocks.class_of, &blocks.class_of);
  GeneratorMatrices gm = build_GKS(base);
  BinaryCode ker = kernel_of(base.bin);

  // label the kernel cosets by the S row index and read off, for each
  // automorphism, the induced permutation of the nonzero labels
  auto coset_label = [&](const BinaryWord& w) {
    for (std::size_t l = 0; l < gm.S.size(); ++l) {
      BinaryWord d(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) d[i] = w[i] ^ gm.S[l][i];
      if (ker.contains(d)) return l;
    }
    throw std::logic_error("exceptional_delta2_automorphisms: word outside every coset");
  };

  std::map<std::array<std::size_t, 3>, CoordPerm> reps;
  for (const CoordPerm& psi : found.perms) {
    std::array<std::size_t, 3> tau{};
    for (std::size_t l = 1; l < 4; ++l) tau[l - 1] = coset_label(apply_perm(gm.S[l], psi));
    reps.emplace(tau, psi);  // keeps the first, lexicographically least, witness
  }

  const std::array<std::size_t, 3> id_tau{1, 2, 3};
  std::vector<CoordPerm> out;
  out.push_back(reps.at(id_tau));
  for (const auto& [tau, psi] : reps)
    if (tau != id_tau) out.push_back(psi);

  if (gamma_dot == search_gd) return out;
  // one copy of the base point group per binary part value; the binary
  // digits are the most significant part of the point index
  std::size_t base_n = base.bin.n;
  std::size_t copies = std::size_t{1} << gamma_dot;
  for (CoordPerm& psi : out) {
    CoordPerm lifted;
    lifted.img.resize(copies * base_n);
    for (std::size_t blk = 0; blk < copies; ++blk)
      for (std::size_t yi = 0; yi < base_n; ++yi)
        lifted.img[blk * base_n + yi] = blk * base_n + psi.img[yi];
    psi = std::move(lifted);
  }
  return out;
}

AutEnumeration brute_force_automorphisms(const BinaryCode& c, std::size_t n_max, bool store) {
  if (c.n > n_max) throw CapExceeded("brute_force_automorphisms: length above n_max");
  detail::PermSearchResult res = detail::perm_search(c, c, true, store);
  return AutEnumeration{BigInt(res.count), std::move(res.perms)};
}

BigInt brute_force_monomial_count(const AdditiveCode& a, std::uint64_t cap) {
  std::size_t alpha = a.type.alpha, beta = a.type.beta;
  if (a.words.empty()) throw std::invalid_argument("brute_force_monomial_count: empty code");
  BigInt cand = 1;
  for (std::size_t i = 2; i <= alpha; ++i) cand *= i;
  for (std::size_t j = 2; j <= beta; ++j) cand *= j;
  cand <<= beta;
  if (cand > cap) throw CapExceeded("brute_force_monomial_count: candidate space above cap");

  std::size_t bits = alpha + 2 * beta;
  std::vector<std::size_t> bperm(alpha), qperm(beta);

  auto pack = [&](const MixedWord& w) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < alpha; ++i) v |= std::uint64_t(w.bits[i]) << bperm[i];
    for (std::size_t j = 0; j < beta; ++j)
      v |= std::uint64_t(w.quats[j]) << (alpha + 2 * qperm[j]);
    return v;
  };

  std::vector<char> lut;
  std::vector<std::uint64_t> sorted;
  if (bits <= 22) {
    lut.assign(std::size_t{1} << bits, 0);
  }
  {
    std::iota(bperm.begin(), bperm.end(), std::size_t{0});
    std::iota(qperm.begin(), qperm.end(), std::size_t{0});
    for (const MixedWord& w : a.words) {
      std::uint64_t v = pack(w);
      if (!lut.empty())
        lut[v] = 1;
      else
        sorted.push_back(v);
    }
    std::sort(sorted.begin(), sorted.end());
  }
  auto member = [&](std::uint64_t v) {
    if (!lut.empty()) return lut[v] != 0;
    return std::binary_search(sorted.begin(), sorted.end(), v);
  };

  // negating a quaternary symbol flips the high bit of its field when the
  // low bit is set (1 <-> 3, 0 and 2 fixed)
  auto apply_neg = [&](std::uint64_t v, std::uint64_t mask) {
    while (mask) {
      unsigned j = static_cast<unsigned>(std::countr_zero(mask));
      mask &= mask - 1;
      std::size_t pos = alpha + 2 * j;
      v ^= ((v >> pos) & 1) << (pos + 1);
    }
    return v;
  };

  // a probe word with an odd symbol rejects most candidates before the
  // remaining words are even permuted
  MixedWord probe = a.words.size() > 1 ? a.words[1] : a.words[0];
  for (const MixedWord& w : a.words) {
    bool odd = false;
    for (Quat q : w.quats) odd = odd || (q & 1);
    if (odd) {
      probe = w;
      break;
    }
  }

  std::uint64_t negs = std::uint64_t{1} << beta;
  std::uint64_t count = 0;
  std::iota(bperm.begin(), bperm.end(), std::size_t{0});
  do {
    std::iota(qperm.begin(), qperm.end(), std::size_t{0});
    do {
      std::uint64_t probe_p = pack(probe);
      std::vector<std::uint64_t> permuted;
      for (std::uint64_t neg = 0; neg < negs; ++neg) {
        if (!member(apply_neg(probe_p, neg))) continue;
        if (permuted.empty()) {
          permuted.reserve(a.words.size());
          for (const MixedWord& w : a.words) permuted.push_back(pack(w));
        }
        bool ok = true;
        for (std::uint64_t v : permuted)
          if (!member(apply_neg(v, neg))) {
            ok = false;
            break;
          }
        if (ok) ++count;
      }
    } while (std::next_permutation(qperm.begin(), qperm.end()));
  } while (std::next_permutation(bperm.begin(), bperm.end()));
  return BigInt(count);
}

}  // namespace z2z4had
