#include "z2z4had/construct.hpp"

#include <algorithm>
#include <stdexcept>

namespace z2z4had {

Quat functional_eval(const AffineFunctional& f, const GroupPoint& p) {
  unsigned acc = f.c;
  for (std::size_t i = 0; i < f.dom.a; ++i) acc += 2u * f.m[i] * p.x[i];
  for (std::size_t j = 0; j < f.dom.b; ++j) acc += unsigned{f.k[j]} * p.y[j];
  return static_cast<Quat>(acc & 3);
}

std::vector<AffineFunctional> enumerate_functionals_B(std::size_t gamma, std::size_t delta_dot) {
  Domain dom{gamma, delta_dot};
  std::vector<AffineFunctional> out;
  out.reserve(std::size_t{4} << (gamma + 2 * delta_dot));
  std::size_t mmax = std::size_t{1} << gamma;
  std::size_t kmax = std::size_t{1} << (2 * delta_dot);
  for (std::size_t mv = 0; mv < mmax; ++mv)
    for (std::size_t kv = 0; kv < kmax; ++kv)
      for (Quat c = 0; c < 4; ++c) {
        AffineFunctional f;
        f.dom = dom;
        f.m.resize(gamma);
        for (std::size_t i = 0; i < gamma; ++i) f.m[i] = static_cast<Bit>((mv >> (gamma - 1 - i)) & 1);
        f.k.resize(delta_dot);
        for (std::size_t j = 0; j < delta_dot; ++j)
          f.k[j] = static_cast<Quat>((kv >> (2 * (delta_dot - 1 - j))) & 3);
        f.c = c;
        out.push_back(std::move(f));
      }
  return out;
}

std::vector<AffineFunctional> enumerate_functionals_C(std::size_t gamma_dot, std::size_t delta) {
  std::vector<AffineFunctional> out;
  for (const AffineFunctional& f : enumerate_functionals_B(gamma_dot, delta))
    if (f.c == 0 || f.c == 2) out.push_back(f);
  return out;
}

bool BinaryCode::contains(const BinaryWord& w) const {
  return std::binary_search(words.begin(), words.end(), w);
}

BinaryCode make_binary_code(std::size_t n, std::vector<BinaryWord> words) {
  for (const BinaryWord& w : words)
    if (w.size() != n) throw std::invalid_argument("make_binary_code: word length mismatch");
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return BinaryCode{n, std::move(words)};
}

bool AdditiveCode::contains(const MixedWord& w) const {
  return std::binary_search(words.begin(), words.end(), w);
}

AdditiveCode make_additive_code(CodeType type, std::vector<MixedWord> words) {
  for (const MixedWord& w : words)
    if (w.alpha != type.alpha || w.beta != type.beta)
      throw std::invalid_argument("make_additive_code: word shape mismatch");
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return AdditiveCode{type, std::move(words)};
}

std::size_t PointLayout::flat_length() const {
  return family == Family::B ? 2 * points.size() : points.size();
}

CodeType PointLayout::code_type() const {
  if (family == Family::B)
    return CodeType{0, points.size(), dom.a, dom.b + 1};
  return CodeType{bin_coords.size(), pair_rep.size(), dom.a + 1, dom.b};
}

MixedWord PointLayout::to_mixed(const BinaryWord& flat) const {
  if (flat.size() != flat_length()) throw std::invalid_argument("to_mixed: length mismatch");
  if (family == Family::B) {
    MixedWord w;
    w.alpha = 0;
    w.beta = points.size();
    w.quats = gray_inv(flat);
    return w;
  }
  MixedWord w = mixed_zero(bin_coords.size(), pair_rep.size());
  for (std::size_t i = 0; i < bin_coords.size(); ++i) w.bits[i] = flat[bin_coords[i]];
  for (std::size_t j = 0; j < pair_rep.size(); ++j) {
    std::size_t rep = pair_rep[j];
    w.quats[j] = gray_pair_inv(flat[opposite[rep]], flat[rep]);
  }
  return w;
}

BinaryWord PointLayout::to_flat(const MixedWord& w) const {
  if (family == Family::B) return gray(w.quats);
  BinaryWord flat(points.size(), 0);
  for (std::size_t i = 0; i < bin_coords.size(); ++i) flat[bin_coords[i]] = w.bits[i];
  for (std::size_t j = 0; j < pair_rep.size(); ++j) {
    std::size_t rep = pair_rep[j];
    Quat q = w.quats[j];
    flat[opposite[rep]] = phi_plus(qneg(q));
    flat[rep] = phi_plus(q);
  }
  return flat;
}

CoordPerm PointLayout::standard_perm() const {
  if (family == Family::B) return identity_perm(flat_length());
  CoordPerm p;
  p.img.resize(points.size());
  std::size_t alpha = bin_coords.size();
  for (std::size_t c = 0; c < points.size(); ++c) {
    if (is_bin[c]) {
      p.img[c] = slot[c];
    } else {
      // the Gray pair of a quaternary symbol is (value at -p, value at p),
      // so the representative lands second within its pair
      bool rep = (pair_rep[slot[c]] == c);
      p.img[c] = alpha + 2 * slot[c] + (rep ? 1 : 0);
    }
  }
  return p;
}

BinaryWord PointLayout::to_standard(const BinaryWord& flat) const {
  if (family == Family::B) return flat;
  return apply_perm(flat, standard_perm());
}

BinaryWord PointLayout::from_standard(const BinaryWord& std_word) const {
  if (family == Family::B) return std_word;
  return apply_perm(std_word, inverse_perm(standard_perm()));
}

BinaryWord PointLayout::star_flat(const BinaryWord& x, const BinaryWord& y) const {
  CodeType t = code_type();
  if (family == Family::B) return star(x, y, t);
  return from_standard(star(to_standard(x), to_standard(y), t));
}

PointLayout make_layout_B(std::size_t gamma, std::size_t delta_dot) {
  PointLayout L;
  L.family = Family::B;
  L.dom = Domain{gamma, delta_dot};
  L.points = enumerate_points(gamma, delta_dot);
  return L;
}

PointLayout make_layout_C(std::size_t gamma_dot, std::size_t delta) {
  PointLayout L;
  L.family = Family::C;
  L.dom = Domain{gamma_dot, delta};
  L.points = enumerate_points(gamma_dot, delta);
  std::size_t n = L.points.size();
  L.opposite.resize(n);
  L.slot.assign(n, 0);
  L.is_bin.assign(n, false);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t o = point_index(negate_point(L.points[c]));
    L.opposite[c] = o;
    if (o == c) {
      L.is_bin[c] = true;
      L.slot[c] = L.bin_coords.size();
      L.bin_coords.push_back(c);
    } else if (c < o) {
      L.pair_rep.push_back(c);
    }
  }
  for (std::size_t j = 0; j < L.pair_rep.size(); ++j) {
    L.slot[L.pair_rep[j]] = j;
    L.slot[L.opposite[L.pair_rep[j]]] = j;
  }
  return L;
}

BinaryWord functional_word(const AffineFunctional& f, const PointLayout& layout) {
  if (layout.family == Family::B) {
    QuatWord values;
    values.reserve(layout.points.size());
    for (const GroupPoint& p : layout.points) values.push_back(functional_eval(f, p));
    return gray(values);
  }
  BinaryWord w;
  w.reserve(layout.points.size());
  for (const GroupPoint& p : layout.points) w.push_back(phi_plus(functional_eval(f, p)));
  return w;
}

namespace {

MixedWord functional_mixed(const AffineFunctional& f, const PointLayout& L) {
  if (L.family == Family::B) {
    MixedWord w;
    w.alpha = 0;
    w.beta = L.points.size();
    w.quats.reserve(w.beta);
    for (const GroupPoint& p : L.points) w.quats.push_back(functional_eval(f, p));
    return w;
  }
  MixedWord w = mixed_zero(L.bin_coords.size(), L.pair_rep.size());
  for (std::size_t i = 0; i < w.alpha; ++i)
    w.bits[i] = phi_plus(functional_eval(f, L.points[L.bin_coords[i]]));
  for (std::size_t j = 0; j < w.beta; ++j)
    w.quats[j] = functional_eval(f, L.points[L.pair_rep[j]]);
  return w;
}

ConstructedCode build_family(Family fam, std::size_t pa, std::size_t pb) {
  ConstructedCode code;
  code.family = fam;
  code.par_a = pa;
  code.par_b = pb;
  code.layout = fam == Family::B ? make_layout_B(pa, pb) : make_layout_C(pa, pb);
  code.type = code.layout.code_type();
  code.functionals = fam == Family::B ? enumerate_functionals_B(pa, pb)
                                      : enumerate_functionals_C(pa, pb);
  std::vector<BinaryWord> flats;
  std::vector<MixedWord> mixes;
  flats.reserve(code.functionals.size());
  mixes.reserve(code.functionals.size());
  for (const AffineFunctional& f : code.functionals) {
    flats.push_back(functional_word(f, code.layout));
    mixes.push_back(functional_mixed(f, code.layout));
  }
  code.bin = make_binary_code(code.layout.flat_length(), std::move(flats));
  code.additive = make_additive_code(code.type, std::move(mixes));
  if (code.bin.words.size() != code.functionals.size())
    throw std::logic_error("build: functionals produced coinciding codewords");
  return code;
}

AffineFunctional constant_functional(const Domain& d, Quat c) {
  AffineFunctional f;
  f.dom = d;
  f.m.assign(d.a, 0);
  f.k.assign(d.b, 0);
  f.c = c;
  return f;
}

}  // namespace

ConstructedCode build_B(std::size_t gamma, std::size_t delta_dot) {
  return build_family(Family::B, gamma, delta_dot);
}

ConstructedCode build_C(std::size_t gamma_dot, std::size_t delta) {
  return build_family(Family::C, gamma_dot, delta);
}

GeneratorMatrices build_GKS(const ConstructedCode& code) {
  const PointLayout& L = code.layout;
  const Domain& d = L.dom;
  GeneratorMatrices M;
  M.y = functional_word(constant_functional(d, 2), L);
  for (std::size_t i = 0; i < d.a; ++i) {
    AffineFunctional f = constant_functional(d, 0);
    f.m[i] = 1;
    M.u.push_back(functional_word(f, L));
  }
  if (code.family == Family::B)
    M.v.push_back(functional_word(constant_functional(d, 1), L));
  for (std::size_t j = 0; j < d.b; ++j) {
    AffineFunctional f = constant_functional(d, 0);
    f.k[j] = 1;
    M.v.push_back(functional_word(f, L));
  }
  for (const BinaryWord& vj : M.v) M.w.push_back(L.star_flat(vj, vj));

  M.G.push_back(M.y);
  for (const BinaryWord& r : M.u) M.G.push_back(r);
  for (const BinaryWord& r : M.v) M.G.push_back(r);

  M.K.push_back(M.y);
  for (std::size_t j = 0; j < M.v.size(); ++j) {
    // for family B the first order-4 generator is the constant 1, whose
    // star square is y itself; skip the duplicate row
    if (code.family == Family::B && j == 0) continue;
    M.K.push_back(M.w[j]);
  }
  for (const BinaryWord& r : M.u) M.K.push_back(r);

  std::size_t r = M.v.size();
  for (std::size_t sv = 0; sv < (std::size_t{1} << r); ++sv) {
    BinaryWord acc(L.flat_length(), 0);
    for (std::size_t j = 0; j < r; ++j)
      if ((sv >> j) & 1) acc = L.star_flat(acc, M.v[j]);
    M.S.push_back(std::move(acc));
  }
  return M;
}

std::vector<BinaryWord> build_G(const ConstructedCode& code) { return build_GKS(code).G; }
std::vector<BinaryWord> build_K(const ConstructedCode& code) { return build_GKS(code).K; }
std::vector<BinaryWord> build_S(const ConstructedCode& code) { return build_GKS(code).S; }

BinaryWord coset_rep_xor_form(const std::vector<Bit>& s, const ConstructedCode& code) {
  GeneratorMatrices M = build_GKS(code);
  if (s.size() != M.v.size()) throw std::invalid_argument("coset_rep_xor_form: bad tuple size");
  std::size_t n = code.layout.flat_length();
  BinaryWord acc(n, 0);
  for (std::size_t j = 0; j < s.size(); ++j)
    if (s[j])
      for (std::size_t i = 0; i < n; ++i) acc[i] ^= M.v[j][i];
  for (std::size_t j = 0; j < s.size(); ++j)
    for (std::size_t j2 = j + 1; j2 < s.size(); ++j2)
      if (s[j] && s[j2])
        for (std::size_t i = 0; i < n; ++i) acc[i] ^= (M.w[j][i] & M.w[j2][i]);
  return acc;
}

std::string family_name(Family f) { return f == Family::B ? "B" : "C"; }

}  // namespace z2z4had
