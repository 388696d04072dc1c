#pragma once
// Construction of the two Hadamard code families and of their generator,
// kernel and coset-representative matrices.
//
// Family B (all-quaternary): every affine f: Z2^gamma x Z4^delta_dot -> Z4
// contributes the Gray expansion of (f(p_0), f(p_1), ...) over the points
// in index order.  Length n = 2^(gamma + 2 delta_dot + 1), type
// (0, n/2; gamma, delta_dot + 1).
//
// Family C (mixed): the affine f: Z2^gamma_dot x Z4^delta -> Z4 with
// f(0) in {0, 2}, equivalently f(-p) = -f(p), contribute one binary symbol
// phi_plus(f(p)) per point p.  Points of order at most 2 give the binary
// part; the remaining points split into opposite pairs {p, -p} whose two
// coordinates carry the Gray pair of f at the pair's representative
// (the point with the smaller index).  Length n = 2^(gamma_dot + 2 delta),
// type (2^(gamma_dot+delta), (n - 2^(gamma_dot+delta)) / 2 ... spelled out:
// alpha = 2^(gamma_dot+delta), beta = 2^(gamma_dot+delta-1) (2^delta - 1),
// gamma = gamma_dot + 1).  delta = 0 is accepted and gives the classical
// linear code with no quaternary part.

#include "algebra.hpp"

#include <string>

namespace z2z4had {

struct AffineFunctional {
  Domain dom;
  std::vector<Bit> m;  // binary coefficients, term 2 * m_i * x_i
  QuatWord k;          // quaternary coefficients, term k_j * y_j
  Quat c = 0;
  bool operator==(const AffineFunctional&) const = default;
};
Quat functional_eval(const AffineFunctional& f, const GroupPoint& p);

// All 4 * 2^gamma * 4^delta_dot affine functionals.
std::vector<AffineFunctional> enumerate_functionals_B(std::size_t gamma, std::size_t delta_dot);
// The 2 * 2^gamma_dot * 4^delta functionals with constant term in {0, 2}.
std::vector<AffineFunctional> enumerate_functionals_C(std::size_t gamma_dot, std::size_t delta);

struct BinaryCode {
  std::size_t n = 0;
  std::vector<BinaryWord> words;  // sorted, duplicates removed
  bool contains(const BinaryWord& w) const;
  bool operator==(const BinaryCode&) const = default;
};
BinaryCode make_binary_code(std::size_t n, std::vector<BinaryWord> words);

struct AdditiveCode {
  CodeType type;
  std::vector<MixedWord> words;  // sorted, duplicates removed
  bool contains(const MixedWord& w) const;
};
AdditiveCode make_additive_code(CodeType type, std::vector<MixedWord> words);

enum class Family { B, C };

// Coordinate bookkeeping between the per-point (flat) view of a codeword
// and its mixed word.  For family B the flat view is already the Gray
// expansion and the pair of point p sits at (2 index(p), 2 index(p) + 1);
// for family C the flat coordinates are the points themselves.
struct PointLayout {
  Family family = Family::C;
  Domain dom;
  std::vector<GroupPoint> points;
  // family C bookkeeping (empty for family B):
  std::vector<std::size_t> bin_coords;  // coords of points of order <= 2, ascending
  std::vector<std::size_t> pair_rep;    // coord of each pair's representative, ascending
  std::vector<std::size_t> opposite;    // per coord: the coord of the negated point
  std::vector<std::size_t> slot;        // per coord: rank within bin_coords or pair_rep
  std::vector<bool> is_bin;             // per coord: true when the point has order <= 2

  std::size_t flat_length() const;
  CodeType code_type() const;
  MixedWord to_mixed(const BinaryWord& flat) const;
  BinaryWord to_flat(const MixedWord& w) const;
  // permutation from flat coordinates to the standard mixed layout
  // (alpha binary coordinates first, then the Gray pairs in pair order)
  CoordPerm standard_perm() const;
  BinaryWord to_standard(const BinaryWord& flat) const;
  BinaryWord from_standard(const BinaryWord& std_word) const;
  BinaryWord star_flat(const BinaryWord& x, const BinaryWord& y) const;
};
PointLayout make_layout_B(std::size_t gamma, std::size_t delta_dot);
PointLayout make_layout_C(std::size_t gamma_dot, std::size_t delta);

struct ConstructedCode {
  Family family = Family::C;
  std::size_t par_a = 0;  // gamma (family B) or gamma_dot (family C)
  std::size_t par_b = 0;  // delta_dot (family B) or delta (family C)
  CodeType type;
  PointLayout layout;
  std::vector<AffineFunctional> functionals;  // in enumeration order
  BinaryCode bin;                             // flat binary view
  AdditiveCode additive;
};
ConstructedCode build_B(std::size_t gamma, std::size_t delta_dot);
ConstructedCode build_C(std::size_t gamma_dot, std::size_t delta);
BinaryWord functional_word(const AffineFunctional& f, const PointLayout& layout);

// Rows are flat binary words of the code's layout.  For family C the
// order-2 generators are y (constant 2) and u_i (functional 2 x_i), the
// order-4 generators v_j are the functionals y_j.  For family B an extra
// order-4 generator, the constant functional 1, precedes the v_j.
// K lists y, the star squares w_j = v_j star v_j, then the u_i; its rows
// span the star-kernel (the words of star order at most 2).  S lists the
// coset representatives v(s) = s_1 v_1 star ... star s_r v_r over all
// binary tuples s, the first index varying fastest.
struct GeneratorMatrices {
  BinaryWord y;
  std::vector<BinaryWord> u;
  std::vector<BinaryWord> v;
  std::vector<BinaryWord> w;  // star squares of the v rows, same indexing
  std::vector<BinaryWord> G;
  std::vector<BinaryWord> K;
  std::vector<BinaryWord> S;
};
GeneratorMatrices build_GKS(const ConstructedCode& code);
std::vector<BinaryWord> build_G(const ConstructedCode& code);
std::vector<BinaryWord> build_K(const ConstructedCode& code);
std::vector<BinaryWord> build_S(const ConstructedCode& code);

// v(s) through plain GF(2) algebra instead of iterated star:
// sum_j s_j v_j  +  sum_{j<j'} s_j s_j' (w_j AND w_j').
BinaryWord coset_rep_xor_form(const std::vector<Bit>& s, const ConstructedCode& code);

std::string family_name(Family f);

}  // namespace z2z4had
