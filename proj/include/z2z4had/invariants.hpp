#pragma once
// Structural invariants of binary codes: the Hadamard property, the kernel
// (both directly and through the star operation), the GF(2) rank, the block
// and macroblock coordinate partitions, and the (length, size, rank,
// kernel dimension) signature used to separate inequivalent codes.

#include "construct.hpp"

#include <utility>

namespace z2z4had {

struct Signature {
  std::size_t n = 0, size = 0, rank = 0, kernel_dim = 0;
  bool operator==(const Signature&) const = default;
};

struct Partition {
  std::size_t n = 0;
  std::vector<std::size_t> class_of;  // dense ids assigned in first-appearance order
  std::size_t num_classes = 0;
};

// |C| = 2n and every nonzero pairwise distance is at least n/2 with the
// minimum attained (for these codes the whole spectrum is {0, n/2, n},
// which distance_spectrum exposes for checking).
bool is_hadamard(const BinaryCode& c);
std::vector<std::size_t> distance_spectrum(const BinaryCode& c);

// Words x with x + C = C.  Requires the zero word to be in C.
BinaryCode kernel_of(const BinaryCode& c);
// Words of the code whose star square is zero.  The code must be given in
// the standard mixed layout matching t.
BinaryCode kernel_via_star(const BinaryCode& c, const CodeType& t);

std::size_t gf2_dim(const std::vector<BinaryWord>& rows);
std::vector<BinaryWord> gf2_span(const std::vector<BinaryWord>& rows);  // sorted
std::size_t rank_of(const BinaryCode& c);

// Spanning set for the linear span of a constructed code: y, the w rows,
// the pairwise products w_j AND w_j', the u rows, then the v rows.
std::vector<BinaryWord> span_basis_words(const ConstructedCode& code);

// Partition of coordinates by equal columns (class ids in first-appearance
// order, i.e. keyed by the leftmost coordinate of each class).
Partition partition_from_columns(const std::vector<BinaryWord>& rows, std::size_t n);
// Blocks: equal columns of K, 2^(gamma_dot + delta) classes of size
// 2^delta.  Macroblocks: equal columns of the w rows alone, 2^delta
// classes of size 2^(gamma_dot + delta).
std::pair<Partition, Partition> block_partition(const ConstructedCode& code);
// True when the permutation maps every class onto a class.
bool partition_preserved(const Partition& part, const CoordPerm& p);

Signature signature_of(const BinaryCode& c);

}  // namespace z2z4had
