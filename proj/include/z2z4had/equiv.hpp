#pragma once
// Equivalence tooling: the explicit coordinate permutation carrying an
// all-quaternary (family B) code onto the mixed (family C) code with the
// same parameters, permutation-equivalence search, and the classification
// of all constructed codes of a given length by signature.

#include "invariants.hpp"

#include <optional>

namespace z2z4had {

// Permutation of the 2^(gamma + 2 delta_dot + 1) coordinates carrying
// build_B(gamma, delta_dot) onto build_C(gamma + 1, delta_dot): the Gray
// pair of point p goes to the points (-p, e = 1) and (p, e = 0) of the
// target, where the extra binary digit e is appended as the last binary
// coordinate of the target's point group.
CoordPerm b_to_c_permutation(std::size_t gamma, std::size_t delta_dot);

BinaryCode apply_coord_perm(const BinaryCode& c, const CoordPerm& p);

struct ClassificationRow {
  std::size_t t = 0, gamma_dot = 0, delta = 0;
  CodeType type;
  Signature sig;
  std::size_t class_id = 0;  // dense, in order of first appearance of the signature
};
// One row per (gamma_dot = t - 2 delta, delta), delta ascending from 0 to
// floor(t/2).  Codes with equal signatures share a class id; for these
// codes the signature separates the permutation-equivalence classes, of
// which there are floor(t/2) once t >= 3.
std::vector<ClassificationRow> classify(std::size_t t, std::size_t t_cap = 8);
std::size_t count_classes(const std::vector<ClassificationRow>& rows);

// Backtracking search for a coordinate permutation with p(c1) = c2.
// Deterministic: returns the lexicographically least image vector if any
// exists.  Lengths above n_max are refused.
std::optional<CoordPerm> search_equivalence(const BinaryCode& c1, const BinaryCode& c2,
                                            std::size_t n_max = 16);

}  // namespace z2z4had
