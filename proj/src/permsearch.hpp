#pragma once
// Backtracking search for coordinate permutations carrying one binary code
// onto another (or onto itself).  Internal to the library.
//
// The search assigns images to source coordinates in index order, always
// trying target coordinates in ascending order, so the enumeration is in
// lexicographic order of the image vector and the first hit is the least
// witness.  Pruning is twofold:
//  - a canonical coordinate profile (column weight refined repeatedly by
//    the multiset of (profile, disagreement count) over the other
//    coordinates) computed identically for both codes restricts which
//    targets a source coordinate may take;
//  - during the search the codeword sets are kept partitioned into groups
//    that must stay matched; a candidate assignment must split every group
//    evenly, and accepted assignments refine the grouping.
// Callers may supply an extra coordinate classing that candidates must
// respect (used for block-restricted searches).

#include "z2z4had/construct.hpp"

#include <cstdint>

namespace z2z4had::detail {

struct PermSearchResult {
  std::uint64_t count = 0;
  std::vector<CoordPerm> perms;  // filled when store was requested
};

// Preconditions enforced here: equal lengths n <= 64, equal word counts
// <= 64.  find_all = false stops at the first witness.
PermSearchResult perm_search(const BinaryCode& src, const BinaryCode& tgt,
                             bool find_all, bool store,
                             const std::vector<std::size_t>* src_classes = nullptr,
                             const std::vector<std::size_t>* tgt_classes = nullptr);

}  // namespace z2z4had::detail
