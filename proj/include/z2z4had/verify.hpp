#pragma once
// Self-check driver behind the `verify` CLI subcommand.  Rebuilds both code
// families at desk scale and re-derives every structural claim the library
// makes: Hadamard parameters and generator closure, kernel identities,
// coset decomposition, the cross-family permutation, the classification
// table, and the monomial and permutation automorphism group orders against
// brute force enumeration and sampling.

#include "autgrp.hpp"
#include "equiv.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>

namespace z2z4had {

// Check families, run in this order; names (or the listed aliases) are the
// tokens accepted by the only/skip filters:
//   constructions, kernel, eq2 (cosets), theorem1 (bridge), classify,
//   maut, aut
struct VerifyPlan {
  std::size_t t_max = 6;  // length 2^t cap for the per-code families
  std::size_t n_max = 16; // exhaustive permutation search cap
  std::uint64_t monomial_cap = std::uint64_t{1} << 24;
  std::size_t samples = 10000;     // affine sampling at delta = 3
  std::size_t block_samples = 100; // sampled automorphisms per code
  std::uint64_t seed = 0;
  std::vector<std::string> only;
  std::vector<std::string> skip;
};

enum class CheckStatus { Pass, Fail, Skipped };
const char* status_name(CheckStatus s);

struct CheckOutcome {
  std::string name;
  CheckStatus status = CheckStatus::Skipped;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckOutcome> checks;
  bool ok() const;  // no failures; skipped checks do not count against
};

// Runs the enabled families, printing one "name: STATUS (detail)" line per
// family to out.  Deterministic for a fixed plan (each family seeds its own
// generator from plan.seed).  Individual items whose cost exceeds a cap are
// left out of the family's tally; a family with nothing left to do is
// reported SKIPPED, never FAILED.
VerifyReport run_verify(const VerifyPlan& plan, std::ostream& out);

// True when the token names a check family (or one of its aliases); the CLI
// rejects unknown only/skip tokens up front.
bool is_verify_family_token(const std::string& token);

}  // namespace z2z4had
