#pragma once
// Automorphism machinery: affine bijections of a point group, the monomial
// transforms preserving the additive codes, closed-form group orders with
// their factorizations, and desk-scale brute force oracles certifying them.

#include "construct.hpp"
#include "invariants.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <random>
#include <string>

namespace z2z4had {

using BigInt = boost::multiprecision::cpp_int;

// Raised when a brute force candidate space exceeds its configured cap.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Number of affine bijections of Z2^a x Z4^b:
//   2^(a+2b) * prod_{j=1..b} (2^(a+2b) - 2^(a+b+j-1))
//            * prod_{i=1..a} (2^(a+b) - 2^(b+i-1)).
BigInt count_affine_bijections(std::size_t a, std::size_t b);
// |GA(t,2)| = 2^t * prod_{i=0..t-1} (2^t - 2^i).
BigInt affine_group_order(std::size_t t);

// Explicit enumeration; refuses domains above 2^12 points and more than
// 2^21 maps.  random_affine_bijection draws uniformly by picking generator
// images avoiding the subgroup generated so far.
std::vector<AffineMap> enumerate_affine_bijections(std::size_t a, std::size_t b);
AffineMap random_affine_bijection(std::size_t a, std::size_t b, std::mt19937_64& rng);

// m(-p) = -m(p) for every p; for affine maps this is 2 m(0) = 0.
bool is_negation_preserving(const AffineMap& m);

// Affine function on Z2^gamma x Z4^delta_dot with all values in {1, 3}:
// constant in {1, 3}, quaternary coefficients in {0, 2}.  Such r satisfy
// r(p) = r(-p); there are 2^(gamma + delta_dot + 1) of them.
struct SignFunction {
  AffineFunctional f;
  bool operator==(const SignFunction&) const = default;
};
std::vector<SignFunction> enumerate_sign_functions(std::size_t gamma, std::size_t delta_dot);

// Monomial transform of the family B additive code built from a sign
// function and an affine bijection of the same domain: the symbol at point
// u moves to the point r(q) q where q = sigma(u), and every target point v
// with r(v) = 3 is negated.
MonomialTransform monomial_from_sign_and_affine(const SignFunction& r, const AffineMap& sigma);

// Coordinate permutation of a family C code induced by an affine bijection
// of its point group (the coordinate of p moves to the coordinate of m(p));
// this is an automorphism of the binary code for every affine bijection.
CoordPerm coord_perm_from_affine(const AffineMap& m, const PointLayout& layout);
// Mixed-coordinate monomial realization, which exists exactly when m is
// negation preserving.
MonomialTransform monomial_from_affine(const AffineMap& m, const PointLayout& layout);
// Inverse direction: the affine bijection inducing the permutation, if any.
std::optional<AffineMap> affine_from_coord_perm(const CoordPerm& p, const Domain& d);
// The permutation of the flat binary coordinates realizing a monomial
// transform: pairs follow their symbol and are swapped where the symbol is
// negated (the Gray pair of -q is the reversed pair of q).
CoordPerm flat_perm_from_monomial(const MonomialTransform& m, const PointLayout& layout);

struct GroupOrderReport {
  std::string group;
  BigInt order;
  std::vector<std::pair<std::string, BigInt>> factors;  // order equals their product
};
// Monomial automorphism group of build_B(gamma, delta_dot):
// translations T = 2^(gamma + 2 delta_dot) times the affine linear-part
// counts Y and X times the sign functions F = 2^(gamma + delta_dot + 1).
GroupOrderReport monomial_aut_order_B(std::size_t gamma, std::size_t delta_dot);
// Monomial automorphism group of build_C(gamma_dot, delta): order-2
// translations T = 2^(gamma_dot + delta) times Y times X (the negation
// preserving affine bijections).
GroupOrderReport monomial_aut_order_C(std::size_t gamma_dot, std::size_t delta);
// Permutation automorphism group of build_C(gamma_dot, delta): all affine
// bijections for delta >= 3, six times that for delta = 2, and the full
// general affine group GA(t, 2) for delta <= 1 (the code is then linear).
GroupOrderReport perm_aut_order_C(std::size_t gamma_dot, std::size_t delta);

// The six block-stabilizing automorphisms of build_C(gamma_dot, 2), one
// per invertible linear map of the coset labels s in {0,1}^2, found by
// exhaustive block-restricted search at gamma_dot = 0 (lexicographically
// least representative per label map) and lifted coordinatewise to larger
// gamma_dot.  Entry 0 is the identity; the other five are not induced by
// any affine bijection.
std::vector<CoordPerm> exceptional_delta2_automorphisms(std::size_t gamma_dot);

struct AutEnumeration {
  BigInt order;
  std::vector<CoordPerm> perms;  // filled when store was requested
};
// Exhaustive automorphism search; refuses lengths above n_max.
AutEnumeration brute_force_automorphisms(const BinaryCode& c, std::size_t n_max = 16,
                                         bool store = false);
// Count of monomial transforms preserving the additive code; the candidate
// space alpha! * beta! * 2^beta must not exceed cap (throws CapExceeded).
BigInt brute_force_monomial_count(const AdditiveCode& a,
                                  std::uint64_t cap = std::uint64_t{1} << 24);

}  // namespace z2z4had
