#pragma once

#include <cstdint>
#include <vector>

#include "ovalkit/func_table.hpp"

namespace ovk {

// Element (A, gamma) of PGammaL(2, q): an invertible 2x2 matrix
// A = (a, b; c, d) over GF(q) together with the automorphism
// gamma: x -> x^(2^e). Scalar matrices act trivially.
struct MagicElement {
    unsigned a = 1, b = 0, c = 0, d = 1;
    int frob_exp = 0;
};

MagicElement magic_identity();

// Composition with `phi` applied first: (A, gamma)(B, delta) = (A B^gamma,
// gamma delta), where B^gamma raises the entries of B to gamma. This is the
// unique convention under which magic_apply is a homomorphism.
MagicElement magic_compose(const Gf& field, const MagicElement& psi, const MagicElement& phi);

// The action of psi = (A, gamma) on f:
//
//   psi f(x) = |A|^(-1/2) [ (bx+d) f^g((ax+c)/(bx+d)) + b x f^g(a/b) + d f^g(c/d) ]
//
// with f^g the coefficient-wise image of f under gamma (as a value table,
// f^g(y) = gamma(f(gamma^{-1}(y)))), |A|^(-1/2) the unique characteristic-2
// square root of 1/det A, and any term whose denominator vanishes dropped
// (the b = 0 and d = 0 conventions, and likewise the x with bx + d = 0).
// Throws std::invalid_argument if A is singular. The result is again in the
// f(0) = 0 space.
FuncTable magic_apply(const Gf& field, const MagicElement& psi, const FuncTable& f);

// Generators of PGammaL(2, q): both transvections (1,0;1,1) and (1,1;0,1),
// the diagonal (g,0;0,1) with g a generator of GF(q)*, and Frobenius.
std::vector<MagicElement> magic_generators(const Gf& field);

// All normalized o-polynomials equivalent to f (f any o-permutation):
// breadth-first closure of normalize(psi f) over the generators. Sorted.
std::vector<FuncTable> opoly_orbit(const Gf& field, const FuncTable& f);

// The orbit including nonzero scalar multiples: the full set of
// o-permutations in the class of f. Size (q-1) * |opoly_orbit|.
std::vector<FuncTable> opermutation_orbit(const Gf& field, const FuncTable& f);

// Canonical class representative: the lexicographically minimal normalized
// o-polynomial in the orbit of f. Equal labels iff equivalent.
FuncTable class_label(const Gf& field, const FuncTable& f);

// Same magic-action class (up to scalars)?
bool equivalent(const Gf& field, const FuncTable& f, const FuncTable& g);

}  // namespace ovk
