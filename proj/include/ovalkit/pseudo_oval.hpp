#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ovalkit/func_table.hpp"
#include "ovalkit/gf2space.hpp"

namespace ovk {

// n x n matrix over GF(2), n <= 6, rows as bit patterns.
struct BitMat {
    int n = 0;
    std::array<std::uint8_t, 6> rows{};

    static BitMat zero(int n) { return BitMat{n, {}}; }
    static BitMat identity(int n);
    // Multiplication-by-s matrix of GF(2^n) on the polynomial basis.
    static BitMat mult_by(const Gf& field, unsigned s);

    unsigned apply(unsigned v) const;  // column action on a bit vector
    BitMat operator+(const BitMat& o) const;
    BitMat operator*(const BitMat& o) const;  // (this*o).apply(v) = this.apply(o.apply(v))
    bool invertible() const;
    bool operator==(const BitMat& o) const { return n == o.n && rows == o.rows; }
    bool operator<(const BitMat& o) const { return rows < o.rows; }
};

// q^n + 1 pairwise-disjoint rank-n subspaces of GF(2)^(3n), any three spanning
// the whole space. Tangents T(X) = span(X, N) and the nucleus N come along
// when q is even (always, here).
struct PseudoOval {
    int n = 0;
    std::vector<Subspace> elements;
    std::vector<Subspace> tangents;  // aligned with elements
    Subspace nucleus;
    std::string source;  // provenance tag for files/reports
};

struct VerifyOptions {
    // Exhaustive triple checks up to this many elements; beyond that a fixed
    // seeded sample of triples is used (full coverage on meets and tangents
    // either way).
    std::size_t exhaustive_limit = 17;
    std::uint64_t seed = 0x5eed;
    std::size_t sample_triples = 20000;
    bool force_exhaustive = false;
};

struct VerifyResult {
    bool ok = true;
    std::string witness;  // first failing pair/triple, human-readable
};

// The pseudo-oval axioms: element count 2^n + 1, pairwise trivial meet,
// triples spanning; tangent property (meets no other element) and common
// nucleus when tangents/nucleus are present.
VerifyResult verify_pseudo_oval(const PseudoOval& o, const VerifyOptions& opts = {});

// Field reduction of D(f) for an o-permutation f over GF(2^n): elements are
// the reduced oval points, nucleus the reduced (0,0,1), tangents span(X, N).
// Construction failures (verification included) throw std::runtime_error.
PseudoOval elementary(const Gf& field, const FuncTable& f, const VerifyOptions& opts = {});

// (O \ {X}) u {N}: a pseudo-oval with nucleus X. Verified before returning.
PseudoOval nucleus_swap(const PseudoOval& o, std::size_t element_index,
                        const VerifyOptions& opts = {});

// The projection of O from X onto a complement S of X: the 2^n spaces
// span(X, Y) meet S, together with T(X) meet S. Elements are returned in the
// compressed 2n-bit coordinates of S (S is spanned by the standard coordinates
// off X's pivots); index of the tangent image is reported.
struct ProjectionSpread {
    int n = 0;
    std::vector<Subspace> elements;   // rank n in ambient 2n
    std::size_t tangent_image = 0;    // index of T(X) meet S
    std::vector<int> source_index;    // aligned: index into O.elements, -1 for the tangent image
    std::vector<int> coords;          // the 2n original bit positions spanning S
};
ProjectionSpread projection_spread(const PseudoOval& o, std::size_t element_index);

// Spread axioms on rank-n subspaces of GF(2)^(2n): pairwise trivial meets and
// exact cover of the nonzero vectors.
VerifyResult verify_spread(const std::vector<Subspace>& spread, int n);

struct SpreadSet {
    int n = 0;
    std::vector<BitMat> mats;  // 2^n matrices; g(0) = 0 and identity present after normalization
};

// Coordinatize a spread as matrices: axes[0] (the "infinite" element) becomes
// the high block, axes[1] the zero matrix; every other element is the graph
// {(u, g u)}. If no element maps to the identity, the first nonzero matrix is
// normalized to I. Throws if the axes are not spread members.
SpreadSet spread_set(const std::vector<Subspace>& spread, std::size_t inf_index,
                     std::size_t zero_index);

// Field-closure test: contains 0 and I, closed under addition and
// multiplication, commutative, nonzero members invertible. At these sizes
// this characterizes the Desarguesian (regular) spread.
bool is_desarguesian(const SpreadSet& s);

// Steinke coordinatization of a pseudo-oval with known nucleus: a frame
// change sending X_inf to the first coordinate block, N to the second and
// X_zero to the third, after which every remaining element is the column
// space of (h(z) g(z) I)^t. Labels z are the first h-column of each element,
// z = 0 for X_zero; D(inf) = (I O O)^t.
struct SteinkeCoords {
    int n = 0;
    std::size_t inf_index = 0;
    std::size_t zero_index = 0;
    // per label z (index 0..2^n-1): the h and g blocks
    std::vector<BitMat> h, g;
    std::vector<int> source_index;  // element index per label
    // coordinate i of the reframed vector is parity(v & new_coord_masks[i])
    std::vector<Row> new_coord_masks;
};
SteinkeCoords steinke_coordinates(const PseudoOval& o, std::size_t inf_index,
                                  std::size_t zero_index);

// Convenience: the multiplication-matrix spread set {M_s : s in GF(2^n)}.
SpreadSet field_spread_set(const Gf& field);

}  // namespace ovk
