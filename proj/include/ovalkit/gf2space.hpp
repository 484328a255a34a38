#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "ovalkit/gf.hpp"

namespace ovk {

// A vector of GF(2)^m packed into bits (coordinate i = bit i), m <= 20.
using Row = std::uint32_t;

// Subspace of GF(2)^m in canonical reduced echelon form: pivots are the lowest
// set bits, taken in increasing index order, each pivot column cleared in all
// other rows, rows sorted by pivot. Two subspaces are equal iff their rows are
// bitwise equal, which makes the basis a hashable canonical key.
class Subspace {
public:
    Subspace() : ambient_(0) {}
    explicit Subspace(int ambient) : ambient_(ambient) {}
    Subspace(int ambient, std::vector<Row> generators);

    int ambient() const { return ambient_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    int proj_dim() const { return rank() - 1; }
    const std::vector<Row>& rows() const { return rows_; }

    bool contains(Row v) const;
    bool contains(const Subspace& other) const;

    // All 2^rank vectors (rank is small everywhere in this project).
    std::vector<Row> vectors() const;

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && rows_ == o.rows_;
    }
    bool operator<(const Subspace& o) const {
        if (ambient_ != o.ambient_) return ambient_ < o.ambient_;
        return rows_ < o.rows_;
    }

private:
    int ambient_;
    std::vector<Row> rows_;
};

struct SubspaceHash {
    std::size_t operator()(const Subspace& s) const {
        std::size_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::size_t>(s.ambient());
        for (Row r : s.rows()) h = (h ^ r) * 0x100000001b3ull;
        return h;
    }
};

// Smallest subspace containing both arguments (resp. all). Ambients must match.
Subspace span_of(const Subspace& a, const Subspace& b);
Subspace span_of(const std::vector<Subspace>& spaces);

// Intersection, via the Zassenhaus double-block reduction.
Subspace meet(const Subspace& a, const Subspace& b);

// Field reduction GF(2^n)^3 -> GF(2)^(3n): the projective point spanned by
// `point` becomes the rank-n GF(2)-subspace {lambda * point}. Coordinate i of
// GF(2^n) lands in bits [i*n, (i+1)*n) using the polynomial basis 1, x, ...,
// x^(n-1) of the field's modulus. Throws on the zero vector.
Subspace field_reduce(const Gf& field, const std::array<unsigned, 3>& point);

}  // namespace ovk
