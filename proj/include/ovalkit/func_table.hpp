#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "ovalkit/gf.hpp"

namespace ovk {

// A function GF(q) -> GF(q) with f(0) = 0, stored as a value table indexed by
// bit pattern. Entries at and beyond q stay zero so that comparison and
// hashing work uniformly for every field size.
struct FuncTable {
    std::array<std::uint8_t, 64> v{};
    std::uint8_t q = 0;

    unsigned operator()(unsigned x) const { return v[x]; }

    bool operator==(const FuncTable& o) const { return q == o.q && v == o.v; }
    bool operator<(const FuncTable& o) const { return q == o.q ? v < o.v : q < o.q; }
};

struct FuncTableHash {
    std::size_t operator()(const FuncTable& f) const {
        // FNV-1a over the 8 words of the table
        std::uint64_t h = 0xcbf29ce484222325ull ^ f.q;
        const auto* w = reinterpret_cast<const std::uint64_t*>(f.v.data());
        for (int i = 0; i < 8; ++i) {
            h ^= w[i];
            h *= 0x100000001b3ull;
        }
        return static_cast<std::size_t>(h);
    }
};

FuncTable make_func(const Gf& field, const std::vector<unsigned>& values);
FuncTable monomial(const Gf& field, unsigned e);
FuncTable add(const FuncTable& f, const FuncTable& g);
FuncTable scale(const Gf& field, unsigned lambda, const FuncTable& f);
bool is_zero(const FuncTable& f);

bool is_permutation(const Gf& field, const FuncTable& f);

// The difference quotient f_s: x -> (f(x+s) + f(s))/x on GF(q) \ {0};
// slot 0 of the result is unused and left at zero.
FuncTable difference_quotient(const Gf& field, const FuncTable& f, unsigned s);

// True iff f is a permutation of GF(q) and every f_s, s in GF(q), is a
// bijection of the nonzero elements. Scans s in increasing bit-pattern order
// with a q-bit seen mask and exits on the first collision.
bool is_o_permutation(const Gf& field, const FuncTable& f);

// (1/f(1)) * f. Throws std::invalid_argument if f is not an o-permutation.
FuncTable normalize_opoly(const Gf& field, const FuncTable& f);

// Coefficients (size q, index = exponent) of the unique polynomial of degree
// <= q-1 agreeing with f everywhere, by Lagrange interpolation.
std::vector<unsigned> interpolate(const Gf& field, const FuncTable& f);
unsigned eval_poly(const Gf& field, const std::vector<unsigned>& coeffs, unsigned x);
FuncTable table_of_poly(const Gf& field, const std::vector<unsigned>& coeffs);
int poly_degree(const std::vector<unsigned>& coeffs);

// Projective point of PG(2, q), coordinates as field bit patterns.
struct Pg2Point {
    unsigned x0, x1, x2;
    bool operator==(const Pg2Point& o) const {
        return x0 == o.x0 && x1 == o.x1 && x2 == o.x2;
    }
};

bool collinear(const Gf& field, const Pg2Point& a, const Pg2Point& b, const Pg2Point& c);

// D(f) = {(1, t, f(t))} u {(0,1,0)}: q+1 points, nucleus (0,0,1).
std::vector<Pg2Point> oval_points(const Gf& field, const FuncTable& f);

// Complete set of o-permutations by DFS over value tables with
// difference-quotient pruning. Refused for q > 16.
std::vector<FuncTable> brute_force_opermutations(const Gf& field);

// The DFS core with a node budget and caller-supplied value order, used both
// by the enumerator above and by randomized sampling (catalog bootstrap).
// Returns the first completed table, if any, when `first_only`.
struct OpermDfs {
    const Gf& field;
    bool first_only = false;
    std::uint64_t node_budget = ~0ull;
    // value_order[x] = candidate values to try at position x (nonzero, unique)
    std::vector<std::vector<unsigned>> value_order;

    explicit OpermDfs(const Gf& f);
    // Returns number of completed tables; calls sink for each.
    std::uint64_t run(const std::function<void(const FuncTable&)>& sink);
};

}  // namespace ovk
