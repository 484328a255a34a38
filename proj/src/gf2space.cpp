#include "ovalkit/gf2space.hpp"

#include <algorithm>
#include <stdexcept>

namespace ovk {

namespace {

inline int lowest_bit(std::uint64_t v) { return __builtin_ctzll(v); }

// In-place reduced echelon form, pivots = lowest set bits in increasing order.
template <typename Word>
void echelonize(std::vector<Word>& rows) {
    std::vector<Word> basis;
    for (Word r : rows) {
        for (Word b : basis) {
            Word piv = b & (~b + 1);
            if (r & piv) r ^= b;
        }
        if (r) basis.push_back(r);
    }
    // clear pivot columns upward and sort by pivot
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Word piv = basis[i] & (~basis[i] + 1);
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (j != i && (basis[j] & piv)) basis[j] ^= basis[i];
    }
    std::sort(basis.begin(), basis.end(), [](Word a, Word b) {
        return (a & (~a + 1)) < (b & (~b + 1));
    });
    rows = std::move(basis);
}

}  // namespace

Subspace::Subspace(int ambient, std::vector<Row> generators) : ambient_(ambient) {
    for (Row r : generators)
        if (ambient < 32 && (r >> ambient))
            throw std::invalid_argument("row has bits beyond the ambient dimension");
    rows_ = std::move(generators);
    echelonize(rows_);
}

bool Subspace::contains(Row v) const {
    for (Row b : rows_) {
        Row piv = b & (~b + 1);
        if (v & piv) v ^= b;
    }
    return v == 0;
}

bool Subspace::contains(const Subspace& other) const {
    for (Row r : other.rows_)
        if (!contains(r)) return false;
    return true;
}

std::vector<Row> Subspace::vectors() const {
    std::vector<Row> out(1u << rows_.size());
    for (std::size_t mask = 0; mask < out.size(); ++mask) {
        Row v = 0;
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (mask >> i & 1) v ^= rows_[i];
        out[mask] = v;
    }
    return out;
}

Subspace span_of(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient())
        throw std::invalid_argument("span of subspaces with mismatched ambient dimensions");
    std::vector<Row> rows = a.rows();
    rows.insert(rows.end(), b.rows().begin(), b.rows().end());
    return Subspace(a.ambient(), std::move(rows));
}

Subspace span_of(const std::vector<Subspace>& spaces) {
    if (spaces.empty()) throw std::invalid_argument("span of an empty list");
    std::vector<Row> rows;
    for (const auto& s : spaces) {
        if (s.ambient() != spaces.front().ambient())
            throw std::invalid_argument("span of subspaces with mismatched ambient dimensions");
        rows.insert(rows.end(), s.rows().begin(), s.rows().end());
    }
    return Subspace(spaces.front().ambient(), std::move(rows));
}

Subspace meet(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient())
        throw std::invalid_argument("meet of subspaces with mismatched ambient dimensions");
    const int m = a.ambient();
    // Zassenhaus: reduce rows (r | r<<m) for a and (r | 0) for b on the low
    // block; rows whose low block vanished carry the intersection in the
    // high block.
    std::vector<std::uint64_t> rows;
    rows.reserve(a.rank() + b.rank());
    for (Row r : a.rows())
        rows.push_back(static_cast<std::uint64_t>(r) | (static_cast<std::uint64_t>(r) << m));
    for (Row r : b.rows()) rows.push_back(static_cast<std::uint64_t>(r));

    std::vector<std::uint64_t> basis;
    const std::uint64_t low_mask = (1ull << m) - 1;
    for (std::uint64_t r : rows) {
        for (std::uint64_t b2 : basis) {
            std::uint64_t piv = b2 & (~b2 + 1);
            if (r & piv) r ^= b2;
        }
        if (r) basis.push_back(r);
    }
    std::vector<Row> inter;
    for (std::uint64_t r : basis)
        if ((r & low_mask) == 0) inter.push_back(static_cast<Row>(r >> m));
    return Subspace(m, std::move(inter));
}

Subspace field_reduce(const Gf& field, const std::array<unsigned, 3>& point) {
    if (point[0] == 0 && point[1] == 0 && point[2] == 0)
        throw std::invalid_argument("field_reduce of the zero vector");
    const int n = field.degree();
    std::vector<Row> rows;
    rows.reserve(n);
    for (int j = 0; j < n; ++j) {
        const unsigned alpha_j = (j == 0) ? 1u : field.pow(2, j);  // x^j
        Row r = 0;
        for (int i = 0; i < 3; ++i)
            r |= static_cast<Row>(field.mul(point[i], alpha_j)) << (i * n);
        rows.push_back(r);
    }
    return Subspace(3 * n, std::move(rows));
}

}  // namespace ovk
