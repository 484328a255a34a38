#include "ovalkit/pseudo_oval.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ovk {

BitMat BitMat::identity(int n) {
    BitMat m{n, {}};
    for (int i = 0; i < n; ++i) m.rows[i] = static_cast<std::uint8_t>(1u << i);
    return m;
}

BitMat BitMat::mult_by(const Gf& field, unsigned s) {
    // column j = coordinates of s * x^j
    BitMat m{field.degree(), {}};
    for (int j = 0; j < m.n; ++j) {
        const unsigned xj = (j == 0) ? 1u : field.pow(2, j);
        const unsigned col = field.mul(s, xj);
        for (int i = 0; i < m.n; ++i)
            if (col >> i & 1) m.rows[i] |= static_cast<std::uint8_t>(1u << j);
    }
    return m;
}

unsigned BitMat::apply(unsigned v) const {
    unsigned r = 0;
    for (int i = 0; i < n; ++i) r |= static_cast<unsigned>(__builtin_parity(rows[i] & v)) << i;
    return r;
}

BitMat BitMat::operator+(const BitMat& o) const {
    BitMat m{n, {}};
    for (int i = 0; i < n; ++i) m.rows[i] = rows[i] ^ o.rows[i];
    return m;
}

BitMat BitMat::operator*(const BitMat& o) const {
    BitMat m{n, {}};
    for (int j = 0; j < n; ++j) {
        const unsigned col = apply(o.apply(1u << j));
        for (int i = 0; i < n; ++i)
            if (col >> i & 1) m.rows[i] |= static_cast<std::uint8_t>(1u << j);
    }
    return m;
}

bool BitMat::invertible() const {
    std::array<std::uint8_t, 6> r = rows;
    int rank = 0;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = rank; i < n; ++i)
            if (r[i] >> c & 1) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(r[rank], r[piv]);
        for (int i = 0; i < n; ++i)
            if (i != rank && (r[i] >> c & 1)) r[i] ^= r[rank];
        ++rank;
    }
    return rank == n;
}

namespace {

// Inverse of an m x m bit matrix given as rows; throws if singular.
std::vector<Row> invert_gf2(const std::vector<Row>& rows) {
    const int m = static_cast<int>(rows.size());
    std::vector<std::uint64_t> aug(m);
    for (int i = 0; i < m; ++i)
        aug[i] = static_cast<std::uint64_t>(rows[i]) | (1ull << (m + i));
    int rank = 0;
    for (int c = 0; c < m; ++c) {
        int piv = -1;
        for (int i = rank; i < m; ++i)
            if (aug[i] >> c & 1) {
                piv = i;
                break;
            }
        if (piv < 0) throw std::runtime_error("invert_gf2: singular matrix");
        std::swap(aug[rank], aug[piv]);
        for (int i = 0; i < m; ++i)
            if (i != rank && (aug[i] >> c & 1)) aug[i] ^= aug[rank];
        ++rank;
    }
    // rows are now sorted by pivot c = row index
    std::vector<Row> inv(m);
    for (int i = 0; i < m; ++i) inv[i] = static_cast<Row>(aug[i] >> m);
    return inv;
}

// column i of the matrix with the given rows
Row column_of(const std::vector<Row>& rows, int i) {
    Row c = 0;
    for (std::size_t j = 0; j < rows.size(); ++j)
        if (rows[j] >> i & 1) c |= Row(1) << j;
    return c;
}

// The unique combination of `rows` whose key-block equals `target`, where
// key(r) extracts the block acting as the graph parameter. Empty optional if
// the key parts do not span the target.
template <typename Key>
std::optional<Row> solve_by_key(const std::vector<Row>& rows, Key key, Row target) {
    std::vector<std::pair<Row, Row>> basis;  // (reduced key part, full row)
    for (Row r : rows) {
        Row kp = key(r), fr = r;
        for (const auto& [bk, bf] : basis) {
            const Row piv = bk & (~bk + 1);
            if (kp & piv) {
                kp ^= bk;
                fr ^= bf;
            }
        }
        if (kp) basis.emplace_back(kp, fr);
    }
    Row v = target, acc = 0;
    for (const auto& [bk, bf] : basis) {
        const Row piv = bk & (~bk + 1);
        if (v & piv) {
            v ^= bk;
            acc ^= bf;
        }
    }
    if (v) return std::nullopt;
    return acc;
}

int span_rank(std::vector<Row> rows) {
    int rank = 0;
    std::vector<Row> basis;
    for (Row r : rows) {
        for (Row b : basis) {
            Row piv = b & (~b + 1);
            if (r & piv) r ^= b;
        }
        if (r) {
            basis.push_back(r);
            ++rank;
        }
    }
    return rank;
}

std::string triple_witness(std::size_t i, std::size_t j, std::size_t k, int rank, int expect) {
    std::ostringstream s;
    s << "triple (" << i << "," << j << "," << k << ") spans rank " << rank << " != " << expect;
    return s.str();
}

}  // namespace

VerifyResult verify_pseudo_oval(const PseudoOval& o, const VerifyOptions& opts) {
    VerifyResult r;
    const int n = o.n;
    const std::size_t expect = (std::size_t(1) << n) + 1;
    const int ambient = 3 * n;
    if (o.elements.size() != expect) {
        r.ok = false;
        r.witness = "element count " + std::to_string(o.elements.size()) + " != " +
                    std::to_string(expect);
        return r;
    }
    for (std::size_t i = 0; i < o.elements.size(); ++i) {
        if (o.elements[i].ambient() != ambient || o.elements[i].rank() != n) {
            r.ok = false;
            r.witness = "element " + std::to_string(i) + " is not a rank-" + std::to_string(n) +
                        " subspace of GF(2)^" + std::to_string(ambient);
            return r;
        }
    }
    for (std::size_t i = 0; i < o.elements.size(); ++i)
        for (std::size_t j = i + 1; j < o.elements.size(); ++j)
            if (meet(o.elements[i], o.elements[j]).rank() != 0) {
                r.ok = false;
                r.witness = "elements " + std::to_string(i) + " and " + std::to_string(j) +
                            " meet nontrivially";
                return r;
            }

    auto check_triple = [&](std::size_t i, std::size_t j, std::size_t k) -> bool {
        std::vector<Row> rows;
        for (Row x : o.elements[i].rows()) rows.push_back(x);
        for (Row x : o.elements[j].rows()) rows.push_back(x);
        for (Row x : o.elements[k].rows()) rows.push_back(x);
        const int rank = span_rank(std::move(rows));
        if (rank != ambient) {
            r.ok = false;
            r.witness = triple_witness(i, j, k, rank, ambient);
            return false;
        }
        return true;
    };

    const std::size_t m = o.elements.size();
    if (opts.force_exhaustive || m <= opts.exhaustive_limit) {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                for (std::size_t k = j + 1; k < m; ++k)
                    if (!check_triple(i, j, k)) return r;
    } else {
        std::mt19937_64 rng(opts.seed);
        std::uniform_int_distribution<std::size_t> pick(0, m - 1);
        for (std::size_t t = 0; t < opts.sample_triples; ++t) {
            std::size_t i = pick(rng), j = pick(rng), k = pick(rng);
            if (i == j || j == k || i == k) continue;
            if (!check_triple(i, j, k)) return r;
        }
    }

    if (o.nucleus.rank() > 0) {
        if (o.nucleus.rank() != n || o.nucleus.ambient() != ambient) {
            r.ok = false;
            r.witness = "nucleus has wrong shape";
            return r;
        }
        for (std::size_t i = 0; i < m; ++i)
            if (meet(o.nucleus, o.elements[i]).rank() != 0) {
                r.ok = false;
                r.witness = "nucleus meets element " + std::to_string(i);
                return r;
            }
    }
    if (!o.tangents.empty()) {
        if (o.tangents.size() != m) {
            r.ok = false;
            r.witness = "tangent count mismatch";
            return r;
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (o.tangents[i].rank() != 2 * n || !o.tangents[i].contains(o.elements[i])) {
                r.ok = false;
                r.witness = "tangent " + std::to_string(i) + " does not lie on its element";
                return r;
            }
            if (o.nucleus.rank() > 0 && !o.tangents[i].contains(o.nucleus)) {
                r.ok = false;
                r.witness = "tangent " + std::to_string(i) + " misses the nucleus";
                return r;
            }
            for (std::size_t j = 0; j < m; ++j) {
                if (j == i) continue;
                if (meet(o.tangents[i], o.elements[j]).rank() != 0) {
                    r.ok = false;
                    r.witness = "tangent " + std::to_string(i) + " meets element " +
                                std::to_string(j);
                    return r;
                }
            }
        }
    }
    return r;
}

PseudoOval elementary(const Gf& field, const FuncTable& f, const VerifyOptions& opts) {
    if (!is_o_permutation(field, f))
        throw std::invalid_argument("elementary: f is not an o-permutation");
    PseudoOval o;
    o.n = field.degree();
    for (const auto& p : oval_points(field, f))
        o.elements.push_back(field_reduce(field, {p.x0, p.x1, p.x2}));
    o.nucleus = field_reduce(field, {0, 0, 1});
    for (const auto& x : o.elements) o.tangents.push_back(span_of(x, o.nucleus));
    const auto check = verify_pseudo_oval(o, opts);
    if (!check.ok)
        throw std::runtime_error("elementary construction failed verification: " + check.witness);
    return o;
}

PseudoOval nucleus_swap(const PseudoOval& o, std::size_t element_index,
                        const VerifyOptions& opts) {
    if (element_index >= o.elements.size())
        throw std::invalid_argument("nucleus_swap: element index out of range");
    if (o.nucleus.rank() == 0) throw std::invalid_argument("nucleus_swap: nucleus unknown");
    PseudoOval s;
    s.n = o.n;
    s.source = o.source;
    s.elements = o.elements;
    s.nucleus = s.elements[element_index];
    s.elements[element_index] = o.nucleus;
    for (const auto& x : s.elements) s.tangents.push_back(span_of(x, s.nucleus));
    const auto check = verify_pseudo_oval(s, opts);
    if (!check.ok) throw std::runtime_error("nucleus_swap failed verification: " + check.witness);
    return s;
}

ProjectionSpread projection_spread(const PseudoOval& o, std::size_t element_index) {
    if (element_index >= o.elements.size())
        throw std::invalid_argument("projection_spread: element index out of range");
    const int n = o.n;
    const int ambient = 3 * n;
    const Subspace& x = o.elements[element_index];

    // S = span of the standard coordinates off X's pivots (a complement of X)
    std::vector<int> coords;
    {
        Row pivots = 0;
        for (Row r : x.rows()) pivots |= r & (~r + 1);
        for (int c = 0; c < ambient; ++c)
            if (!(pivots >> c & 1)) coords.push_back(c);
    }
    std::vector<Row> s_rows;
    for (int c : coords) s_rows.push_back(Row(1) << c);
    const Subspace s(ambient, s_rows);

    auto compress = [&](const Subspace& sub) {
        std::vector<Row> rows;
        for (Row r : sub.rows()) {
            Row packed = 0;
            for (std::size_t i = 0; i < coords.size(); ++i)
                if (r >> coords[i] & 1) packed |= Row(1) << i;
            rows.push_back(packed);
        }
        return Subspace(2 * n, rows);
    };

    ProjectionSpread ps;
    ps.n = n;
    ps.coords = coords;
    for (std::size_t j = 0; j < o.elements.size(); ++j) {
        if (j == element_index) continue;
        const Subspace proj = meet(span_of(x, o.elements[j]), s);
        if (proj.rank() != n)
            throw std::runtime_error("projection of element " + std::to_string(j) +
                                     " has rank " + std::to_string(proj.rank()));
        ps.elements.push_back(compress(proj));
        ps.source_index.push_back(static_cast<int>(j));
    }
    if (o.tangents.empty())
        throw std::invalid_argument("projection_spread: tangents unknown");
    const Subspace timg = meet(o.tangents[element_index], s);
    if (timg.rank() != n) throw std::runtime_error("tangent projection has wrong rank");
    ps.tangent_image = ps.elements.size();
    ps.elements.push_back(compress(timg));
    ps.source_index.push_back(-1);
    return ps;
}

VerifyResult verify_spread(const std::vector<Subspace>& spread, int n) {
    VerifyResult r;
    const std::size_t expect = (std::size_t(1) << n) + 1;
    if (spread.size() != expect) {
        r.ok = false;
        r.witness = "spread size " + std::to_string(spread.size()) + " != " +
                    std::to_string(expect);
        return r;
    }
    std::vector<bool> covered(std::size_t(1) << (2 * n), false);
    covered[0] = true;
    for (std::size_t i = 0; i < spread.size(); ++i) {
        if (spread[i].rank() != n || spread[i].ambient() != 2 * n) {
            r.ok = false;
            r.witness = "spread element " + std::to_string(i) + " has wrong shape";
            return r;
        }
        for (Row v : spread[i].vectors()) {
            if (v == 0) continue;
            if (covered[v]) {
                r.ok = false;
                r.witness = "vector " + std::to_string(v) + " covered twice (element " +
                            std::to_string(i) + ")";
                return r;
            }
            covered[v] = true;
        }
    }
    // counting: (2^n+1)(2^n-1) = 2^(2n)-1 nonzero vectors, so full coverage
    for (std::size_t v = 1; v < covered.size(); ++v)
        if (!covered[v]) {
            r.ok = false;
            r.witness = "vector " + std::to_string(v) + " uncovered";
            return r;
        }
    return r;
}

SpreadSet spread_set(const std::vector<Subspace>& spread, std::size_t inf_index,
                     std::size_t zero_index) {
    if (inf_index >= spread.size() || zero_index >= spread.size() || inf_index == zero_index)
        throw std::invalid_argument("spread_set: bad axis indices");
    const int n = spread[inf_index].rank();
    const int m = 2 * n;

    // new coordinates: v = (u | w) with u over the zero axis, w over inf
    std::vector<Row> basis;
    for (Row r : spread[zero_index].rows()) basis.push_back(r);
    for (Row r : spread[inf_index].rows()) basis.push_back(r);
    if (span_rank(basis) != m)
        throw std::invalid_argument("spread_set: axes do not span the space");
    const std::vector<Row> binv = invert_gf2(basis);
    std::vector<Row> coord_mask(m);
    for (int i = 0; i < m; ++i) coord_mask[i] = column_of(binv, i);
    auto to_new = [&](Row v) {
        Row nv = 0;
        for (int i = 0; i < m; ++i)
            nv |= static_cast<Row>(__builtin_parity(v & coord_mask[i])) << i;
        return nv;
    };

    SpreadSet out;
    out.n = n;
    for (std::size_t e = 0; e < spread.size(); ++e) {
        if (e == inf_index) continue;
        std::vector<Row> rows;
        for (Row r : spread[e].rows()) rows.push_back(to_new(r));
        const Row umask = (Row(1) << n) - 1;
        BitMat g = BitMat::zero(n);
        for (int j = 0; j < n; ++j) {
            const auto vec = solve_by_key(rows, [&](Row r) { return r & umask; }, Row(1) << j);
            if (!vec)
                throw std::invalid_argument("spread_set: element " + std::to_string(e) +
                                            " is not a graph over the zero axis");
            const Row w = *vec >> n;
            for (int i = 0; i < n; ++i)
                if (w >> i & 1) g.rows[i] |= static_cast<std::uint8_t>(1u << j);
        }
        out.mats.push_back(g);
    }

    // normalization: ensure the identity is present
    const BitMat id = BitMat::identity(n);
    if (std::find(out.mats.begin(), out.mats.end(), id) == out.mats.end()) {
        const BitMat* unit = nullptr;
        for (const auto& g : out.mats)
            if (g.invertible()) {
                unit = &g;
                break;
            }
        if (!unit) throw std::runtime_error("spread_set: no invertible member to normalize by");
        // w' = unit^{-1} w turns the chosen graph into the identity
        std::vector<Row> urows(unit->rows.begin(), unit->rows.begin() + n);
        const std::vector<Row> uinv = invert_gf2(urows);
        BitMat ui = BitMat::zero(n);
        for (int i = 0; i < n; ++i) ui.rows[i] = static_cast<std::uint8_t>(uinv[i]);
        for (auto& g : out.mats) g = ui * g;
    }
    return out;
}

bool is_desarguesian(const SpreadSet& s) {
    const std::size_t q = std::size_t(1) << s.n;
    if (s.mats.size() != q) return false;
    std::vector<BitMat> sorted = s.mats;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    auto member = [&](const BitMat& m) {
        return std::binary_search(sorted.begin(), sorted.end(), m);
    };
    if (!member(BitMat::zero(s.n)) || !member(BitMat::identity(s.n))) return false;
    for (const auto& a : sorted) {
        if (!(a == BitMat::zero(s.n)) && !a.invertible()) return false;
        for (const auto& b : sorted) {
            if (!member(a + b)) return false;
            if (!member(a * b)) return false;
            if (!(a * b == b * a)) return false;
        }
    }
    return true;
}

SteinkeCoords steinke_coordinates(const PseudoOval& o, std::size_t inf_index,
                                  std::size_t zero_index) {
    if (o.nucleus.rank() == 0)
        throw std::invalid_argument("steinke_coordinates: nucleus unknown");
    if (inf_index >= o.elements.size() || zero_index >= o.elements.size() ||
        inf_index == zero_index)
        throw std::invalid_argument("steinke_coordinates: bad frame indices");
    const int n = o.n;
    const int m = 3 * n;

    std::vector<Row> basis;
    for (Row r : o.elements[inf_index].rows()) basis.push_back(r);
    for (Row r : o.nucleus.rows()) basis.push_back(r);
    for (Row r : o.elements[zero_index].rows()) basis.push_back(r);
    if (span_rank(basis) != m)
        throw std::runtime_error("steinke_coordinates: frame change is singular");
    const std::vector<Row> binv = invert_gf2(basis);

    SteinkeCoords sc;
    sc.n = n;
    sc.inf_index = inf_index;
    sc.zero_index = zero_index;
    sc.new_coord_masks.resize(m);
    for (int i = 0; i < m; ++i) sc.new_coord_masks[i] = column_of(binv, i);
    auto to_new = [&](Row v) {
        Row nv = 0;
        for (int i = 0; i < m; ++i)
            nv |= static_cast<Row>(__builtin_parity(v & sc.new_coord_masks[i])) << i;
        return nv;
    };

    const std::size_t count = std::size_t(1) << n;
    sc.h.assign(count, BitMat::zero(n));
    sc.g.assign(count, BitMat::zero(n));
    sc.source_index.assign(count, -1);
    std::vector<bool> label_used(count, false);

    for (std::size_t e = 0; e < o.elements.size(); ++e) {
        if (e == inf_index) continue;
        std::vector<Row> rows;
        for (Row r : o.elements[e].rows()) rows.push_back(to_new(r));
        BitMat h = BitMat::zero(n), g = BitMat::zero(n);
        for (int j = 0; j < n; ++j) {
            // the unique vector with I-part (third block) equal to e_j
            const auto vec =
                solve_by_key(rows, [&](Row r) { return r >> (2 * n); }, Row(1) << j);
            if (!vec)
                throw std::runtime_error(
                    "steinke_coordinates: element is not a graph over the third block");
            const Row hcol = *vec & ((Row(1) << n) - 1);
            const Row gcol = (*vec >> n) & ((Row(1) << n) - 1);
            for (int i = 0; i < n; ++i) {
                if (hcol >> i & 1) h.rows[i] |= static_cast<std::uint8_t>(1u << j);
                if (gcol >> i & 1) g.rows[i] |= static_cast<std::uint8_t>(1u << j);
            }
        }
        const unsigned z = h.apply(1);  // label: first h column
        if (z >= count || label_used[z])
            throw std::runtime_error("steinke_coordinates: labeling is not a bijection");
        label_used[z] = true;
        sc.h[z] = h;
        sc.g[z] = g;
        sc.source_index[z] = static_cast<int>(e);
    }
    if (!(sc.g[0] == BitMat::zero(n)) || !(sc.h[0] == BitMat::zero(n)))
        throw std::runtime_error("steinke_coordinates: D(0) is not normalized");
    return sc;
}

SpreadSet field_spread_set(const Gf& field) {
    SpreadSet s;
    s.n = field.degree();
    for (unsigned v = 0; v < field.order(); ++v) s.mats.push_back(BitMat::mult_by(field, v));
    return s;
}

}  // namespace ovk
