#include "ovalkit/incidence.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ovk {

namespace {

inline std::size_t words_for(int bits) { return (static_cast<std::size_t>(bits) + 63) / 64; }

inline int and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    int c = 0;
    for (std::size_t i = 0; i < words; ++i) c += __builtin_popcountll(a[i] & b[i]);
    return c;
}

// canonical coset representative of v modulo the rows of a subspace
inline Row coset_rep(const Subspace& s, Row v) {
    for (Row b : s.rows()) {
        const Row piv = b & (~b + 1);
        if (v & piv) v ^= b;
    }
    return v;
}

}  // namespace

void IncidenceStructure::init_bitsets() {
    pwords_ = words_for(points());
    bwords_ = words_for(blocks());
    point_rows_.assign(static_cast<std::size_t>(points()) * bwords_, 0);
    block_rows_.assign(static_cast<std::size_t>(blocks()) * pwords_, 0);
    if (generator_of_point.empty()) generator_of_point.assign(points(), -1);
}

bool IncidenceStructure::incident(int p, int b) const {
    return point_rows_[p * bwords_ + b / 64] >> (b % 64) & 1;
}

void IncidenceStructure::set_incident(int p, int b) {
    point_rows_[p * bwords_ + b / 64] |= 1ull << (b % 64);
    block_rows_[b * pwords_ + p / 64] |= 1ull << (p % 64);
}

void IncidenceStructure::flip_incidence(int p, int b) {
    point_rows_[p * bwords_ + b / 64] ^= 1ull << (b % 64);
    block_rows_[b * pwords_ + p / 64] ^= 1ull << (p % 64);
}

int IncidenceStructure::point_degree(int p) const {
    int c = 0;
    for (std::size_t i = 0; i < bwords_; ++i) c += __builtin_popcountll(point_rows_[p * bwords_ + i]);
    return c;
}

int IncidenceStructure::block_degree(int b) const {
    int c = 0;
    for (std::size_t i = 0; i < pwords_; ++i) c += __builtin_popcountll(block_rows_[b * pwords_ + i]);
    return c;
}

IncidenceFile IncidenceStructure::to_file() const {
    IncidenceFile f;
    f.kind = kind;
    f.num_points = points();
    f.num_blocks = blocks();
    f.num_generators = num_generators;
    f.generator_of_point = generator_of_point;
    for (int p = 0; p < points(); ++p)
        for (int b = 0; b < blocks(); ++b)
            if (incident(p, b)) f.edges.emplace_back(p, b);
    return f;
}

IncidenceStructure IncidenceStructure::from_file(const IncidenceFile& f) {
    IncidenceStructure s;
    s.kind = f.kind;
    s.num_generators = f.num_generators;
    s.point_ids.resize(f.num_points);
    s.block_ids.resize(f.num_blocks);
    for (int p = 0; p < f.num_points; ++p) s.point_ids[p] = "p" + std::to_string(p);
    for (int b = 0; b < f.num_blocks; ++b) s.block_ids[b] = "b" + std::to_string(b);
    s.generator_of_point = f.generator_of_point;
    s.init_bitsets();
    for (const auto& [p, b] : f.edges) s.set_incident(p, b);
    return s;
}

IncidenceStructure build_tgq(const PseudoOval& o) {
    const int n = o.n;
    if (n > 4)
        throw std::invalid_argument("build_tgq materializes the structure; use the structural "
                                    "verifier beyond n = 4");
    if (o.tangents.empty()) throw std::invalid_argument("build_tgq: tangents unknown");
    const std::size_t n_affine = std::size_t(1) << (3 * n);
    const std::size_t m = o.elements.size();  // 2^n + 1

    IncidenceStructure s;
    s.kind = "gq";

    // points: [0, n_affine) affine, then tangent cosets, then (infinity)
    for (std::size_t a = 0; a < n_affine; ++a) s.point_ids.push_back("P" + std::to_string(a));
    std::map<std::pair<std::size_t, Row>, int> coset_point;  // (tangent, rep) -> index
    for (std::size_t t = 0; t < m; ++t) {
        std::vector<Row> reps;
        for (std::size_t a = 0; a < n_affine; ++a) {
            const Row rep = coset_rep(o.tangents[t], static_cast<Row>(a));
            reps.push_back(rep);
        }
        std::sort(reps.begin(), reps.end());
        reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
        for (Row rep : reps) {
            coset_point[{t, rep}] = static_cast<int>(s.point_ids.size());
            s.point_ids.push_back("W" + std::to_string(t) + ":" + std::to_string(rep));
        }
    }
    const int inf_point = static_cast<int>(s.point_ids.size());
    s.point_ids.push_back("inf");

    // blocks: per element, the affine cosets; then the elements themselves
    std::map<std::pair<std::size_t, Row>, int> line_index;
    for (std::size_t e = 0; e < m; ++e) {
        std::vector<Row> reps;
        for (std::size_t a = 0; a < n_affine; ++a)
            reps.push_back(coset_rep(o.elements[e], static_cast<Row>(a)));
        std::sort(reps.begin(), reps.end());
        reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
        for (Row rep : reps) {
            line_index[{e, rep}] = static_cast<int>(s.block_ids.size());
            s.block_ids.push_back("L" + std::to_string(e) + ":" + std::to_string(rep));
        }
    }
    std::vector<int> element_line(m);
    for (std::size_t e = 0; e < m; ++e) {
        element_line[e] = static_cast<int>(s.block_ids.size());
        s.block_ids.push_back("O" + std::to_string(e));
    }

    s.init_bitsets();

    // affine point p on line (e, rep) iff p - rep lies in the element
    for (std::size_t e = 0; e < m; ++e) {
        for (std::size_t a = 0; a < n_affine; ++a) {
            const Row rep = coset_rep(o.elements[e], static_cast<Row>(a));
            s.set_incident(static_cast<int>(a), line_index.at({e, rep}));
        }
    }
    // tangent-coset point (t, w) holds the 2^n lines of element t inside its
    // coset, and the element-line t
    for (std::size_t t = 0; t < m; ++t) {
        for (std::size_t a = 0; a < n_affine; ++a) {
            const Row wrep = coset_rep(o.tangents[t], static_cast<Row>(a));
            const int wp = coset_point.at({t, wrep});
            const Row lrep = coset_rep(o.elements[t], static_cast<Row>(a));
            s.set_incident(wp, line_index.at({t, lrep}));
        }
    }
    for (const auto& [key, wp] : coset_point) s.set_incident(wp, element_line[key.first]);
    for (std::size_t e = 0; e < m; ++e) s.set_incident(inf_point, element_line[e]);
    return s;
}

GqCheck verify_gq(const IncidenceStructure& s) {
    GqCheck r;
    if (s.points() == 0 || s.blocks() == 0) {
        r.witness = "empty structure";
        return r;
    }
    const int splus1 = s.block_degree(0);
    const int tplus1 = s.point_degree(0);
    for (int b = 0; b < s.blocks(); ++b)
        if (s.block_degree(b) != splus1) {
            r.witness = "line " + s.block_ids[b] + " has degree " +
                        std::to_string(s.block_degree(b)) + " != " + std::to_string(splus1);
            return r;
        }
    for (int p = 0; p < s.points(); ++p)
        if (s.point_degree(p) != tplus1) {
            r.witness = "point " + s.point_ids[p] + " has degree " +
                        std::to_string(s.point_degree(p)) + " != " + std::to_string(tplus1);
            return r;
        }
    // (i)/(ii): two distinct points on at most one common line
    for (int p = 0; p < s.points(); ++p)
        for (int p2 = p + 1; p2 < s.points(); ++p2)
            if (and_popcount(s.point_row(p), s.point_row(p2), s.bw()) > 1) {
                r.witness = "points " + s.point_ids[p] + " and " + s.point_ids[p2] +
                            " lie on two common lines";
                return r;
            }
    // collinearity bitsets: union of the lines through each point
    std::vector<std::uint64_t> collinear(static_cast<std::size_t>(s.points()) * s.pw(), 0);
    for (int p = 0; p < s.points(); ++p) {
        std::uint64_t* row = &collinear[p * s.pw()];
        for (int b = 0; b < s.blocks(); ++b)
            if (s.incident(p, b))
                for (std::size_t w = 0; w < s.pw(); ++w) row[w] |= s.block_row(b)[w];
    }
    // (iii): for every antiflag, exactly one point of L collinear with x
    for (int p = 0; p < s.points(); ++p) {
        for (int b = 0; b < s.blocks(); ++b) {
            if (s.incident(p, b)) continue;
            const int c = and_popcount(&collinear[p * s.pw()], s.block_row(b), s.pw());
            if (c != 1) {
                r.witness = "antiflag (" + s.point_ids[p] + ", " + s.block_ids[b] + ") has " +
                            std::to_string(c) + " projections";
                return r;
            }
        }
    }
    r.ok = true;
    r.s = splus1 - 1;
    r.t = tplus1 - 1;
    return r;
}

IncidenceStructure build_laguerre_cone(const Gf& field, const FuncTable& f) {
    if (!is_o_permutation(field, f))
        throw std::invalid_argument("build_laguerre_cone: not an o-permutation");
    const unsigned q = field.order();
    const auto oval = oval_points(field, f);  // q+1 points

    IncidenceStructure s;
    s.kind = "laguerre";
    s.num_generators = static_cast<int>(q + 1);
    for (unsigned t = 0; t <= q; ++t)
        for (unsigned mu = 0; mu < q; ++mu) {
            s.point_ids.push_back("K" + std::to_string(t) + ":" + std::to_string(mu));
            s.generator_of_point.push_back(static_cast<int>(t));
        }
    for (unsigned u = 0; u < q * q * q; ++u) s.block_ids.push_back("pl" + std::to_string(u));
    s.init_bitsets();

    for (unsigned u0 = 0; u0 < q; ++u0)
        for (unsigned u1 = 0; u1 < q; ++u1)
            for (unsigned u2 = 0; u2 < q; ++u2) {
                const int c = static_cast<int>((u0 * q + u1) * q + u2);
                for (unsigned t = 0; t <= q; ++t) {
                    const auto& o = oval[t];
                    const unsigned mu =
                        field.mul(u0, o.x0) ^ field.mul(u1, o.x1) ^ field.mul(u2, o.x2);
                    s.set_incident(static_cast<int>(t * q + mu), c);
                }
            }
    return s;
}

IncidenceStructure build_laguerre_elation(const SteinkeCoords& sc) {
    const int n = sc.n;
    const unsigned qn = 1u << n;

    IncidenceStructure s;
    s.kind = "laguerre";
    s.num_generators = static_cast<int>(qn + 1);
    // generator index z in [0, qn] with z = qn the infinity label
    for (unsigned z = 0; z <= qn; ++z)
        for (unsigned w = 0; w < qn; ++w) {
            s.point_ids.push_back("E" + std::to_string(z) + ":" + std::to_string(w));
            s.generator_of_point.push_back(static_cast<int>(z));
        }
    const std::size_t n_circ = std::size_t(1) << (3 * n);
    for (std::size_t c = 0; c < n_circ; ++c) s.block_ids.push_back("c" + std::to_string(c));
    s.init_bitsets();

    // row-vector times matrix: bit j = parity(c_block . column_j)
    auto row_times = [&](unsigned cpart, const BitMat& m) {
        unsigned out = 0;
        for (int j = 0; j < m.n; ++j)
            out |= static_cast<unsigned>(__builtin_parity(cpart & m.apply(1u << j))) << j;
        return out;
    };

    const unsigned mask = qn - 1;
    for (std::size_t c = 0; c < n_circ; ++c) {
        const unsigned c1 = static_cast<unsigned>(c) & mask;
        const unsigned c2 = static_cast<unsigned>(c >> n) & mask;
        const unsigned c3 = static_cast<unsigned>(c >> (2 * n)) & mask;
        for (unsigned z = 0; z < qn; ++z) {
            const unsigned w = row_times(c1, sc.h[z]) ^ row_times(c2, sc.g[z]) ^ c3;
            s.set_incident(static_cast<int>(z * qn + w), static_cast<int>(c));
        }
        s.set_incident(static_cast<int>(qn * qn + c1), static_cast<int>(c));  // z = inf: c D(inf) = c1
    }
    return s;
}

LaguerreCheck verify_laguerre(const IncidenceStructure& s) {
    LaguerreCheck r;
    if (s.num_generators <= 1) {
        r.witness = "generators untagged";
        return r;
    }
    const int m = s.num_generators - 1;  // order
    if (s.points() != m * (m + 1) || s.blocks() != m * m * m) {
        r.witness = "counts (" + std::to_string(s.points()) + " points, " +
                    std::to_string(s.blocks()) + " circles) do not match order " +
                    std::to_string(m);
        return r;
    }
    // (i) generators partition the points, m points each
    std::vector<int> gen_size(s.num_generators, 0);
    for (int p = 0; p < s.points(); ++p) {
        const int g = s.generator_of_point[p];
        if (g < 0 || g >= s.num_generators) {
            r.witness = "point " + s.point_ids[p] + " has no generator";
            return r;
        }
        ++gen_size[g];
    }
    for (int g = 0; g < s.num_generators; ++g)
        if (gen_size[g] != m) {
            r.witness = "generator " + std::to_string(g) + " has " +
                        std::to_string(gen_size[g]) + " points != " + std::to_string(m);
            return r;
        }
    // (ii) every circle meets every generator exactly once
    std::vector<std::vector<std::uint64_t>> gen_mask(
        s.num_generators, std::vector<std::uint64_t>(s.pw(), 0));
    for (int p = 0; p < s.points(); ++p)
        gen_mask[s.generator_of_point[p]][p / 64] |= 1ull << (p % 64);
    for (int b = 0; b < s.blocks(); ++b)
        for (int g = 0; g < s.num_generators; ++g) {
            const int c = and_popcount(s.block_row(b), gen_mask[g].data(), s.pw());
            if (c != 1) {
                r.witness = "circle " + s.block_ids[b] + " meets generator " + std::to_string(g) +
                            " in " + std::to_string(c) + " points";
                return r;
            }
        }
    // (iii) three pairwise non-parallel points lie on exactly one circle
    for (int p1 = 0; p1 < s.points(); ++p1)
        for (int p2 = p1 + 1; p2 < s.points(); ++p2) {
            if (s.generator_of_point[p1] == s.generator_of_point[p2]) continue;
            for (int p3 = p2 + 1; p3 < s.points(); ++p3) {
                if (s.generator_of_point[p3] == s.generator_of_point[p1] ||
                    s.generator_of_point[p3] == s.generator_of_point[p2])
                    continue;
                int c = 0;
                for (std::size_t w = 0; w < s.bw(); ++w)
                    c += __builtin_popcountll(s.point_row(p1)[w] & s.point_row(p2)[w] &
                                              s.point_row(p3)[w]);
                if (c != 1) {
                    r.witness = "points " + s.point_ids[p1] + ", " + s.point_ids[p2] + ", " +
                                s.point_ids[p3] + " lie on " + std::to_string(c) + " circles";
                    return r;
                }
            }
        }
    r.ok = true;
    r.order = m;
    return r;
}

IncidenceStructure derived_plane(const IncidenceStructure& laguerre, int p) {
    if (p < 0 || p >= laguerre.points())
        throw std::invalid_argument("derived_plane: point out of range");
    const int home = laguerre.generator_of_point[p];

    IncidenceStructure a;
    a.kind = "affine";
    std::vector<int> point_map(laguerre.points(), -1);
    for (int q = 0; q < laguerre.points(); ++q) {
        if (laguerre.generator_of_point[q] == home) continue;
        point_map[q] = static_cast<int>(a.point_ids.size());
        a.point_ids.push_back(laguerre.point_ids[q]);
    }
    std::vector<int> circle_blocks, gen_blocks;
    for (int b = 0; b < laguerre.blocks(); ++b)
        if (laguerre.incident(p, b)) {
            circle_blocks.push_back(b);
            a.block_ids.push_back(laguerre.block_ids[b]);
        }
    for (int g = 0; g < laguerre.num_generators; ++g)
        if (g != home) {
            gen_blocks.push_back(g);
            a.block_ids.push_back("gen" + std::to_string(g));
        }
    a.init_bitsets();
    for (int q = 0; q < laguerre.points(); ++q) {
        if (point_map[q] < 0) continue;
        for (std::size_t i = 0; i < circle_blocks.size(); ++i)
            if (laguerre.incident(q, circle_blocks[i]))
                a.set_incident(point_map[q], static_cast<int>(i));
        for (std::size_t i = 0; i < gen_blocks.size(); ++i)
            if (laguerre.generator_of_point[q] == gen_blocks[i])
                a.set_incident(point_map[q], static_cast<int>(circle_blocks.size() + i));
    }
    return a;
}

AffineCheck verify_affine(const IncidenceStructure& s) {
    AffineCheck r;
    // order from the counts: m^2 points, m^2 + m lines
    int m = 0;
    while (m * m < s.points()) ++m;
    if (m * m != s.points() || s.blocks() != m * m + m) {
        r.witness = "counts do not match an affine plane";
        return r;
    }
    for (int b = 0; b < s.blocks(); ++b)
        if (s.block_degree(b) != m) {
            r.witness = "line " + s.block_ids[b] + " has " + std::to_string(s.block_degree(b)) +
                        " points != " + std::to_string(m);
            return r;
        }
    for (int p = 0; p < s.points(); ++p)
        if (s.point_degree(p) != m + 1) {
            r.witness = "point " + s.point_ids[p] + " has degree != m+1";
            return r;
        }
    for (int p = 0; p < s.points(); ++p)
        for (int p2 = p + 1; p2 < s.points(); ++p2) {
            const int c = and_popcount(s.point_row(p), s.point_row(p2), s.bw());
            if (c != 1) {
                r.witness = "points " + s.point_ids[p] + " and " + s.point_ids[p2] + " lie on " +
                            std::to_string(c) + " common lines";
                return r;
            }
        }
    r.ok = true;
    r.order = m;
    return r;
}

std::string fingerprint(const IncidenceStructure& s, std::uint64_t seed) {
    std::uint64_t h = fnv1a(s.kind.data(), s.kind.size());
    const int np = s.points(), nb = s.blocks();
    h = fnv1a(&np, sizeof np, h);
    h = fnv1a(&nb, sizeof nb, h);
    std::map<int, int> pdeg, bdeg;
    for (int p = 0; p < np; ++p) ++pdeg[s.point_degree(p)];
    for (int b = 0; b < nb; ++b) ++bdeg[s.block_degree(b)];
    for (const auto& [d, c] : pdeg) {
        h = fnv1a(&d, sizeof d, h);
        h = fnv1a(&c, sizeof c, h);
    }
    for (const auto& [d, c] : bdeg) {
        h = fnv1a(&d, sizeof d, h);
        h = fnv1a(&c, sizeof c, h);
    }
    // sampled histogram of |{z : z ~ x, y, w}| over point triples
    std::vector<std::uint64_t> collinear(static_cast<std::size_t>(np) * s.pw(), 0);
    for (int p = 0; p < np; ++p) {
        std::uint64_t* row = &collinear[p * s.pw()];
        row[p / 64] |= 1ull << (p % 64);
        for (int b = 0; b < nb; ++b)
            if (s.incident(p, b))
                for (std::size_t w = 0; w < s.pw(); ++w) row[w] |= s.block_row(b)[w];
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, np - 1);
    std::map<int, int> hist;
    for (int trial = 0; trial < 4096; ++trial) {
        const int x = pick(rng), y = pick(rng), z = pick(rng);
        if (x == y || y == z || x == z) continue;
        int c = 0;
        for (std::size_t w = 0; w < s.pw(); ++w)
            c += __builtin_popcountll(collinear[x * s.pw() + w] & collinear[y * s.pw() + w] &
                                      collinear[z * s.pw() + w]);
        ++hist[c];
    }
    for (const auto& [k, v] : hist) {
        h = fnv1a(&k, sizeof k, h);
        h = fnv1a(&v, sizeof v, h);
    }
    return hex64(h);
}

GqCheck verify_tgq_structural(const PseudoOval& o, std::uint64_t seed, std::size_t samples) {
    GqCheck r;
    const int n = o.n;
    const std::size_t n_affine = std::size_t(1) << (3 * n);
    const std::size_t m = o.elements.size();
    if (o.tangents.empty()) {
        r.witness = "tangents unknown";
        return r;
    }

    // full line degree counts: every line (e, coset) carries 2^n affine
    // points and exactly one tangent-coset point
    for (std::size_t e = 0; e < m; ++e) {
        std::vector<Row> seen;
        for (std::size_t a = 0; a < n_affine; ++a) seen.push_back(coset_rep(o.elements[e], Row(a)));
        std::sort(seen.begin(), seen.end());
        seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
        if (seen.size() != n_affine >> n) {
            r.witness = "element " + std::to_string(e) + " has wrong coset count";
            return r;
        }
        // each line's points: the coset (2^n affine) + the unique tangent coset
        // through it; verified via containment of representatives
        for (std::size_t probe = 0; probe < std::min<std::size_t>(seen.size(), 64); ++probe) {
            const Row rep = seen[probe];
            const Row trep = coset_rep(o.tangents[e], rep);
            // line lies inside the tangent coset: (rep - trep) in T(e)
            if (coset_rep(o.tangents[e], rep ^ trep) != 0) {
                r.witness = "line coset not inside its tangent coset";
                return r;
            }
        }
    }
    // tangent-coset point degrees: 2^n lines inside + the element line
    for (std::size_t t = 0; t < m; ++t) {
        // lines inside one tangent coset: the element cosets of X_t partition it
        const std::size_t lines_inside = std::size_t(1) << n;
        (void)lines_inside;  // |T|/|X| = 2^n by rank; spot-verified below
        const Row w0 = 0;
        std::vector<Row> element_cosets;
        for (Row v : o.tangents[t].vectors())
            element_cosets.push_back(coset_rep(o.elements[t], v ^ w0));
        std::sort(element_cosets.begin(), element_cosets.end());
        element_cosets.erase(std::unique(element_cosets.begin(), element_cosets.end()),
                             element_cosets.end());
        if (element_cosets.size() != (std::size_t(1) << n)) {
            r.witness = "tangent " + std::to_string(t) + " does not split into 2^n line cosets";
            return r;
        }
    }

    // axiom (iii) on seeded random antiflags: p affine, L an affine line
    // (element e, coset w); resolve the unique projection geometrically
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick_a(0, n_affine - 1);
    std::uniform_int_distribution<std::size_t> pick_e(0, m - 1);
    for (std::size_t trial = 0; trial < samples; ++trial) {
        const Row p = static_cast<Row>(pick_a(rng));
        const std::size_t e = pick_e(rng);
        const Row w = static_cast<Row>(pick_a(rng));
        if (coset_rep(o.elements[e], p ^ w) == 0) continue;  // incident, skip
        // count y on L collinear with p:
        //  - affine y = x + w for x in X_e, collinear iff p ^ y lies in some element
        int count = 0;
        for (Row x : o.elements[e].vectors()) {
            const Row y = x ^ w;
            const Row d = p ^ y;
            for (std::size_t e2 = 0; e2 < m; ++e2)
                if (o.elements[e2].contains(d)) {
                    ++count;
                    break;
                }
        }
        //  - the tangent-coset point of L: collinear with p iff p lies in it
        if (coset_rep(o.tangents[e], p ^ w) == 0) ++count;
        if (count != 1) {
            r.witness = "sampled antiflag (affine " + std::to_string(p) + ", line " +
                        std::to_string(e) + "+" + std::to_string(w) + ") has " +
                        std::to_string(count) + " projections";
            return r;
        }
    }
    r.ok = true;
    r.s = r.t = static_cast<int>((std::size_t(1) << n));
    return r;
}

}  // namespace ovk
