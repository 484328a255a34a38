// Generates the hyperoval catalog data files.
//
// Families with closed forms are evaluated directly: x^2, x^4, x^6, the Payne
// and Cherowitzo trinomials over GF(32), the Subiaco rational form (all even
// q; two classes when the degree is 2 mod 4), and the Adelaide construction
// through GF(q^2). The sixth PG(2,32) hyperoval has no form we can evaluate
// here, so it is recovered by randomized o-permutation sampling against the
// orbit union of the five known families; the per-field oval class counts
// (2 / 3 / 2+3+4+8+9+9 = 35) guard the output.

#include <cstdint>
#include <array>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ovalkit/catalog.hpp"
#include "ovalkit/wild.hpp"

using namespace ovk;

namespace {

CatalogEntry entry_from_table(const Gf& field, const std::string& name, const FuncTable& f,
                              int expected) {
    CatalogEntry e;
    e.degree = field.degree();
    e.modulus = field.modulus();
    e.name = name;
    e.coeffs = interpolate(field, f);
    e.expected_ovals = expected;
    return e;
}

// f(x) = (d^2(x^4+x) + d^2(1+d+d^2)(x^3+x^2)) / (x^4 + d^2 x^2 + 1) + x^(1/2),
// defined whenever tr(1/d) = 1 (the denominator has no roots then).
FuncTable subiaco_table(const Gf& f, unsigned d) {
    const unsigned d2 = f.mul(d, d);
    const unsigned c = f.mul(d2, 1u ^ d ^ d2);
    std::vector<unsigned> vals(f.order());
    for (unsigned x = 0; x < f.order(); ++x) {
        const unsigned x2 = f.mul(x, x);
        const unsigned x3 = f.mul(x2, x);
        const unsigned x4 = f.mul(x2, x2);
        const unsigned num = f.mul(d2, x4 ^ x) ^ f.mul(c, x3 ^ x2);
        const unsigned den = x4 ^ f.mul(d2, x2) ^ 1u;
        vals[x] = f.div(num, den) ^ f.sqrt(x);
    }
    return make_func(f, vals);
}

std::vector<unsigned> subiaco_deltas(const Gf& f) {
    std::vector<unsigned> ds;
    for (unsigned d = 2; d < f.order(); ++d)
        if (f.trace(f.inv(d)) == 1) ds.push_back(d);
    return ds;
}

// GF(4096) on x^12 + x^6 + x^4 + x + 1, as bit patterns; only what the
// Adelaide evaluation needs.
struct Gf4096 {
    static constexpr unsigned MOD = (1u << 12) | (1u << 6) | (1u << 4) | (1u << 1) | 1u;

    static unsigned mul(unsigned a, unsigned b) {
        unsigned r = 0;
        while (b) {
            if (b & 1) r ^= a;
            b >>= 1;
            a <<= 1;
            if (a >> 12 & 1) a ^= MOD;
        }
        return r;
    }
    static unsigned pw(unsigned a, std::uint64_t e) {
        unsigned r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    static unsigned inv(unsigned a) { return pw(a, 4094); }
    static unsigned tr(unsigned z) { return z ^ pw(z, 64); }  // trace onto GF(64)
};

// Adelaide o-polynomial over GF(64): with T the trace of GF(q^2) over GF(q),
// beta of order q+1 and m = (q-1)/3,
//   f(x) = T(b^m)(x+1)/T(b) + T((bx+b^q)^m) / (T(b)(x + T(b)x^(1/2) + 1)^(m-1)) + x^(1/2)
FuncTable adelaide_table(const Gf& f64) {
    // embed GF(64) = GF(2)[y]/(y^6+y+1) via a root in GF(4096)
    unsigned root = 0;
    for (unsigned z = 2; z < (1u << 12); ++z)
        if ((Gf4096::pw(z, 6) ^ z ^ 1u) == 0) {
            root = z;
            break;
        }
    std::vector<unsigned> emb(64);
    std::map<unsigned, unsigned> unemb;
    for (unsigned t = 0; t < 64; ++t) {
        unsigned v = 0;
        for (int i = 0; i < 6; ++i)
            if (t >> i & 1) v ^= Gf4096::pw(root, static_cast<std::uint64_t>(i));
        emb[t] = v;
        unemb[v] = t;
    }

    // beta of order exactly 65
    unsigned beta = 0;
    for (unsigned g = 2; g < (1u << 12); ++g) {
        const unsigned b = Gf4096::pw(g, 4095 / 65);
        if (b != 1 && Gf4096::pw(b, 5) != 1 && Gf4096::pw(b, 13) != 1) {
            beta = b;
            break;
        }
    }
    const unsigned m = 21;
    const unsigned Tb = Gf4096::tr(beta);
    const unsigned Tbm = Gf4096::tr(Gf4096::pw(beta, m));
    const unsigned bq = Gf4096::pw(beta, 64);

    std::vector<unsigned> vals(64);
    for (unsigned t = 0; t < 64; ++t) {
        const unsigned x = emb[t];
        const unsigned xh = emb[f64.sqrt(t)];
        const unsigned num2 = Gf4096::tr(Gf4096::pw(Gf4096::mul(beta, x) ^ bq, m));
        const unsigned den2 = Gf4096::mul(Tb, Gf4096::pw(x ^ Gf4096::mul(Tb, xh) ^ 1u, m - 1));
        const unsigned term1 = Gf4096::mul(Gf4096::mul(Tbm, x ^ 1u), Gf4096::inv(Tb));
        const unsigned term2 = Gf4096::mul(num2, Gf4096::inv(den2));
        const unsigned out = term1 ^ term2 ^ xh;
        const auto it = unemb.find(out);
        if (it == unemb.end())
            throw std::runtime_error("adelaide: value fell outside the embedded subfield");
        vals[t] = it->second;
    }
    return make_func(f64, vals);
}

// Randomized o-permutation sampling: value order shuffled per restart.
// Effective up to q = 32; the q = 64 tree is far too hard for random descent.
FuncTable sample_opermutation(const Gf& field, std::mt19937_64& rng) {
    for (;;) {
        OpermDfs dfs(field);
        dfs.first_only = true;
        dfs.node_budget = 2'000'000;
        for (auto& order : dfs.value_order) std::shuffle(order.begin(), order.end(), rng);
        FuncTable out;
        bool found = false;
        dfs.run([&](const FuncTable& f) {
            out = f;
            found = true;
        });
        if (found) return out;
    }
}

// ---- projective plane helpers for the invariant-hyperoval search ----

struct Pg2Index {
    const Gf& f;
    std::vector<std::array<unsigned, 3>> pts;  // canonical representatives
    std::map<std::array<unsigned, 3>, int> idx;

    explicit Pg2Index(const Gf& field) : f(field) {
        const unsigned q = f.order();
        for (unsigned y = 0; y < q; ++y)
            for (unsigned z = 0; z < q; ++z) add({1, y, z});
        for (unsigned z = 0; z < q; ++z) add({0, 1, z});
        add({0, 0, 1});
    }
    void add(std::array<unsigned, 3> p) {
        idx[p] = static_cast<int>(pts.size());
        pts.push_back(p);
    }
    std::array<unsigned, 3> normalize(std::array<unsigned, 3> p) const {
        unsigned lead = p[0] ? p[0] : (p[1] ? p[1] : p[2]);
        const unsigned s = f.inv(lead);
        return {f.mul(s, p[0]), f.mul(s, p[1]), f.mul(s, p[2])};
    }
    int index(std::array<unsigned, 3> p) const { return idx.at(normalize(p)); }
    // line through two distinct points, as a canonical dual triple
    std::array<unsigned, 3> line(const std::array<unsigned, 3>& p,
                                 const std::array<unsigned, 3>& q) const {
        return normalize({f.mul(p[1], q[2]) ^ f.mul(p[2], q[1]),
                          f.mul(p[0], q[2]) ^ f.mul(p[2], q[0]),
                          f.mul(p[0], q[1]) ^ f.mul(p[1], q[0])});
    }
    int line_index(const std::array<unsigned, 3>& p, const std::array<unsigned, 3>& q) const {
        return idx.at(line(p, q));  // same rep scheme works for the dual plane
    }
};

// The o-permutation of the oval H \ {nucleus_pt}, re-framed so that three of
// its points map to (1,0,0), (0,1,0), (1,1,1) and nucleus_pt to (0,0,1).
FuncTable hyperoval_to_opermutation(const Gf& f, const std::vector<std::array<unsigned, 3>>& hyper,
                                    std::size_t nucleus_pos) {
    const unsigned q = f.order();
    std::vector<std::array<unsigned, 3>> oval;
    for (std::size_t i = 0; i < hyper.size(); ++i)
        if (i != nucleus_pos) oval.push_back(hyper[i]);
    const std::array<unsigned, 3> targets[4] = {oval[0], oval[1], hyper[nucleus_pos], oval[2]};

    // the unique projectivity sending targets to e1, e2, e3, e1+e2+e3:
    // solve [t0 t1 t2] c = t3, scale the columns, invert.
    unsigned A[3][6] = {};
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) A[r][c] = targets[c][r];
        A[r][3 + r] = 1;
    }
    // Gauss-Jordan over GF(q) on the augmented identity to invert [t0 t1 t2]
    for (int c = 0, rank = 0; c < 3; ++c) {
        int piv = -1;
        for (int r = rank; r < 3; ++r)
            if (A[r][c]) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::runtime_error("frame points are not in general position");
        std::swap(A[piv], A[rank]);
        const unsigned s = f.inv(A[rank][c]);
        for (int j = 0; j < 6; ++j) A[rank][j] = f.mul(s, A[rank][j]);
        for (int r = 0; r < 3; ++r)
            if (r != rank && A[r][c])
                for (int j = 0; j < 6; ++j) A[r][j] ^= f.mul(A[r][c] == 0 ? 0 : A[r][c], A[rank][j]);
        ++rank;
    }
    unsigned inv0[3][3];
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) inv0[r][c] = A[r][3 + c];
    // c = inv0 * t3 gives the column scalings
    unsigned cs[3];
    for (int r = 0; r < 3; ++r)
        cs[r] = f.mul(inv0[r][0], targets[3][0]) ^ f.mul(inv0[r][1], targets[3][1]) ^
                f.mul(inv0[r][2], targets[3][2]);
    // T = inverse of [c0 t0, c1 t1, c2 t2]
    unsigned B[3][6] = {};
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) B[r][c] = f.mul(cs[c], targets[c][r]);
        B[r][3 + r] = 1;
    }
    for (int c = 0, rank = 0; c < 3; ++c) {
        int piv = -1;
        for (int r = rank; r < 3; ++r)
            if (B[r][c]) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::runtime_error("frame matrix is singular");
        std::swap(B[piv], B[rank]);
        const unsigned s = f.inv(B[rank][c]);
        for (int j = 0; j < 6; ++j) B[rank][j] = f.mul(s, B[rank][j]);
        for (int r = 0; r < 3; ++r)
            if (r != rank && B[r][c]) {
                const unsigned w = B[r][c];
                for (int j = 0; j < 6; ++j) B[r][j] ^= f.mul(w, B[rank][j]);
            }
        ++rank;
    }
    auto apply = [&](const std::array<unsigned, 3>& p) {
        std::array<unsigned, 3> out{};
        for (int r = 0; r < 3; ++r)
            out[r] = f.mul(B[r][3 + 0], p[0]) ^ f.mul(B[r][3 + 1], p[1]) ^
                     f.mul(B[r][3 + 2], p[2]);
        return out;
    };

    std::vector<unsigned> vals(q, 0);
    std::vector<bool> seen(q, false);
    bool saw_infinite = false;
    for (const auto& p : oval) {
        const auto im = apply(p);
        if (im[0] == 0) {
            if (im[2] != 0 || saw_infinite)
                throw std::runtime_error("re-framed oval is not in D(f) position");
            saw_infinite = true;
            continue;
        }
        const unsigned t = f.div(im[1], im[0]);
        if (seen[t]) throw std::runtime_error("re-framed oval repeats a parameter");
        seen[t] = true;
        vals[t] = f.div(im[2], im[0]);
    }
    if (!saw_infinite) throw std::runtime_error("re-framed oval misses (0,1,0)");
    return make_func(f, vals);
}

// Hyperovals of PG(2,64) invariant under a fixed order-5 linear collineation:
// the group fixes exactly one point, which every invariant hyperoval must
// contain (66 = 1 mod 5); the rest is a backtracking choice of 13 point
// orbits keeping every line at most a secant.
std::vector<std::vector<std::array<unsigned, 3>>> z5_invariant_hyperovals(const Gf& f) {
    const unsigned q = f.order();
    if (q != 64) throw std::invalid_argument("the order-5 search is specific to GF(64)");
    Pg2Index pg(f);

    // an order-5 element: companion block of an irreducible factor x^2+ax+1 of
    // x^4+x^3+x^2+x+1 over GF(64), plus a fixed 1 eigenvalue
    unsigned a5 = 0;
    for (unsigned a = 1; a < q && !a5; ++a) {
        // x^2 + a x + 1 divides x^4+x^3+x^2+x+1 iff remainder vanishes
        // polynomial division over GF(64) with symbolic coefficients
        // r(x) = x^4+x^3+x^2+x+1 mod (x^2+ax+1)
        // x^2 = a x + 1 (mod); reduce powers iteratively
        unsigned c1 = a, c0 = 1;               // x^2 = c1 x + c0
        unsigned d1 = f.mul(a, c1) ^ c0;       // x^3 = d1 x + d0
        unsigned d0 = c1;
        unsigned e1 = f.mul(a, d1) ^ d0;       // x^4 = e1 x + e0
        unsigned e0 = d1;
        const unsigned r1 = e1 ^ d1 ^ c1 ^ 1u;
        const unsigned r0 = e0 ^ d0 ^ c0 ^ 1u;
        if (r1 == 0 && r0 == 0) a5 = a;
    }
    if (!a5) throw std::runtime_error("no quadratic factor of the 5th cyclotomic polynomial");
    auto phi = [&](const std::array<unsigned, 3>& p) -> std::array<unsigned, 3> {
        // companion matrix of x^2 + a5 x + 1 on (x0,x1), identity on x2
        return {p[1], f.mul(p[1], a5) ^ p[0], p[2]};
    };
    {
        // sanity: order 5
        std::array<unsigned, 3> p{1, 7, 0};
        auto r = p;
        for (int i = 0; i < 5; ++i) r = phi(r);
        if (pg.normalize(r) != pg.normalize(p))
            throw std::runtime_error("collineation does not have order 5");
    }

    // orbits on points
    const int npts = static_cast<int>(pg.pts.size());
    std::vector<int> orbit_of(npts, -1);
    std::vector<std::vector<int>> orbits;
    int fixed_point = -1;
    for (int i = 0; i < npts; ++i) {
        if (orbit_of[i] >= 0) continue;
        std::vector<int> orb;
        int cur = i;
        do {
            orbit_of[cur] = static_cast<int>(orbits.size());
            orb.push_back(cur);
            cur = pg.index(phi(pg.pts[cur]));
        } while (cur != i);
        if (orb.size() == 1) {
            if (fixed_point >= 0) throw std::runtime_error("more than one fixed point");
            fixed_point = i;
            orbit_of[i] = -2;
        } else if (orb.size() == 5) {
            orbits.push_back(orb);
        } else {
            throw std::runtime_error("unexpected orbit size " + std::to_string(orb.size()));
        }
    }
    if (fixed_point < 0) throw std::runtime_error("no fixed point");

    // discard orbits with an internal collinear triple or collinear with the
    // fixed point
    std::vector<std::vector<int>> good;
    for (const auto& orb : orbits) {
        bool ok = true;
        for (int i = 0; i < 5 && ok; ++i)
            for (int j = i + 1; j < 5 && ok; ++j) {
                const auto l = pg.line(pg.pts[orb[i]], pg.pts[orb[j]]);
                for (int k = j + 1; k < 5 && ok; ++k) {
                    const auto& pk = pg.pts[orb[k]];
                    if ((f.mul(l[0], pk[0]) ^ f.mul(l[1], pk[1]) ^ f.mul(l[2], pk[2])) == 0)
                        ok = false;
                }
                const auto& pf = pg.pts[fixed_point];
                if (ok && (f.mul(l[0], pf[0]) ^ f.mul(l[1], pf[1]) ^ f.mul(l[2], pf[2])) == 0)
                    ok = false;
            }
        if (ok) good.push_back(orb);
    }
    std::cout << "  order-5 search: " << good.size() << " candidate orbits" << std::endl;

    // DFS over orbits with a per-line secant counter
    std::vector<std::uint8_t> line_count(npts, 0);  // lines share the index space
    std::vector<int> chosen_points{fixed_point};
    std::vector<std::vector<std::array<unsigned, 3>>> found;

    std::function<void(std::size_t, int)> rec = [&](std::size_t start, int picked) {
        if (picked == 13) {
            std::vector<std::array<unsigned, 3>> hyper;
            for (int p : chosen_points) hyper.push_back(pg.pts[p]);
            found.push_back(std::move(hyper));
            return;
        }
        for (std::size_t oi = start; oi + (12 - picked) < good.size(); ++oi) {
            const auto& orb = good[oi];
            // try to add: every line through a new point and an existing one
            // must stay below 2 points of the set
            std::vector<int> touched;
            bool ok = true;
            for (int i = 0; i < 5 && ok; ++i) {
                for (int cp : chosen_points) {
                    const int li = pg.line_index(pg.pts[orb[i]], pg.pts[cp]);
                    if (line_count[li] >= 2) {
                        ok = false;
                        break;
                    }
                    ++line_count[li];
                    touched.push_back(li);
                }
                if (ok) chosen_points.push_back(orb[i]);
            }
            if (ok) {
                rec(oi + 1, picked + 1);
                for (int i = 0; i < 5; ++i) chosen_points.pop_back();
            } else {
                while (chosen_points.size() > 1u + 5u * picked) chosen_points.pop_back();
            }
            for (int li : touched) --line_count[li];
        }
    };
    rec(0, 0);
    return found;
}

void write_gf8(const std::string& dir) {
    const Gf& f = Gf::standard(3);
    std::vector<CatalogEntry> entries{
        entry_from_table(f, "regular", monomial(f, 2), 2),
    };
    save_catalog(dir + "/catalog_gf8.cat", entries,
                 "hyperovals of PG(2,8): the regular hyperoval only");
    std::cout << "wrote catalog_gf8.cat\n";
}

void write_gf16(const std::string& dir) {
    const Gf& f = Gf::standard(4);
    const auto deltas = subiaco_deltas(f);
    FuncTable ls;
    bool have = false;
    for (unsigned d : deltas) {
        const FuncTable t = subiaco_table(f, d);
        if (is_o_permutation(f, t)) {
            ls = t;
            have = true;
            break;
        }
    }
    if (!have) throw std::runtime_error("no valid Subiaco delta over GF(16)");
    std::vector<CatalogEntry> entries{
        entry_from_table(f, "regular", monomial(f, 2), 2),
        entry_from_table(f, "lunelli-sce", ls, 1),
    };
    save_catalog(dir + "/catalog_gf16.cat", entries,
                 "hyperovals of PG(2,16): regular and Lunelli-Sce (Subiaco form)");
    std::cout << "wrote catalog_gf16.cat\n";
}

void write_gf32(const std::string& dir, std::uint64_t seed) {
    const Gf& f = Gf::standard(5);
    // Payne x^(1/6) + x^(1/2) + x^(5/6) and Cherowitzo x^s + x^(s+2) + x^(3s+4)
    // with s = 8; exponents mod 31: 1/6 = 26, 1/2 = 16, 5/6 = 6.
    auto trinomial = [&](unsigned e1, unsigned e2, unsigned e3) {
        std::vector<unsigned> vals(32);
        for (unsigned x = 0; x < 32; ++x)
            vals[x] = f.pow(x, e1) ^ f.pow(x, e2) ^ f.pow(x, e3);
        return make_func(f, vals);
    };
    std::vector<CatalogEntry> entries{
        entry_from_table(f, "regular", monomial(f, 2), -1),
        entry_from_table(f, "translation", monomial(f, 4), -1),
        entry_from_table(f, "segre", monomial(f, 6), -1),
        entry_from_table(f, "payne", trinomial(26, 16, 6), -1),
        entry_from_table(f, "cherowitzo", trinomial(8, 10, 28), -1),
    };
    for (const auto& e : entries) {
        const auto v = validate_entry(f, e);
        if (!v.ok) throw std::runtime_error("entry " + e.name + " invalid: " + v.failure);
    }

    std::cout << "expanding the five known GF(32) hyperovals..." << std::endl;
    const OvalCatalog known = expand_catalog(f, entries);
    std::cout << "  " << known.classes.size() << " oval classes, " << known.opoly_count()
              << " o-polynomials" << std::endl;

    std::cout << "sampling for the sixth hyperoval class..." << std::endl;
    std::mt19937_64 rng(seed);
    FuncTable found;
    for (int attempt = 1;; ++attempt) {
        const FuncTable g = sample_opermutation(f, rng);
        const FuncTable gn = normalize_opoly(f, g);
        if (!known.contains_opoly(gn)) {
            std::cout << "  hit an unknown class after " << attempt << " samples" << std::endl;
            found = class_label(f, gn);
            break;
        }
    }
    entries.push_back(entry_from_table(f, "okeefe-penttila", found, -1));

    std::cout << "verifying the full GF(32) expansion..." << std::endl;
    const OvalCatalog full = expand_catalog(f, entries);
    std::cout << "  " << full.classes.size() << " classes, " << full.opoly_count()
              << " o-polynomials, " << full.opermutation_count() << " o-permutations"
              << std::endl;
    if (full.classes.size() != 35)
        throw std::runtime_error("GF(32) expansion gave " + std::to_string(full.classes.size()) +
                                 " classes, expected 35");

    // bake the computed per-entry class counts in as regression guards
    for (auto& e : entries) {
        const auto labels = ovals_from_hyperoval(f, e);
        e.expected_ovals = static_cast<int>(labels.size());
        std::cout << "  " << e.name << ": " << labels.size() << " oval classes" << std::endl;
    }

    save_catalog(dir + "/catalog_gf32.cat", entries,
                 "hyperovals of PG(2,32): regular, translation, Segre, Payne, Cherowitzo, "
                 "O'Keefe-Penttila (class representative recovered by search)");
    std::cout << "wrote catalog_gf32.cat\n";
}

void write_gf64(const std::string& dir) {
    const Gf& f = Gf::standard(6);
    // the delta formula lands in a single hyperoval class over GF(64) (the
    // one with the order-60 stabilizer); verify that while building it
    const auto deltas = subiaco_deltas(f);
    std::vector<FuncTable> sub_tables;
    for (unsigned d : deltas) {
        const FuncTable t = subiaco_table(f, d);
        if (!is_o_permutation(f, t))
            throw std::runtime_error("subiaco table failed for delta " + std::to_string(d));
        sub_tables.push_back(t);
    }
    std::cout << sub_tables.size() << " Subiaco deltas over GF(64); classifying..." << std::endl;
    const auto orbit1 = opoly_orbit(f, sub_tables.front());
    std::cout << "  delta-formula class orbit: " << orbit1.size() << " o-polynomials"
              << std::endl;
    for (const auto& t : sub_tables)
        if (!std::binary_search(orbit1.begin(), orbit1.end(), normalize_opoly(f, t)))
            throw std::runtime_error("delta formula produced a second class unexpectedly");

    const FuncTable ade = adelaide_table(f);
    if (!is_o_permutation(f, ade)) throw std::runtime_error("adelaide table invalid");

    std::vector<CatalogEntry> entries{
        entry_from_table(f, "regular", monomial(f, 2), -1),
        entry_from_table(f, "subiaco-i", sub_tables.front(), -1),
        entry_from_table(f, "adelaide", ade, -1),
    };
    for (const auto& e : entries) {
        const auto v = validate_entry(f, e);
        if (!v.ok) throw std::runtime_error("entry " + e.name + " invalid: " + v.failure);
    }

    std::cout << "expanding the three formula-backed GF(64) hyperovals..." << std::endl;
    const OvalCatalog known = expand_catalog(f, entries);
    std::cout << "  " << known.classes.size() << " oval classes, " << known.opoly_count()
              << " o-polynomials" << std::endl;

    std::cout << "searching for hyperovals with an order-5 automorphism..." << std::endl;
    const auto hypers = z5_invariant_hyperovals(f);
    std::cout << "  found " << hypers.size() << " invariant hyperovals" << std::endl;

    std::vector<FuncTable> new_labels;
    for (const auto& h : hypers) {
        const FuncTable g = hyperoval_to_opermutation(f, h, 0);
        if (!is_o_permutation(f, g))
            throw std::runtime_error("search produced a non-o-permutation");
        const FuncTable gn = normalize_opoly(f, g);
        if (known.contains_opoly(gn)) continue;
        bool seen = false;
        for (const auto& lab : new_labels)
            if (equivalent(f, lab, gn)) {
                seen = true;
                break;
            }
        if (!seen) new_labels.push_back(class_label(f, gn));
    }
    std::cout << "  " << new_labels.size() << " hyperoval class(es) beyond the formula-backed "
              << "three" << std::endl;
    if (new_labels.size() != 1)
        throw std::runtime_error("expected exactly one new hyperoval class (subiaco-ii), got " +
                                 std::to_string(new_labels.size()));
    entries.insert(entries.begin() + 2,
                   entry_from_table(f, "subiaco-ii", new_labels.front(), -1));

    std::cout << "verifying the full GF(64) expansion (this is the long step)..." << std::endl;
    const OvalCatalog full = expand_catalog(f, entries);
    std::cout << "  " << full.classes.size() << " classes, " << full.opoly_count()
              << " o-polynomials, " << full.opermutation_count() << " o-permutations"
              << std::endl;
    if (full.classes.size() != 19)
        throw std::runtime_error("GF(64) expansion gave " + std::to_string(full.classes.size()) +
                                 " classes, expected 19");

    for (auto& e : entries) {
        const auto labels = ovals_from_hyperoval(f, e);
        e.expected_ovals = static_cast<int>(labels.size());
        std::cout << "  " << e.name << ": " << labels.size() << " oval classes" << std::endl;
    }

    save_catalog(dir + "/catalog_gf64.cat", entries,
                 "hyperovals of PG(2,64): regular, the two Subiaco classes (subiaco-ii "
                 "recovered by the order-5 search), Adelaide");
    std::cout << "wrote catalog_gf64.cat\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ovalkit catalog generator"};
    std::string out_dir = "data";
    std::uint64_t seed = 0x0c5a11ab;
    std::vector<int> degrees{3, 4, 5, 6};
    app.add_option("--out-dir", out_dir, "output directory");
    app.add_option("--seed", seed, "seed for the GF(32) discovery sampler");
    app.add_option("--degrees", degrees, "which field degrees to generate");
    CLI11_PARSE(app, argc, argv);

    std::filesystem::create_directories(out_dir);
    try {
        for (int n : degrees) {
            if (n == 3) write_gf8(out_dir);
            if (n == 4) write_gf16(out_dir);
            if (n == 5) write_gf32(out_dir, seed);
            if (n == 6) write_gf64(out_dir);
        }
    } catch (const std::exception& e) {
        std::cerr << "catalog-gen failed: " << e.what() << std::endl;
        return 1;
    }
    return 0;
}
