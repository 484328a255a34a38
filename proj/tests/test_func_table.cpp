#include "doctest.h"
#include "ovalkit/func_table.hpp"

#include <random>
#include <set>

using namespace ovk;

TEST_CASE("difference quotients") {
    const Gf& f8 = Gf::standard(3);

    SUBCASE("f = x^2, s = 0: f_0(x) = x") {
        const FuncTable sq = monomial(f8, 2);
        const FuncTable fs = difference_quotient(f8, sq, 0);
        for (unsigned x = 1; x < 8; ++x) CHECK(fs.v[x] == x);
    }

    SUBCASE("f = identity: every f_s is constant 1") {
        const FuncTable id = monomial(f8, 1);
        for (unsigned s = 0; s < 8; ++s) {
            const FuncTable fs = difference_quotient(f8, id, s);
            for (unsigned x = 1; x < 8; ++x) CHECK(fs.v[x] == 1);
        }
    }

    SUBCASE("f = x^4, s = 1: a permutation of the nonzero elements") {
        const FuncTable f = monomial(f8, 4);
        const FuncTable fs = difference_quotient(f8, f, 1);
        std::set<unsigned> vals;
        for (unsigned x = 1; x < 8; ++x) vals.insert(fs.v[x]);
        CHECK(vals.size() == 7);
        CHECK(vals.count(0) == 0);
    }
}

TEST_CASE("o-permutation predicate") {
    const Gf& f8 = Gf::standard(3);
    CHECK(is_o_permutation(f8, monomial(f8, 2)));   // pointed conic frame
    CHECK(is_o_permutation(f8, monomial(f8, 4)));   // conic frame (x^(1/2))
    CHECK(!is_o_permutation(f8, monomial(f8, 1)));  // identity: f_s constant
    CHECK(!is_o_permutation(f8, monomial(f8, 3)));
}

TEST_CASE("normalize") {
    const Gf& f8 = Gf::standard(3);
    const FuncTable sq = monomial(f8, 2);
    CHECK(normalize_opoly(f8, sq) == sq);  // already 1 at 1
    for (unsigned lam = 2; lam < 8; ++lam)
        CHECK(normalize_opoly(f8, scale(f8, lam, sq)) == sq);
    CHECK_THROWS(normalize_opoly(f8, monomial(f8, 1)));
}

TEST_CASE("interpolation") {
    const Gf& f8 = Gf::standard(3);

    SUBCASE("monomials come back out") {
        const auto c2 = interpolate(f8, monomial(f8, 2));
        CHECK(poly_degree(c2) == 2);
        CHECK(c2[2] == 1);
        const auto c4 = interpolate(f8, monomial(f8, 4));
        CHECK(poly_degree(c4) == 4);
        CHECK(c4[4] == 1);
    }

    SUBCASE("round-trip on random tables") {
        std::mt19937_64 rng(2024);
        for (int k = 2; k <= 4; ++k) {
            const Gf& f = Gf::standard(k);
            for (int trial = 0; trial < 34; ++trial) {
                std::vector<unsigned> vals(f.order());
                for (unsigned x = 1; x < f.order(); ++x)
                    vals[x] = static_cast<unsigned>(rng() % f.order());
                const FuncTable t = make_func(f, vals);
                CHECK(table_of_poly(f, interpolate(f, t)) == t);
            }
        }
    }
}

TEST_CASE("oval point sets") {
    const Gf& f8 = Gf::standard(3);
    const FuncTable f = monomial(f8, 4);
    const auto pts = oval_points(f8, f);
    CHECK(pts.size() == 9);  // q + 1

    SUBCASE("no 3 of the 9 points collinear (all 84 triples)") {
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j)
                for (std::size_t k = j + 1; k < pts.size(); ++k)
                    CHECK(!collinear(f8, pts[i], pts[j], pts[k]));
    }

    SUBCASE("every line through the nucleus (0,0,1) meets D(f) exactly once") {
        // lines through the nucleus are x1 = c*x0; count oval points per line
        for (unsigned c = 0; c < 8; ++c) {
            int hits = 0;
            for (const auto& p : pts)
                if (p.x1 == f8.mul(c, p.x0)) ++hits;
            CHECK(hits == 1);
        }
        int hits_inf = 0;  // the line x0 = 0
        for (const auto& p : pts)
            if (p.x0 == 0) ++hits_inf;
        CHECK(hits_inf == 1);
    }
}

TEST_CASE("brute-force o-permutation enumeration") {
    SUBCASE("GF(2): only the identity") {
        const auto all = brute_force_opermutations(Gf::standard(1));
        REQUIRE(all.size() == 1);
        CHECK(all[0].v[1] == 1);
    }

    SUBCASE("GF(8): exactly 70") {
        CHECK(brute_force_opermutations(Gf::standard(3)).size() == 70);
    }

    SUBCASE("GF(4): scalar classes of size q-1") {
        const Gf& f4 = Gf::standard(2);
        const auto all = brute_force_opermutations(f4);
        CHECK(all.size() % 3 == 0);
        for (const auto& f : all)
            for (unsigned lam = 1; lam < 4; ++lam)
                CHECK(is_o_permutation(f4, scale(f4, lam, f)));
    }

    SUBCASE("q = 32 is refused") {
        CHECK_THROWS(brute_force_opermutations(Gf::standard(5)));
    }
}

TEST_CASE("scalar closure and degree bound") {
    const Gf& f8 = Gf::standard(3);
    const auto all = brute_force_opermutations(f8);
    std::set<FuncTable> set_all(all.begin(), all.end());
    int opolys = 0;
    for (const auto& f : all) {
        for (unsigned lam = 1; lam < 8; ++lam) CHECK(set_all.count(scale(f8, lam, f)) == 1);
        if (f.v[1] == 1) {
            ++opolys;
            CHECK(poly_degree(interpolate(f8, f)) <= 6);  // q - 2
        }
    }
    CHECK(opolys * 7 == 70);  // classes of size q-1 under scalars
}
