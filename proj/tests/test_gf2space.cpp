#include "doctest.h"
#include "ovalkit/func_table.hpp"
#include "ovalkit/gf2space.hpp"

#include <random>
#include <set>

using namespace ovk;

TEST_CASE("canonical echelon form is unique per subspace") {
    // same space from different generating sets
    Subspace a(6, {0b000111, 0b011000, 0b111111});
    Subspace b(6, {0b111111 ^ 0b000111, 0b011000, 0b000111 ^ 0b011000});
    Subspace c(6, {0b011000 ^ 0b000111, 0b000111, 0b111111 ^ 0b011000});
    CHECK(a == b);
    CHECK(a == c);
    CHECK(a.rank() == 3);
    for (Row v : a.vectors()) CHECK(a.contains(v));
}

TEST_CASE("span and meet identities") {
    Subspace x(9, {0b1, 0b10, 0b100});
    CHECK(span_of(x, x) == x);
    CHECK(meet(x, x) == x);

    Subspace y(9, {0b1000, 0b10000, 0b100000});
    CHECK(span_of(x, y).rank() == 6);  // disjoint rank-3 spaces span rank 6
    CHECK(meet(x, y).rank() == 0);
}

TEST_CASE("Grassmann identity on random pairs") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 400; ++trial) {
        const int m = 6 + static_cast<int>(rng() % 7);  // ambient 6..12
        auto rand_space = [&] {
            std::vector<Row> rows;
            const int nr = 1 + static_cast<int>(rng() % 4);
            for (int i = 0; i < nr; ++i) rows.push_back(static_cast<Row>(rng()) & ((1u << m) - 1));
            return Subspace(m, rows);
        };
        const Subspace a = rand_space(), b = rand_space();
        CHECK(a.rank() + b.rank() == span_of(a, b).rank() + meet(a, b).rank());
        CHECK(span_of(a, b).contains(a));
        CHECK(a.contains(meet(a, b)));
    }
}

TEST_CASE("mismatched ambient dimensions are rejected") {
    Subspace a(6, {1}), b(7, {1});
    CHECK_THROWS(span_of(a, b));
    CHECK_THROWS(meet(a, b));
}

TEST_CASE("field reduction") {
    const Gf& f8 = Gf::standard(3);

    SUBCASE("rejects zero") {
        CHECK_THROWS(field_reduce(f8, {0, 0, 0}));
    }

    SUBCASE("coordinate block structure") {
        const Subspace s = field_reduce(f8, {1, 0, 0});
        CHECK(s.rank() == 3);
        CHECK(s.ambient() == 9);
        // the span of (1,0,0),(x,0,0),(x^2,0,0): exactly bits 0..2
        for (Row v : s.vectors()) CHECK((v & ~Row(0b111)) == 0);
    }

    SUBCASE("injective on projective points, trivial pairwise meets on an oval") {
        const FuncTable f = monomial(f8, 4);
        std::vector<Subspace> reduced;
        for (const auto& p : oval_points(f8, f))
            reduced.push_back(field_reduce(f8, {p.x0, p.x1, p.x2}));
        std::set<Subspace> dedup(reduced.begin(), reduced.end());
        CHECK(dedup.size() == reduced.size());
        for (std::size_t i = 0; i < reduced.size(); ++i)
            for (std::size_t j = i + 1; j < reduced.size(); ++j)
                CHECK(meet(reduced[i], reduced[j]).rank() == 0);
    }

    SUBCASE("scalar multiples of the point give the same subspace") {
        const Gf& f16 = Gf::standard(4);
        for (unsigned lam = 1; lam < 16; ++lam) {
            const Subspace s1 = field_reduce(f16, {3, 7, 9});
            const Subspace s2 = field_reduce(
                f16, {f16.mul(lam, 3), f16.mul(lam, 7), f16.mul(lam, 9)});
            CHECK(s1 == s2);
        }
    }

    SUBCASE("n=1 reduces to the identity map on PG(2,2)") {
        const Gf& f2 = Gf::standard(1);
        const Subspace s = field_reduce(f2, {1, 0, 1});
        CHECK(s.rank() == 1);
        CHECK(s.rows() == std::vector<Row>{0b101});
    }

    SUBCASE("three elements of the conic-derived pseudo-oval span rank 9") {
        const FuncTable conic = monomial(f8, 4);  // x^(1/2) over GF(8)
        const auto pts = oval_points(f8, conic);
        const Subspace a = field_reduce(f8, {pts[0].x0, pts[0].x1, pts[0].x2});
        const Subspace b = field_reduce(f8, {pts[3].x0, pts[3].x1, pts[3].x2});
        const Subspace c = field_reduce(f8, {pts[8].x0, pts[8].x1, pts[8].x2});
        CHECK(span_of(span_of(a, b), c).rank() == 9);
    }
}

TEST_CASE("subspace serialization round-trips as row integers") {
    Subspace s(9, {0b101, 0b110001, 0b100000010});
    Subspace t(9, s.rows());
    CHECK(s == t);
}
