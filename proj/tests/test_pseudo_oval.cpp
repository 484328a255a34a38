#include "doctest.h"
#include "ovalkit/catalog.hpp"
#include "ovalkit/pseudo_oval.hpp"

#include <set>

using namespace ovk;

#ifndef OVK_SOURCE_DIR
#define OVK_SOURCE_DIR "."
#endif

namespace {
const std::string kData = std::string(OVK_SOURCE_DIR) + "/data";
}

TEST_CASE("bit matrices") {
    const Gf& f8 = Gf::standard(3);
    const BitMat id = BitMat::identity(3);
    CHECK(id.apply(0b101) == 0b101);
    CHECK(BitMat::mult_by(f8, 1) == id);
    CHECK(BitMat::mult_by(f8, 0) == BitMat::zero(3));

    // multiplication matrices compose like the field
    for (unsigned a = 0; a < 8; ++a)
        for (unsigned b = 0; b < 8; ++b) {
            CHECK(BitMat::mult_by(f8, a) * BitMat::mult_by(f8, b) ==
                  BitMat::mult_by(f8, f8.mul(a, b)));
            CHECK(BitMat::mult_by(f8, a) + BitMat::mult_by(f8, b) ==
                  BitMat::mult_by(f8, a ^ b));
        }
    CHECK(!BitMat::zero(3).invertible());
    CHECK(BitMat::mult_by(f8, 5).invertible());
}

TEST_CASE("elementary pseudo-ovals over GF(8): full verification") {
    const Gf& f8 = Gf::standard(3);
    const FuncTable conic = monomial(f8, 4);
    const PseudoOval o = elementary(f8, conic);

    CHECK(o.elements.size() == 9);  // 2^n + 1
    VerifyOptions vo;
    vo.force_exhaustive = true;  // all 84 triples
    CHECK(verify_pseudo_oval(o, vo).ok);

    CHECK_THROWS(elementary(f8, monomial(f8, 1)));

    SUBCASE("tangent uniqueness again via the verifier witness path") {
        PseudoOval bad = o;
        bad.tangents[2] = bad.tangents[3];
        const auto r = verify_pseudo_oval(bad, vo);
        CHECK(!r.ok);
        CHECK(!r.witness.empty());
    }

    SUBCASE("single corrupted basis row is rejected with a witness") {
        PseudoOval bad = o;
        std::vector<Row> rows = bad.elements[4].rows();
        rows[0] ^= 0b10;  // flip one bit
        bad.elements[4] = Subspace(9, rows);
        const auto r = verify_pseudo_oval(bad, vo);
        CHECK(!r.ok);
        CHECK(!r.witness.empty());
    }
}

TEST_CASE("every GF(8) and GF(16) catalog oval passes exhaustively") {
    for (int n : {3, 4}) {
        const Gf& f = Gf::standard(n);
        const auto cat =
            expand_catalog(f, load_catalog(kData + "/catalog_gf" + std::to_string(1 << n) + ".cat"));
        VerifyOptions vo;
        vo.force_exhaustive = true;
        for (const auto& cls : cat.classes) {
            const PseudoOval o = elementary(f, cls.label, vo);
            CHECK(verify_pseudo_oval(o, vo).ok);
        }
    }
}

TEST_CASE("nucleus swap") {
    const Gf& f8 = Gf::standard(3);
    const PseudoOval o = elementary(f8, monomial(f8, 4));
    VerifyOptions vo;
    vo.force_exhaustive = true;

    const PseudoOval s = nucleus_swap(o, 5, vo);
    CHECK(verify_pseudo_oval(s, vo).ok);
    CHECK(s.nucleus == o.elements[5]);

    SUBCASE("double swap is the identity") {
        const PseudoOval ss = nucleus_swap(s, 5, vo);
        CHECK(ss.elements == o.elements);
        CHECK(ss.nucleus == o.nucleus);
    }

    SUBCASE("swapping the conic at the infinite point gives the pointed conic") {
        // swap at X_inf = reduce((0,1,0)) (last element of the construction),
        // then exchange the last two GF(8)-coordinate blocks; the result is
        // exactly the elementary pseudo-oval of x^2
        const std::size_t inf_index = o.elements.size() - 1;
        const PseudoOval sw = nucleus_swap(o, inf_index, vo);
        // coordinate swap y <-> z on GF(2)^9: blocks [3,6) and [6,9)
        auto swap_blocks = [&](const Subspace& sub) {
            std::vector<Row> rows;
            for (Row r : sub.rows()) {
                const Row x = r & 0b111;
                const Row y = (r >> 3) & 0b111;
                const Row z = (r >> 6) & 0b111;
                rows.push_back(x | (z << 3) | (y << 6));
            }
            return Subspace(9, rows);
        };
        std::set<Subspace> swapped;
        for (const auto& e : sw.elements) swapped.insert(swap_blocks(e));
        const PseudoOval pc = elementary(f8, monomial(f8, 2), vo);
        std::set<Subspace> expect(pc.elements.begin(), pc.elements.end());
        CHECK(swapped == expect);
    }
}

TEST_CASE("projection spread and spread sets") {
    const Gf& f8 = Gf::standard(3);
    const PseudoOval o = elementary(f8, monomial(f8, 4));

    for (std::size_t xi : {std::size_t(0), std::size_t(4), o.elements.size() - 1}) {
        const ProjectionSpread ps = projection_spread(o, xi);
        CHECK(ps.elements.size() == 9);
        CHECK(verify_spread(ps.elements, 3).ok);  // partition of 2^6 - 1 vectors
    }

    SUBCASE("spread of the elementary pseudo-oval is regular (field closure)") {
        for (std::size_t xi = 0; xi < o.elements.size(); ++xi) {
            const ProjectionSpread ps = projection_spread(o, xi);
            const SpreadSet ss = spread_set(ps.elements, ps.tangent_image, 0);
            CHECK(is_desarguesian(ss));
        }
    }

    SUBCASE("corrupted spread set is rejected") {
        const ProjectionSpread ps = projection_spread(o, 0);
        SpreadSet ss = spread_set(ps.elements, ps.tangent_image, 0);
        CHECK(is_desarguesian(ss));
        ss.mats[3].rows[1] ^= 0b100;
        CHECK(!is_desarguesian(ss));
    }

    SUBCASE("normalized spread set contains zero and identity") {
        const ProjectionSpread ps = projection_spread(o, 2);
        const SpreadSet ss = spread_set(ps.elements, ps.tangent_image, 0);
        CHECK(ss.mats.size() == 8);
        CHECK(std::count(ss.mats.begin(), ss.mats.end(), BitMat::zero(3)) == 1);
        CHECK(std::count(ss.mats.begin(), ss.mats.end(), BitMat::identity(3)) == 1);
    }

    SUBCASE("verify_spread rejects a corrupted element") {
        ProjectionSpread ps = projection_spread(o, 1);
        std::vector<Row> rows = ps.elements[2].rows();
        rows[0] ^= 0b1000;
        ps.elements[2] = Subspace(6, rows);
        const auto r = verify_spread(ps.elements, 3);
        CHECK(!r.ok);
        CHECK(!r.witness.empty());
    }
}

TEST_CASE("Steinke coordinatization") {
    const Gf& f8 = Gf::standard(3);
    const FuncTable f = monomial(f8, 2);
    const PseudoOval o = elementary(f8, f);
    // oval_points order: t = 0..q-1 then (0,1,0); the t = 0 point reduces to
    // the first coordinate block
    const std::size_t inf_index = o.elements.size() - 1;
    const SteinkeCoords sc = steinke_coordinates(o, inf_index, 0);

    CHECK(sc.g[0] == BitMat::zero(3));
    CHECK(sc.h[0] == BitMat::zero(3));

    SUBCASE("(h, g) realize the graph of the oval function in matrix form") {
        // labels are h-columns: z = vec(t); then h(z) = M_t and g(z) = M_f(t)
        for (unsigned z = 0; z < 8; ++z) {
            CHECK(sc.h[z] == BitMat::mult_by(f8, z));
            CHECK(sc.g[z] == BitMat::mult_by(f8, f.v[z]));
        }
    }

    SUBCASE("{g(z)} equals the spread set of the projection from X_inf") {
        // Sigma = <N, X_0> is exactly the complement the projection uses when
        // X = X_inf, because X_inf's pivots are the middle block
        const ProjectionSpread ps = projection_spread(o, inf_index);
        const SpreadSet ss = spread_set(ps.elements, ps.tangent_image, 0);
        std::multiset<BitMat> from_spread(ss.mats.begin(), ss.mats.end());
        std::multiset<BitMat> from_steinke;
        for (unsigned z = 0; z < 8; ++z) from_steinke.insert(sc.g[z]);
        CHECK(from_spread == from_steinke);
    }

    SUBCASE("the swapped pseudo-oval at X_inf has nucleus X_inf") {
        VerifyOptions vo;
        vo.force_exhaustive = true;
        const PseudoOval sw = nucleus_swap(o, inf_index, vo);
        CHECK(sw.nucleus == o.elements[inf_index]);
    }

    SUBCASE("degenerate frames are rejected") {
        CHECK_THROWS(steinke_coordinates(o, 0, 0));
        PseudoOval no_nucleus = o;
        no_nucleus.nucleus = Subspace(9);
        CHECK_THROWS(steinke_coordinates(no_nucleus, inf_index, 0));
    }
}

TEST_CASE("field spread set is the multiplication-matrix field") {
    const Gf& f16 = Gf::standard(4);
    const SpreadSet ss = field_spread_set(f16);
    CHECK(ss.mats.size() == 16);
    CHECK(is_desarguesian(ss));
}

TEST_CASE("sampled verification for a GF(32) catalog oval") {
    const Gf& f32 = Gf::standard(5);
    // the translation oval x^4 is a catalog representative's frame
    const PseudoOval o = elementary(f32, monomial(f32, 4));
    CHECK(o.elements.size() == 33);
    const auto r = verify_pseudo_oval(o);  // seeded sampling beyond q = 16
    CHECK(r.ok);
}
