#include "doctest.h"
#include "ovalkit/magic.hpp"

#include <random>
#include <set>

using namespace ovk;

namespace {

MagicElement random_element(const Gf& f, std::mt19937_64& rng) {
    for (;;) {
        MagicElement e;
        e.a = static_cast<unsigned>(rng() % f.order());
        e.b = static_cast<unsigned>(rng() % f.order());
        e.c = static_cast<unsigned>(rng() % f.order());
        e.d = static_cast<unsigned>(rng() % f.order());
        e.frob_exp = static_cast<int>(rng() % f.degree());
        if (f.mul(e.a, e.d) ^ f.mul(e.b, e.c)) return e;
    }
}

}  // namespace

TEST_CASE("identity, scalars and Frobenius collapse") {
    const Gf& f8 = Gf::standard(3);
    const FuncTable f = monomial(f8, 2);

    CHECK(magic_apply(f8, magic_identity(), f) == f);

    for (unsigned c = 1; c < 8; ++c) {
        const MagicElement diag{c, 0, 0, c, 0};
        CHECK(magic_apply(f8, diag, monomial(f8, 4)) == monomial(f8, 4));
    }

    // psi = (I, frobenius): coefficient-wise squaring
    const MagicElement fr{1, 0, 0, 1, 1};
    const FuncTable g = magic_apply(f8, fr, f);
    const auto cf = interpolate(f8, f);
    auto cg_expect = cf;
    for (auto& c : cg_expect) c = f8.mul(c, c);
    CHECK(interpolate(f8, g) == cg_expect);
}

TEST_CASE("singular matrices are rejected") {
    const Gf& f8 = Gf::standard(3);
    CHECK_THROWS(magic_apply(f8, MagicElement{2, 4, 1, 2, 0}, monomial(f8, 2)));
}

TEST_CASE("magic action properties (exhaustive over GF(8))") {
    const Gf& f8 = Gf::standard(3);
    const FuncTable f4 = monomial(f8, 4);

    // preservation of o-permutations over every group element
    int checked = 0;
    for (unsigned a = 0; a < 8; ++a)
        for (unsigned b = 0; b < 8; ++b)
            for (unsigned c = 0; c < 8; ++c)
                for (unsigned d = 0; d < 8; ++d) {
                    if ((f8.mul(a, d) ^ f8.mul(b, c)) == 0) continue;
                    for (int e = 0; e < 3; ++e) {
                        const FuncTable img = magic_apply(f8, {a, b, c, d, e}, f4);
                        CHECK(img.v[0] == 0);
                        REQUIRE(is_o_permutation(f8, img));
                        ++checked;
                    }
                }
    CHECK(checked == 3528 * 3);
}

TEST_CASE("composition law and scalar semilinearity on random triples") {
    std::mt19937_64 rng(5150);
    for (int k : {3, 4}) {
        const Gf& f = Gf::standard(k);
        const FuncTable base = monomial(f, 2);
        for (int trial = 0; trial < 250; ++trial) {
            const MagicElement psi = random_element(f, rng);
            const MagicElement phi = random_element(f, rng);
            const FuncTable via_compose = magic_apply(f, magic_compose(f, psi, phi), base);
            const FuncTable via_apply = magic_apply(f, psi, magic_apply(f, phi, base));
            CHECK(via_compose == via_apply);

            const unsigned lam = 1 + static_cast<unsigned>(rng() % (f.order() - 1));
            const FuncTable left = magic_apply(f, psi, scale(f, lam, base));
            const FuncTable right =
                scale(f, f.frob(lam, psi.frob_exp), magic_apply(f, psi, base));
            CHECK(left == right);
        }
    }
}

TEST_CASE("orbits over GF(8)") {
    const Gf& f8 = Gf::standard(3);
    const auto orb_pc = opoly_orbit(f8, monomial(f8, 2));
    const auto orb_c = opoly_orbit(f8, monomial(f8, 4));

    // the conic class is the fixed point x^(1/2); the pointed conic class has
    // the other 9 o-polynomials; together 70 o-permutations
    CHECK(orb_c.size() == 1);
    CHECK(orb_pc.size() == 9);

    std::set<FuncTable> all;
    for (const auto& t : opermutation_orbit(f8, monomial(f8, 2))) all.insert(t);
    for (const auto& t : opermutation_orbit(f8, monomial(f8, 4))) all.insert(t);
    CHECK(all.size() == 70);

    const auto brute = brute_force_opermutations(f8);
    CHECK(std::set<FuncTable>(brute.begin(), brute.end()) == all);

    SUBCASE("orbits are disjoint and closed") {
        for (const auto& t : orb_c) CHECK(!std::binary_search(orb_pc.begin(), orb_pc.end(), t));
        // re-application of any generator adds nothing
        for (const auto& psi : magic_generators(f8))
            for (const auto& t : orb_pc) {
                FuncTable img = magic_apply(f8, psi, t);
                img = scale(f8, f8.inv(img.v[1]), img);
                CHECK(std::binary_search(orb_pc.begin(), orb_pc.end(), img));
            }
    }

    SUBCASE("a larger generating set reaches the same closure") {
        // append the antidiagonal swap to the generator set by closing over
        // explicit applications
        const MagicElement swap{0, 1, 1, 0, 0};
        for (const auto& t : orb_pc) {
            FuncTable img = magic_apply(f8, swap, t);
            img = scale(f8, f8.inv(img.v[1]), img);
            CHECK(std::binary_search(orb_pc.begin(), orb_pc.end(), img));
        }
    }
}

TEST_CASE("equivalence and labels") {
    const Gf& f8 = Gf::standard(3);
    const FuncTable c = monomial(f8, 4), pc = monomial(f8, 2);

    CHECK(equivalent(f8, c, scale(f8, 5, c)));
    CHECK(!equivalent(f8, pc, c));  // conic and pointed conic are distinct classes

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const MagicElement psi = random_element(f8, rng);
        CHECK(equivalent(f8, pc, magic_apply(f8, psi, pc)));
    }

    const FuncTable lab = class_label(f8, scale(f8, 3, pc));
    CHECK(class_label(f8, lab) == lab);  // idempotent
    CHECK(lab == class_label(f8, magic_apply(f8, {1, 0, 3, 1, 2}, pc)));
}

TEST_CASE("randomized property suite over GF(16) and GF(32)") {
    std::mt19937_64 rng(161616);
    for (int k : {4, 5}) {
        const Gf& f = Gf::standard(k);
        const FuncTable f2 = monomial(f, 2);
        const FuncTable fhalf = monomial(f, f.order() / 2);  // x^(1/2)
        for (int trial = 0; trial < 2500; ++trial) {
            const MagicElement psi = random_element(f, rng);
            const FuncTable& base = (trial & 1) ? fhalf : f2;
            const FuncTable img = magic_apply(f, psi, base);
            CHECK(is_o_permutation(f, img));
            const MagicElement phi = random_element(f, rng);
            CHECK(magic_apply(f, magic_compose(f, psi, phi), base) ==
                  magic_apply(f, psi, magic_apply(f, phi, base)));
        }
    }
}
