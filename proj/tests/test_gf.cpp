#include "doctest.h"
#include "ovalkit/gf.hpp"

#include <stdexcept>

using namespace ovk;

TEST_CASE("make_field basics") {
    const Gf f8(3, 0b1011);
    CHECK(f8.order() == 8);
    CHECK(f8.degree() == 3);

    // x^3 + x^2 + x + 1 = (x+1)(x^2+1) is reducible
    CHECK_THROWS_AS(Gf(3, 0b1111), std::invalid_argument);
    try {
        Gf bad(3, 0b1111);
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("reducible") != std::string::npos);
    }

    // x^6 + x + 1 is primitive: x has multiplicative order 63
    const Gf f64(6, 0b1000011);
    CHECK(f64.order() == 64);
    CHECK(f64.mult_order(2) == 63);
}

TEST_CASE("GF(8) multiplication against the modulus x^3+x+1") {
    const Gf& f = Gf::standard(3);
    CHECK(f.mul(2, 2) == 4);      // x * x = x^2
    CHECK(f.mul(4, 2) == 3);      // x^2 * x = x^3 = x + 1
    CHECK(f.inv(1) == 1);
    CHECK(f.sqrt(1) == 1);
    CHECK(f.sqrt(2) == f.pow(2, 4));  // sqrt(x) = x^4 since x^8 = x
    CHECK(f.mul(f.sqrt(2), f.sqrt(2)) == 2);
}

TEST_CASE("field axioms and characteristic-2 identities") {
    for (int k = 1; k <= 6; ++k) {
        const Gf& f = Gf::standard(k);
        const unsigned q = f.order();
        for (unsigned x = 0; x < q; ++x) {
            CHECK(f.add(x, x) == 0);
            if (x != 0) {
                CHECK(f.pow(x, static_cast<long long>(q) - 1) == 1);  // Lagrange
                CHECK(f.mul(x, f.inv(x)) == 1);
            }
            CHECK(f.mul(f.sqrt(x), f.sqrt(x)) == x);
            // sqrt iterated k times is the identity
            unsigned y = x;
            for (int i = 0; i < k; ++i) y = f.sqrt(y);
            CHECK(y == x);
        }
        // associativity and distributivity on a grid
        for (unsigned a = 0; a < q; a += 3)
            for (unsigned b = 1; b < q; b += 5)
                for (unsigned c = 0; c < q; c += 7) {
                    CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
    }
}

TEST_CASE("inv(0) is a domain error") {
    CHECK_THROWS_AS(Gf::standard(3).inv(0), std::domain_error);
}

TEST_CASE("subfield lattice") {
    CHECK(Gf::standard(6).subfield_degrees() == std::vector<int>{1, 2, 3, 6});
    CHECK(Gf::standard(5).subfield_degrees() == std::vector<int>{1, 5});

    // degree-2 subfield of GF(16): {0, 1, w, w^2} with w^3 = 1
    const Gf& f16 = Gf::standard(4);
    const auto sub = f16.subfield_elements(2);
    REQUIRE(sub.size() == 4);
    CHECK(sub[0] == 0);
    CHECK(sub[1] == 1);
    for (unsigned w : sub)
        if (w > 1) CHECK(f16.pow(w, 3) == 1);

    // subfield elements are closed under the field operations
    for (int k = 1; k <= 6; ++k) {
        const Gf& f = Gf::standard(k);
        for (int d : f.subfield_degrees()) {
            const auto els = f.subfield_elements(d);
            CHECK(els.size() == (1u << d));
            for (unsigned a : els)
                for (unsigned b : els) {
                    bool found_sum = false, found_prod = false;
                    for (unsigned c : els) {
                        if (c == f.add(a, b)) found_sum = true;
                        if (c == f.mul(a, b)) found_prod = true;
                    }
                    CHECK(found_sum);
                    CHECK(found_prod);
                }
        }
    }
}

TEST_CASE("frobenius and trace") {
    const Gf& f = Gf::standard(5);
    for (unsigned x = 0; x < 32; ++x) {
        CHECK(f.frob(x, 1) == f.mul(x, x));
        CHECK(f.frob(x, 5) == x);
        const unsigned t = f.trace(x);
        CHECK((t == 0 || t == 1));
    }
}
