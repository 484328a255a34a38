#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace ovk {

// Arithmetic in GF(2^k), k <= 6. Elements are k-bit patterns (polynomials over
// GF(2) modulo the defining irreducible polynomial); they are ordered by their
// integer value, and every "lexicographic" order downstream refers to that.
//
// Multiplication runs on log/exp tables over a fixed generator, so a Gf is
// immutable after construction and safe for concurrent reads.
class Gf {
public:
    static constexpr int max_degree = 6;

    // Builds the field, verifying that `modulus` is irreducible of degree k.
    // Throws std::invalid_argument with the offending factor otherwise.
    Gf(int degree, unsigned modulus);

    // The fixed default fields used by all file formats:
    //   GF(2):(1,3)  GF(4):(2,7)  GF(8):(3,11)  GF(16):(4,19)
    //   GF(32):(5,37)  GF(64):(6,67)
    static const Gf& standard(int degree);
    static unsigned standard_modulus(int degree);

    int degree() const { return k_; }
    unsigned order() const { return q_; }
    unsigned modulus() const { return mod_; }

    unsigned add(unsigned a, unsigned b) const { return a ^ b; }

    unsigned mul(unsigned a, unsigned b) const {
        if (a == 0 || b == 0) return 0;
        return expt_[logt_[a] + logt_[b]];
    }

    // Throws std::domain_error on x = 0.
    unsigned inv(unsigned x) const;

    unsigned div(unsigned a, unsigned b) const { return mul(a, inv(b)); }

    unsigned pow(unsigned a, long long e) const;

    // Unique square root in characteristic 2: sqrt(x) = x^(q/2).
    unsigned sqrt(unsigned x) const { return sqrtt_[x]; }

    // Frobenius iterate x^(2^e).
    unsigned frob(unsigned x, int e) const;

    // Absolute trace to GF(2).
    unsigned trace(unsigned x) const;

    // Multiplicative order (x != 0).
    unsigned mult_order(unsigned x) const;

    // The divisors d of k, one subfield each.
    std::vector<int> subfield_degrees() const;

    // Elements of the degree-d subfield: fixed points of x -> x^(2^d).
    // Requires d | k.
    std::vector<unsigned> subfield_elements(int d) const;

    // "(k, modulus)" declaration used by the file formats, e.g. "3 11".
    std::string decl() const;

    bool operator==(const Gf& o) const { return k_ == o.k_ && mod_ == o.mod_; }

private:
    int k_;
    unsigned q_;
    unsigned mod_;
    std::array<std::uint8_t, 64> logt_{};   // log base g of nonzero elements
    std::array<std::uint8_t, 127> expt_{};  // g^i, doubled to skip the mod
    std::array<std::uint8_t, 64> invt_{};
    std::array<std::uint8_t, 64> sqrtt_{};
};

namespace gf2poly {
// Polynomials over GF(2) as bit patterns (bit i = coefficient of x^i), used
// for modulus checking; no field tables involved.
int degree(unsigned p);
unsigned mul(unsigned a, unsigned b);
unsigned mod(unsigned a, unsigned m);
// Returns 0 if p is irreducible, else a nontrivial factor.
unsigned find_factor(unsigned p);
std::string to_string(unsigned p);
}  // namespace gf2poly

}  // namespace ovk
