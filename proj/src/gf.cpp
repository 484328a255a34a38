#include "ovalkit/gf.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace ovk {

namespace gf2poly {

int degree(unsigned p) {
    int d = -1;
    while (p) {
        ++d;
        p >>= 1;
    }
    return d;
}

unsigned mul(unsigned a, unsigned b) {
    unsigned r = 0;
    while (b) {
        if (b & 1) r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

unsigned mod(unsigned a, unsigned m) {
    int dm = degree(m);
    for (int d = degree(a); d >= dm; d = degree(a)) a ^= m << (d - dm);
    return a;
}

unsigned find_factor(unsigned p) {
    int d = degree(p);
    if (d < 1) return 1;  // units and 0 are not irreducible
    for (unsigned f = 2; degree(f) <= d / 2; ++f) {
        if (mod(p, f) == 0) return f;
    }
    return 0;
}

std::string to_string(unsigned p) {
    if (p == 0) return "0";
    std::string s;
    for (int i = degree(p); i >= 0; --i) {
        if (!(p >> i & 1)) continue;
        if (!s.empty()) s += "+";
        if (i == 0)
            s += "1";
        else if (i == 1)
            s += "x";
        else
            s += "x^" + std::to_string(i);
    }
    return s;
}

}  // namespace gf2poly

Gf::Gf(int degree, unsigned modulus) : k_(degree), q_(1u << degree), mod_(modulus) {
    if (degree < 1 || degree > max_degree)
        throw std::invalid_argument("field degree must be in 1..6, got " + std::to_string(degree));
    if (gf2poly::degree(modulus) != degree)
        throw std::invalid_argument("modulus " + gf2poly::to_string(modulus) +
                                    " does not have degree " + std::to_string(degree));
    if (unsigned f = gf2poly::find_factor(modulus))
        throw std::invalid_argument("modulus " + gf2poly::to_string(modulus) +
                                    " is reducible: divisible by " + gf2poly::to_string(f));

    auto raw_mul = [&](unsigned a, unsigned b) {
        return gf2poly::mod(gf2poly::mul(a, b), mod_);
    };

    // Find a generator of the (cyclic) multiplicative group.
    unsigned g = 0;
    for (unsigned c = 2; c < q_ && !g; ++c) {
        unsigned x = c;
        unsigned ord = 1;
        while (x != 1) {
            x = raw_mul(x, c);
            ++ord;
        }
        if (ord == q_ - 1) g = c;
    }
    if (q_ == 2) g = 1;

    unsigned x = 1;
    for (unsigned i = 0; i < q_ - 1; ++i) {
        expt_[i] = static_cast<std::uint8_t>(x);
        expt_[i + (q_ - 1)] = static_cast<std::uint8_t>(x);
        logt_[x] = static_cast<std::uint8_t>(i);
        x = raw_mul(x, g);
    }
    for (unsigned a = 1; a < q_; ++a) {
        invt_[a] = expt_[(q_ - 1 - logt_[a]) % (q_ - 1)];
        sqrtt_[a] = static_cast<std::uint8_t>(pow(a, q_ / 2));
    }
}

unsigned Gf::inv(unsigned x) const {
    if (x == 0) throw std::domain_error("inverse of 0 in GF(" + std::to_string(q_) + ")");
    return invt_[x];
}

unsigned Gf::pow(unsigned a, long long e) const {
    if (a == 0) return e == 0 ? 1u : 0u;
    long long m = q_ - 1;
    e %= m;
    if (e < 0) e += m;
    unsigned r = 1;
    unsigned base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

unsigned Gf::frob(unsigned x, int e) const {
    e %= k_;
    if (e < 0) e += k_;
    for (int i = 0; i < e; ++i) x = mul(x, x);
    return x;
}

unsigned Gf::trace(unsigned x) const {
    unsigned t = 0, y = x;
    for (int i = 0; i < k_; ++i) {
        t ^= y;
        y = mul(y, y);
    }
    return t;
}

unsigned Gf::mult_order(unsigned x) const {
    if (x == 0) throw std::domain_error("multiplicative order of 0");
    unsigned ord = 1, y = x;
    while (y != 1) {
        y = mul(y, x);
        ++ord;
    }
    return ord;
}

std::vector<int> Gf::subfield_degrees() const {
    std::vector<int> ds;
    for (int d = 1; d <= k_; ++d)
        if (k_ % d == 0) ds.push_back(d);
    return ds;
}

std::vector<unsigned> Gf::subfield_elements(int d) const {
    if (d < 1 || k_ % d != 0)
        throw std::invalid_argument("subfield degree " + std::to_string(d) +
                                    " does not divide " + std::to_string(k_));
    std::vector<unsigned> elems;
    for (unsigned x = 0; x < q_; ++x)
        if (frob(x, d) == x) elems.push_back(x);
    return elems;
}

std::string Gf::decl() const { return std::to_string(k_) + " " + std::to_string(mod_); }

unsigned Gf::standard_modulus(int degree) {
    // x+1, x^2+x+1, x^3+x+1, x^4+x+1, x^5+x^2+1, x^6+x+1
    static constexpr unsigned mods[7] = {0, 0b11, 0b111, 0b1011, 0b10011, 0b100101, 0b1000011};
    if (degree < 1 || degree > max_degree)
        throw std::invalid_argument("no standard field of degree " + std::to_string(degree));
    return mods[degree];
}

const Gf& Gf::standard(int degree) {
    static std::map<int, Gf> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(degree);
    if (it == cache.end())
        it = cache.emplace(degree, Gf(degree, standard_modulus(degree))).first;
    return it->second;
}

}  // namespace ovk
