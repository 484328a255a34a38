#include "ovalkit/func_table.hpp"

#include <numeric>
#include <stdexcept>

namespace ovk {

FuncTable make_func(const Gf& field, const std::vector<unsigned>& values) {
    if (values.size() != field.order())
        throw std::invalid_argument("value table size does not match field order");
    if (values[0] != 0) throw std::invalid_argument("functions must satisfy f(0) = 0");
    FuncTable f;
    f.q = static_cast<std::uint8_t>(field.order());
    for (unsigned x = 0; x < field.order(); ++x) {
        if (values[x] >= field.order())
            throw std::invalid_argument("value out of field range");
        f.v[x] = static_cast<std::uint8_t>(values[x]);
    }
    return f;
}

FuncTable monomial(const Gf& field, unsigned e) {
    FuncTable f;
    f.q = static_cast<std::uint8_t>(field.order());
    for (unsigned x = 0; x < field.order(); ++x)
        f.v[x] = static_cast<std::uint8_t>(field.pow(x, e));
    return f;
}

FuncTable add(const FuncTable& f, const FuncTable& g) {
    FuncTable h;
    h.q = f.q;
    for (unsigned x = 0; x < f.q; ++x) h.v[x] = f.v[x] ^ g.v[x];
    return h;
}

FuncTable scale(const Gf& field, unsigned lambda, const FuncTable& f) {
    FuncTable h;
    h.q = f.q;
    for (unsigned x = 0; x < f.q; ++x)
        h.v[x] = static_cast<std::uint8_t>(field.mul(lambda, f.v[x]));
    return h;
}

bool is_zero(const FuncTable& f) {
    for (unsigned x = 0; x < f.q; ++x)
        if (f.v[x]) return false;
    return true;
}

bool is_permutation(const Gf& field, const FuncTable& f) {
    std::uint64_t seen = 0;
    for (unsigned x = 0; x < field.order(); ++x) {
        const std::uint64_t bit = 1ull << f.v[x];
        if (seen & bit) return false;
        seen |= bit;
    }
    return true;
}

FuncTable difference_quotient(const Gf& field, const FuncTable& f, unsigned s) {
    FuncTable fs;
    fs.q = f.q;
    const unsigned fv = f.v[s];
    for (unsigned x = 1; x < field.order(); ++x)
        fs.v[x] = static_cast<std::uint8_t>(field.div(f.v[x ^ s] ^ fv, x));
    return fs;
}

bool is_o_permutation(const Gf& field, const FuncTable& f) {
    const unsigned q = field.order();
    if (f.v[0] != 0) return false;
    std::uint64_t seen = 1;  // f(0) = 0
    for (unsigned x = 1; x < q; ++x) {
        const std::uint64_t bit = 1ull << f.v[x];
        if (seen & bit) return false;
        seen |= bit;
    }
    for (unsigned s = 0; s < q; ++s) {
        seen = 0;
        const unsigned fv = f.v[s];
        for (unsigned x = 1; x < q; ++x) {
            const std::uint64_t bit = 1ull << field.div(f.v[x ^ s] ^ fv, x);
            if (seen & bit) return false;
            seen |= bit;
        }
        // a collision with 0 cannot happen once f is a permutation
    }
    return true;
}

FuncTable normalize_opoly(const Gf& field, const FuncTable& f) {
    if (!is_o_permutation(field, f))
        throw std::invalid_argument("normalize: not an o-permutation");
    return scale(field, field.inv(f.v[1]), f);
}

std::vector<unsigned> interpolate(const Gf& field, const FuncTable& f) {
    const unsigned q = field.order();
    // Lagrange: sum_a f(a) * l_a(x), built by polynomial arithmetic. O(q^3)
    // bit operations, used only at the serialization boundary.
    std::vector<unsigned> coeffs(q, 0);
    std::vector<unsigned> la(q + 1);
    for (unsigned a = 0; a < q; ++a) {
        if (f.v[a] == 0) continue;
        la.assign(q + 1, 0);
        la[0] = 1;
        unsigned deg = 0;
        unsigned denom = 1;
        for (unsigned b = 0; b < q; ++b) {
            if (b == a) continue;
            // la *= (x + b)   (characteristic 2: x - b = x + b)
            for (unsigned i = deg + 1; i > 0; --i)
                la[i] = la[i - 1] ^ field.mul(la[i], b);
            la[0] = field.mul(la[0], b);
            ++deg;
            denom = field.mul(denom, a ^ b);
        }
        const unsigned w = field.div(f.v[a], denom);
        for (unsigned i = 0; i <= deg; ++i) coeffs[i] ^= field.mul(w, la[i]);
    }
    return coeffs;
}

unsigned eval_poly(const Gf& field, const std::vector<unsigned>& coeffs, unsigned x) {
    unsigned r = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) r = field.mul(r, x) ^ coeffs[i];
    return r;
}

FuncTable table_of_poly(const Gf& field, const std::vector<unsigned>& coeffs) {
    std::vector<unsigned> vals(field.order());
    for (unsigned x = 0; x < field.order(); ++x) vals[x] = eval_poly(field, coeffs, x);
    return make_func(field, vals);
}

int poly_degree(const std::vector<unsigned>& coeffs) {
    for (std::size_t i = coeffs.size(); i-- > 0;)
        if (coeffs[i]) return static_cast<int>(i);
    return -1;
}

bool collinear(const Gf& field, const Pg2Point& a, const Pg2Point& b, const Pg2Point& c) {
    const unsigned det =
        field.mul(a.x0, field.mul(b.x1, c.x2) ^ field.mul(b.x2, c.x1)) ^
        field.mul(a.x1, field.mul(b.x0, c.x2) ^ field.mul(b.x2, c.x0)) ^
        field.mul(a.x2, field.mul(b.x0, c.x1) ^ field.mul(b.x1, c.x0));
    return det == 0;
}

std::vector<Pg2Point> oval_points(const Gf& field, const FuncTable& f) {
    std::vector<Pg2Point> pts;
    pts.reserve(field.order() + 1);
    for (unsigned t = 0; t < field.order(); ++t) pts.push_back({1, t, f.v[t]});
    pts.push_back({0, 1, 0});
    return pts;
}

OpermDfs::OpermDfs(const Gf& f) : field(f) {
    value_order.resize(field.order());
    for (unsigned x = 1; x < field.order(); ++x) {
        value_order[x].resize(field.order() - 1);
        std::iota(value_order[x].begin(), value_order[x].end(), 1u);
    }
}

namespace {

struct DfsState {
    const Gf& field;
    const std::vector<std::vector<unsigned>>& order;
    const std::function<void(const FuncTable&)>& sink;
    bool first_only;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    std::uint64_t found = 0;
    unsigned q;
    FuncTable f;
    // smask[s] = values already taken by the difference quotient f_s among
    // the assigned positions; the pair {u, x} contributes
    // (f(u)+f(x))/(u+x) to both smask[u] and smask[x].
    std::array<std::uint64_t, 64> smask{};
    std::uint64_t used = 1;

    bool rec(unsigned x) {
        if (x == q) {
            ++found;
            sink(f);
            return first_only;
        }
        std::array<std::pair<std::uint8_t, std::uint8_t>, 64> undo;
        for (unsigned v : order[x]) {
            if (used >> v & 1) continue;
            if (++nodes > budget) return true;
            bool ok = true;
            std::uint64_t nmask = 0;
            int nundo = 0;
            for (unsigned u = 0; u < x; ++u) {
                const unsigned w = field.div(f.v[u] ^ v, u ^ x);
                const std::uint64_t bit = 1ull << w;
                if ((smask[u] & bit) || (nmask & bit)) {
                    ok = false;
                    break;
                }
                smask[u] |= bit;
                nmask |= bit;
                undo[nundo++] = {static_cast<std::uint8_t>(u), static_cast<std::uint8_t>(w)};
            }
            if (ok) {
                f.v[x] = static_cast<std::uint8_t>(v);
                used |= 1ull << v;
                const std::uint64_t save = smask[x];
                smask[x] = nmask;
                const bool stop = rec(x + 1);
                smask[x] = save;
                used &= ~(1ull << v);
                f.v[x] = 0;
                if (stop) return true;
            }
            for (int i = 0; i < nundo; ++i)
                smask[undo[i].first] &= ~(1ull << undo[i].second);
        }
        return false;
    }
};

}  // namespace

std::uint64_t OpermDfs::run(const std::function<void(const FuncTable&)>& sink) {
    DfsState st{field, value_order, sink, first_only, node_budget, 0, 0, field.order(), {}, {}, 1};
    st.f.q = static_cast<std::uint8_t>(field.order());
    st.rec(1);
    return st.found;
}

std::vector<FuncTable> brute_force_opermutations(const Gf& field) {
    if (field.order() > 16)
        throw std::invalid_argument("brute-force o-permutation enumeration is limited to q <= 16");
    std::vector<FuncTable> out;
    OpermDfs dfs(field);
    dfs.run([&](const FuncTable& f) { out.push_back(f); });
    return out;
}

}  // namespace ovk
