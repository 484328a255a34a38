#include "ovalkit/magic.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace ovk {

MagicElement magic_identity() { return {}; }

MagicElement magic_compose(const Gf& field, const MagicElement& psi, const MagicElement& phi) {
    const auto fr = [&](unsigned x) { return field.frob(x, psi.frob_exp); };
    const unsigned a2 = fr(phi.a), b2 = fr(phi.b), c2 = fr(phi.c), d2 = fr(phi.d);
    MagicElement r;
    r.a = field.mul(psi.a, a2) ^ field.mul(psi.b, c2);
    r.b = field.mul(psi.a, b2) ^ field.mul(psi.b, d2);
    r.c = field.mul(psi.c, a2) ^ field.mul(psi.d, c2);
    r.d = field.mul(psi.c, b2) ^ field.mul(psi.d, d2);
    r.frob_exp = (psi.frob_exp + phi.frob_exp) % field.degree();
    return r;
}

FuncTable magic_apply(const Gf& field, const MagicElement& psi, const FuncTable& f) {
    const unsigned q = field.order();
    const unsigned a = psi.a, b = psi.b, c = psi.c, d = psi.d;
    const unsigned det = field.mul(a, d) ^ field.mul(b, c);
    if (det == 0) throw std::invalid_argument("magic_apply: singular matrix");
    const unsigned scale = field.inv(field.sqrt(det));
    const int e = psi.frob_exp;
    const int einv = (field.degree() - e % field.degree()) % field.degree();

    // f^gamma as a value table
    FuncTable fg;
    fg.q = f.q;
    for (unsigned y = 0; y < q; ++y)
        fg.v[y] = static_cast<std::uint8_t>(field.frob(f.v[field.frob(y, einv)], e));

    const unsigned tb = (b == 0) ? 0 : field.mul(b, fg.v[field.div(a, b)]);
    const unsigned td = (d == 0) ? 0 : field.mul(d, fg.v[field.div(c, d)]);

    FuncTable g;
    g.q = f.q;
    for (unsigned x = 0; x < q; ++x) {
        const unsigned den = field.mul(b, x) ^ d;
        unsigned t1 = 0;
        if (den != 0) t1 = field.mul(den, fg.v[field.div(field.mul(a, x) ^ c, den)]);
        g.v[x] = static_cast<std::uint8_t>(field.mul(scale, t1 ^ field.mul(tb, x) ^ td));
    }
    return g;
}

std::vector<MagicElement> magic_generators(const Gf& field) {
    std::vector<MagicElement> gens;
    gens.push_back({1, 0, 1, 1, 0});  // lower transvection
    gens.push_back({1, 1, 0, 1, 0});  // upper transvection
    if (field.order() > 2) {
        unsigned g = 2;
        while (field.mult_order(g) != field.order() - 1) ++g;
        gens.push_back({g, 0, 0, 1, 0});
    }
    if (field.degree() > 1) gens.push_back({1, 0, 0, 1, 1});  // Frobenius
    return gens;
}

std::vector<FuncTable> opoly_orbit(const Gf& field, const FuncTable& f) {
    const auto gens = magic_generators(field);
    const FuncTable start = normalize_opoly(field, f);
    std::unordered_set<FuncTable, FuncTableHash> seen{start};
    std::deque<FuncTable> frontier{start};
    while (!frontier.empty()) {
        const FuncTable cur = frontier.front();
        frontier.pop_front();
        for (const auto& psi : gens) {
            FuncTable img = magic_apply(field, psi, cur);
            img = scale(field, field.inv(img.v[1]), img);
            if (seen.insert(img).second) frontier.push_back(img);
        }
    }
    std::vector<FuncTable> orbit(seen.begin(), seen.end());
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

std::vector<FuncTable> opermutation_orbit(const Gf& field, const FuncTable& f) {
    const auto polys = opoly_orbit(field, f);
    std::vector<FuncTable> all;
    all.reserve(polys.size() * (field.order() - 1));
    for (const auto& p : polys)
        for (unsigned lam = 1; lam < field.order(); ++lam) all.push_back(scale(field, lam, p));
    std::sort(all.begin(), all.end());
    return all;
}

FuncTable class_label(const Gf& field, const FuncTable& f) {
    return opoly_orbit(field, f).front();
}

bool equivalent(const Gf& field, const FuncTable& f, const FuncTable& g) {
    const FuncTable gn = normalize_opoly(field, g);
    const auto orbit = opoly_orbit(field, f);
    return std::binary_search(orbit.begin(), orbit.end(), gn);
}

}  // namespace ovk
