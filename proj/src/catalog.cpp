#include "ovalkit/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ovalkit/serialize.hpp"

namespace ovk {

std::vector<CatalogEntry> load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open catalog file: " + path);
    std::vector<CatalogEntry> entries;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag)) continue;
        if (tag != "entry")
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": expected 'entry', got '" + tag + "'");
        CatalogEntry e;
        std::string expect;
        if (!(ss >> e.degree >> e.modulus >> e.name >> expect))
            throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": malformed entry");
        e.expected_ovals = (expect == "-") ? -1 : std::stoi(expect);
        const unsigned q = 1u << e.degree;
        e.coeffs.resize(q);
        for (unsigned i = 0; i < q; ++i)
            if (!(ss >> e.coeffs[i]))
                throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                            ": expected " + std::to_string(q) + " coefficients");
        unsigned extra;
        if (ss >> extra)
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": trailing data after coefficients");
        entries.push_back(std::move(e));
    }
    return entries;
}

void save_catalog(const std::string& path, const std::vector<CatalogEntry>& entries,
                  const std::string& header_comment) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write catalog file: " + path);
    if (!header_comment.empty()) out << "# " << header_comment << "\n";
    for (const auto& e : entries) {
        out << "entry " << e.degree << " " << e.modulus << " " << e.name << " "
            << (e.expected_ovals < 0 ? std::string("-") : std::to_string(e.expected_ovals));
        for (unsigned c : e.coeffs) out << " " << c;
        out << "\n";
    }
}

FuncTable entry_table(const Gf& field, const CatalogEntry& entry) {
    if (entry.degree != field.degree() || entry.modulus != field.modulus())
        throw std::invalid_argument("catalog entry field (" + std::to_string(entry.degree) + "," +
                                    std::to_string(entry.modulus) + ") does not match " +
                                    field.decl());
    std::vector<unsigned> coeffs = entry.coeffs;
    coeffs.resize(field.order(), 0);
    return table_of_poly(field, coeffs);
}

EntryValidation validate_entry(const Gf& field, const CatalogEntry& entry) {
    EntryValidation r;
    FuncTable f;
    try {
        f = entry_table(field, entry);
    } catch (const std::exception& ex) {
        r.failure = ex.what();
        return r;
    }
    if (!is_permutation(field, f)) {
        r.failure = "not a permutation of GF(" + std::to_string(field.order()) + ")";
        return r;
    }
    for (unsigned s = 0; s < field.order(); ++s) {
        const FuncTable fs = difference_quotient(field, f, s);
        std::uint64_t seen = 0;
        for (unsigned x = 1; x < field.order(); ++x) {
            const std::uint64_t bit = 1ull << fs.v[x];
            if ((fs.v[x] == 0) || (seen & bit)) {
                r.failure = "difference quotient f_s is not a bijection of the nonzero "
                            "elements at s = " + std::to_string(s);
                return r;
            }
            seen |= bit;
        }
    }
    // hyperoval property: D(f) u {(0,0,1)}, all triples
    std::vector<Pg2Point> pts = oval_points(field, f);
    pts.push_back({0, 0, 1});
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            for (std::size_t l = j + 1; l < pts.size(); ++l)
                if (collinear(field, pts[i], pts[j], pts[l])) {
                    std::ostringstream w;
                    w << "collinear triple (" << pts[i].x0 << "," << pts[i].x1 << "," << pts[i].x2
                      << ") (" << pts[j].x0 << "," << pts[j].x1 << "," << pts[j].x2 << ") ("
                      << pts[l].x0 << "," << pts[l].x1 << "," << pts[l].x2 << ")";
                    r.failure = w.str();
                    return r;
                }
    r.ok = true;
    return r;
}

namespace {

FuncTable inverse_table(const Gf& field, const FuncTable& f) {
    FuncTable g;
    g.q = f.q;
    for (unsigned x = 0; x < field.order(); ++x) g.v[f.v[x]] = static_cast<std::uint8_t>(x);
    return g;
}

// Shear the hyperoval so the deleted affine point sits at t = 0:
// f -> x -> f(x+s) + f(s).
FuncTable shear(const Gf& field, const FuncTable& f, unsigned s) {
    FuncTable g;
    g.q = f.q;
    for (unsigned x = 0; x < field.order(); ++x)
        g.v[x] = static_cast<std::uint8_t>(f.v[x ^ s] ^ f.v[s]);
    return g;
}

// Frame exchange swapping (1,0,0) and (0,0,1): the oval obtained by deleting
// (1,0,0) from the hyperoval of g (g(0) = 0) has the table
// u -> 1/g(t) at u = t/g(t), t != 0.
FuncTable exchange_x_z(const Gf& field, const FuncTable& g) {
    FuncTable h;
    h.q = g.q;
    for (unsigned t = 1; t < field.order(); ++t) {
        const unsigned gt = g.v[t];
        h.v[field.div(t, gt)] = static_cast<std::uint8_t>(field.inv(gt));
    }
    return h;
}

}  // namespace

std::vector<FuncTable> hyperoval_deletions(const Gf& field, const FuncTable& f) {
    std::vector<FuncTable> out;
    out.reserve(field.order() + 2);
    out.push_back(f);                          // delete (0,0,1)
    out.push_back(inverse_table(field, f));    // delete (0,1,0)
    for (unsigned s = 0; s < field.order(); ++s)
        out.push_back(exchange_x_z(field, shear(field, f, s)));  // delete (1,s,f(s))
    for (const auto& g : out)
        if (!is_o_permutation(field, g))
            throw std::runtime_error("hyperoval deletion produced a non-o-permutation");
    return out;
}

std::vector<FuncTable> ovals_from_hyperoval(const Gf& field, const CatalogEntry& entry) {
    const FuncTable f = entry_table(field, entry);
    std::vector<FuncTable> labels;
    for (const auto& g : hyperoval_deletions(field, f)) {
        const FuncTable lab = class_label(field, g);
        if (std::find(labels.begin(), labels.end(), lab) == labels.end()) labels.push_back(lab);
    }
    std::sort(labels.begin(), labels.end());
    return labels;
}

std::size_t OvalCatalog::opoly_count() const {
    std::size_t n = 0;
    for (const auto& c : classes) n += c.opolys.size();
    return n;
}

std::uint64_t OvalCatalog::opermutation_count() const {
    return static_cast<std::uint64_t>(opoly_count()) * ((1u << degree) - 1);
}

bool OvalCatalog::contains_opoly(const FuncTable& f) const {
    return class_index_of(f) >= 0;
}

int OvalCatalog::class_index_of(const FuncTable& opoly) const {
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (std::binary_search(classes[i].opolys.begin(), classes[i].opolys.end(), opoly))
            return static_cast<int>(i);
    return -1;
}

OvalCatalog expand_catalog(const Gf& field, const std::vector<CatalogEntry>& entries,
                           const std::string& cache_dir) {
    OvalCatalog cat;
    cat.degree = field.degree();
    cat.modulus = field.modulus();

    // Cached orbits are adopted only when some deletion actually lands in
    // them; stale caches of other catalogs cannot inflate the class count.
    std::vector<CachedOrbit> cached = load_orbit_caches(cache_dir, field);
    auto take_cached = [&](const FuncTable& gn) -> bool {
        for (std::size_t i = 0; i < cached.size(); ++i) {
            if (!std::binary_search(cached[i].opolys.begin(), cached[i].opolys.end(), gn))
                continue;
            OvalClass cls;
            cls.label = cached[i].label;
            cls.opolys = std::move(cached[i].opolys);
            cached.erase(cached.begin() + static_cast<std::ptrdiff_t>(i));
            cat.classes.push_back(std::move(cls));
            return true;
        }
        return false;
    };

    for (const auto& entry : entries) {
        const auto report = validate_entry(field, entry);
        if (!report.ok)
            throw std::invalid_argument("catalog entry '" + entry.name +
                                        "' rejected: " + report.failure);
        const FuncTable f = entry_table(field, entry);
        std::size_t found_here = 0;
        for (const auto& g : hyperoval_deletions(field, f)) {
            const FuncTable gn = normalize_opoly(field, g);
            if (cat.contains_opoly(gn)) continue;
            if (take_cached(gn)) {
                ++found_here;
                continue;
            }
            OvalClass cls;
            cls.opolys = opoly_orbit(field, gn);
            cls.label = cls.opolys.front();
            if (!cache_dir.empty()) write_orbit_cache(cache_dir, field, cls.label, cls.opolys);
            cat.classes.push_back(std::move(cls));
            ++found_here;
        }
        // A repeated entry of an already-seen hyperoval legitimately
        // contributes 0 new classes; anything else must match expectations.
        if (entry.expected_ovals >= 0 && found_here != 0 &&
            static_cast<int>(found_here) != entry.expected_ovals)
            throw std::runtime_error("catalog entry '" + entry.name + "' produced " +
                                     std::to_string(found_here) + " oval classes, expected " +
                                     std::to_string(entry.expected_ovals));
    }
    std::sort(cat.classes.begin(), cat.classes.end(),
              [](const OvalClass& a, const OvalClass& b) { return a.label < b.label; });
    return cat;
}

std::vector<FuncTable> all_opermutations(const Gf& field, const OvalCatalog& cat) {
    if (field.order() > 16)
        throw std::invalid_argument("all_opermutations materializes the full set; q <= 16 only");
    std::vector<FuncTable> all;
    for (const auto& cls : cat.classes)
        for (const auto& p : cls.opolys)
            for (unsigned lam = 1; lam < field.order(); ++lam)
                all.push_back(scale(field, lam, p));
    std::sort(all.begin(), all.end());
    return all;
}

}  // namespace ovk
