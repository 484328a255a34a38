#include "ovalkit/wild.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ovalkit/parallel.hpp"
#include "ovalkit/serialize.hpp"

namespace ovk {

int WildSubspace::dim() const {
    int d = 0;
    while ((1u << d) < elements.size()) ++d;
    return d;
}

std::vector<FuncTable> additive_closure(const std::vector<FuncTable>& gens) {
    std::vector<FuncTable> out;
    const std::size_t m = gens.size();
    out.reserve(1u << m);
    for (std::size_t mask = 0; mask < (1u << m); ++mask) {
        FuncTable f;
        f.q = gens.empty() ? 0 : gens.front().q;
        for (std::size_t i = 0; i < m; ++i)
            if (mask >> i & 1) f = add(f, gens[i]);
        out.push_back(f);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_wild(const Gf& field, const std::vector<FuncTable>& candidate) {
    std::vector<FuncTable> sorted = candidate;
    std::sort(sorted.begin(), sorted.end());
    // sanity on the stated preconditions: contains 0, closed under addition
    FuncTable zero;
    zero.q = static_cast<std::uint8_t>(field.order());
    if (!std::binary_search(sorted.begin(), sorted.end(), zero)) return false;
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (std::size_t j = i + 1; j < sorted.size(); ++j)
            if (!std::binary_search(sorted.begin(), sorted.end(), add(sorted[i], sorted[j])))
                return false;
    std::uint64_t values_at_1 = 0;
    for (const auto& f : sorted) {
        const std::uint64_t bit = 1ull << f.v[1];
        if (values_at_1 & bit) return false;  // f != g with f(1) = g(1)
        values_at_1 |= bit;
        if (is_zero(f)) continue;
        if (!is_o_permutation(field, f)) return false;
    }
    return true;
}

int kernel_degree(const Gf& field, const WildSubspace& w) {
    std::vector<int> divisors = field.subfield_degrees();
    int best = 1;
    for (int d : divisors) {
        bool closed = true;
        for (unsigned lam : field.subfield_elements(d)) {
            if (lam == 0 || lam == 1) continue;
            for (const auto& f : w.elements) {
                if (!std::binary_search(w.elements.begin(), w.elements.end(),
                                        scale(field, lam, f))) {
                    closed = false;
                    break;
                }
            }
            if (!closed) break;
        }
        if (closed) best = std::max(best, d);
    }
    return best;
}

std::vector<WildSubspace> enumerate_wild_subspaces(const Gf& field,
                                                   const std::vector<FuncTable>& opermutations) {
    const int n = field.degree();
    // group by value at 1; the GF(2)-basis values 1, 2, 4, ... pick the span
    std::vector<std::vector<FuncTable>> by_value(field.order());
    for (const auto& f : opermutations) by_value[f.v[1]].push_back(f);

    std::vector<FuncTable> sorted_all = opermutations;
    std::sort(sorted_all.begin(), sorted_all.end());

    std::vector<WildSubspace> found;
    std::vector<std::vector<FuncTable>> seen_sets;
    std::vector<std::size_t> idx(n, 0);
    for (;;) {
        std::vector<FuncTable> gens;
        gens.reserve(n);
        bool valid = true;
        for (int j = 0; j < n; ++j) {
            const auto& grp = by_value[1u << j];
            if (grp.empty()) {
                valid = false;
                break;
            }
            gens.push_back(grp[idx[j]]);
        }
        if (!valid) break;
        std::vector<FuncTable> closure = additive_closure(gens);
        if (closure.size() == (1u << n)) {
            bool all_operm = true;
            for (const auto& f : closure)
                if (!is_zero(f) &&
                    !std::binary_search(sorted_all.begin(), sorted_all.end(), f)) {
                    all_operm = false;
                    break;
                }
            if (all_operm && is_wild(field, closure)) {
                if (std::find(seen_sets.begin(), seen_sets.end(), closure) == seen_sets.end()) {
                    seen_sets.push_back(closure);
                    found.push_back(WildSubspace{closure});
                }
            }
        }
        // odometer over the n index positions
        int j = 0;
        while (j < n) {
            if (++idx[j] < by_value[1u << j].size()) break;
            idx[j] = 0;
            ++j;
        }
        if (j == n) break;
    }
    return found;
}

namespace {

struct Checkpoint {
    std::uint64_t pool_digest = 0;
    std::size_t next = 0;
    std::vector<FuncTable> survivors;
};

std::uint64_t search_digest(const Gf& field, const FuncTable& f, unsigned a,
                            const OvalCatalog& pool) {
    std::uint64_t h = fnv1a(f.v.data(), field.order());
    h = fnv1a(&a, sizeof a, h);
    for (const auto& cls : pool.classes) {
        h = fnv1a(cls.label.v.data(), field.order(), h);
        const std::size_t n = cls.opolys.size();
        h = fnv1a(&n, sizeof n, h);
    }
    return h;
}

bool load_checkpoint(const std::string& path, const Gf& field, std::uint64_t digest,
                     Checkpoint& ck) {
    std::ifstream in(path);
    if (!in) return false;
    std::string line, kw;
    if (!std::getline(in, line) || line != "ovalkit checkpoint") return false;
    while (std::getline(in, line)) {
        std::istringstream ss(line);
        if (!(ss >> kw)) continue;
        if (kw == "digest") {
            std::string hex;
            ss >> hex;
            if (hex != hex64(digest)) return false;
            ck.pool_digest = digest;
        } else if (kw == "next") {
            ss >> ck.next;
        } else if (kw == "survivor") {
            std::vector<unsigned> vals(field.order());
            for (auto& v : vals) ss >> v;
            ck.survivors.push_back(make_func(field, vals));
        }
    }
    return ck.pool_digest == digest;
}

void store_checkpoint(const std::string& path, const Gf& field, std::uint64_t digest,
                      const Checkpoint& ck) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write checkpoint: " + path);
        out << "ovalkit checkpoint\n";
        out << "digest " << hex64(digest) << "\n";
        out << "next " << ck.next << "\n";
        for (const auto& s : ck.survivors) {
            out << "survivor";
            for (unsigned x = 0; x < field.order(); ++x) out << " " << unsigned(s.v[x]);
            out << "\n";
        }
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace

std::vector<FuncTable> proposition_search(const Gf& field, const FuncTable& f, unsigned a,
                                          const OvalCatalog& pool,
                                          const PropositionOptions& opts) {
    if (a == 0 || a == 1) throw std::invalid_argument("proposition_search requires a not in {0,1}");
    if (pool.classes.empty()) throw std::invalid_argument("proposition_search: empty pool");
    const unsigned q = field.order();
    const unsigned inv1a = field.inv(1u ^ a);

    // class-label-major, lexicographic within class (catalog order)
    std::vector<const FuncTable*> flat;
    flat.reserve(pool.opoly_count());
    for (const auto& cls : pool.classes)
        for (const auto& h : cls.opolys) flat.push_back(&h);

    const std::uint64_t digest = search_digest(field, f, a, pool);
    Checkpoint ck;
    if (!opts.checkpoint_path.empty()) load_checkpoint(opts.checkpoint_path, field, digest, ck);

    std::vector<FuncTable> survivors = std::move(ck.survivors);
    const std::size_t total = flat.size();
    const unsigned threads = opts.threads ? opts.threads : 1;

    std::vector<unsigned char> hit;
    for (std::size_t block_lo = ck.next; block_lo < total;) {
        const std::size_t block_hi =
            std::min(total, opts.checkpoint_path.empty() ? total
                                                         : block_lo + opts.checkpoint_interval);
        hit.assign(block_hi - block_lo, 0);
        parallel_for(block_lo, block_hi, threads, 1024, [&](std::size_t i) {
            const FuncTable& h = *flat[i];
            FuncTable p;
            p.q = static_cast<std::uint8_t>(q);
            for (unsigned x = 1; x < q; ++x)
                p.v[x] = static_cast<std::uint8_t>(
                    field.mul(inv1a, f.v[x] ^ field.mul(a, h.v[x])));
            if (is_o_permutation(field, p)) hit[i - block_lo] = 1;
        });
        for (std::size_t i = block_lo; i < block_hi; ++i)
            if (hit[i - block_lo]) survivors.push_back(*flat[i]);
        block_lo = block_hi;
        if (!opts.checkpoint_path.empty()) {
            ck.next = block_lo;
            ck.survivors = survivors;
            store_checkpoint(opts.checkpoint_path, field, digest, ck);
        }
        if (opts.progress) opts.progress(block_lo, total);
    }
    std::sort(survivors.begin(), survivors.end());
    survivors.erase(std::unique(survivors.begin(), survivors.end()), survivors.end());
    return survivors;
}

ClassifyReport classify(const Gf& field, const OvalCatalog& cat, const ClassifyOptions& opts) {
    ClassifyReport rep;
    rep.n = field.degree();
    rep.class_count = cat.classes.size();
    rep.opoly_count = cat.opoly_count();
    rep.opermutation_count = cat.opermutation_count();

    std::vector<unsigned> a_values;
    if (opts.all_a) {
        for (unsigned a = 2; a < field.order(); ++a) a_values.push_back(a);
    } else {
        unsigned g = 2;
        while (field.mult_order(g) != field.order() - 1) ++g;
        a_values.push_back(g);
    }
    if (a_values.empty()) throw std::invalid_argument("no valid a in GF(" +
                                                      std::to_string(field.order()) + ")");

    for (std::size_t ci = 0; ci < cat.classes.size(); ++ci) {
        const FuncTable& f = cat.classes[ci].label;
        for (unsigned a : a_values) {
            PropositionOptions popts;
            popts.threads = opts.threads;
            popts.checkpoint_interval = opts.checkpoint_interval;
            if (!opts.checkpoint_dir.empty())
                popts.checkpoint_path = opts.checkpoint_dir + "/ck_" +
                                        std::to_string(field.degree()) + "_" +
                                        std::to_string(ci) + "_" + std::to_string(a) + ".txt";
            const auto survivors = proposition_search(field, f, a, cat, popts);
            SearchRecord rec;
            rec.class_name =
                "class" + std::to_string(ci) + ":" +
                hex64(fnv1a(f.v.data(), field.order())).substr(8);
            rec.a = a;
            rec.pool_size = rep.opoly_count;
            rec.survivor_count = survivors.size();
            rec.only_self = survivors.size() == 1 && survivors.front() == f;
            for (const auto& s : survivors)
                if (!(s == f)) rec.extras.push_back(s);
            if (!rec.only_self) {
                rep.all_only_self = false;
                rep.kernels_full = false;
            }
            rep.records.push_back(std::move(rec));
            if (opts.log) {
                std::ostringstream msg;
                msg << "class " << ci + 1 << "/" << cat.classes.size() << " a=" << a
                    << " survivors=" << survivors.size();
                opts.log(msg.str());
            }
        }
    }
    return rep;
}

}  // namespace ovk
