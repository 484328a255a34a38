#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ovalkit/magic.hpp"

namespace ovk {

// One literature hyperoval representative: the o-permutation f whose point
// set D(f) extends to the hyperoval D(f) u {(0,0,1)}. Catalog files are data,
// validated at load, never trusted.
struct CatalogEntry {
    int degree = 0;
    unsigned modulus = 0;
    std::string name;
    std::vector<unsigned> coeffs;  // size q, index = exponent, bit-pattern encoding
    int expected_ovals = -1;       // optional per-entry oval class count
};

// Line-oriented text format, '#' comments:
//   entry <k> <modulus> <name> <expected_ovals|-> <c0> <c1> ... <c_{q-1}>
std::vector<CatalogEntry> load_catalog(const std::string& path);
void save_catalog(const std::string& path, const std::vector<CatalogEntry>& entries,
                  const std::string& header_comment = "");

struct EntryValidation {
    bool ok = false;
    std::string failure;  // witness: the colliding s or the collinear triple
};

// Confirms the o-permutation property and the hyperoval property (no 3 of the
// q+2 points of D(f) u {(0,0,1)} collinear, checked exhaustively).
EntryValidation validate_entry(const Gf& field, const CatalogEntry& entry);

FuncTable entry_table(const Gf& field, const CatalogEntry& entry);

// The q+2 ovals inside the hyperoval of f, one per deleted point, re-framed
// onto the fundamental quadrangle purely in function space:
//   delete (0,0,1)      -> f itself
//   delete (0,1,0)      -> f^{-1}           (swap of the last two coordinates)
//   delete (1,s,f(s))   -> shear to s = 0, then the exchange of (1,0,0) with
//                          (0,0,1), which maps g to u -> 1/g(t) at u = t/g(t)
// Every returned table is verified to be an o-permutation.
std::vector<FuncTable> hyperoval_deletions(const Gf& field, const FuncTable& f);

// Deduplicated class labels of all ovals inside the hyperoval of `entry`.
std::vector<FuncTable> ovals_from_hyperoval(const Gf& field, const CatalogEntry& entry);

struct OvalClass {
    FuncTable label;               // lexicographically minimal normalized member
    std::vector<FuncTable> opolys;  // the full orbit, sorted
};

// All oval classes reachable from the catalog, each with its complete
// o-polynomial orbit. Classes are sorted by label; the concatenation of the
// orbits is the Wild-search pool. If cache_dir is nonempty, per-class orbits
// are persisted there keyed by (field, label) and reloaded on rerun.
struct OvalCatalog {
    int degree = 0;
    unsigned modulus = 0;
    std::vector<OvalClass> classes;

    std::size_t opoly_count() const;
    // o-permutations = (q-1) * o-polynomials
    std::uint64_t opermutation_count() const;
    bool contains_opoly(const FuncTable& f) const;
    int class_index_of(const FuncTable& opoly) const;  // -1 if absent
};

OvalCatalog expand_catalog(const Gf& field, const std::vector<CatalogEntry>& entries,
                           const std::string& cache_dir = "");

// The union of all o-permutations (q <= 16 only; used for oracle equality).
std::vector<FuncTable> all_opermutations(const Gf& field, const OvalCatalog& cat);

}  // namespace ovk
