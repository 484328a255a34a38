#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ovalkit/catalog.hpp"

namespace ovk {

// An n-dimensional GF(2)-subspace of the function space whose nonzero
// elements are all o-permutations, stored as the full 2^n element set
// (sorted). The value-at-1 map is then a bijection onto GF(2^n).
struct WildSubspace {
    std::vector<FuncTable> elements;

    int dim() const;
};

// True iff every nonzero member of the (additively closed, 0-containing)
// candidate set is an o-permutation and members take pairwise distinct
// values at 1.
bool is_wild(const Gf& field, const std::vector<FuncTable>& candidate);

// Additive closure of a set of generators (set must stay small; 2^n here).
std::vector<FuncTable> additive_closure(const std::vector<FuncTable>& gens);

// Largest divisor d of n such that GF(2^d) * W is contained in W.
int kernel_degree(const Gf& field, const WildSubspace& w);

// All Wild subspaces over GF(2^n) containing some o-polynomial, enumerated
// directly from the complete o-permutation set: pick the member with value
// b_i at 1 for each basis value b_i of GF(2^n), close additively, filter.
// Exhaustive and intended for n = 3 (the 70); grows steeply beyond.
std::vector<WildSubspace> enumerate_wild_subspaces(const Gf& field,
                                                   const std::vector<FuncTable>& opermutations);

struct PropositionOptions {
    unsigned threads = 1;
    // Checkpointing: survivors plus resume position, written every
    // `checkpoint_interval` candidates when a path is set.
    std::string checkpoint_path;
    std::size_t checkpoint_interval = 1u << 20;
    std::function<void(std::size_t done, std::size_t total)> progress;
};

// All h in the pool for which p = (1+a)^{-1}(f + a h) is an o-permutation
// (f itself always qualifies, giving p = f). Pool iteration is class-major in
// the catalog's label order; candidate checks are pure and run in parallel.
// Requires a not in {0, 1} and a nonempty pool.
std::vector<FuncTable> proposition_search(const Gf& field, const FuncTable& f, unsigned a,
                                          const OvalCatalog& pool,
                                          const PropositionOptions& opts = {});

struct SearchRecord {
    std::string class_name;  // label digest of the representative's class
    unsigned a = 0;
    std::size_t pool_size = 0;
    std::size_t survivor_count = 0;
    bool only_self = false;          // survivors == {f}
    std::vector<FuncTable> extras;   // survivors other than f (should be empty)
};

struct ClassifyReport {
    int n = 0;
    std::size_t class_count = 0;
    std::size_t opoly_count = 0;
    std::uint64_t opermutation_count = 0;
    std::vector<SearchRecord> records;
    bool all_only_self = true;   // every search returned exactly {f}
    bool kernels_full = true;    // conclusion: every Wild subspace has kernel GF(2^n)
};

struct ClassifyOptions {
    bool all_a = false;          // run every a not in {0,1} (default for n <= 4)
    unsigned threads = 1;
    std::string checkpoint_dir;
    std::size_t checkpoint_interval = 1u << 20;
    std::function<void(const std::string&)> log;
};

// The classification driver: for each class representative f (one per oval
// class in the catalog) and each chosen a, runs proposition_search and
// aggregates. all_only_self == true is the computational content of the
// kernel claim: every Wild subspace has kernel GF(2^n), so every pseudo-oval
// with a Desarguesian projection plane is elementary, and the oval classes
// count the pseudo-ovals.
ClassifyReport classify(const Gf& field, const OvalCatalog& cat, const ClassifyOptions& opts);

}  // namespace ovk
