#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ovalkit/func_table.hpp"
#include "ovalkit/gf2space.hpp"

namespace ovk {

// 64-bit FNV-1a content digest, used to key caches and checkpoints.
std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t seed = 0xcbf29ce484222325ull);
std::uint64_t file_digest(const std::string& path);
std::string hex64(std::uint64_t v);

// ---- o-polynomial records: "opoly <k> <mod> <name> <c0> ... <c_{q-1}>" ----
std::string format_opoly(const Gf& field, const FuncTable& f, const std::string& name);

// ---- binary orbit cache ----
// Layout: magic "OVKORB1\n", u32 degree, u32 modulus, u64 count,
// q bytes label, then count * q bytes of packed value tables (sorted).
void write_orbit_cache(const std::string& dir, const Gf& field, const FuncTable& label,
                       const std::vector<FuncTable>& opolys);
struct CachedOrbit {
    FuncTable label;
    std::vector<FuncTable> opolys;
};
// Loads every cached orbit for this field found in `dir` (empty if none).
std::vector<CachedOrbit> load_orbit_caches(const std::string& dir, const Gf& field);

// ---- pseudo-oval files ----
// Text: "ovalkit pseudo-oval\nfield <k> <mod>\nsource <name>\nelements <m> <ambient>"
// then one "row"-prefixed basis per element; optional nucleus block.
struct PseudoOvalFile {
    int degree = 0;
    unsigned modulus = 0;
    std::string source;
    std::vector<Subspace> elements;
    std::optional<Subspace> nucleus;
};
void write_pseudo_oval_file(const std::string& path, const PseudoOvalFile& f);
PseudoOvalFile read_pseudo_oval_file(const std::string& path);

// ---- spread set files ----
// "ovalkit spread-set\nn <n>\nmatrix <r0> ... <r_{n-1}>" rows as bit patterns.
struct SpreadSetFile {
    int n = 0;
    std::vector<std::vector<unsigned>> matrices;  // each of size n (rows)
};
void write_spread_set_file(const std::string& path, const SpreadSetFile& f);
SpreadSetFile read_spread_set_file(const std::string& path);

// ---- incidence structure edge exports ----
// "ovalkit incidence\nkind <gq|laguerre|affine>\npoints <np>\nblocks <nb>\n
//  generators <ng>" then "gen <point> <generator>" rows (laguerre) and
// "edge <point> <block>" rows.
struct IncidenceFile {
    std::string kind;
    int num_points = 0;
    int num_blocks = 0;
    int num_generators = 0;
    std::vector<int> generator_of_point;        // empty unless laguerre
    std::vector<std::pair<int, int>> edges;
};
void write_incidence_file(const std::string& path, const IncidenceFile& f);
IncidenceFile read_incidence_file(const std::string& path);

// Sniffs the first line of any ovalkit file: "pseudo-oval", "spread-set",
// "incidence", or "" if unrecognized.
std::string sniff_file_kind(const std::string& path);

}  // namespace ovk
