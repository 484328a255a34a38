#include "doctest.h"
#include "ovalkit/catalog.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

using namespace ovk;

#ifndef OVK_SOURCE_DIR
#define OVK_SOURCE_DIR "."
#endif

namespace {
const std::string kData = std::string(OVK_SOURCE_DIR) + "/data";

CatalogEntry monomial_entry(const Gf& f, const std::string& name, unsigned e, int expect = -1) {
    CatalogEntry entry;
    entry.degree = f.degree();
    entry.modulus = f.modulus();
    entry.name = name;
    entry.coeffs.assign(f.order(), 0);
    entry.coeffs[e] = 1;
    entry.expected_ovals = expect;
    return entry;
}
}  // namespace

TEST_CASE("validate accepts the frame monomials and rejects junk") {
    const Gf& f8 = Gf::standard(3);
    CHECK(validate_entry(f8, monomial_entry(f8, "regular", 2)).ok);

    const Gf& f32 = Gf::standard(5);
    CHECK(validate_entry(f32, monomial_entry(f32, "translation", 4)).ok);

    const auto bad = validate_entry(f8, monomial_entry(f8, "identity", 1));
    CHECK(!bad.ok);
    CHECK(!bad.failure.empty());

    // mismatched field declaration
    auto wrong = monomial_entry(f8, "regular", 2);
    wrong.modulus = 13;
    CHECK(!validate_entry(f8, wrong).ok);
}

TEST_CASE("hyperoval deletions give q+2 o-permutations") {
    const Gf& f8 = Gf::standard(3);
    const auto dels = hyperoval_deletions(f8, monomial(f8, 2));
    CHECK(dels.size() == 10);
    for (const auto& g : dels) CHECK(is_o_permutation(f8, g));
}

TEST_CASE("regular hyperoval over GF(16) splits into conic and pointed conic") {
    const Gf& f16 = Gf::standard(4);
    const auto labels = ovals_from_hyperoval(f16, monomial_entry(f16, "regular", 2));
    CHECK(labels.size() == 2);
}

TEST_CASE("deletion classes are stable under magic translates of the entry") {
    const Gf& f8 = Gf::standard(3);
    const auto labels1 = ovals_from_hyperoval(f8, monomial_entry(f8, "regular", 2));
    // ingest a magic translate of the same hyperoval
    const FuncTable moved =
        normalize_opoly(f8, magic_apply(f8, MagicElement{1, 0, 5, 1, 2}, monomial(f8, 2)));
    CatalogEntry e;
    e.degree = 3;
    e.modulus = 11;
    e.name = "regular-moved";
    e.coeffs = interpolate(f8, moved);
    const auto labels2 = ovals_from_hyperoval(f8, e);
    CHECK(labels1 == labels2);
}

TEST_CASE("GF(8) expansion equals the brute-force oracle set-for-set") {
    const Gf& f8 = Gf::standard(3);
    const auto cat = expand_catalog(f8, {monomial_entry(f8, "regular", 2, 2)});
    CHECK(cat.classes.size() == 2);
    CHECK(cat.opoly_count() == 10);
    CHECK(cat.opermutation_count() == 70);

    const auto brute = brute_force_opermutations(f8);
    const auto expanded = all_opermutations(f8, cat);
    CHECK(std::set<FuncTable>(brute.begin(), brute.end()) ==
          std::set<FuncTable>(expanded.begin(), expanded.end()));
}

TEST_CASE("committed catalogs: GF(8) and GF(16) expansions hit the known counts") {
    const Gf& f8 = Gf::standard(3);
    const auto cat8 = expand_catalog(f8, load_catalog(kData + "/catalog_gf8.cat"));
    CHECK(cat8.classes.size() == 2);
    CHECK(cat8.opermutation_count() == 70);

    const Gf& f16 = Gf::standard(4);
    const auto cat16 = expand_catalog(f16, load_catalog(kData + "/catalog_gf16.cat"));
    CHECK(cat16.classes.size() == 3);
    CHECK(cat16.opermutation_count() == 30870);

    // oracle equality for GF(16) as well
    const auto brute = brute_force_opermutations(f16);
    const auto expanded = all_opermutations(f16, cat16);
    CHECK(brute.size() == expanded.size());
    CHECK(std::set<FuncTable>(brute.begin(), brute.end()) ==
          std::set<FuncTable>(expanded.begin(), expanded.end()));
}

TEST_CASE("catalog file round-trip and rejection of malformed files") {
    const Gf& f8 = Gf::standard(3);
    const std::string tmp = std::filesystem::temp_directory_path() / "ovk_cat_test.cat";
    save_catalog(tmp, {monomial_entry(f8, "regular", 2, 2)}, "round-trip test");
    const auto loaded = load_catalog(tmp);
    REQUIRE(loaded.size() == 1);
    CHECK(loaded[0].name == "regular");
    CHECK(loaded[0].expected_ovals == 2);
    CHECK(loaded[0].coeffs == std::vector<unsigned>{0, 0, 1, 0, 0, 0, 0, 0});

    {
        std::ofstream out(tmp);
        out << "entry 3 11 short - 0 0 1\n";  // too few coefficients
    }
    CHECK_THROWS(load_catalog(tmp));
    std::remove(tmp.c_str());
}

TEST_CASE("orbit caches round-trip through expansion") {
    const Gf& f8 = Gf::standard(3);
    const std::string dir =
        (std::filesystem::temp_directory_path() / "ovk_orbit_cache_test").string();
    std::filesystem::remove_all(dir);
    const auto cat1 = expand_catalog(f8, {monomial_entry(f8, "regular", 2)}, dir);
    CHECK(std::filesystem::exists(dir));
    const auto cat2 = expand_catalog(f8, {monomial_entry(f8, "regular", 2)}, dir);
    REQUIRE(cat1.classes.size() == cat2.classes.size());
    for (std::size_t i = 0; i < cat1.classes.size(); ++i) {
        CHECK(cat1.classes[i].label == cat2.classes[i].label);
        CHECK(cat1.classes[i].opolys == cat2.classes[i].opolys);
    }
    std::filesystem::remove_all(dir);
}
