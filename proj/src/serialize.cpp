#include "ovalkit/serialize.hpp"

#include <algorithm>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fs = std::filesystem;

namespace ovk {

std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t seed) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = seed;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

std::uint64_t file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open for digest: " + path);
    std::uint64_t h = 0xcbf29ce484222325ull;
    char buf[4096];
    while (in.read(buf, sizeof buf) || in.gcount())
        h = fnv1a(buf, static_cast<std::size_t>(in.gcount()), h);
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::string format_opoly(const Gf& field, const FuncTable& f, const std::string& name) {
    std::ostringstream out;
    out << "opoly " << field.decl() << " " << name;
    for (unsigned c : interpolate(field, f)) out << " " << c;
    return out.str();
}

static const char kOrbitMagic[8] = {'O', 'V', 'K', 'O', 'R', 'B', '1', '\n'};

static std::string orbit_cache_name(const Gf& field, const FuncTable& label) {
    return "orbit_" + std::to_string(field.degree()) + "_" + std::to_string(field.modulus()) +
           "_" + hex64(fnv1a(label.v.data(), field.order())) + ".bin";
}

void write_orbit_cache(const std::string& dir, const Gf& field, const FuncTable& label,
                       const std::vector<FuncTable>& opolys) {
    fs::create_directories(dir);
    const std::string path = dir + "/" + orbit_cache_name(field, label);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write orbit cache: " + path);
    const unsigned q = field.order();
    out.write(kOrbitMagic, 8);
    const std::uint32_t deg = field.degree(), mod = field.modulus();
    const std::uint64_t count = opolys.size();
    out.write(reinterpret_cast<const char*>(&deg), 4);
    out.write(reinterpret_cast<const char*>(&mod), 4);
    out.write(reinterpret_cast<const char*>(&count), 8);
    out.write(reinterpret_cast<const char*>(label.v.data()), q);
    for (const auto& f : opolys) out.write(reinterpret_cast<const char*>(f.v.data()), q);
}

std::vector<CachedOrbit> load_orbit_caches(const std::string& dir, const Gf& field) {
    std::vector<CachedOrbit> out;
    if (dir.empty() || !fs::exists(dir)) return out;
    const std::string prefix =
        "orbit_" + std::to_string(field.degree()) + "_" + std::to_string(field.modulus()) + "_";
    for (const auto& e : fs::directory_iterator(dir)) {
        const std::string name = e.path().filename().string();
        if (name.rfind(prefix, 0) != 0 || name.size() < 4 ||
            name.substr(name.size() - 4) != ".bin")
            continue;
        std::ifstream in(e.path(), std::ios::binary);
        char magic[8];
        std::uint32_t deg = 0, mod = 0;
        std::uint64_t count = 0;
        if (!in.read(magic, 8) || std::memcmp(magic, kOrbitMagic, 8) != 0) continue;
        in.read(reinterpret_cast<char*>(&deg), 4);
        in.read(reinterpret_cast<char*>(&mod), 4);
        in.read(reinterpret_cast<char*>(&count), 8);
        if (deg != static_cast<std::uint32_t>(field.degree()) || mod != field.modulus()) continue;
        const unsigned q = field.order();
        CachedOrbit orb;
        orb.label.q = static_cast<std::uint8_t>(q);
        if (!in.read(reinterpret_cast<char*>(orb.label.v.data()), q)) continue;
        orb.opolys.resize(count);
        bool ok = true;
        for (auto& f : orb.opolys) {
            f.q = static_cast<std::uint8_t>(q);
            if (!in.read(reinterpret_cast<char*>(f.v.data()), q)) {
                ok = false;
                break;
            }
        }
        if (!ok || orb.opolys.empty() || orb.opolys.front() != orb.label) continue;
        out.push_back(std::move(orb));
    }
    return out;
}

void write_pseudo_oval_file(const std::string& path, const PseudoOvalFile& f) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write: " + path);
    out << "ovalkit pseudo-oval\n";
    out << "field " << f.degree << " " << f.modulus << "\n";
    out << "source " << (f.source.empty() ? "-" : f.source) << "\n";
    const int ambient = f.elements.empty() ? 0 : f.elements.front().ambient();
    out << "elements " << f.elements.size() << " " << ambient << "\n";
    for (const auto& e : f.elements) {
        out << "element";
        for (Row r : e.rows()) out << " " << r;
        out << "\n";
    }
    if (f.nucleus) {
        out << "nucleus";
        for (Row r : f.nucleus->rows()) out << " " << r;
        out << "\n";
    }
}

PseudoOvalFile read_pseudo_oval_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open: " + path);
    std::string line;
    if (!std::getline(in, line) || line != "ovalkit pseudo-oval")
        throw std::invalid_argument(path + ": not a pseudo-oval file");
    PseudoOvalFile f;
    std::size_t n_elements = 0;
    int ambient = 0;
    std::string kw;
    while (std::getline(in, line)) {
        std::istringstream ss(line);
        if (!(ss >> kw)) continue;
        if (kw == "field") {
            ss >> f.degree >> f.modulus;
        } else if (kw == "source") {
            ss >> f.source;
        } else if (kw == "elements") {
            ss >> n_elements >> ambient;
        } else if (kw == "element" || kw == "nucleus") {
            std::vector<Row> rows;
            Row r;
            while (ss >> r) rows.push_back(r);
            Subspace s(ambient, std::move(rows));
            if (kw == "element")
                f.elements.push_back(std::move(s));
            else
                f.nucleus = std::move(s);
        } else {
            throw std::invalid_argument(path + ": unknown keyword '" + kw + "'");
        }
    }
    if (f.elements.size() != n_elements)
        throw std::invalid_argument(path + ": element count mismatch");
    return f;
}

void write_spread_set_file(const std::string& path, const SpreadSetFile& f) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write: " + path);
    out << "ovalkit spread-set\n";
    out << "n " << f.n << "\n";
    for (const auto& m : f.matrices) {
        out << "matrix";
        for (unsigned r : m) out << " " << r;
        out << "\n";
    }
}

SpreadSetFile read_spread_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open: " + path);
    std::string line;
    if (!std::getline(in, line) || line != "ovalkit spread-set")
        throw std::invalid_argument(path + ": not a spread-set file");
    SpreadSetFile f;
    std::string kw;
    while (std::getline(in, line)) {
        std::istringstream ss(line);
        if (!(ss >> kw)) continue;
        if (kw == "n") {
            ss >> f.n;
        } else if (kw == "matrix") {
            std::vector<unsigned> rows;
            unsigned r;
            while (ss >> r) rows.push_back(r);
            if (static_cast<int>(rows.size()) != f.n)
                throw std::invalid_argument(path + ": matrix row count mismatch");
            f.matrices.push_back(std::move(rows));
        } else {
            throw std::invalid_argument(path + ": unknown keyword '" + kw + "'");
        }
    }
    return f;
}

void write_incidence_file(const std::string& path, const IncidenceFile& f) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write: " + path);
    out << "ovalkit incidence\n";
    out << "kind " << f.kind << "\n";
    out << "points " << f.num_points << "\n";
    out << "blocks " << f.num_blocks << "\n";
    out << "generators " << f.num_generators << "\n";
    for (std::size_t p = 0; p < f.generator_of_point.size(); ++p)
        if (f.generator_of_point[p] >= 0)
            out << "gen " << p << " " << f.generator_of_point[p] << "\n";
    for (const auto& [p, b] : f.edges) out << "edge " << p << " " << b << "\n";
}

IncidenceFile read_incidence_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open: " + path);
    std::string line;
    if (!std::getline(in, line) || line != "ovalkit incidence")
        throw std::invalid_argument(path + ": not an incidence file");
    IncidenceFile f;
    std::string kw;
    while (std::getline(in, line)) {
        std::istringstream ss(line);
        if (!(ss >> kw)) continue;
        if (kw == "kind")
            ss >> f.kind;
        else if (kw == "points")
            ss >> f.num_points;
        else if (kw == "blocks")
            ss >> f.num_blocks;
        else if (kw == "generators") {
            ss >> f.num_generators;
            f.generator_of_point.assign(f.num_points, -1);
        } else if (kw == "gen") {
            int p, g;
            ss >> p >> g;
            f.generator_of_point.at(p) = g;
        } else if (kw == "edge") {
            int p, b;
            ss >> p >> b;
            if (p < 0 || p >= f.num_points || b < 0 || b >= f.num_blocks)
                throw std::invalid_argument(path + ": edge index out of range");
            f.edges.emplace_back(p, b);
        } else {
            throw std::invalid_argument(path + ": unknown keyword '" + kw + "'");
        }
    }
    return f;
}

std::string sniff_file_kind(const std::string& path) {
    std::ifstream in(path);
    if (!in) return "";
    std::string line;
    if (!std::getline(in, line)) return "";
    if (line == "ovalkit pseudo-oval") return "pseudo-oval";
    if (line == "ovalkit spread-set") return "spread-set";
    if (line == "ovalkit incidence") return "incidence";
    return "";
}

}  // namespace ovk
