#include "qdmet/geometry.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

namespace qdmet {

namespace {

const std::map<std::string, int> kAtomicNumber = {
    {"H", 1}, {"He", 2}, {"Li", 3}, {"Be", 4}, {"B", 5},  {"C", 6},
    {"N", 7}, {"O", 8},  {"F", 9},  {"Ne", 10}, {"S", 16},
};

double distance(const Atom& a, const Atom& b) {
    const double dx = a.xyz[0] - b.xyz[0];
    const double dy = a.xyz[1] - b.xyz[1];
    const double dz = a.xyz[2] - b.xyz[2];
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

}  // namespace

int atomic_number(const std::string& element) {
    auto it = kAtomicNumber.find(element);
    if (it == kAtomicNumber.end()) throw IntegrityError("unknown element symbol: " + element);
    return it->second;
}

int Geometry::electron_count() const {
    int z = 0;
    for (const auto& a : atoms) z += atomic_number(a.element);
    return z - charge;
}

void Geometry::validate() const {
    for (std::size_t i = 0; i < atoms.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (distance(atoms[i], atoms[j]) <= 1e-6)
                throw IntegrityError("coincident atoms " + std::to_string(j) + " and " +
                                     std::to_string(i));
    const int n_elec = electron_count();
    if (n_elec < 0) throw IntegrityError("negative electron count");
    const int unpaired = multiplicity - 1;
    if (unpaired < 0 || unpaired > n_elec || (n_elec - unpaired) % 2 != 0)
        throw IntegrityError("charge/multiplicity inconsistent with electron count");
}

Geometry build_h_ring(int n, double spacing) {
    if (n < 3) throw IntegrityError("ring needs at least 3 atoms, got " + std::to_string(n));
    if (spacing <= 0.0) throw IntegrityError("ring spacing must be positive");
    const double dtheta = 2.0 * std::numbers::pi / n;
    const double rho = spacing / (2.0 * std::sin(std::numbers::pi / n));
    Geometry g;
    g.atoms.reserve(n);
    for (int k = 0; k < n; ++k) {
        g.atoms.push_back(
            {"H", {rho * std::cos(k * dtheta), rho * std::sin(k * dtheta), 0.0}});
    }
    g.validate();
    return g;
}

double nuclear_repulsion(const Geometry& geom) {
    double e = 0.0;
    for (std::size_t i = 0; i < geom.atoms.size(); ++i) {
        const int zi = atomic_number(geom.atoms[i].element);
        for (std::size_t j = 0; j < i; ++j) {
            const int zj = atomic_number(geom.atoms[j].element);
            e += zi * zj / (distance(geom.atoms[i], geom.atoms[j]) / kBohrInAngstrom);
        }
    }
    return e;
}

Geometry read_geometry(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open geometry file: " + path);
    Geometry g;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string elem;
        if (!(ss >> elem)) continue;  // blank line
        if (elem[0] == '#') continue;
        Atom a;
        a.element = elem;
        if (!(ss >> a.xyz[0] >> a.xyz[1] >> a.xyz[2]))
            throw ParseError("geometry parse error at line " + std::to_string(lineno));
        g.atoms.push_back(a);
    }
    if (g.atoms.empty()) throw ParseError("geometry file has no atoms: " + path);
    g.validate();
    return g;
}

void write_geometry(const Geometry& geom, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write geometry file: " + path);
    char buf[128];
    for (const auto& a : geom.atoms) {
        std::snprintf(buf, sizeof(buf), "%s % .12f % .12f % .12f\n", a.element.c_str(), a.xyz[0],
                      a.xyz[1], a.xyz[2]);
        out << buf;
    }
}

}  // namespace qdmet
