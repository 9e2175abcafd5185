#pragma once

#include <array>
#include <string>
#include <vector>

#include "qdmet/types.hpp"

namespace qdmet {

struct Atom {
    std::string element;
    std::array<double, 3> xyz;  // Angstrom
};

struct Geometry {
    std::vector<Atom> atoms;
    int charge = 0;
    int multiplicity = 1;

    int electron_count() const;
    // throws IntegrityError on coincident atoms or an inconsistent
    // charge/multiplicity combination
    void validate() const;
};

int atomic_number(const std::string& element);  // throws IntegrityError if unknown

// n atoms on a circle of radius rho = spacing / (2 sin(pi/n)), so that the
// distance between adjacent atoms equals spacing (Angstrom). Atom k sits at
// (rho cos(k*dtheta), rho sin(k*dtheta), 0) with dtheta = 2 pi / n.
Geometry build_h_ring(int n, double spacing);

double nuclear_repulsion(const Geometry& geom);  // Hartree

// One line per atom: "<element> <x> <y> <z>" in Angstrom.
Geometry read_geometry(const std::string& path);
void write_geometry(const Geometry& geom, const std::string& path);

}  // namespace qdmet
