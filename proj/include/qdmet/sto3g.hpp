#pragma once

#include "qdmet/bundle.hpp"
#include "qdmet/geometry.hpp"

namespace qdmet {

// Minimal-basis integrals for systems of hydrogen atoms: one contracted
// s-type STO-3G function per atom. Throws IntegrityError for non-hydrogen
// elements or odd electron counts (the solver stack is restricted/closed
// shell). Any other system enters through the bundle file format.
IntegralBundle compute_sto3g_h_integrals(const Geometry& geom);

}  // namespace qdmet
