#pragma once

#include "khtor/laurent.hpp"
#include "khtor/pd.hpp"

namespace khtor::oracle {

// Conway polynomial nabla(z) by the skein resolution tree: recursively switch
// and smooth the first non-descending crossing until only descending
// diagrams (unlinks) remain.  Exponential, meant for small inputs; fully
// independent of the Fox-calculus implementation.
LaurentPoly conway_polynomial(const LinkDiagram& d);

// For knots nabla has only even powers of z; substituting z^2 = t - 2 + t^-1
// gives the Alexander polynomial up to units.
LaurentPoly conway_as_alexander(const LaurentPoly& nabla);

// Circle count of a Kauffman state by walking the slot cycles directly,
// independent of the union-find in the library.
int face_walk_circles(const LinkDiagram& d, uint32_t markers);

}  // namespace khtor::oracle
