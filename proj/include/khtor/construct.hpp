#pragma once

#include "khtor/pd.hpp"

namespace khtor {

// Connected sum along the given arcs: both are cut and cross-joined
// respecting orientation.  A crossingless unknot summand acts as the
// identity (one circle is absorbed).
LinkDiagram connected_sum(const LinkDiagram& d1, const LinkDiagram& d2, int arc1, int arc2);
LinkDiagram connected_sum_default(const LinkDiagram& d1, const LinkDiagram& d2);

// Excises the trivial tangle spanned by sub-arcs of a1 and a2 and glues in t.
// Gluing convention: the tangle's NW/SW ports take a1's cut ends (NW the
// inflowing end, SW the outflowing one) and NE/SE take a2's.  Strands flow in
// at NW and NE, out at SE and SW; an incompatible tangle orientation
// surfaces as a pd_error from validation.
LinkDiagram tangle_replace(const LinkDiagram& d, int arc1, int arc2, const Tangle& t);

// The 0-crossing identity tangle (vertical strands NW-SW and NE-SE).
Tangle trivial_tangle();

// A 2-string tangle ribbon-concordant to the trivial one (one birth and one
// saddle) whose join into any knot diagram preserves the Alexander
// polynomial: the numerator closure is a nontrivial knot with trivial
// Alexander polynomial.  Ships as data/kt_tangle.txt; see that file for the
// verification notes.
Tangle kt_tangle();

LinkDiagram ktjoin(const LinkDiagram& d, int arc1, int arc2);

// ktjoin at the first arc pair (in label order) whose cut ends admit the
// gluing convention planarly.
LinkDiagram ktjoin_auto(const LinkDiagram& d);

// Inserts a one-crossing kink on the given arc; sign +1 or -1 chooses the
// handedness (the writhe changes by sign).
LinkDiagram insert_kink(const LinkDiagram& d, int arc, int sign);

// A pattern in the annulus, presented cut open at a meridian: `width` strands
// cross the cut; left_ports/right_ports list the boundary arc labels of
// strand line s at the two sides of the insert box.  Port gluings carry no
// orientation data; satellite assembly re-solves strand directions.
struct AnnularPattern {
    int width = 0;
    std::vector<std::array<int, 4>> tuples;
    std::vector<int> left_ports;
    std::vector<int> right_ports;

    std::string serialize() const;
    int max_label() const;
};

AnnularPattern parse_pattern(const std::string& text);

// Identity pattern: `width` parallel strands, no crossings.
AnnularPattern parallel_pattern(int width);

// The satellite pattern used by the concordance construction: the core plus
// a detour that follows the companion once around and clasps back, so the
// satellite of K keeps the Alexander polynomial of K.  Ships as
// data/livingston_pattern.txt.
AnnularPattern livingston_pattern();

// Blackboard-framed cable of width r: every arc becomes r parallel arcs and
// every crossing an r x r grid of crossings.  The result is assembled with
// orientation re-solving (cable strands may run antiparallel).
LinkDiagram cable(const LinkDiagram& d, int r);

// The satellite of a knot companion with the given pattern: writhe-cancelling
// kinks (realizing the 0-framing) followed by cabling at the pattern width,
// with the pattern inserted once.  A 0-crossing companion yields the pattern
// closure itself.
LinkDiagram satellite(const LinkDiagram& companion, const AnnularPattern& pattern);

// The pattern closed up around the annulus (the satellite of the unknot).
LinkDiagram pattern_closure(const AnnularPattern& pattern);

}  // namespace khtor
