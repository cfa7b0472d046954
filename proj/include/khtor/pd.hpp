#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace khtor {

// Raised for malformed input: syntax errors, bad arc labels, orientation
// inconsistencies, non-planar rotation systems.
class pd_error : public std::runtime_error {
public:
    explicit pd_error(const std::string& what) : std::runtime_error(what) {}
};

// One crossing in PD order: arcs[0] is the incoming under-strand, the rest
// follow counterclockwise.  The under-strand runs arcs[0] -> arcs[2]; the
// over-strand occupies positions 1 and 3.
//
// Orientation data: over_in_at_d == true means the over-strand enters at
// position 3 (the "d" slot) and leaves at position 1, which makes the
// crossing positive; the other direction makes it negative.
struct Crossing {
    std::array<int, 4> arcs{};
    bool over_in_at_d = true;

    int sign() const { return over_in_at_d ? +1 : -1; }
    int over_in_arc() const { return over_in_at_d ? arcs[3] : arcs[1]; }
    int over_out_arc() const { return over_in_at_d ? arcs[1] : arcs[3]; }
};

// Slots address the 4n crossing incidences: slot = 4 * crossing + position.
inline int slot_crossing(int slot) { return slot >> 2; }
inline int slot_pos(int slot) { return slot & 3; }
inline int make_slot(int crossing, int pos) { return 4 * crossing + pos; }

// A validated oriented link diagram.  Crossing order is preserved from the
// input; it fixes the ordering used by the boundary-map sign rule downstream.
// Crossingless unknotted split components are carried as an explicit count
// since PD notation cannot express them.
class LinkDiagram {
public:
    // Validates and normalizes.  Labels occurring once are closed up
    // sequentially (out-end k glues to in-end k', k' the next such label);
    // after normalization every arc label occurs exactly twice.
    static LinkDiagram from_tuples(std::vector<std::array<int, 4>> tuples, int unknots);

    int crossing_count() const { return static_cast<int>(crossings_.size()); }
    int unknot_count() const { return unknots_; }
    const std::vector<Crossing>& crossings() const { return crossings_; }

    int writhe() const;
    int component_count() const { return strand_components_ + unknots_; }
    int strand_component_count() const { return strand_components_; }

    int arc_count() const { return static_cast<int>(arc_labels_.size()); }
    const std::vector<int>& arc_labels() const { return arc_labels_; }
    bool has_arc(int label) const { return arc_index_.count(label) != 0; }
    int arc_index(int label) const;
    int arc_label_at(int idx) const { return arc_labels_[idx]; }

    // Dense arc index at crossing c, position p.
    int arc_idx_at(int c, int p) const { return crossing_arc_idx_[c][p]; }

    // Where the arc flows from / to (slots).
    int arc_tail_slot(int arc_idx) const { return arc_tail_[arc_idx]; }
    int arc_head_slot(int arc_idx) const { return arc_head_[arc_idx]; }
    int arc_component(int arc_idx) const { return arc_comp_[arc_idx]; }

    LinkDiagram mirrored() const;

    // Faces of the underlying 4-valent plane graph, as orbits of slots.
    std::vector<std::vector<int>> faces() const;

    std::string serialize() const;

private:
    std::vector<Crossing> crossings_;
    int unknots_ = 0;

    std::vector<int> arc_labels_;
    std::map<int, int> arc_index_;
    std::vector<std::array<int, 4>> crossing_arc_idx_;
    std::vector<int> arc_tail_, arc_head_;
    std::vector<int> arc_comp_;
    int strand_components_ = 0;

    void build(std::vector<std::array<int, 4>> tuples, int unknots, bool reorient);
    friend LinkDiagram assemble_diagram(std::vector<std::array<int, 4>> tuples, int unknots);
};

// Internal entry point used by the construction code: like from_tuples but
// allowed to reverse strand directions (rotating tuples by two) to find a
// coherent orientation, instead of trusting the written under-in convention.
LinkDiagram assemble_diagram(std::vector<std::array<int, 4>> tuples, int unknots);

// Merges each label pair (gluing strand ends), counts strands that close up
// into crossingless circles as extra unknot components, and assembles with
// orientation re-solving.
LinkDiagram glue_and_assemble(std::vector<std::array<int, 4>> tuples, int unknots,
                              const std::vector<std::pair<int, int>>& gluings);

// Same gluing, but the written orientations are kept: every gluing must join
// a strand tail to a strand head.  Required wherever downstream quantities
// depend on the induced orientation (oriented skein smoothing, closures of
// coherently oriented tangles).
LinkDiagram glue_preserving_orientation(std::vector<std::array<int, 4>> tuples, int unknots,
                                        const std::vector<std::pair<int, int>>& gluings);

LinkDiagram parse_pd(const std::string& text);
std::string serialize_pd(const LinkDiagram& d);
LinkDiagram parse_diagram_file(const std::string& path);  // dispatches PD / JSON by content
LinkDiagram parse_json(const std::string& text);
std::string serialize_json(const LinkDiagram& d);

// A 2-string tangle: 4 boundary arc labels in the fixed cyclic order
// NW, NE, SE, SW.  Strands flow in at NW and NE and out at SE and SW.
// Boundary labels occur once in the crossing list (or twice among the ports
// for a crossingless strand); internal labels occur twice.
class Tangle {
public:
    Tangle(std::vector<std::array<int, 4>> tuples, std::array<int, 4> ports);

    const std::vector<std::array<int, 4>>& tuples() const { return tuples_; }
    // ports()[0..3] = NW, NE, SE, SW
    const std::array<int, 4>& ports() const { return ports_; }
    int crossing_count() const { return static_cast<int>(tuples_.size()); }
    int max_label() const;

    // Plat closures: numerator joins NW-NE and SW-SE, denominator joins
    // NW-SW and NE-SE.
    LinkDiagram numerator_closure() const;
    LinkDiagram denominator_closure() const;

    std::string serialize() const;

private:
    std::vector<std::array<int, 4>> tuples_;
    std::array<int, 4> ports_;
};

Tangle parse_tangle(const std::string& text);

}  // namespace khtor
