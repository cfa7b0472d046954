#include "skein_oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

namespace khtor::oracle {

namespace {

// index of the first crossing met on its under-strand before being met on
// the over-strand, walking components from their smallest arcs; -1 if the
// diagram is descending
int first_bad_crossing(const LinkDiagram& d) {
    const int n = d.crossing_count();
    std::vector<int> state(n, 0);  // 0 unseen, 1 first seen over, 2 first seen under

    // strand components ordered by smallest arc label
    std::map<int, int> comp_min_arc;  // comp -> smallest arc idx
    for (int idx = 0; idx < d.arc_count(); ++idx) {
        int comp = d.arc_component(idx);
        if (!comp_min_arc.count(comp)) comp_min_arc[comp] = idx;
    }
    std::vector<std::pair<int, int>> order;  // (min arc idx, comp)
    for (auto [comp, idx] : comp_min_arc) order.push_back({idx, comp});
    std::sort(order.begin(), order.end());

    for (auto [start_idx, comp] : order) {
        int arc = start_idx;
        do {
            int head = d.arc_head_slot(arc);
            int y = slot_crossing(head);
            int pos = slot_pos(head);
            bool under = (pos == 0);
            if (state[y] == 0) {
                if (under) return y;
                state[y] = 1;
            }
            // continue through the crossing
            int out_pos = pos ^ 2;
            arc = d.arc_idx_at(y, out_pos);
        } while (arc != start_idx);
    }
    return -1;
}

LinkDiagram switch_crossing(const LinkDiagram& d, int y) {
    std::vector<std::array<int, 4>> tuples;
    for (const auto& c : d.crossings()) tuples.push_back(c.arcs);
    const Crossing& c = d.crossings()[y];
    const auto& a = c.arcs;
    tuples[y] = c.over_in_at_d ? std::array<int, 4>{a[3], a[0], a[1], a[2]}
                               : std::array<int, 4>{a[1], a[2], a[3], a[0]};
    return LinkDiagram::from_tuples(std::move(tuples), d.unknot_count());
}

LinkDiagram smooth_oriented(const LinkDiagram& d, int y) {
    std::vector<std::array<int, 4>> tuples;
    for (int i = 0; i < d.crossing_count(); ++i)
        if (i != y) tuples.push_back(d.crossings()[i].arcs);
    const Crossing& c = d.crossings()[y];
    // glue under-in to over-out and over-in to under-out, keeping the
    // induced orientation (the Conway polynomial is orientation-sensitive)
    return glue_preserving_orientation(std::move(tuples), d.unknot_count(),
                                       {{c.arcs[0], c.over_out_arc()}, {c.over_in_arc(), c.arcs[2]}});
}

}  // namespace

LaurentPoly conway_polynomial(const LinkDiagram& d) {
    int y = first_bad_crossing(d);
    if (y < 0) {
        // descending diagram: an unlink
        return d.component_count() == 1 ? LaurentPoly(BigInt(1)) : LaurentPoly();
    }
    int sign = d.crossings()[y].sign();
    LaurentPoly switched = conway_polynomial(switch_crossing(d, y));
    LaurentPoly smoothed = conway_polynomial(smooth_oriented(d, y));
    LaurentPoly z = LaurentPoly::monomial(BigInt(sign), 1);  // +-z
    return switched + z * smoothed;
}

LaurentPoly conway_as_alexander(const LaurentPoly& nabla) {
    // z^2 = t - 2 + t^-1
    LaurentPoly zsq;
    zsq.add_term(1, BigInt(1));
    zsq.add_term(0, BigInt(-2));
    zsq.add_term(-1, BigInt(1));
    LaurentPoly out;
    for (const auto& [e, v] : nabla.terms()) {
        if (e % 2 != 0) throw std::logic_error("conway_as_alexander: odd power on a knot");
        LaurentPoly term = LaurentPoly(v);
        for (int k = 0; k < e / 2; ++k) term = term * zsq;
        out += term;
    }
    return out;
}

int face_walk_circles(const LinkDiagram& d, uint32_t markers) {
    const int n = d.crossing_count();
    // outside partner per slot (two occurrences of each arc label)
    std::vector<int> partner(4 * n, -1);
    std::map<int, int> first_slot;
    for (int c = 0; c < n; ++c)
        for (int p = 0; p < 4; ++p) {
            int label = d.crossings()[c].arcs[p];
            int s = make_slot(c, p);
            auto [it, inserted] = first_slot.try_emplace(label, s);
            if (!inserted) {
                partner[it->second] = s;
                partner[s] = it->second;
            }
        }
    // smoothing partner per slot: A joins (0,3),(1,2); B joins (0,1),(2,3)
    auto smooth_partner = [&](int s) {
        int c = slot_crossing(s), p = slot_pos(s);
        int q;
        if (markers & (1u << c))
            q = p ^ 1;           // B: 0-1, 2-3
        else
            q = 3 - p;           // A: 0-3, 1-2
        return make_slot(c, q);
    };
    std::vector<bool> seen(4 * n, false);
    int circles = 0;
    for (int s0 = 0; s0 < 4 * n; ++s0) {
        if (seen[s0]) continue;
        ++circles;
        int s = s0;
        while (!seen[s]) {
            seen[s] = true;
            int t = smooth_partner(s);
            seen[t] = true;
            s = partner[t];
        }
    }
    return circles + d.unknot_count();
}

}  // namespace khtor::oracle
