#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "khtor/construct.hpp"
#include "khtor/pd.hpp"

namespace khtor::testutil {

inline LinkDiagram load(const std::string& name) {
    return parse_diagram_file(std::string(KHTOR_DATA_DIR) + "/" + name + ".pd");
}

inline LinkDiagram permuted(const LinkDiagram& d, unsigned seed) {
    std::vector<int> perm(d.crossing_count());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    std::mt19937 gen(seed);
    std::shuffle(perm.begin(), perm.end(), gen);
    std::vector<std::array<int, 4>> tuples;
    for (int i : perm) tuples.push_back(d.crossings()[i].arcs);
    return LinkDiagram::from_tuples(std::move(tuples), d.unknot_count());
}

// Pokes one arc under another across a shared face (a Reidemeister-2 move),
// producing a 2-crossing-larger diagram of the same link.  The rotational
// variants are tried until one passes full validation.
inline LinkDiagram inflate_r2(const LinkDiagram& d) {
    auto faces = d.faces();
    for (const auto& face : faces) {
        for (int sx : face) {
            for (int sy : face) {
                int x = d.crossings()[slot_crossing(sx)].arcs[slot_pos(sx)];
                int y = d.crossings()[slot_crossing(sy)].arcs[slot_pos(sy)];
                if (x == y) continue;
                int base = 0;
                for (const auto& c : d.crossings())
                    for (int a : c.arcs) base = std::max(base, a);
                int m1 = base + 1, m2 = base + 2, k1 = base + 3, k2 = base + 4;
                for (int vp = 0; vp < 2; ++vp) {
                    for (int vq = 0; vq < 2; ++vq) {
                        std::vector<std::array<int, 4>> tuples;
                        for (const auto& c : d.crossings()) tuples.push_back(c.arcs);
                        int hx = d.arc_head_slot(d.arc_index(x));
                        int hy = d.arc_head_slot(d.arc_index(y));
                        tuples[slot_crossing(hx)][slot_pos(hx)] = m2;
                        tuples[slot_crossing(hy)][slot_pos(hy)] = k2;
                        tuples.push_back(vp ? std::array<int, 4>{x, k1, m1, y}
                                            : std::array<int, 4>{x, y, m1, k1});
                        tuples.push_back(vq ? std::array<int, 4>{m1, k2, m2, k1}
                                            : std::array<int, 4>{m1, k1, m2, k2});
                        try {
                            LinkDiagram out = LinkDiagram::from_tuples(std::move(tuples),
                                                                       d.unknot_count());
                            if (out.component_count() == d.component_count() &&
                                out.crossing_count() == d.crossing_count() + 2)
                                return out;
                        } catch (const pd_error&) {
                            // try another rotational variant or site
                        }
                    }
                }
            }
        }
    }
    throw pd_error("inflate_r2: no valid poke site found");
}

// A kink plus a poke: the "inflated" partner diagram used by the
// invariance checks.
inline LinkDiagram inflate(const LinkDiagram& d) {
    LinkDiagram kinked = insert_kink(d, d.crossings()[0].arcs[0], +1);
    return inflate_r2(kinked);
}

}  // namespace khtor::testutil
