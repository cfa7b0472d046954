#include "khtor/states.hpp"

#include <algorithm>
#include <numeric>

namespace khtor {

namespace {

int uf_find(std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

CircleData compute_circles(const LinkDiagram& d, uint32_t markers) {
    const int n = d.crossing_count();
    const int arcs = d.arc_count();

    CircleData out;
    std::vector<int> parent(arcs);
    std::iota(parent.begin(), parent.end(), 0);
    for (int y = 0; y < n; ++y) {
        int i0 = d.arc_idx_at(y, 0), i1 = d.arc_idx_at(y, 1);
        int i2 = d.arc_idx_at(y, 2), i3 = d.arc_idx_at(y, 3);
        if (markers & (1u << y)) {
            // B: join (a,b) and (c,d)
            parent[uf_find(parent, i0)] = uf_find(parent, i1);
            parent[uf_find(parent, i2)] = uf_find(parent, i3);
        } else {
            // A: join (a,d) and (b,c)
            parent[uf_find(parent, i0)] = uf_find(parent, i3);
            parent[uf_find(parent, i1)] = uf_find(parent, i2);
        }
    }

    // circle ids in order of smallest member arc
    std::vector<int16_t> root_id(arcs, -1);
    out.arc_circle.assign(arcs, -1);
    for (int i = 0; i < arcs; ++i) {
        int r = uf_find(parent, i);
        if (root_id[r] == -1) {
            root_id[r] = static_cast<int16_t>(out.arc_circle_count++);
            out.rep_arc.push_back(i);
        }
        out.arc_circle[i] = root_id[r];
    }
    out.count = out.arc_circle_count + d.unknot_count();
    return out;
}

}  // namespace

StateSpace::StateSpace(const LinkDiagram& d, int cap) : d_(&d) {
    if (cap > 24) cap = 24;  // the memoization table is 2^n entries
    if (d.crossing_count() > cap)
        throw cap_error("diagram has " + std::to_string(d.crossing_count()) +
                        " crossings, exceeding the cap of " + std::to_string(cap) +
                        " (raise --cap to override)");
    cache_.resize(size_t(1) << d.crossing_count());
}

const CircleData& StateSpace::circles(uint32_t markers) {
    auto& slot = cache_[markers];
    if (!slot) slot = std::make_unique<CircleData>(compute_circles(*d_, markers));
    return *slot;
}

void StateSpace::precompute_all() {
    for (size_t m = 0; m < cache_.size(); ++m) circles(static_cast<uint32_t>(m));
}

KauffmanState smooth(const LinkDiagram& d, uint32_t markers) {
    return KauffmanState{markers, compute_circles(d, markers)};
}

int tau_of(const CircleData& c, uint32_t signs) {
    uint32_t mask = c.count >= 32 ? ~0u : ((1u << c.count) - 1u);
    return 2 * __builtin_popcount(signs & mask) - c.count;
}

Gradings gradings(const LinkDiagram& d, const EnhancedState& e) {
    CircleData c = compute_circles(d, e.markers);
    int a = sigma_of(d.crossing_count(), e.markers);
    return {a, a + 2 * tau_of(c, e.signs)};
}

std::map<int, std::vector<EnhancedState>> enumerate_enhanced(const LinkDiagram& d, int cap) {
    StateSpace space(d, cap);
    const int n = d.crossing_count();
    std::map<int, std::vector<EnhancedState>> by_b;
    for (uint32_t m = 0; m < (1u << n); ++m) {
        const CircleData& c = space.circles(m);
        int a = sigma_of(n, m);
        for (uint32_t s = 0; s < (1u << c.count); ++s) {
            int b = a + 2 * tau_of(c, s);
            by_b[b].push_back(EnhancedState{m, s});
        }
    }
    return by_b;
}

size_t total_enhanced_count(const LinkDiagram& d, int cap) {
    StateSpace space(d, cap);
    const int n = d.crossing_count();
    size_t total = 0;
    for (uint32_t m = 0; m < (1u << n); ++m) total += size_t(1) << space.circles(m).count;
    return total;
}

IncidenceTargets incidence_targets_at(StateSpace& space, const EnhancedState& e, int y) {
    IncidenceTargets out;
    if (e.markers & (1u << y)) return out;  // needs an A marker at y

    const LinkDiagram& d = space.diagram();
    const CircleData& cs = space.circles(e.markers);
    const uint32_t m2 = e.markers | (1u << y);
    const CircleData& ct = space.circles(m2);

    out.markers2 = m2;
    out.coeff = (__builtin_popcount(e.markers >> (y + 1)) & 1) ? -1 : +1;

    // circles through y: in the A state the joined pairs are (a,d) and (b,c)
    const int src1 = cs.arc_circle[d.arc_idx_at(y, 0)];
    const int src2 = cs.arc_circle[d.arc_idx_at(y, 1)];

    // Copy signs of the circles untouched at y; the merge/split rule fills in
    // the rest.  Crossingless unknot components keep their signs positionally.
    auto away_signs = [&]() {
        uint32_t signs2 = 0;
        for (int j = 0; j < ct.arc_circle_count; ++j) {
            int src = cs.arc_circle[ct.rep_arc[j]];
            if (src != src1 && src != src2) {
                if (e.signs & (1u << src)) signs2 |= 1u << j;
            }
        }
        for (int u = 0; u < d.unknot_count(); ++u) {
            if (e.signs & (1u << (cs.arc_circle_count + u)))
                signs2 |= 1u << (ct.arc_circle_count + u);
        }
        return signs2;
    };

    if (src1 != src2) {
        // merge: the quantum grading survives only if tau goes up by one
        const bool s1 = e.signs & (1u << src1);
        const bool s2 = e.signs & (1u << src2);
        if (s1 && s2) return IncidenceTargets{};  // (+,+) has no compatible target
        const int merged = ct.arc_circle[d.arc_idx_at(y, 0)];
        uint32_t signs2 = away_signs();
        if (s1 != s2) signs2 |= 1u << merged;  // (+,-) -> +; (-,-) -> -
        out.signs2[out.count++] = signs2;
    } else {
        // split: the B-smoothing pairs (a,b) and (c,d), so the two child
        // circles are read off at positions 0 and 2
        const int d1 = ct.arc_circle[d.arc_idx_at(y, 0)];
        const int d2 = ct.arc_circle[d.arc_idx_at(y, 2)];
        const bool s = e.signs & (1u << src1);
        uint32_t base = away_signs();
        if (s) {
            out.signs2[out.count++] = base | (1u << d1) | (1u << d2);
        } else {
            out.signs2[out.count++] = base | (1u << d1);
            out.signs2[out.count++] = base | (1u << d2);
        }
    }
    return out;
}

int adjacency_sign(const LinkDiagram& d, const EnhancedState& e, const EnhancedState& e2) {
    uint32_t diff = e.markers ^ e2.markers;
    if (__builtin_popcount(diff) != 1) return 0;
    int y = __builtin_ctz(diff);
    if (e.markers & (1u << y)) return 0;  // need A in e, B in e2 at the odd crossing

    StateSpace space(d, 24);
    IncidenceTargets t = incidence_targets_at(space, e, y);
    for (int i = 0; i < t.count; ++i)
        if (t.signs2[i] == e2.signs) return t.coeff;
    return 0;
}

}  // namespace khtor
