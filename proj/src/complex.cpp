#include "khtor/complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace khtor {

void boundary_entries(StateSpace& space, const std::vector<EnhancedState>& targets,
                      const EnhancedState& src, std::vector<std::pair<int, int>>& out) {
    const LinkDiagram& d = space.diagram();
    const int n = d.crossing_count();
    for (int y = 0; y < n; ++y) {
        if (src.markers & (1u << y)) continue;
        IncidenceTargets t = incidence_targets_at(space, src, y);
        for (int k = 0; k < t.count; ++k) {
            EnhancedState e2{t.markers2, t.signs2[k]};
            auto it = std::lower_bound(targets.begin(), targets.end(), e2);
            if (it == targets.end() || !(*it == e2))
                throw std::logic_error("boundary target missing from basis");
            out.push_back({static_cast<int>(it - targets.begin()), t.coeff});
        }
    }
}

GradedComplex build_complex(const LinkDiagram& d, int b, int cap) {
    StateSpace space(d, cap);
    auto by_b = enumerate_enhanced(d, cap);

    GradedComplex gc;
    gc.b = b;
    auto found = by_b.find(b);
    if (found == by_b.end()) return gc;  // empty complex, not an error

    const int n = d.crossing_count();
    for (const auto& e : found->second) gc.basis[sigma_of(n, e.markers)].push_back(e);
    for (auto& [a, level] : gc.basis) std::sort(level.begin(), level.end());

    static const std::vector<EnhancedState> kEmpty;
    std::vector<std::pair<int, int>> buf;
    for (const auto& [a, level] : gc.basis) {
        auto tgt = gc.basis.find(a - 2);
        const auto& targets = tgt == gc.basis.end() ? kEmpty : tgt->second;
        SparseIntMatrix m(static_cast<int>(targets.size()), static_cast<int>(level.size()));
        for (size_t col = 0; col < level.size(); ++col) {
            buf.clear();
            boundary_entries(space, targets, level[col], buf);
            for (const auto& [row, coeff] : buf) m.add(row, static_cast<int>(col), BigInt(coeff));
        }
        gc.diff[a] = std::move(m);
    }
    return gc;
}

bool complex_d2_is_zero(const GradedComplex& gc) {
    for (const auto& [a, m] : gc.diff) {
        auto next = gc.diff.find(a - 2);
        if (next == gc.diff.end()) continue;
        if (next->second.cols() != m.rows()) return false;
        if (!SparseIntMatrix::multiply(next->second, m).is_zero_matrix()) return false;
    }
    return true;
}

}  // namespace khtor
