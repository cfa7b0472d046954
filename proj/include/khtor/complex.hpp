#pragma once

#include <map>
#include <vector>

#include "khtor/homology.hpp"
#include "khtor/states.hpp"

namespace khtor {

// The chain complex at one quantum grading b: sorted generator bases per
// homological grading a, and boundary matrices diff[a] : C_{a,b} -> C_{a-2,b}.
// Entry (r,c) of diff[a] is the incidence number (basis[a][c] : basis[a-2][r]).
struct GradedComplex {
    int b = 0;
    std::map<int, std::vector<EnhancedState>> basis;
    std::map<int, SparseIntMatrix> diff;
};

GradedComplex build_complex(const LinkDiagram& d, int b, int cap = kDefaultCap);

// Boundary entries of one source generator into a sorted target level:
// (row index, coefficient) pairs appended to out.
void boundary_entries(StateSpace& space, const std::vector<EnhancedState>& targets,
                      const EnhancedState& src, std::vector<std::pair<int, int>>& out);

// Consecutive differentials compose to zero.
bool complex_d2_is_zero(const GradedComplex& gc);

}  // namespace khtor
