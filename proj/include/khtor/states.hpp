#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <vector>

#include "khtor/pd.hpp"

namespace khtor {

// Raised when a diagram exceeds the state-enumeration cap.
class cap_error : public std::runtime_error {
public:
    explicit cap_error(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr int kDefaultCap = 16;

// Smoothing convention, fixed once for the whole project:
//
//   A-smoothing of X[a,b,c,d] joins (a,d) and (b,c);
//   B-smoothing joins (a,b) and (c,d),
//
// where the tuple lists the incoming under-strand first and the rest of the
// arcs counterclockwise.  With this choice the standard left-trefoil code
// PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]] has 2 circles in its all-A state and
// 3 in its all-B state, and the right-handed trefoil table lands at positive
// homological gradings.  Marker bit y = 1 means a B marker at crossing y.

// Circle decomposition of one Kauffman state.  Circles are numbered by the
// smallest dense arc index they contain; crossingless unknot components get
// the trailing ids.
struct CircleData {
    int count = 0;
    int arc_circle_count = 0;
    std::vector<int16_t> arc_circle;  // dense arc index -> circle id
    std::vector<int> rep_arc;         // circle id -> smallest arc index (arc circles only)
};

struct KauffmanState {
    uint32_t markers = 0;
    CircleData circles;
};

struct EnhancedState {
    uint32_t markers = 0;
    uint32_t signs = 0;  // bit i set = circle i carries +1; clear = -1

    uint64_t key() const { return (static_cast<uint64_t>(markers) << 32) | signs; }
    bool operator==(const EnhancedState& o) const { return markers == o.markers && signs == o.signs; }
    bool operator<(const EnhancedState& o) const { return key() < o.key(); }
};

struct Gradings {
    int a = 0;
    int b = 0;
};

// sigma = #A - #B of a marker vector.
inline int sigma_of(int n, uint32_t markers) { return n - 2 * __builtin_popcount(markers); }

KauffmanState smooth(const LinkDiagram& d, uint32_t markers);

// Memoized circle data for every state of one diagram.  precompute_all()
// makes subsequent circles() calls safe to share across threads.
class StateSpace {
public:
    explicit StateSpace(const LinkDiagram& d, int cap = kDefaultCap);

    const LinkDiagram& diagram() const { return *d_; }
    const CircleData& circles(uint32_t markers);
    void precompute_all();

private:
    const LinkDiagram* d_;
    std::vector<std::unique_ptr<CircleData>> cache_;
    CircleData compute(uint32_t markers) const;
};

Gradings gradings(const LinkDiagram& d, const EnhancedState& e);
int tau_of(const CircleData& c, uint32_t signs);

// Every enhanced state of d, grouped by quantum grading b; each group is
// sorted by (marker bits, sign bits).
std::map<int, std::vector<EnhancedState>> enumerate_enhanced(const LinkDiagram& d,
                                                             int cap = kDefaultCap);
size_t total_enhanced_count(const LinkDiagram& d, int cap = kDefaultCap);

// Incidence targets of the differential applied at crossing y (which must
// carry an A marker in e): the enhanced states e' with (e:e') != 0 and the
// common coefficient (-1)^alpha, alpha = #B markers after y.
struct IncidenceTargets {
    int coeff = 0;
    uint32_t markers2 = 0;
    // up to two sign vectors (a -1 circle splitting has two compatible targets)
    int count = 0;
    uint32_t signs2[2] = {0, 0};
};

IncidenceTargets incidence_targets_at(StateSpace& space, const EnhancedState& e, int y);

// (e : e2) in {-1, 0, +1}; both states must live on the same diagram.
int adjacency_sign(const LinkDiagram& d, const EnhancedState& e, const EnhancedState& e2);

}  // namespace khtor
