#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "khtor/complex.hpp"

using namespace khtor;

namespace {
const char* kLeftTrefoil = "PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]";
const char* kFigure8 = "PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]";
const char* kHopfPlus = "PD[X[4,2,3,1],X[2,4,1,3]]";
}  // namespace

TEST_CASE("complex: unknot at b=2 is a single generator with zero maps") {
    LinkDiagram u = parse_pd("PD[U[1]]");
    GradedComplex gc = build_complex(u, 2);
    REQUIRE(gc.basis.count(0) == 1);
    CHECK(gc.basis[0].size() == 1);
    CHECK(gc.diff[0].nnz() == 0);
    AbelianGroup h = homology_of_pair(SparseIntMatrix(1, 0), gc.diff[0]);
    CHECK(h.free_rank == 1);
    CHECK(h.torsion.empty());
}

TEST_CASE("complex: empty quantum grading gives the empty complex") {
    LinkDiagram u = parse_pd("PD[U[1]]");
    GradedComplex gc = build_complex(u, 100);
    CHECK(gc.basis.empty());
    CHECK(gc.diff.empty());
}

TEST_CASE("complex: d^2 = 0 across all gradings of small diagrams") {
    for (const char* code : {"PD[X[1,4,2,3]]", kLeftTrefoil, kFigure8, kHopfPlus}) {
        LinkDiagram d = parse_pd(code);
        auto by_b = enumerate_enhanced(d);
        for (const auto& [b, gens] : by_b) {
            GradedComplex gc = build_complex(d, b);
            CHECK(complex_d2_is_zero(gc));
        }
    }
}

TEST_CASE("complex: level dimensions match enumeration and matrices chain") {
    LinkDiagram d = parse_pd(kLeftTrefoil);
    auto by_b = enumerate_enhanced(d);
    for (const auto& [b, gens] : by_b) {
        GradedComplex gc = build_complex(d, b);
        size_t total = 0;
        for (const auto& [a, level] : gc.basis) {
            total += level.size();
            const SparseIntMatrix& m = gc.diff.at(a);
            CHECK(m.cols() == static_cast<int>(level.size()));
            auto below = gc.basis.find(a - 2);
            CHECK(m.rows() == (below == gc.basis.end() ? 0 : static_cast<int>(below->second.size())));
        }
        CHECK(total == gens.size());
    }
}

TEST_CASE("complex: matrix entries are the adjacency signs") {
    LinkDiagram d = parse_pd(kLeftTrefoil);
    GradedComplex gc = build_complex(d, -1);
    for (const auto& [a, m] : gc.diff) {
        auto below = gc.basis.find(a - 2);
        if (below == gc.basis.end()) continue;
        const auto& src = gc.basis.at(a);
        const auto& dst = below->second;
        for (size_t c = 0; c < src.size(); ++c)
            for (size_t r = 0; r < dst.size(); ++r)
                CHECK(m.get(static_cast<int>(r), static_cast<int>(c)).to_int64() ==
                      adjacency_sign(d, src[c], dst[r]));
    }
}

TEST_CASE("complex: deterministic bases, sorted by state then sign bits") {
    LinkDiagram d = parse_pd(kFigure8);
    GradedComplex gc = build_complex(d, 0);
    for (const auto& [a, level] : gc.basis)
        for (size_t i = 0; i + 1 < level.size(); ++i) CHECK(level[i].key() < level[i + 1].key());
}
