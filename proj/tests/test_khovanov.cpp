#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "khtor/khovanov.hpp"

using namespace khtor;

namespace {
const char* kLeftTrefoil = "PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]";
const char* kFigure8 = "PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]";
const char* kHopfPlus = "PD[X[4,2,3,1],X[2,4,1,3]]";

AbelianGroup free_z(long long rank) { return AbelianGroup{rank, {}}; }
AbelianGroup z2() { return AbelianGroup{0, {{BigInt(2), 1}}}; }

LinkDiagram permuted(const LinkDiagram& d, const std::vector<int>& perm) {
    std::vector<std::array<int, 4>> tuples;
    for (int i : perm) tuples.push_back(d.crossings()[i].arcs);
    return LinkDiagram::from_tuples(std::move(tuples), d.unknot_count());
}
}  // namespace

TEST_CASE("kh: unknot is Z at (0,-1) and (0,1) only") {
    KhTable t = kh(parse_pd("PD[U[1]]"), Ring::Z());
    REQUIRE(t.entries.size() == 2);
    CHECK(t.at(0, 1) == free_z(1));
    CHECK(t.at(0, -1) == free_z(1));
}

TEST_CASE("kh: both one-crossing kinks reproduce the unknot table") {
    KhTable unknot = kh(parse_pd("PD[U[1]]"), Ring::Z());
    KhTable pos = kh(parse_pd("PD[X[1,4,2,3]]"), Ring::Z());
    CHECK(pos.same_entries(unknot));
    // the mirror kink has the opposite handedness
    KhTable neg = kh(parse_pd("PD[X[1,4,2,3]]").mirrored(), Ring::Z());
    CHECK(neg.same_entries(unknot));
    CHECK(pos.writhe == -neg.writhe);
    CHECK(pos.writhe != 0);
}

TEST_CASE("kh: left trefoil table with its single Z_2 summand") {
    KhTable t = kh(parse_pd(kLeftTrefoil), Ring::Z());
    CHECK(t.at(0, -1) == free_z(1));
    CHECK(t.at(0, -3) == free_z(1));
    CHECK(t.at(-2, -5) == free_z(1));
    CHECK(t.at(-3, -9) == free_z(1));
    CHECK(t.at(-2, -7) == z2());
    CHECK(t.entries.size() == 5);

    auto tor = torsion_summands(t);
    REQUIRE(tor.size() == 1);
    CHECK(tor[0].i == -2);
    CHECK(tor[0].j == -7);
    CHECK(tor[0].prime_power.to_int64() == 2);
    CHECK(tor[0].multiplicity == 1);
}

TEST_CASE("kh: right trefoil sits at positive gradings") {
    KhTable t = kh(parse_pd(kLeftTrefoil).mirrored(), Ring::Z());
    CHECK(t.at(0, 1) == free_z(1));
    CHECK(t.at(0, 3) == free_z(1));
    CHECK(t.at(2, 5) == free_z(1));
    CHECK(t.at(3, 9) == free_z(1));
    CHECK(t.at(3, 7) == z2());
    CHECK(t.entries.size() == 5);
}

TEST_CASE("kh: positive Hopf link table") {
    KhTable t = kh(parse_pd(kHopfPlus), Ring::Z());
    CHECK(t.at(0, 0) == free_z(1));
    CHECK(t.at(0, 2) == free_z(1));
    CHECK(t.at(2, 4) == free_z(1));
    CHECK(t.at(2, 6) == free_z(1));
    CHECK(t.entries.size() == 4);
    CHECK(torsion_summands(t).empty());
}

TEST_CASE("kh: figure-8 is alternating, torsion is only Z_2") {
    KhTable t = kh(parse_pd(kFigure8), Ring::Z());
    for (const auto& e : torsion_summands(t)) CHECK(e.prime_power.to_int64() == 2);
    CHECK_FALSE(torsion_summands(t).empty());
    // mirror symmetric knot: free part symmetric under (i,j) -> (-i,-j)
    for (const auto& [ij, g] : t.entries)
        CHECK(t.at(-ij.first, -ij.second).free_rank == g.free_rank);
}

TEST_CASE("kh: field tables carry no torsion and Q matches free ranks") {
    LinkDiagram d = parse_pd(kLeftTrefoil);
    KhTable tz = kh(d, Ring::Z());
    KhTable tq = kh(d, Ring::Q());
    for (const auto& [ij, g] : tq.entries) CHECK(g.torsion.empty());
    for (const auto& [ij, g] : tz.entries)
        CHECK(tq.at(ij.first, ij.second).free_rank == g.free_rank);
    CHECK_THROWS_AS(torsion_summands(tq), std::logic_error);

    // universal coefficients at p=2: one Z_2 adds two F_2 dimensions
    KhTable t2 = kh(d, Ring::F(2));
    CHECK(t2.total_free_rank() == tq.total_free_rank() + 2);
}

TEST_CASE("kh: graded Euler characteristic equals the bracket oracle") {
    for (const char* code :
         {"PD[U[1]]", "PD[X[1,4,2,3]]", kLeftTrefoil, kFigure8, kHopfPlus}) {
        LinkDiagram d = parse_pd(code);
        LaurentPoly chi = graded_euler_characteristic(kh(d, Ring::Z()));
        LaurentPoly jones = bracket_as_jones_q(kauffman_bracket_oracle(d));
        CHECK(chi == unknot_euler_q() * jones);
    }
}

TEST_CASE("kh: bracket oracle basics") {
    // unknot normalizes to 1
    CHECK(kauffman_bracket_oracle(parse_pd("PD[U[1]]")) == LaurentPoly(BigInt(1)));
    // Reidemeister-1 behavior: both kinks normalize to 1 as well
    CHECK(kauffman_bracket_oracle(parse_pd("PD[X[1,4,2,3]]")) == LaurentPoly(BigInt(1)));
    CHECK(kauffman_bracket_oracle(parse_pd("PD[X[1,4,2,3]]").mirrored()) ==
          LaurentPoly(BigInt(1)));
    // trefoil: 3 terms reduced, 4 in the unreduced (Euler-characteristic) form
    LaurentPoly b = kauffman_bracket_oracle(parse_pd(kLeftTrefoil));
    CHECK(b.terms().size() == 3);
    CHECK((unknot_euler_q() * bracket_as_jones_q(b)).terms().size() == 4);
}

TEST_CASE("kh: crossing order independence") {
    LinkDiagram d = parse_pd(kFigure8);
    KhTable base = kh(d, Ring::Z());
    std::mt19937 gen(12345);
    std::vector<int> perm{0, 1, 2, 3};
    for (int trial = 0; trial < 4; ++trial) {
        std::shuffle(perm.begin(), perm.end(), gen);
        CHECK(kh(permuted(d, perm), Ring::Z()).same_entries(base));
    }
}

TEST_CASE("kh: mirror duality on free ranks") {
    for (const char* code : {kLeftTrefoil, kHopfPlus, kFigure8}) {
        LinkDiagram d = parse_pd(code);
        KhTable t = kh(d, Ring::Z());
        KhTable m = kh(d.mirrored(), Ring::Z());
        for (const auto& [ij, g] : t.entries)
            CHECK(m.at(-ij.first, -ij.second).free_rank == g.free_rank);
    }
}

TEST_CASE("kh: check_summand basics") {
    KhTable tre = kh(parse_pd(kLeftTrefoil), Ring::Z());
    KhTable unknot = kh(parse_pd("PD[U[1]]"), Ring::Z());

    SummandReport self = check_summand(tre, tre);
    CHECK(self.all_pass);

    SummandReport fail = check_summand(tre, unknot);
    CHECK_FALSE(fail.all_pass);
    // failures occur away from the unknot's support
    bool found_fail = false;
    for (const auto& item : fail.items)
        if (!item.pass) found_fail = true;
    CHECK(found_fail);
}

TEST_CASE("kh: thread count does not change the table") {
    LinkDiagram d = parse_pd(kFigure8);
    KhOptions seq;
    seq.threads = 1;
    KhOptions par;
    par.threads = 4;
    CHECK(kh(d, Ring::Z(), seq).same_entries(kh(d, Ring::Z(), par)));
}

TEST_CASE("kh: renderers are stable and well-formed") {
    KhTable t = kh(parse_pd(kLeftTrefoil), Ring::Z());
    t.name = "trefoil";
    std::string text = render_table_text(t);
    CHECK(text.find("1_2") != std::string::npos);  // the torsion cell
    std::string csv = render_table_csv(t);
    CHECK(csv.find("i,j,free,torsion") == 0);
    CHECK(csv.find("-2,-7,0,2") != std::string::npos);
    std::string json = render_table_json(t);
    CHECK(json.find("\"ring\": \"Z\"") != std::string::npos);
    CHECK(render_table_text(t) == text);
}

TEST_CASE("kh: cap exceeded raises the dedicated error") {
    LinkDiagram d = parse_pd(kLeftTrefoil);
    KhOptions opts;
    opts.cap = 2;
    CHECK_THROWS_AS(kh(d, Ring::Z(), opts), cap_error);
}

TEST_CASE("kh: dump format has headers and triplets") {
    std::string dump = dump_complex_triplets(parse_pd("PD[X[1,4,2,3]]"));
    CHECK(dump.find("b ") != std::string::npos);
    CHECK(dump.find("a ") != std::string::npos);
}
