#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "khtor/homology.hpp"

using namespace khtor;

namespace {

SparseIntMatrix from_rows(const std::vector<std::vector<long long>>& rows, int cols = -1) {
    int r = static_cast<int>(rows.size());
    int c = cols >= 0 ? cols : (r ? static_cast<int>(rows[0].size()) : 0);
    SparseIntMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < static_cast<int>(rows[i].size()); ++j)
            m.set(i, j, BigInt(rows[i][j]));
    return m;
}

// gcd of all k x k minors; 0 when every minor vanishes
long long minor_gcd(const std::vector<std::vector<long long>>& m, int k) {
    int r = static_cast<int>(m.size()), c = r ? static_cast<int>(m[0].size()) : 0;
    std::vector<int> ri(k), ci(k);
    long long g = 0;
    // enumerate k-subsets of rows and columns
    std::vector<int> rs(k), cs(k);
    std::function<void(int, int)> pick_cols = [&](int start, int depth) {
        if (depth == k) {
            // Laplace-free small determinant by permutation expansion (k <= 4)
            std::vector<int> perm(k);
            for (int i = 0; i < k; ++i) perm[i] = i;
            long long det = 0;
            do {
                int inv = 0;
                for (int i = 0; i < k; ++i)
                    for (int j = i + 1; j < k; ++j)
                        if (perm[i] > perm[j]) ++inv;
                long long term = (inv % 2) ? -1 : 1;
                for (int i = 0; i < k; ++i) term *= m[rs[i]][cs[perm[i]]];
                det += term;
            } while (std::next_permutation(perm.begin(), perm.end()));
            det = det < 0 ? -det : det;
            g = std::gcd(g, det);
            return;
        }
        for (int j = start; j < c; ++j) {
            cs[depth] = j;
            pick_cols(j + 1, depth + 1);
        }
    };
    std::function<void(int, int)> pick_rows = [&](int start, int depth) {
        if (depth == k) {
            pick_cols(0, 0);
            return;
        }
        for (int i = start; i < r; ++i) {
            rs[depth] = i;
            pick_rows(i + 1, depth + 1);
        }
    };
    pick_rows(0, 0);
    (void)ri;
    (void)ci;
    return g;
}

struct Rng {
    uint64_t s = 0x123456789abcdefULL;
    uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    long long range(long long lo, long long hi) { return lo + static_cast<long long>(next() % (hi - lo + 1)); }
};

}  // namespace

TEST_CASE("snf: identity, zero, worked example") {
    auto id3 = from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    auto f = smith_normal_form(id3);
    REQUIRE(f.size() == 3);
    for (const auto& d : f) CHECK(d.is_one());

    SparseIntMatrix z(4, 5);
    CHECK(smith_normal_form(z).empty());

    auto m = from_rows({{2, 4}, {6, 8}});
    auto fm = smith_normal_form(m);
    REQUIRE(fm.size() == 2);
    CHECK(fm[0].to_int64() == 2);
    CHECK(fm[1].to_int64() == 4);
}

TEST_CASE("snf: matches the minor-gcd definition on random small matrices") {
    Rng rng;
    for (int trial = 0; trial < 120; ++trial) {
        int r = static_cast<int>(rng.range(1, 4));
        int c = static_cast<int>(rng.range(1, 4));
        std::vector<std::vector<long long>> rows(r, std::vector<long long>(c));
        for (auto& row : rows)
            for (auto& v : row) v = rng.range(-4, 4);
        auto factors = smith_normal_form(from_rows(rows, c));
        // d_k = gcd(k-minors) / gcd((k-1)-minors), as long as minors survive
        long long prev = 1;
        size_t rank = 0;
        for (int k = 1; k <= std::min(r, c); ++k) {
            long long g = minor_gcd(rows, k);
            if (g == 0) break;
            REQUIRE(rank < factors.size());
            CHECK(factors[rank].to_int64() == g / prev);
            prev = g;
            ++rank;
        }
        CHECK(rank == factors.size());
    }
}

TEST_CASE("snf: divisibility chain and transpose invariance") {
    Rng rng;
    for (int trial = 0; trial < 60; ++trial) {
        int r = static_cast<int>(rng.range(1, 5));
        int c = static_cast<int>(rng.range(1, 5));
        std::vector<std::vector<long long>> rows(r, std::vector<long long>(c));
        for (auto& row : rows)
            for (auto& v : row) v = rng.range(-6, 6);
        SparseIntMatrix m = from_rows(rows, c);
        auto f = smith_normal_form(m);
        for (size_t i = 0; i + 1 < f.size(); ++i) CHECK((f[i + 1] % f[i]).is_zero());
        auto ft = smith_normal_form(m.transposed());
        CHECK(f == ft);
    }
}

TEST_CASE("rank over fields") {
    auto two = from_rows({{2}});
    CHECK(rank_over_field(two, 2) == 0);
    CHECK(rank_over_field(two, 0) == 1);

    auto id4 = from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    for (long long p : {0LL, 2LL, 3LL, 5LL, 7919LL}) CHECK(rank_over_field(id4, p) == 4);

    auto m = from_rows({{2, 4}, {6, 8}});
    CHECK(rank_over_field(m, 2) == 0);
    CHECK(rank_over_field(m, 3) == 2);
    CHECK(rank_over_field(m, 0) == 2);

    CHECK_THROWS_AS(rank_over_field(m, 4), std::domain_error);
    CHECK_THROWS_AS(rank_over_field(m, -3), std::domain_error);
}

TEST_CASE("homology_of_pair: worked examples") {
    // zero maps on an ambient rank 2
    SparseIntMatrix d_in(2, 0), d_out(0, 2);
    AbelianGroup g = homology_of_pair(d_in, d_out);
    CHECK(g.free_rank == 2);
    CHECK(g.torsion.empty());

    // cokernel of multiplication by 2
    auto din2 = from_rows({{2}});
    SparseIntMatrix dout0(0, 1);
    AbelianGroup g2 = homology_of_pair(din2, dout0);
    CHECK(g2.free_rank == 0);
    REQUIRE(g2.torsion.size() == 1);
    CHECK(g2.torsion[0].prime.to_int64() == 2);
    CHECK(g2.torsion[0].power == 1);

    // Z_2 + Z_3 in primary form
    auto din23 = from_rows({{2, 0}, {0, 3}});
    SparseIntMatrix dout02(0, 2);
    AbelianGroup g3 = homology_of_pair(din23, dout02);
    CHECK(g3.free_rank == 0);
    REQUIRE(g3.torsion.size() == 2);
    CHECK(g3.torsion[0].prime.to_int64() == 2);
    CHECK(g3.torsion[1].prime.to_int64() == 3);
    CHECK(g3.to_string() == "Z_2 + Z_3");

    // nonzero composition must be rejected
    auto a = from_rows({{1}});
    auto b = from_rows({{1}});
    CHECK_THROWS_AS(homology_of_pair(a, b), std::logic_error);
}

TEST_CASE("is_direct_summand: prime-power multiplicity criterion") {
    AbelianGroup z{1, {}};
    AbelianGroup z2_t2{2, {{BigInt(2), 1}}};
    CHECK(is_direct_summand(z, z2_t2));
    CHECK_FALSE(is_direct_summand(z2_t2, z));

    AbelianGroup t4{0, {{BigInt(2), 2}}};       // Z_4
    AbelianGroup t22{0, {{BigInt(2), 1}, {BigInt(2), 1}}};  // Z_2 + Z_2
    CHECK_FALSE(is_direct_summand(t4, t22));
    CHECK_FALSE(is_direct_summand(t22, t4));

    AbelianGroup t2{0, {{BigInt(2), 1}}};
    CHECK_FALSE(is_direct_summand(t2, t4));
    CHECK(is_direct_summand(t2, t22));

    // reflexive, and antisymmetry forces equality
    for (const AbelianGroup& g : {z, z2_t2, t4, t22}) CHECK(is_direct_summand(g, g));
    CHECK((is_direct_summand(t22, t22) && t22 == t22));
}

TEST_CASE("primary decomposition and factorization") {
    auto dec = primary_decomposition({BigInt(1), BigInt(6), BigInt(12)});
    // 6 = 2*3, 12 = 4*3
    REQUIRE(dec.size() == 4);
    CHECK(dec[0].prime.to_int64() == 2);
    CHECK(dec[0].power == 1);
    CHECK(dec[1].prime.to_int64() == 2);
    CHECK(dec[1].power == 2);
    CHECK(dec[2].prime.to_int64() == 3);
    CHECK(dec[3].prime.to_int64() == 3);

    auto f = factorize(BigInt(720));
    REQUIRE(f.size() == 3);
    CHECK(f[0].first.to_int64() == 2);
    CHECK(f[0].second == 4);
    CHECK(f[1].first.to_int64() == 3);
    CHECK(f[1].second == 2);
    CHECK(f[2].first.to_int64() == 5);
    CHECK(f[2].second == 1);

    auto big = factorize(BigInt(1000003LL * 999983LL));
    REQUIRE(big.size() == 2);
}

TEST_CASE("snf: survives entries that overflow int64 mid-computation") {
    // large entries force the BigInt path
    SparseIntMatrix m(2, 2);
    BigInt huge = BigInt::pow(BigInt(2), 70);
    m.set(0, 0, huge);
    m.set(0, 1, BigInt(3));
    m.set(1, 0, BigInt(5));
    m.set(1, 1, huge + BigInt(1));
    auto f = smith_normal_form(m);
    REQUIRE(f.size() == 2);
    CHECK(f[0].is_one());
    // determinant = huge*(huge+1) - 15
    BigInt det = huge * (huge + BigInt(1)) - BigInt(15);
    CHECK(f[1] == det.abs());
}
