#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "khtor/complex.hpp"
#include "khtor/laurent.hpp"

namespace khtor {

struct Ring {
    enum class Kind { Z, Q, Fp };
    Kind kind = Kind::Z;
    long long p = 0;

    static Ring Z() { return {Kind::Z, 0}; }
    static Ring Q() { return {Kind::Q, 0}; }
    static Ring F(long long p);
    static Ring parse(const std::string& s);  // "Z", "Q", "F2", "F3", ...

    bool is_field() const { return kind != Kind::Z; }
    std::string name() const;
    bool operator==(const Ring&) const = default;
};

bool is_prime_int(long long p);

// The Khovanov homology table: bigrading (i,j) -> group, nonzero entries
// only.  Over a field the groups are free (dimension in free_rank).
struct KhTable {
    Ring ring;
    std::map<std::pair<int, int>, AbelianGroup> entries;
    std::string name;
    int writhe = 0;
    int crossings = 0;

    const AbelianGroup& at(int i, int j) const;
    long long total_free_rank() const;
    bool same_entries(const KhTable& o) const { return entries == o.entries; }
};

struct KhOptions {
    int cap = kDefaultCap;
    int threads = 1;
    bool check_d2 = true;  // verify consecutive boundary maps compose to zero
};

// Kh^{i,j}(d) over the given ring via the regrading
// i = (w - a)/2, j = (3w - b)/2 applied to the unoriented homology.
KhTable kh(const LinkDiagram& d, Ring ring, const KhOptions& opts = {});

struct TorsionEntry {
    int i = 0, j = 0;
    BigInt prime_power;
    int multiplicity = 0;
};
// All torsion summands of an integral table, sorted by (i, j, order).
std::vector<TorsionEntry> torsion_summands(const KhTable& t);

// sum over (i,j) of (-1)^i free_rank q^j.
LaurentPoly graded_euler_characteristic(const KhTable& t);

// Writhe-normalized Kauffman bracket (-A^3)^{-w} * sum_s A^{sigma(s)}
// (-A^2 - A^{-2})^{c(s)-1}, computed by direct state sum, independent of the
// chain-complex path.
LaurentPoly kauffman_bracket_oracle(const LinkDiagram& d, int cap = kDefaultCap);

// The substitution tying the bracket to the graded Euler characteristic:
// every exponent of A in the normalized bracket is even, and A^2 |-> -q^{-1}
// gives  graded_euler_characteristic(kh(D)) = (q + q^{-1}) * subst(bracket).
LaurentPoly bracket_as_jones_q(const LaurentPoly& normalized_bracket_in_A);
LaurentPoly unknot_euler_q();  // q + q^{-1}

struct SummandReport {
    struct Item {
        int i = 0, j = 0;
        bool pass = false;
        AbelianGroup lhs, rhs;
    };
    std::vector<Item> items;
    bool all_pass = true;
};
// Degreewise direct-summand check of t0 inside t1 (same ring required).
SummandReport check_summand(const KhTable& t0, const KhTable& t1);

std::string render_table_text(const KhTable& t);
std::string render_table_csv(const KhTable& t);
std::string render_table_json(const KhTable& t);

// Debug dump of every boundary matrix in the documented triplet format.
std::string dump_complex_triplets(const LinkDiagram& d, int cap = kDefaultCap);

}  // namespace khtor
