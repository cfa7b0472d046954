#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "khtor/bigint.hpp"

namespace khtor {

// Sparse integer matrix with arbitrary-precision entries; maps R^cols -> R^rows
// by left multiplication.  Stored zero entries are never kept.
class SparseIntMatrix {
public:
    SparseIntMatrix() = default;
    SparseIntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    size_t nnz() const { return entries_.size(); }
    bool is_zero_matrix() const { return entries_.empty(); }

    void set(int r, int c, BigInt v);
    void add(int r, int c, const BigInt& v);
    BigInt get(int r, int c) const;
    const std::map<std::pair<int, int>, BigInt>& entries() const { return entries_; }

    SparseIntMatrix transposed() const;
    static SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b);

    // Documented dump format: "rows cols" header line, then one "r c value"
    // line per nonzero entry in row-major order.
    std::string triplet_dump() const;

private:
    int rows_ = 0, cols_ = 0;
    std::map<std::pair<int, int>, BigInt> entries_;
};

// Lean triplet form used by the large-diagram homology pipeline, where
// coefficients start out as +-1 and stay machine-word sized in practice.
struct CooMatrix {
    int rows = 0, cols = 0;
    std::vector<int32_t> r, c;
    std::vector<int64_t> v;

    void add(int rr, int cc, int64_t vv) {
        r.push_back(rr);
        c.push_back(cc);
        v.push_back(vv);
    }
    size_t nnz() const { return v.size(); }
};

CooMatrix to_coo(const SparseIntMatrix& m);  // throws if an entry exceeds int64

// One cyclic summand Z_{p^k} of the primary decomposition.
struct TorsionSummand {
    BigInt prime;
    int power = 1;

    BigInt value() const { return BigInt::pow(prime, static_cast<unsigned long long>(power)); }
    bool operator==(const TorsionSummand& o) const { return prime == o.prime && power == o.power; }
    bool operator<(const TorsionSummand& o) const {
        if (prime != o.prime) return prime < o.prime;
        return power < o.power;
    }
};

// A finitely generated abelian group in primary decomposition: free rank plus
// a sorted multiset of prime-power cyclic summands.
struct AbelianGroup {
    long long free_rank = 0;
    std::vector<TorsionSummand> torsion;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const AbelianGroup& o) const = default;
    std::string to_string() const;
};

// Invariant factors d1 | d2 | ... | dr of m (nonzero ones only; rank = r).
std::vector<BigInt> smith_normal_form(const SparseIntMatrix& m);
int integer_rank(const SparseIntMatrix& m);

// Rank over Q (characteristic 0) or F_p (p prime).
int rank_over_field(const SparseIntMatrix& m, long long characteristic);

// ker(d_out) / im(d_in); requires d_out * d_in = 0 (throws std::logic_error
// otherwise, which upstream means a sign-rule bug).
AbelianGroup homology_of_pair(const SparseIntMatrix& d_in, const SparseIntMatrix& d_out);

// True iff a is isomorphic to a direct summand of b: free ranks compare and
// every prime-power multiplicity in a is bounded by its multiplicity in b.
bool is_direct_summand(const AbelianGroup& a, const AbelianGroup& b);

// ---- lean pipeline ----

struct SnfResult {
    int rank = 0;
    std::vector<BigInt> factors;  // nonzero invariant factors, divisibility-sorted
};

SnfResult snf_coo(const CooMatrix& m);
int rank_coo(const CooMatrix& m);
int rank_coo_mod_p(const CooMatrix& m, long long p);

std::vector<TorsionSummand> primary_decomposition(const std::vector<BigInt>& invariant_factors);
std::vector<std::pair<BigInt, int>> factorize(const BigInt& n);  // n >= 1

}  // namespace khtor
