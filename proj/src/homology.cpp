#include "khtor/homology.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace khtor {

void SparseIntMatrix::set(int r, int c, BigInt v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("SparseIntMatrix: index out of range");
    if (v.is_zero())
        entries_.erase({r, c});
    else
        entries_[{r, c}] = std::move(v);
}

void SparseIntMatrix::add(int r, int c, const BigInt& v) {
    if (v.is_zero()) return;
    set(r, c, get(r, c) + v);
}

BigInt SparseIntMatrix::get(int r, int c) const {
    auto it = entries_.find({r, c});
    return it == entries_.end() ? BigInt() : it->second;
}

SparseIntMatrix SparseIntMatrix::transposed() const {
    SparseIntMatrix t(cols_, rows_);
    for (const auto& [rc, v] : entries_) t.entries_[{rc.second, rc.first}] = v;
    return t;
}

SparseIntMatrix SparseIntMatrix::multiply(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    if (a.cols() != b.rows()) throw std::logic_error("SparseIntMatrix: dimension mismatch");
    SparseIntMatrix out(a.rows(), b.cols());
    // group b's entries by row for the middle index
    std::unordered_map<int, std::vector<std::pair<int, const BigInt*>>> b_by_row;
    for (const auto& [rc, v] : b.entries_) b_by_row[rc.first].push_back({rc.second, &v});
    for (const auto& [rc, va] : a.entries_) {
        auto it = b_by_row.find(rc.second);
        if (it == b_by_row.end()) continue;
        for (const auto& [c2, vb] : it->second) out.add(rc.first, c2, va * *vb);
    }
    return out;
}

std::string SparseIntMatrix::triplet_dump() const {
    std::ostringstream os;
    os << rows_ << " " << cols_ << "\n";
    for (const auto& [rc, v] : entries_) os << rc.first << " " << rc.second << " " << v << "\n";
    return os.str();
}

CooMatrix to_coo(const SparseIntMatrix& m) {
    CooMatrix out;
    out.rows = m.rows();
    out.cols = m.cols();
    for (const auto& [rc, v] : m.entries()) {
        if (!v.fits_int64()) throw std::overflow_error("to_coo: entry exceeds int64");
        out.add(rc.first, rc.second, v.to_int64());
    }
    return out;
}

std::string AbelianGroup::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank > 0) {
        os << "Z";
        if (free_rank > 1) os << "^" << free_rank;
        first = false;
    }
    for (const auto& t : torsion) {
        if (!first) os << " + ";
        os << "Z_" << t.value();
        first = false;
    }
    return os.str();
}

namespace {

bool is_prime_u64(uint64_t n);
inline bool is_prime_ll(long long x) { return x >= 2 && is_prime_u64(static_cast<uint64_t>(x)); }

// Thrown by the checked-int64 coefficient type; triggers the BigInt retry.
struct ElimOverflow {};

unsigned long long uabs64(long long v) {
    return v < 0 ? ~static_cast<unsigned long long>(v) + 1ULL : static_cast<unsigned long long>(v);
}

struct C64 {
    long long v = 0;
    C64() = default;
    explicit C64(long long x) : v(x) {}
    static C64 from_bigint(const BigInt& b) {
        if (!b.fits_int64()) throw ElimOverflow{};
        return C64(b.to_int64());
    }
    bool is_zero() const { return v == 0; }
    bool is_unit() const { return v == 1 || v == -1; }
    C64 unit_inverse() const { return *this; }
    C64 operator*(const C64& o) const {
        long long r;
        if (__builtin_mul_overflow(v, o.v, &r)) throw ElimOverflow{};
        return C64(r);
    }
    C64 operator-(const C64& o) const {
        long long r;
        if (__builtin_sub_overflow(v, o.v, &r)) throw ElimOverflow{};
        return C64(r);
    }
    C64 operator+(const C64& o) const {
        long long r;
        if (__builtin_add_overflow(v, o.v, &r)) throw ElimOverflow{};
        return C64(r);
    }
    static void divmod(const C64& a, const C64& b, C64& q, C64& r) {
        if (b.v == -1 && a.v == LLONG_MIN) throw ElimOverflow{};
        q = C64(a.v / b.v);
        r = C64(a.v % b.v);
    }
    // -1 / 0 / +1 comparing |*this| with |o|
    int abs_cmp(const C64& o) const {
        unsigned long long x = uabs64(v), y = uabs64(o.v);
        return x < y ? -1 : x > y ? 1 : 0;
    }
    BigInt to_bigint() const { return BigInt(v); }
};

struct CBig {
    BigInt v;
    CBig() = default;
    explicit CBig(long long x) : v(x) {}
    explicit CBig(BigInt x) : v(std::move(x)) {}
    static CBig from_bigint(const BigInt& b) { return CBig(b); }
    bool is_zero() const { return v.is_zero(); }
    bool is_unit() const { return v.abs().is_one(); }
    CBig unit_inverse() const { return *this; }
    CBig operator*(const CBig& o) const { return CBig(v * o.v); }
    CBig operator-(const CBig& o) const { return CBig(v - o.v); }
    CBig operator+(const CBig& o) const { return CBig(v + o.v); }
    static void divmod(const CBig& a, const CBig& b, CBig& q, CBig& r) {
        BigInt::divmod(a.v, b.v, q.v, r.v);
    }
    int abs_cmp(const CBig& o) const { return v.abs().cmp(o.v.abs()); }
    BigInt to_bigint() const { return v; }
};

// Coefficients mod a prime; every nonzero value is a unit, so elimination
// never leaves the unit-pivot phase.
struct Zp {
    long long v = 0;
    static long long p;
    Zp() = default;
    explicit Zp(long long x) {
        v = x % p;
        if (v < 0) v += p;
    }
    static Zp from_bigint(const BigInt& b) {
        BigInt q, r;
        BigInt::divmod(b, BigInt(p), q, r);
        long long x = r.to_int64();
        return Zp(x);
    }
    bool is_zero() const { return v == 0; }
    bool is_unit() const { return v != 0; }
    Zp unit_inverse() const {
        // extended Euclid
        long long a = v, m = p, x0 = 0, x1 = 1;
        while (a > 1) {
            long long q = a / m;
            long long t = m;
            m = a % m;
            a = t;
            t = x0;
            x0 = x1 - q * x0;
            x1 = t;
        }
        Zp r;
        r.v = ((x1 % p) + p) % p;
        return r;
    }
    Zp operator*(const Zp& o) const {
        Zp r;
        r.v = (__int128(v) * o.v) % p;
        return r;
    }
    Zp operator-(const Zp& o) const {
        Zp r;
        r.v = v - o.v;
        if (r.v < 0) r.v += p;
        return r;
    }
    Zp operator+(const Zp& o) const {
        Zp r;
        r.v = v + o.v;
        if (r.v >= p) r.v -= p;
        return r;
    }
    static void divmod(const Zp&, const Zp&, Zp&, Zp&) {
        throw std::logic_error("Zp: divmod unused");
    }
    int abs_cmp(const Zp& o) const { return v < o.v ? -1 : v > o.v ? 1 : 0; }
    BigInt to_bigint() const { return BigInt(v); }
};
long long Zp::p = 2;

template <class C>
class Elim {
public:
    Elim(const CooMatrix& m, bool need_factors)
        : rows_(m.rows), colrows_(m.cols), need_factors_(need_factors) {
        for (size_t i = 0; i < m.nnz(); ++i) add_entry(m.r[i], m.c[i], C(m.v[i]));
    }

    Elim(const SparseIntMatrix& m, bool need_factors)
        : rows_(m.rows()), colrows_(m.cols()), need_factors_(need_factors) {
        for (const auto& [rc, v] : m.entries()) add_entry(rc.first, rc.second, C::from_bigint(v));
    }

    SnfResult run() {
        seed_heap();
        unit_phase();
        general_phase();
        SnfResult out;
        out.rank = unit_count_ + static_cast<int>(big_pivots_.size());
        if (need_factors_) {
            out.factors.assign(unit_count_, BigInt(1));
            auto rest = fix_divisibility_chain(std::move(big_pivots_));
            out.factors.insert(out.factors.end(), rest.begin(), rest.end());
        }
        return out;
    }

private:
    std::vector<std::unordered_map<int, C>> rows_;
    std::vector<std::unordered_set<int>> colrows_;
    bool need_factors_;
    int unit_count_ = 0;
    std::vector<BigInt> big_pivots_;

    using Cand = std::tuple<unsigned long long, int, int>;
    std::priority_queue<Cand, std::vector<Cand>, std::greater<Cand>> heap_;

    void add_entry(int r, int c, C v) {
        if (v.is_zero()) return;
        auto [it, inserted] = rows_[r].try_emplace(c, v);
        if (!inserted) {
            it->second = it->second + v;
            if (it->second.is_zero()) {
                rows_[r].erase(it);
                colrows_[c].erase(r);
            }
            return;
        }
        colrows_[c].insert(r);
    }

    unsigned long long score(int r, int c) const {
        return static_cast<unsigned long long>(rows_[r].size() - 1) *
               static_cast<unsigned long long>(colrows_[c].size() - 1);
    }

    void seed_heap() {
        for (size_t r = 0; r < rows_.size(); ++r)
            for (const auto& [c, v] : rows_[r])
                if (v.is_unit()) heap_.push({score(static_cast<int>(r), c), static_cast<int>(r), c});
    }

    // row[r2] -= f * row[r]; pushes new unit entries onto the heap
    void row_op(int r2, const C& f, int r) {
        if (f.is_zero()) return;
        std::vector<std::pair<int, C>> prow(rows_[r].begin(), rows_[r].end());
        for (const auto& [cc, vv] : prow) {
            C delta = f * vv;
            auto it = rows_[r2].find(cc);
            if (it == rows_[r2].end()) {
                C nv = C(0) - delta;
                if (!nv.is_zero()) {
                    rows_[r2].emplace(cc, nv);
                    colrows_[cc].insert(r2);
                    if (nv.is_unit()) heap_.push({score(r2, cc), r2, cc});
                }
            } else {
                it->second = it->second - delta;
                if (it->second.is_zero()) {
                    rows_[r2].erase(it);
                    colrows_[cc].erase(r2);
                } else if (it->second.is_unit()) {
                    heap_.push({score(r2, cc), r2, cc});
                }
            }
        }
    }

    // col[c2] -= f * col[c]
    void col_op(int c2, const C& f, int c) {
        if (f.is_zero()) return;
        std::vector<int> rws(colrows_[c].begin(), colrows_[c].end());
        for (int r3 : rws) {
            C delta = f * rows_[r3].at(c);
            auto it = rows_[r3].find(c2);
            if (it == rows_[r3].end()) {
                C nv = C(0) - delta;
                if (!nv.is_zero()) {
                    rows_[r3].emplace(c2, nv);
                    colrows_[c2].insert(r3);
                    if (nv.is_unit()) heap_.push({score(r3, c2), r3, c2});
                }
            } else {
                it->second = it->second - delta;
                if (it->second.is_zero()) {
                    rows_[r3].erase(it);
                    colrows_[c2].erase(r3);
                } else if (it->second.is_unit()) {
                    heap_.push({score(r3, c2), r3, c2});
                }
            }
        }
    }

    void retire_pivot(int r, int c) {
        // pivot is the sole entry in its row and column
        rows_[r].erase(c);
        colrows_[c].erase(r);
    }

    void eliminate_unit(int r, int c) {
        C pivot = rows_[r].at(c);
        C pinv = pivot.unit_inverse();
        std::vector<int> col_list(colrows_[c].begin(), colrows_[c].end());
        for (int r2 : col_list) {
            if (r2 == r) continue;
            C f = rows_[r2].at(c) * pinv;
            row_op(r2, f, r);
        }
        // unimodular column ops clearing the pivot row touch no other entry
        // now that the pivot column is singleton; just drop row and column.
        std::vector<std::pair<int, C>> prow(rows_[r].begin(), rows_[r].end());
        for (const auto& [cc, vv] : prow) colrows_[cc].erase(r);
        rows_[r].clear();
        ++unit_count_;
    }

    void unit_phase() {
        while (!heap_.empty()) {
            auto [sc, r, c] = heap_.top();
            heap_.pop();
            auto it = rows_[r].find(c);
            if (it == rows_[r].end() || !it->second.is_unit()) continue;
            unsigned long long cur = score(r, c);
            if (cur > sc) {
                heap_.push({cur, r, c});
                continue;
            }
            eliminate_unit(r, c);
        }
    }

    bool find_min_pivot(int& pr, int& pc) const {
        bool found = false;
        C best;
        for (size_t r = 0; r < rows_.size(); ++r) {
            for (const auto& [c, v] : rows_[r]) {
                int cmp = found ? v.abs_cmp(best) : -1;
                bool better = !found || cmp < 0 ||
                              (cmp == 0 && (static_cast<int>(r) < pr ||
                                            (static_cast<int>(r) == pr && c < pc)));
                if (better) {
                    best = v;
                    pr = static_cast<int>(r);
                    pc = c;
                    found = true;
                }
            }
        }
        return found;
    }

    void general_phase() {
        int r = 0, c = 0;
        while (find_min_pivot(r, c)) {
            bool clean = false;
            while (!clean) {
                clean = true;
                C pivot = rows_[r].at(c);
                // clear the pivot column, chasing smaller remainders
                std::vector<int> col_list(colrows_[c].begin(), colrows_[c].end());
                for (int r2 : col_list) {
                    if (r2 == r) continue;
                    C q, rem;
                    C::divmod(rows_[r2].at(c), pivot, q, rem);
                    row_op(r2, q, r);
                    if (!rem.is_zero()) {
                        r = r2;  // strictly smaller pivot
                        clean = false;
                        break;
                    }
                }
                if (!clean) continue;
                // clear the pivot row
                std::vector<std::pair<int, C>> prow(rows_[r].begin(), rows_[r].end());
                for (const auto& [c2, v2] : prow) {
                    if (c2 == c) continue;
                    C q, rem;
                    C::divmod(v2, pivot, q, rem);
                    col_op(c2, q, c);
                    if (!rem.is_zero()) {
                        c = c2;
                        clean = false;
                        break;
                    }
                }
                if (!clean) continue;
                if (need_factors_) {
                    // the pivot must divide every remaining entry
                    bool fixed = true;
                    for (size_t r3 = 0; r3 < rows_.size() && fixed; ++r3) {
                        if (static_cast<int>(r3) == r) continue;
                        for (const auto& [c3, v3] : rows_[r3]) {
                            C q, rem;
                            C::divmod(v3, pivot, q, rem);
                            if (!rem.is_zero()) {
                                // add that row to the pivot row and keep reducing
                                std::vector<std::pair<int, C>> srow(rows_[r3].begin(),
                                                                    rows_[r3].end());
                                for (const auto& [cc, vv] : srow) {
                                    auto it = rows_[r].find(cc);
                                    if (it == rows_[r].end()) {
                                        rows_[r].emplace(cc, vv);
                                        colrows_[cc].insert(static_cast<int>(r));
                                    } else {
                                        it->second = it->second + vv;
                                        if (it->second.is_zero()) {
                                            rows_[r].erase(it);
                                            colrows_[cc].erase(static_cast<int>(r));
                                        }
                                    }
                                }
                                fixed = false;
                                break;
                            }
                        }
                    }
                    if (!fixed) {
                        clean = false;
                        continue;
                    }
                }
            }
            C pivot = rows_[r].at(c);
            big_pivots_.push_back(pivot.to_bigint().abs());
            retire_pivot(r, c);
        }
    }

    static std::vector<BigInt> fix_divisibility_chain(std::vector<BigInt> f) {
        std::sort(f.begin(), f.end());
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t i = 0; i < f.size(); ++i) {
                for (size_t j = i + 1; j < f.size(); ++j) {
                    if (!(f[j] % f[i]).is_zero()) {
                        BigInt g = BigInt::gcd(f[i], f[j]);
                        BigInt l = (f[i] / g) * f[j];
                        f[i] = g;
                        f[j] = l;
                        changed = true;
                    }
                }
            }
            if (changed) std::sort(f.begin(), f.end());
        }
        return f;
    }
};

template <class M>
SnfResult run_snf(const M& m, bool need_factors) {
    try {
        Elim<C64> e(m, need_factors);
        return e.run();
    } catch (const ElimOverflow&) {
        Elim<CBig> e(m, need_factors);
        return e.run();
    }
}

}  // namespace

SnfResult snf_coo(const CooMatrix& m) { return run_snf(m, true); }

int rank_coo(const CooMatrix& m) { return run_snf(m, false).rank; }

int rank_coo_mod_p(const CooMatrix& m, long long p) {
    if (p < 2) throw std::domain_error("rank_coo_mod_p: characteristic must be a prime");
    Zp::p = p;
    Elim<Zp> e(m, false);
    return e.run().rank;
}

std::vector<BigInt> smith_normal_form(const SparseIntMatrix& m) {
    return run_snf(m, true).factors;
}

int integer_rank(const SparseIntMatrix& m) { return run_snf(m, false).rank; }

int rank_over_field(const SparseIntMatrix& m, long long characteristic) {
    if (characteristic == 0) return integer_rank(m);
    if (characteristic < 2 || !is_prime_ll(characteristic))
        throw std::domain_error("rank_over_field: characteristic must be 0 or a prime");
    Zp::p = characteristic;
    Elim<Zp> e(m, false);
    return e.run().rank;
}

namespace {

// deterministic Miller-Rabin for 64-bit inputs
uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((__uint128_t)a * b % m);
}
uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}
bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}
uint64_t pollard_rho(uint64_t n) {
    if ((n & 1) == 0) return 2;
    for (uint64_t c = 1;; ++c) {
        uint64_t x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (mulmod_u64(x, x, n) + c) % n;
            y = (mulmod_u64(y, y, n) + c) % n;
            y = (mulmod_u64(y, y, n) + c) % n;
            uint64_t diff = x > y ? x - y : y - x;
            if (diff == 0) {
                d = n;  // cycle, retry with next c
                break;
            }
            uint64_t g = std::gcd(diff, n);
            if (g > 1) d = g;
        }
        if (d != n) return d;
    }
}
void factor_u64(uint64_t n, std::map<uint64_t, int>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out[n]++;
        return;
    }
    uint64_t d = pollard_rho(n);
    factor_u64(d, out);
    factor_u64(n / d, out);
}

}  // namespace

std::vector<std::pair<BigInt, int>> factorize(const BigInt& n) {
    if (n.sign() <= 0) throw std::domain_error("factorize: needs a positive integer");
    if (!n.fits_int64()) throw std::overflow_error("factorize: torsion order exceeds int64");
    std::map<uint64_t, int> f;
    factor_u64(static_cast<uint64_t>(n.to_int64()), f);
    std::vector<std::pair<BigInt, int>> out;
    for (const auto& [p, k] : f) out.push_back({BigInt(static_cast<long long>(p)), k});
    return out;
}

std::vector<TorsionSummand> primary_decomposition(const std::vector<BigInt>& invariant_factors) {
    std::vector<TorsionSummand> out;
    for (const auto& f : invariant_factors) {
        if (f.abs().is_one() || f.is_zero()) continue;
        for (const auto& [p, k] : factorize(f.abs())) out.push_back(TorsionSummand{p, k});
    }
    std::sort(out.begin(), out.end());
    return out;
}

AbelianGroup homology_of_pair(const SparseIntMatrix& d_in, const SparseIntMatrix& d_out) {
    if (d_in.rows() != d_out.cols())
        throw std::logic_error("homology_of_pair: dimension mismatch (ambient space)");
    if (!SparseIntMatrix::multiply(d_out, d_in).is_zero_matrix())
        throw std::logic_error("homology_of_pair: d_out * d_in != 0 (sign rule violation upstream)");
    const int ambient = d_out.cols();
    int rank_out = integer_rank(d_out);
    SnfResult in = run_snf(d_in, true);
    AbelianGroup g;
    g.free_rank = ambient - rank_out - in.rank;
    g.torsion = primary_decomposition(in.factors);
    return g;
}

bool is_direct_summand(const AbelianGroup& a, const AbelianGroup& b) {
    if (a.free_rank > b.free_rank) return false;
    std::map<std::pair<std::string, int>, int> counts;
    for (const auto& t : b.torsion) counts[{t.prime.to_string(), t.power}]++;
    for (const auto& t : a.torsion) {
        if (--counts[{t.prime.to_string(), t.power}] < 0) return false;
    }
    return true;
}

}  // namespace khtor
