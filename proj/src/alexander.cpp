#include "khtor/alexander.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "khtor/construct.hpp"

namespace khtor {

namespace {

// Fraction-free determinant of a dense integer matrix (Bareiss).
BigInt det_bareiss(std::vector<std::vector<BigInt>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return BigInt(1);
    BigInt prev(1);
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return BigInt(0);
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    BigInt det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

// Newton interpolation through (x_i, y_i); returns polynomial coefficients
// (must come out integral, which is asserted).
std::vector<BigInt> interpolate_integer_poly(const std::vector<long long>& xs,
                                             const std::vector<BigInt>& ys) {
    const int n = static_cast<int>(xs.size());
    std::vector<BigRational> dd(n);
    for (int i = 0; i < n; ++i) dd[i] = BigRational(ys[i]);
    // divided differences in place: dd[i] becomes f[x_0..x_i]
    for (int level = 1; level < n; ++level)
        for (int i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / BigRational(BigInt(xs[i] - xs[i - level]));

    // expand sum_i dd[i] * prod_{j<i} (t - x_j)
    std::vector<BigRational> coeffs(n, BigRational(BigInt(0)));
    std::vector<BigRational> basis{BigRational(BigInt(1))};
    for (int i = 0; i < n; ++i) {
        for (size_t k = 0; k < basis.size(); ++k) coeffs[k] = coeffs[k] + dd[i] * basis[k];
        if (i + 1 < n) {
            std::vector<BigRational> nb(basis.size() + 1, BigRational(BigInt(0)));
            for (size_t k = 0; k < basis.size(); ++k) {
                nb[k + 1] = nb[k + 1] + basis[k];
                nb[k] = nb[k] - basis[k] * BigRational(BigInt(xs[i]));
            }
            basis = std::move(nb);
        }
    }
    std::vector<BigInt> out(n);
    for (int k = 0; k < n; ++k) {
        if (!coeffs[k].is_integer())
            throw std::logic_error("alexander: interpolation produced a non-integer coefficient");
        out[k] = coeffs[k].num();
    }
    return out;
}

struct WirtingerData {
    int generators = 0;
    std::vector<int> over_gen;  // per crossing: generator of the over-strand
    std::vector<int> in_gen;    // generator of the incoming under-strand
    std::vector<int> out_gen;   // generator of the outgoing under-strand
    std::vector<int> sign;      // crossing sign
};

WirtingerData wirtinger(const LinkDiagram& d) {
    const int n = d.crossing_count();
    const int arcs = d.arc_count();
    // overstrands: arcs joined through over-passages
    std::vector<int> parent(arcs);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int y = 0; y < n; ++y) parent[find(d.arc_idx_at(y, 1))] = find(d.arc_idx_at(y, 3));

    std::vector<int> gen_of_root(arcs, -1);
    int gens = 0;
    auto gen_of = [&](int arc_idx) {
        int r = find(arc_idx);
        if (gen_of_root[r] == -1) gen_of_root[r] = gens++;
        return gen_of_root[r];
    };

    WirtingerData w;
    w.over_gen.resize(n);
    w.in_gen.resize(n);
    w.out_gen.resize(n);
    w.sign.resize(n);
    for (int y = 0; y < n; ++y) {
        w.over_gen[y] = gen_of(d.arc_idx_at(y, 1));
        w.in_gen[y] = gen_of(d.arc_idx_at(y, 0));
        w.out_gen[y] = gen_of(d.arc_idx_at(y, 2));
        w.sign[y] = d.crossings()[y].sign();
    }
    w.generators = gens;
    return w;
}

}  // namespace

NormalizedAlexander alexander(const LinkDiagram& d) {
    if (d.component_count() != 1)
        throw pd_error("alexander: expected a knot diagram (one component), got " +
                       std::to_string(d.component_count()));
    const int n = d.crossing_count();
    if (n == 0) return NormalizedAlexander{LaurentPoly(BigInt(1))};

    WirtingerData w = wirtinger(d);
    if (w.generators != n)
        throw std::logic_error("alexander: unexpected Wirtinger generator count");
    if (n == 1) return NormalizedAlexander{LaurentPoly(BigInt(1))};

    // Fox rows, evaluated at integer points t.  Positive crossing
    // x_out = o x_in o^{-1}:  over += (1-t), in += t, out += -1.
    // Negative crossing x_out = o^{-1} x_in o, scaled by the unit t:
    // over += (t-1), in += 1, out += -t.
    auto matrix_at = [&](long long t) {
        std::vector<std::vector<BigInt>> m(n - 1, std::vector<BigInt>(n - 1, BigInt(0)));
        auto add = [&](int row, int gen, long long v) {
            if (row == 0 || gen == 0) return;  // deleted row and column
            m[row - 1][gen - 1] += BigInt(v);
        };
        for (int y = 0; y < n; ++y) {
            if (w.sign[y] > 0) {
                add(y, w.over_gen[y], 1 - t);
                add(y, w.in_gen[y], t);
                add(y, w.out_gen[y], -1);
            } else {
                add(y, w.over_gen[y], t - 1);
                add(y, w.in_gen[y], 1);
                add(y, w.out_gen[y], -t);
            }
        }
        return m;
    };

    // degree of the (n-1)-minor is at most n-1; evaluate at n points
    std::vector<long long> xs;
    std::vector<BigInt> ys;
    for (long long t = 2; static_cast<int>(xs.size()) < n; ++t) {
        xs.push_back(t);
        ys.push_back(det_bareiss(matrix_at(t)));
    }
    std::vector<BigInt> coeffs = interpolate_integer_poly(xs, ys);

    LaurentPoly p;
    for (size_t k = 0; k < coeffs.size(); ++k) p.add_term(static_cast<int>(k), coeffs[k]);
    if (p.is_zero()) throw std::logic_error("alexander: vanishing determinant on a knot");
    LaurentPoly norm = p.unit_normalized();

    BigInt at_one = norm.eval_int(1);
    if (!at_one.abs().is_one()) throw std::logic_error("alexander: delta(1) != +-1");
    return NormalizedAlexander{norm};
}

std::string NormalizedAlexander::to_string() const {
    if (poly.is_zero()) return "0";
    std::ostringstream os;
    int lo = poly.min_exp(), hi = poly.max_exp();
    for (int e = lo; e <= hi; ++e) {
        if (e > lo) os << " ";
        os << poly.coeff(e);
    }
    os << " (offset " << -(hi - lo) / 2 << ")";
    return os.str();
}

FamilyReport check_family(const LinkDiagram& k, const LinkDiagram& j0, int n_max) {
    FamilyReport rep;
    NormalizedAlexander dk = alexander(k);
    NormalizedAlexander dj = alexander(j0);

    LinkDiagram current = k;
    LaurentPoly expected = dk.poly;
    std::vector<LaurentPoly> seen;
    for (int n = 0; n <= n_max; ++n) {
        NormalizedAlexander dn = alexander(current);
        FamilyReport::Item item;
        item.n = n;
        item.product_ok = dn.poly.equals_up_to_units(expected);
        item.delta = dn;
        rep.products_ok = rep.products_ok && item.product_ok;
        for (const auto& old : seen)
            if (old.equals_up_to_units(dn.poly)) rep.all_distinct = false;
        seen.push_back(dn.poly);
        rep.items.push_back(std::move(item));
        if (n < n_max) {
            current = connected_sum_default(current, j0);
            expected = expected * dj.poly;
        }
    }
    return rep;
}

}  // namespace khtor
