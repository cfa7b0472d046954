#pragma once

#include <string>
#include <vector>

#include "khtor/laurent.hpp"
#include "khtor/pd.hpp"

namespace khtor {

// Alexander polynomial of a knot, normalized up to units: lowest exponent 0,
// positive leading coefficient.  Satisfies delta(1) = +-1.
struct NormalizedAlexander {
    LaurentPoly poly;

    bool operator==(const NormalizedAlexander& o) const { return poly == o.poly; }
    // "2 -5 2 (offset -1)": coefficients low-to-high, with the exponent
    // offset that centers the palindrome.
    std::string to_string() const;
};

// Fox calculus on the Wirtinger presentation: one relation per crossing, one
// generator per overstrand; delete a row and column of the Alexander matrix
// and take the determinant over Z[t].  The determinant is computed exactly by
// integer evaluation at deg+1 points and rational interpolation.
// Knots only: throws pd_error on multi-component input.
NormalizedAlexander alexander(const LinkDiagram& d);

struct FamilyReport {
    struct Item {
        int n = 0;
        bool product_ok = false;
        NormalizedAlexander delta;
    };
    std::vector<Item> items;
    bool products_ok = true;
    bool all_distinct = true;
    bool pass() const { return products_ok && all_distinct; }
};

// Builds K_n = k # j0 # ... # j0 (n copies) by iterated connected sum and
// checks delta(K_n) = delta(k) * delta(j0)^n up to units for 0 <= n <= n_max,
// plus pairwise distinctness of the values.
FamilyReport check_family(const LinkDiagram& k, const LinkDiagram& j0, int n_max);

}  // namespace khtor
