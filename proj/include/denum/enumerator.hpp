/*
   Copyright 2026 The denum authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef DENUM_ENUMERATOR_HPP
#define DENUM_ENUMERATOR_HPP

#include <map>
#include <string>
#include <vector>

#include "denum/codes.hpp"
#include "denum/distances.hpp"
#include "denum/int_poly.hpp"

namespace denum {

/// Distance enumerator of a code: coefficient i counts the ordered
/// codeword pairs at distance i.
struct Enumerator {
    IntPoly poly;
    CodeSpec code;
    DistanceKind distance;
    std::string method;  // "brute" | "spectral" | "fast"

    const BigInt& count_at(std::size_t i) const { return poly.coeff(i); }
    /// D_0, which equals |C| for any valid enumerator.
    const BigInt& cardinality() const { return poly.coeff(0); }
    /// Sum of all counts; equals |C|^2 for any valid enumerator.
    BigInt total_pairs() const;
};

/// Violations of the structural enumerator invariants
/// (D_0 = |C|, sum D_i = |C|^2, D_i even for i >= 1, D_i >= 0);
/// empty means the enumerator is consistent.
std::vector<std::string> enumerator_violations(const Enumerator& e, const BigInt& cardinality);

/// D_i / D_0 as exact rationals. Requires a non-empty code.
std::vector<BigRational> average_enumerator(const Enumerator& e);

/// Key of one extended-enumerator cell: the distance plus the exact
/// rho-value vectors of both pair members.
struct ExtKey {
    int d = 0;
    std::vector<BigInt> ue, ve;

    friend bool operator<(const ExtKey& a, const ExtKey& b) {
        if (a.d != b.d) return a.d < b.d;
        if (a.ue != b.ue) return a.ue < b.ue;
        return a.ve < b.ve;
    }
    friend bool operator==(const ExtKey& a, const ExtKey& b) { return a.d == b.d && a.ue == b.ue && a.ve == b.ve; }
};

/// Sparse extended distance enumerator: counts indexed by
/// (distance, rho(x) vector, rho(y) vector).
struct ExtEnum {
    std::map<ExtKey, BigInt> counts;
    CodeSpec code;
    DistanceKind distance;

    BigInt total_mass() const;
    /// Specialize u = v = 1: sum over the rho exponents, leaving the
    /// plain distance enumerator polynomial.
    IntPoly specialize_ones() const;
};

}  // namespace denum

#endif
