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

#ifndef DENUM_VTFAST_HPP
#define DENUM_VTFAST_HPP

#include <optional>

#include "denum/enumerator.hpp"
#include "denum/hp_poly.hpp"

namespace denum {

// The polynomial table at the heart of the fast VT pipeline:
//   B[m,j,k](z) = prod_{i=1..m} (1 + w^{i(j+k)} + (w^{ij} + w^{ik}) z),
// where w runs over e(1/m). Every entry is an integer polynomial of degree
// at most m, symmetric in (j, k), periodic in both indices mod m, and
// invariant under scaling (j, k) -> (jt, kt) for gcd(t, m) = 1.

/// How a table entry was obtained.
enum class BProvenance { direct, boundary, diag, antidiag, cosine, power, symmetry, scaling };

const char* provenance_name(BProvenance p);

struct BTable {
    unsigned m = 0;
    unsigned precision_bits = 0;
    std::vector<IntPoly> entries;       // row-major, m x m
    std::vector<BProvenance> prov;      // parallel to entries
    double max_residual_log2 = -1e9;    // largest rounding residual seen
    int escalations = 0;                // precision doublings that were needed

    /// Entry (j, k), indices reduced mod m (negative values allowed).
    const IntPoly& at(long long j, long long k) const;
};

enum class BTableStrategy { naive, optimized };

/// Reference evaluation straight from the defining product of m complex
/// degree-one factors at precision p; raises RoundingFailure if the result
/// does not round cleanly.
RoundedPoly b_direct_rounded(unsigned m, unsigned j, unsigned k, Precision p);
IntPoly b_direct(unsigned m, unsigned j, unsigned k, Precision p);

/// Closed form for row/column zero: 2^d (1+z)^m when m/gcd(m,j) is odd,
/// zero otherwise. Exact.
IntPoly b_boundary(unsigned m, unsigned j);

/// Closed form on the diagonal via Chebyshev polynomials. Exact.
IntPoly b_diag(unsigned m, unsigned j);

/// Closed form on the anti-diagonal (k = m - j) via reciprocal Chebyshev
/// polynomials. Exact.
IntPoly b_antidiag(unsigned m, unsigned j);

/// Squared-cosine product form, valid for gcd(m, j, k) = 1; computed in
/// real high precision and rounded.
RoundedPoly b_cosine_rounded(unsigned m, unsigned j, unsigned k, Precision p);
IntPoly b_cosine(unsigned m, unsigned j, unsigned k, Precision p);

/// General entry: dispatches to the boundary / diagonal / anti-diagonal
/// closed forms, otherwise reduces by d = gcd(m, j, k) and raises the
/// cosine form of the reduced entry to the d-th power.
IntPoly b_general(unsigned m, unsigned j, unsigned k, Precision p);

struct BTableOptions {
    std::optional<Precision> precision;  // default: 2m + 64 bits
    BTableStrategy strategy = BTableStrategy::optimized;
    int max_retries = 3;
    int jobs = 1;
};

/// Full m x m table. The naive strategy evaluates every entry on its own;
/// the optimized strategy computes a fundamental region and fills the rest
/// through the symmetry, reciprocal and coprime-scaling relations. Both
/// produce identical polynomials.
BTable build_btable(unsigned m, const BTableOptions& opts = {});

/// F[m,j](z) = (sum_k B[m,k,j-k](z)) / (2z+2), exact in every entry.
struct FVector {
    unsigned m = 0;
    std::vector<IntPoly> polys;
};

FVector f_vector(const BTable& bt);

struct VTFastOptions {
    std::optional<Precision> precision;  // default: 2(n+1) + 64 bits
    BTableStrategy strategy = BTableStrategy::optimized;
    int max_retries = 3;
    int jobs = 1;
};

/// Hamming distance enumerator of VT_a(n) in O(n^4): build the B table,
/// fold it into the F polynomials, then take the character-weighted sum
/// over j and round. Method tag "fast".
Enumerator vt_fast_enumerator(int n, long long a, const VTFastOptions& opts = {});

}  // namespace denum

#endif
