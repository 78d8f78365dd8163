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

#ifndef DENUM_HP_POLY_HPP
#define DENUM_HP_POLY_HPP

#include <vector>

#include "denum/int_poly.hpp"
#include "denum/precision.hpp"

namespace denum {

/// Dense univariate polynomial with complex coefficients, all carried at
/// one shared working precision. Operands of binary operations must share
/// that precision; mixing is rejected.
class HPPoly {
   public:
    explicit HPPoly(Precision p) : prec_(p) {}
    HPPoly(std::vector<BigComplex> coeffs, Precision p);

    static HPPoly one(Precision p);
    static HPPoly from_int_poly(const IntPoly& p, Precision prec);

    Precision precision() const noexcept { return prec_; }
    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const std::vector<BigComplex>& coeffs() const noexcept { return c_; }
    /// Coefficient of z^i (zero beyond the degree).
    BigComplex coeff(std::size_t i) const;

    HPPoly& operator+=(const HPPoly& o);
    friend HPPoly operator+(HPPoly a, const HPPoly& b) { return a += b; }
    friend HPPoly operator*(const HPPoly& a, const HPPoly& b);
    /// Multiply by a degree-one factor c0 + c1 z in place.
    void mul_linear(const BigComplex& c0, const BigComplex& c1);
    HPPoly scaled(const BigComplex& s) const;
    HPPoly pow(unsigned e) const;
    HPPoly conj() const;
    /// Coefficient-wise real part (imaginary parts dropped).
    HPPoly real_part() const;

    BigComplex evaluate(const BigComplex& x) const;

   private:
    void check_same_precision(const HPPoly& o) const;
    void prune();

    Precision prec_;
    std::vector<BigComplex> c_;
};

/// Result of verified rounding: the integer polynomial plus the largest
/// observed distance from an exact integer (for diagnostics).
struct RoundedPoly {
    IntPoly poly;
    BigFloat max_residual;
};

/// Round every coefficient to the nearest integer, verifying that both the
/// imaginary part and the distance to the nearest integer stay within tol.
/// Raises RoundingFailure otherwise (callers may retry at higher precision).
RoundedPoly round_to_int_poly(const HPPoly& p, const BigFloat& tol);

/// Same verification for a real coefficient vector.
RoundedPoly round_to_int_poly(const std::vector<BigFloat>& coeffs, const BigFloat& tol);

}  // namespace denum

#endif
