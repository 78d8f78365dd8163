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

#ifndef DENUM_INT_POLY_HPP
#define DENUM_INT_POLY_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "denum/precision.hpp"

namespace denum {

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients, kept in canonical form: no trailing zero coefficient,
/// and the zero polynomial has an empty coefficient vector.
class IntPoly {
   public:
    IntPoly() = default;
    IntPoly(std::initializer_list<long> coeffs);
    explicit IntPoly(std::vector<BigInt> coeffs);

    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(BigInt c);
    /// c * z^k
    static IntPoly monomial(BigInt c, std::size_t k);

    bool is_zero() const noexcept { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    /// Coefficient of z^i (zero beyond the degree).
    const BigInt& coeff(std::size_t i) const noexcept;
    const std::vector<BigInt>& coeffs() const noexcept { return c_; }

    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly& operator*=(const BigInt& s);
    friend IntPoly operator*(IntPoly a, const BigInt& s) { return a *= s; }
    IntPoly operator-() const;

    IntPoly pow(unsigned e) const;

    BigInt evaluate(const BigInt& x) const;
    /// Horner evaluation at a real point, at the point's precision.
    BigFloat evaluate(const BigFloat& x) const;

    friend bool operator==(const IntPoly& a, const IntPoly& b) noexcept { return a.c_ == b.c_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) noexcept { return !(a == b); }

    /// Human-readable form, e.g. "8 - 6z^2 + 2z^3".
    std::string str() const;

   private:
    void prune();

    std::vector<BigInt> c_;
};

/// z^m * p(1/z): coefficient reversal at degree bound m. Requires deg(p) <= m.
IntPoly reciprocal(const IntPoly& p, std::size_t m);

/// Exact quotient p / (2z + 2). Requires p(-1) = 0 and all coefficients of
/// p/(z+1) even; violations raise RoundingFailure (they indicate an
/// upstream rounding fault).
IntPoly divide_by_two_z_plus_two(const IntPoly& p);

/// Binomial coefficient C(n, k) as a BigInt.
BigInt binomial(unsigned long n, unsigned long k);

}  // namespace denum

#endif
