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

#include <random>

#include "doctest.h"

#include "denum/chebyshev.hpp"
#include "denum/hp_poly.hpp"
#include "denum/int_poly.hpp"

using namespace denum;

TEST_SUITE_BEGIN("polynomial");

namespace {

/// Convolution written independently of IntPoly::operator*, as a
/// multiplication oracle.
std::vector<BigInt> convolve(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<BigInt> out(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

}  // namespace

TEST_CASE("ring operations on IntPoly") {
    IntPoly one_plus_z{1, 1};
    CHECK(one_plus_z * one_plus_z == IntPoly{1, 2, 1});

    IntPoly p{3, -1, 7};
    CHECK(p * IntPoly::zero() == IntPoly::zero());
    CHECK((p * IntPoly::zero()).is_zero());

    // (2-z)^2 (2+2z), expanded by hand before implementation.
    IntPoly two_minus_z{2, -1};
    IntPoly prod = two_minus_z * two_minus_z * IntPoly{2, 2};
    CHECK(prod == IntPoly{8, 0, -6, 2});

    // Oracle: independent convolution on random polynomials.
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coeff(-9, 9), len(0, 12);
    for (int it = 0; it < 50; ++it) {
        std::vector<BigInt> a(static_cast<std::size_t>(len(rng))), b(static_cast<std::size_t>(len(rng)));
        for (auto& c : a) c = coeff(rng);
        for (auto& c : b) c = coeff(rng);
        CHECK(IntPoly(a) * IntPoly(b) == IntPoly(convolve(a, b)));
    }

    CHECK(IntPoly{1, 1}.pow(6) == IntPoly{1, 6, 15, 20, 15, 6, 1});
    CHECK(IntPoly{0, 1}.pow(3).degree() == 3);
    CHECK(IntPoly{2, 1}.evaluate(BigInt(10)) == 12);
}

TEST_CASE("canonical form") {
    CHECK(IntPoly({std::vector<BigInt>{1, 2, 0, 0}}).degree() == 1);
    CHECK(IntPoly::zero().degree() == -1);
    CHECK((IntPoly{1, -1} + IntPoly{-1, 1}).is_zero());
    CHECK(IntPoly{5}.coeff(3) == 0);
}

TEST_CASE("reciprocal polynomial") {
    CHECK(reciprocal(IntPoly{1, 2}, 1) == IntPoly{2, 1});
    CHECK(reciprocal(IntPoly{1}, 3) == IntPoly{0, 0, 0, 1});
    CHECK(reciprocal(IntPoly{4, 0, -1}, 2) == IntPoly{-1, 0, 4});
    CHECK_THROWS_AS(reciprocal(IntPoly{1, 1, 1}, 1), std::invalid_argument);

    // Involution property on random polynomials.
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coeff(-50, 50);
    for (int it = 0; it < 40; ++it) {
        std::size_t m = 1 + static_cast<std::size_t>(it % 9);
        std::vector<BigInt> c(m + 1);
        for (auto& v : c) v = coeff(rng);
        IntPoly p(c);
        CHECK(reciprocal(reciprocal(p, m), m) == p);
    }
}

TEST_CASE("exact division by 2z+2") {
    CHECK(divide_by_two_z_plus_two(IntPoly{2, 2}) == IntPoly{1});
    CHECK(divide_by_two_z_plus_two(IntPoly{2, 4, 2}) == IntPoly{1, 1});
    IntPoly big = IntPoly{1, 1}.pow(6) * BigInt(64);
    CHECK(divide_by_two_z_plus_two(big) == IntPoly{1, 1}.pow(5) * BigInt(32));

    CHECK_THROWS_AS(divide_by_two_z_plus_two(IntPoly{1, 2}), RoundingFailure);   // remainder
    CHECK_THROWS_AS(divide_by_two_z_plus_two(IntPoly{1, 1}), RoundingFailure);   // odd quotient

    std::mt19937 rng(13);
    std::uniform_int_distribution<int> coeff(-100, 100);
    for (int it = 0; it < 40; ++it) {
        std::size_t deg = static_cast<std::size_t>(it % 51);
        std::vector<BigInt> c(deg + 1);
        for (auto& v : c) v = coeff(rng);
        IntPoly q(c);
        CHECK(divide_by_two_z_plus_two(IntPoly{2, 2} * q) == q);
    }
}

TEST_CASE("verified rounding to integer coefficients") {
    Precision p(128);
    BigFloat tol20(1e-20, p);

    HPPoly nearly(std::vector<BigComplex>{{BigFloat(1, p), BigFloat(0, p)},
                                          {BigFloat(2, p), BigFloat(1e-30, p)}},
                  p);
    RoundedPoly r = round_to_int_poly(nearly, tol20);
    CHECK(r.poly == IntPoly{1, 2});

    HPPoly ambiguous(std::vector<BigComplex>{{BigFloat(0.4999, p), BigFloat(0, p)}}, p);
    CHECK_THROWS_AS(round_to_int_poly(ambiguous, BigFloat(1e-6, p)), RoundingFailure);

    // Left inverse of the exact embedding.
    std::mt19937 rng(17);
    std::uniform_int_distribution<long> coeff(-1000000, 1000000);
    for (unsigned bits : {64u, 96u, 256u}) {
        Precision q(bits);
        std::vector<BigInt> c(8);
        for (auto& v : c) v = coeff(rng);
        IntPoly ip(c);
        HPPoly embedded = HPPoly::from_int_poly(ip, q);
        CHECK(round_to_int_poly(embedded, BigFloat::pow2(-32, q)).poly == ip);
    }
}

TEST_CASE("HPPoly arithmetic and precision discipline") {
    Precision p(96), q(128);
    HPPoly a = HPPoly::from_int_poly(IntPoly{1, 1}, p);
    HPPoly b = HPPoly::from_int_poly(IntPoly{1, 1}, q);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK_THROWS_AS(a += b, std::invalid_argument);

    HPPoly sq = a * a;
    CHECK(sq.degree() == 2);
    CHECK(round_to_int_poly(sq, BigFloat::pow2(-40, p)).poly == IntPoly{1, 2, 1});
    CHECK(round_to_int_poly(a.pow(6), BigFloat::pow2(-40, p)).poly == IntPoly{1, 1}.pow(6));

    // Conjugation plus evaluation at a real point stays real.
    HPPoly c = HPPoly::from_int_poly(IntPoly{3, 0, -2}, p);
    BigComplex v = c.evaluate(BigComplex{BigFloat(2, p), BigFloat(0, p)});
    CHECK(v.re.to_double() == doctest::Approx(-5.0));
    CHECK(v.im.is_zero());
}

TEST_CASE("Precision floor") {
    CHECK_THROWS_AS(Precision(32), std::invalid_argument);
    CHECK(Precision(64).bits() == 64);
    CHECK(Precision(70).doubled().bits() == 140);
}

TEST_CASE("Chebyshev U: base cases and the two defining routes") {
    CHECK(cheb_u(0) == IntPoly{1});
    CHECK(cheb_u(1) == IntPoly{0, 2});
    CHECK(cheb_u(2) == IntPoly{-1, 0, 4});
    CHECK(cheb_u_explicit(1) == IntPoly{0, 2});
    CHECK(cheb_u_explicit(2) == IntPoly{-1, 0, 4});
    for (unsigned k = 0; k <= 64; ++k) CHECK(cheb_u(k) == cheb_u_explicit(k));
}

TEST_CASE("Chebyshev V: recurrence vs product form") {
    CHECK(cheb_v(0) == IntPoly{1});
    CHECK(cheb_v(1) == IntPoly{-1, 2});  // 2(z - cos(pi/3)) = 2z - 1
    CHECK(cheb_v(2) == IntPoly{-1, -2, 4});

    // Numeric check against 2^k prod_i (x + cos(2 pi i / (2k+1))) at
    // random points in [-1, 1].
    Precision p(128);
    BigFloat tol = BigFloat::pow2(-64, p);
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> xs(-1.0, 1.0);
    for (unsigned k = 0; k <= 32; ++k) {
        IntPoly v = cheb_v(k);
        RootTable roots(2 * (2 * k + 1), p);
        for (int it = 0; it < 10; ++it) {
            BigFloat x(xs(rng), p);
            BigFloat prod = BigFloat::pow2(static_cast<long>(k), p);
            for (unsigned i = 1; i <= k; ++i) prod *= x + roots.root(2 * static_cast<long long>(i)).re;
            BigFloat diff = (v.evaluate(x) - prod).abs();
            CHECK(diff <= tol);
        }
    }
}

TEST_CASE("Chebyshev U: product representation") {
    Precision p(128);
    BigFloat tol = BigFloat::pow2(-64, p);
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> xs(-1.0, 1.0);
    for (unsigned k = 1; k <= 24; ++k) {
        IntPoly u = cheb_u(k);
        RootTable roots(2 * (k + 1), p);  // cos(pi i / (k+1)) = Re e(i / (2k+2))
        for (int it = 0; it < 6; ++it) {
            BigFloat x(xs(rng), p);
            BigFloat minus = BigFloat::pow2(static_cast<long>(k), p);
            BigFloat plus = BigFloat::pow2(static_cast<long>(k), p);
            for (unsigned i = 1; i <= k; ++i) {
                minus *= x - roots.root(static_cast<long long>(i)).re;
                plus *= x + roots.root(static_cast<long long>(i)).re;
            }
            BigFloat val = u.evaluate(x);
            CHECK((val - minus).abs() <= tol);
            CHECK((val - plus).abs() <= tol);
        }
    }
}

TEST_SUITE_END();
