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

#ifndef DENUM_PRECISION_HPP
#define DENUM_PRECISION_HPP

#include <mpfr.h>

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "denum/errors.hpp"

namespace denum {

using BigInt = boost::multiprecision::mpz_int;
using BigRational = boost::multiprecision::mpq_rational;

/// Working precision for high-precision arithmetic, in mantissa bits.
class Precision {
   public:
    explicit Precision(unsigned bits) : bits_(bits) {
        if (bits < 64) throw std::invalid_argument("precision must be at least 64 bits, got " + std::to_string(bits));
    }

    unsigned bits() const noexcept { return bits_; }
    Precision doubled() const { return Precision(2 * bits_); }

    friend bool operator==(Precision a, Precision b) noexcept { return a.bits_ == b.bits_; }
    friend bool operator!=(Precision a, Precision b) noexcept { return a.bits_ != b.bits_; }

   private:
    unsigned bits_;
};

/// Arbitrary-precision real number (RAII wrapper around an mpfr_t).
///
/// Binary operations round the result to the larger of the two operand
/// precisions; within one pipeline all values share the same precision.
class BigFloat {
   public:
    BigFloat() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
    explicit BigFloat(Precision p) { mpfr_init2(v_, p.bits()); mpfr_set_zero(v_, 1); }
    BigFloat(long value, Precision p) { mpfr_init2(v_, p.bits()); mpfr_set_si(v_, value, MPFR_RNDN); }
    BigFloat(int value, Precision p) : BigFloat(static_cast<long>(value), p) {}
    BigFloat(double value, Precision p) { mpfr_init2(v_, p.bits()); mpfr_set_d(v_, value, MPFR_RNDN); }
    BigFloat(const BigInt& value, Precision p) {
        mpfr_init2(v_, p.bits());
        mpfr_set_z(v_, value.backend().data(), MPFR_RNDN);
    }

    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_prec_t precision_bits() const noexcept { return mpfr_get_prec(v_); }

    /// 2^e at precision p (exact).
    static BigFloat pow2(long e, Precision p) {
        BigFloat r(p);
        mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
        return r;
    }
    static BigFloat pi(Precision p) {
        BigFloat r(p);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    /// (sin x, cos x), each correctly rounded at the precision of x.
    static std::pair<BigFloat, BigFloat> sin_cos(const BigFloat& x) {
        Precision p(static_cast<unsigned>(x.precision_bits()));
        BigFloat s(p), c(p);
        mpfr_sin_cos(s.v_, c.v_, x.v_, MPFR_RNDN);
        return {std::move(s), std::move(c)};
    }

    bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
    int sign() const noexcept { return mpfr_sgn(v_); }
    void set_zero() noexcept { mpfr_set_zero(v_, 1); }
    void negate() noexcept { mpfr_neg(v_, v_, MPFR_RNDN); }

    /// Re-round this value to precision p.
    BigFloat rounded_to(Precision p) const {
        BigFloat r(p);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }

    /// Nearest integer; the residual |*this - result| is written to *residual
    /// when non-null (at this value's precision).
    BigInt round_to_nearest(BigFloat* residual = nullptr) const {
        BigInt z;
        mpfr_get_z(z.backend().data(), v_, MPFR_RNDN);
        if (residual != nullptr) {
            BigFloat r(Precision(static_cast<unsigned>(std::max<mpfr_prec_t>(64, precision_bits()))));
            mpfr_sub_z(r.v_, v_, z.backend().data(), MPFR_RNDN);
            mpfr_abs(r.v_, r.v_, MPFR_RNDN);
            *residual = std::move(r);
        }
        return z;
    }

    BigFloat abs() const {
        BigFloat r(*this);
        mpfr_abs(r.v_, r.v_, MPFR_RNDN);
        return r;
    }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r(max_precision(a, b));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r(max_precision(a, b));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(max_precision(a, b));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r(max_precision(a, b));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    BigFloat operator-() const {
        BigFloat r(*this);
        r.negate();
        return r;
    }
    BigFloat& operator+=(const BigFloat& o) {
        mpfr_add(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator-=(const BigFloat& o) {
        mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator*=(const BigFloat& o) {
        mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator*=(long s) {
        mpfr_mul_si(v_, v_, s, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator/=(long s) {
        mpfr_div_si(v_, v_, s, MPFR_RNDN);
        return *this;
    }

    friend int compare(const BigFloat& a, const BigFloat& b) noexcept { return mpfr_cmp(a.v_, b.v_); }
    friend bool operator<(const BigFloat& a, const BigFloat& b) noexcept { return compare(a, b) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) noexcept { return compare(a, b) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) noexcept { return compare(a, b) <= 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) noexcept { return compare(a, b) >= 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) noexcept { return compare(a, b) == 0; }

    std::string str(int digits = 20) const {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Rg", digits, v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

   private:
    static Precision max_precision(const BigFloat& a, const BigFloat& b) {
        return Precision(static_cast<unsigned>(std::max(a.precision_bits(), b.precision_bits())));
    }

    mpfr_t v_;
};

/// Complex number with BigFloat parts.
struct BigComplex {
    BigFloat re, im;

    BigComplex() = default;
    explicit BigComplex(Precision p) : re(p), im(p) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    static BigComplex one(Precision p) { return {BigFloat(1, p), BigFloat(0, p)}; }
    static BigComplex zero(Precision p) { return {BigFloat(0, p), BigFloat(0, p)}; }

    bool is_zero() const noexcept { return re.is_zero() && im.is_zero(); }

    BigComplex conj() const { return {re, -im}; }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator*(const BigComplex& a, const BigFloat& s) { return {a.re * s, a.im * s}; }
    BigComplex& operator+=(const BigComplex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }

    /// z^e for |z| = 1; negative exponents use conjugation.
    BigComplex unit_pow(long long e) const;

    std::string str() const { return "(" + re.str() + ", " + im.str() + ")"; }
};

/// The m-th roots of unity e(k/m) = exp(2*pi*i*k/m), k in [0, m).
///
/// Built from a single high-precision sin/cos evaluation of 2*pi/m followed
/// by a power recurrence (with internal guard bits), then mirrored so that
/// root(m-k) is bit-exactly the conjugate of root(k).
class RootTable {
   public:
    RootTable(unsigned m, Precision p);

    unsigned modulus() const noexcept { return m_; }
    Precision precision() const noexcept { return prec_; }

    /// e(k/m) with k reduced mod m (negative k allowed).
    const BigComplex& root(long long k) const noexcept {
        long long r = k % static_cast<long long>(m_);
        if (r < 0) r += m_;
        return roots_[static_cast<std::size_t>(r)];
    }
    const BigComplex& root(const BigInt& k) const {
        BigInt r = k % m_;
        if (r < 0) r += m_;
        return roots_[r.convert_to<std::size_t>()];
    }

   private:
    unsigned m_;
    Precision prec_;
    std::vector<BigComplex> roots_;
};

}  // namespace denum

#endif
