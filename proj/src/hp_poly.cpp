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

#include "denum/hp_poly.hpp"

#include <cmath>
#include <stdexcept>

namespace denum {

HPPoly::HPPoly(std::vector<BigComplex> coeffs, Precision p) : prec_(p), c_(std::move(coeffs)) {
    for (auto& c : c_) {
        c.re = c.re.rounded_to(p);
        c.im = c.im.rounded_to(p);
    }
    prune();
}

HPPoly HPPoly::one(Precision p) {
    HPPoly r(p);
    r.c_.push_back(BigComplex::one(p));
    return r;
}

HPPoly HPPoly::from_int_poly(const IntPoly& p, Precision prec) {
    HPPoly r(prec);
    r.c_.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) r.c_.push_back({BigFloat(c, prec), BigFloat(0, prec)});
    r.prune();
    return r;
}

BigComplex HPPoly::coeff(std::size_t i) const {
    if (i < c_.size()) return c_[i];
    return BigComplex::zero(prec_);
}

void HPPoly::check_same_precision(const HPPoly& o) const {
    if (prec_ != o.prec_)
        throw std::invalid_argument("HPPoly operands carry different precisions (" + std::to_string(prec_.bits()) +
                                    " vs " + std::to_string(o.prec_.bits()) + " bits)");
}

void HPPoly::prune() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

HPPoly& HPPoly::operator+=(const HPPoly& o) {
    check_same_precision(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigComplex::zero(prec_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    prune();
    return *this;
}

HPPoly operator*(const HPPoly& a, const HPPoly& b) {
    a.check_same_precision(b);
    HPPoly r(a.prec_);
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, BigComplex::zero(a.prec_));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.prune();
    return r;
}

void HPPoly::mul_linear(const BigComplex& c0, const BigComplex& c1) {
    if (is_zero()) return;
    std::vector<BigComplex> out(c_.size() + 1, BigComplex::zero(prec_));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        out[i] += c_[i] * c0;
        out[i + 1] += c_[i] * c1;
    }
    c_ = std::move(out);
    prune();
}

HPPoly HPPoly::scaled(const BigComplex& s) const {
    HPPoly r(prec_);
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(c * s);
    r.prune();
    return r;
}

HPPoly HPPoly::pow(unsigned e) const {
    HPPoly acc = HPPoly::one(prec_);
    HPPoly base = *this;
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        if (e >>= 1) base = base * base;
    }
    return acc;
}

HPPoly HPPoly::conj() const {
    HPPoly r(prec_);
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(c.conj());
    return r;
}

HPPoly HPPoly::real_part() const {
    HPPoly r(prec_);
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back({c.re, BigFloat(0, prec_)});
    r.prune();
    return r;
}

BigComplex HPPoly::evaluate(const BigComplex& x) const {
    BigComplex acc = BigComplex::zero(prec_);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

namespace {

RoundedPoly round_parts(const std::vector<const BigFloat*>& re, const std::vector<const BigFloat*>& im,
                        const BigFloat& tol) {
    Precision p(64);
    BigFloat max_res(p);
    std::vector<BigInt> out(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) {
        BigFloat res(p);
        out[i] = re[i]->round_to_nearest(&res);
        if (im[i] != nullptr) {
            BigFloat ia = im[i]->abs();
            if (ia > res) res = ia;
        }
        if (res > max_res) max_res = res;
    }
    if (max_res > tol) {
        throw RoundingFailure("rounding residual 2^" + std::to_string(std::log2(max_res.to_double())) +
                                  " exceeds tolerance",
                              std::log2(max_res.to_double()));
    }
    return {IntPoly(std::move(out)), std::move(max_res)};
}

}  // namespace

RoundedPoly round_to_int_poly(const HPPoly& p, const BigFloat& tol) {
    std::vector<const BigFloat*> re, im;
    re.reserve(p.coeffs().size());
    im.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        re.push_back(&c.re);
        im.push_back(&c.im);
    }
    return round_parts(re, im, tol);
}

RoundedPoly round_to_int_poly(const std::vector<BigFloat>& coeffs, const BigFloat& tol) {
    std::vector<const BigFloat*> re, im;
    re.reserve(coeffs.size());
    im.assign(coeffs.size(), nullptr);
    for (const auto& c : coeffs) re.push_back(&c);
    return round_parts(re, im, tol);
}

}  // namespace denum
