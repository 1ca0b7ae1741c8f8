#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

#include "dpd/errors.hpp"

namespace dpd {

using Integer = mpz_class;

// Arbitrary-precision rational, always stored reduced with positive
// denominator (mpq_class canonical form, enforced on every constructor).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<long int>(n)) {}
    Rational(const Integer& n) : v_(n) {}
    Rational(int n, int d) : Rational(Integer(n), Integer(d)) {}
    Rational(const Integer& n, const Integer& d) {
        if (d == 0) fail(ErrorCode::ZeroDenominator, "rational with zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }

    static Rational from_mpq(const mpq_class& q) {
        Rational r;
        r.v_ = q;
        r.v_.canonicalize();
        return r;
    }

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integral() const { return v_.get_den() == 1; }

    int sign() const { return sgn(v_); }

    Rational abs() const { return from_mpq(::abs(v_)); }

    // Largest integer <= value (true floor, also for negatives).
    Integer floor() const {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
        return q;
    }

    Rational fractional_part() const { return *this - Rational(floor()); }

    Rational inverse() const {
        if (is_zero()) fail(ErrorCode::ZeroDenominator, "inverse of zero");
        return Rational(denominator(), numerator());
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return from_mpq(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return from_mpq(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return from_mpq(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) fail(ErrorCode::ZeroDenominator, "division by zero");
        return from_mpq(a.v_ / b.v_);
    }
    Rational operator-() const { return from_mpq(-v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; v_.canonicalize(); return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; v_.canonicalize(); return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; v_.canonicalize(); return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    // "p/q", or just "p" when integral.
    std::string str() const;

private:
    mpq_class v_;
};

Rational pow(const Rational& base, long exponent);

// Element of Q(i).  Arithmetic is exact; division by zero throws.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(int n) : re_(n) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational conj() const { return {re_, -im_}; }

    // re^2 + im^2; zero only for the zero element.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational inverse() const {
        if (is_zero()) fail(ErrorCode::ZeroDenominator, "inverse of zero");
        Rational n = norm();
        return {re_ / n, -im_ / n};
    }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.inverse();
    }
    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o) { *this = *this + o; return *this; }
    GaussianRational& operator-=(const GaussianRational& o) { *this = *this - o; return *this; }
    GaussianRational& operator*=(const GaussianRational& o) { *this = *this * o; return *this; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }

    // Canonical compact form without spaces: "2", "i", "-i", "3*i",
    // "1/2-7/3*i".  Shared by divisor brackets and JSON payloads.
    std::string str() const;

private:
    Rational re_{0};
    Rational im_{0};
};

GaussianRational pow(const GaussianRational& base, long exponent);

// Total order used everywhere points or coefficients need a deterministic
// sequence: by real part; then |Im|; then +Im before -Im.  (So i sorts
// before -i and all of them after any point with smaller real part.)
bool gauss_less(const GaussianRational& a, const GaussianRational& b);

} // namespace dpd
