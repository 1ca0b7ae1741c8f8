#pragma once

#include <string>
#include <utility>

#include "dpd/polynomial.hpp"

namespace dpd {

// Quotient of polynomials in canonical form: numerator and denominator are
// coprime and the denominator is monic.  The zero function is 0/1.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(1) {}
    explicit RationalFunction(const GaussianRational& c) : num_(c), den_(1) {}
    explicit RationalFunction(const Rational& c) : num_(GaussianRational(c)), den_(1) {}
    RationalFunction(Polynomial num, Polynomial den);
    explicit RationalFunction(Polynomial num) : num_(std::move(num)), den_(1) {}

    static RationalFunction z() { return RationalFunction(Polynomial::z()); }

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_real() const { return num_.is_real() && den_.is_real(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    RationalFunction conj() const;
    RationalFunction inverse() const;

    // Throws PoleAtPoint when the denominator vanishes at x.
    GaussianRational evaluate(const GaussianRational& x) const;
    // Value at the point at infinity of P^1 (0 when the function vanishes
    // there, PoleAtPoint when it has a pole there).
    GaussianRational value_at_infinity() const;

    // Vanishing order at a finite point: positive at zeros, negative at poles.
    int order_at(const GaussianRational& x) const;
    int order_at_infinity() const { return den_.degree() - num_.degree(); }

    RationalFunction operator-() const { return RationalFunction(-num_, den_); }
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return a + (-b);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

    std::string str() const;

private:
    Polynomial num_, den_;
};

// Integer powers; negative exponents invert (ZeroFunction on 0^-n).
RationalFunction pow(const RationalFunction& base, long exponent);

} // namespace dpd
