#include "dpd/rational_function.hpp"

#include "dpd/errors.hpp"

namespace dpd {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) fail(ErrorCode::ZeroDenominator, "rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Polynomial(1);
        return;
    }
    Polynomial g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divexact(g);
        den_ = den_.divexact(g);
    }
    GaussianRational lead = den_.leading();
    if (!(lead == GaussianRational(1))) {
        GaussianRational inv = lead.inverse();
        num_ = inv * num_;
        den_ = inv * den_;
    }
}

RationalFunction RationalFunction::conj() const {
    return RationalFunction(num_.conj(), den_.conj());
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) fail(ErrorCode::ZeroFunction, "inverse of the zero function");
    return RationalFunction(den_, num_);
}

GaussianRational RationalFunction::evaluate(const GaussianRational& x) const {
    GaussianRational d = den_.evaluate(x);
    if (d.is_zero())
        fail(ErrorCode::PoleAtPoint, "pole at " + x.str());
    return num_.evaluate(x) / d;
}

GaussianRational RationalFunction::value_at_infinity() const {
    int k = order_at_infinity();
    if (k > 0) return GaussianRational(0);
    if (k < 0) fail(ErrorCode::PoleAtPoint, "pole at infinity");
    return num_.leading() / den_.leading();
}

int RationalFunction::order_at(const GaussianRational& x) const {
    if (is_zero()) fail(ErrorCode::ZeroFunction, "order of the zero function");
    int up = num_.root_multiplicity(x);
    if (up > 0) return up;
    return -den_.root_multiplicity(x);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return a * b.inverse();
}

std::string RationalFunction::str() const {
    if (den_.degree() == 0) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RationalFunction pow(const RationalFunction& base, long exponent) {
    if (exponent < 0) return pow(base.inverse(), -exponent);
    RationalFunction acc(GaussianRational(1)), b = base;
    unsigned long e = static_cast<unsigned long>(exponent);
    while (e) {
        if (e & 1) acc = acc * b;
        b = b * b;
        e >>= 1;
    }
    return acc;
}

} // namespace dpd
