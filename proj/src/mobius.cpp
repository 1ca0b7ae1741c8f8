#include "dpd/mobius.hpp"

#include <vector>

#include "dpd/errors.hpp"
#include "dpd/polynomial.hpp"

namespace dpd {

namespace {

Rational real_value(const CurvePoint& p) {
    if (p.is_infinity() || !p.is_real())
        fail(ErrorCode::RealPointRequired, "reparametrization through a non-real point");
    return p.value().re();
}

}  // namespace

Mobius::Mobius() : a_(1), b_(0), c_(0), d_(1) {}

Mobius::Mobius(const Rational& a, const Rational& b, const Rational& c, const Rational& d)
    : a_(a), b_(b), c_(c), d_(d) {
    if ((a_ * d_ - b_ * c_).is_zero())
        fail(ErrorCode::InvalidMobius, "degenerate coefficient matrix");
    normalize();
}

void Mobius::normalize() {
    Integer l = lcm(lcm(a_.denominator(), b_.denominator()),
                    lcm(c_.denominator(), d_.denominator()));
    Integer na = a_.numerator() * (l / a_.denominator());
    Integer nb = b_.numerator() * (l / b_.denominator());
    Integer nc = c_.numerator() * (l / c_.denominator());
    Integer nd = d_.numerator() * (l / d_.denominator());
    Integer g = gcd(gcd(na, nb), gcd(nc, nd));
    for (const Integer* lead : {&na, &nb, &nc, &nd}) {
        if (*lead != 0) {
            if (*lead < 0) g = -g;
            break;
        }
    }
    a_ = Rational(na, g);
    b_ = Rational(nb, g);
    c_ = Rational(nc, g);
    d_ = Rational(nd, g);
}

Mobius Mobius::identity() { return Mobius(); }

Mobius Mobius::affine(const Rational& a, const Rational& b) {
    return Mobius(a, b, Rational(0), Rational(1));
}

Mobius Mobius::flip() { return affine(Rational(-1), Rational(0)); }

Mobius Mobius::through(const CurvePoint& p, const CurvePoint& q, const CurvePoint& r) {
    if (p == q || q == r || p == r)
        fail(ErrorCode::InvalidMobius, "reparametrization through coincident points");
    // First the map 0 -> p, 1 -> q, infinity -> r, ...
    Mobius base = [&]() {
        if (r.is_infinity()) {
            Rational vp = real_value(p), vq = real_value(q);
            return affine(vq - vp, vp);
        }
        Rational vr = real_value(r);
        if (p.is_infinity()) {
            // a/c = infinity-image ... swap roles: use z -> (a z + b)/(z + d)
            // with M(0) = infinity forces d = 0: M(z) = (a z + b)/z; M(1) = a + b = q,
            // M(inf) = a = r.
            Rational vq = real_value(q);
            return Mobius(vr, vq - vr, Rational(1), Rational(0));
        }
        Rational vp = real_value(p);
        if (q.is_infinity()) {
            // M(z) = (a z + b)/(c z + d), M(1) = infinity forces d = -c.
            // M(0) = -b/c ... take c = 1, d = -1: M(0) = -b = p, M(inf) = a = r.
            return Mobius(vr, -vp, Rational(1), Rational(-1));
        }
        Rational vq = real_value(q);
        // c = 1: a = r, b = p*d, and (a + b)/(1 + d) = q gives d = (q - r)/(p - q).
        Rational dcoef = (vq - vr) / (vp - vq);
        return Mobius(vr, vp * dcoef, Rational(1), dcoef);
    }();
    // ... then precompose with z -> (z + 1)/2 which sends (-1, 1, inf) to (0, 1, inf).
    return base.compose(affine(Rational(1, 2), Rational(1, 2)));
}

bool Mobius::is_identity() const {
    return a_ == Rational(1) && b_.is_zero() && c_.is_zero() && d_ == Rational(1);
}

Mobius Mobius::inverse() const { return Mobius(d_, -b_, -c_, a_); }

Mobius Mobius::compose(const Mobius& other) const {
    return Mobius(a_ * other.a_ + b_ * other.c_, a_ * other.b_ + b_ * other.d_,
                  c_ * other.a_ + d_ * other.c_, c_ * other.b_ + d_ * other.d_);
}

CurvePoint Mobius::apply(const CurvePoint& p) const {
    GaussianRational ga(a_), gb(b_), gc(c_), gd(d_);
    if (p.is_infinity()) {
        if (c_.is_zero()) return CurvePoint::infinity();
        return CurvePoint(ga / gc);
    }
    GaussianRational den = gc * p.value() + gd;
    if (den.is_zero()) return CurvePoint::infinity();
    return CurvePoint((ga * p.value() + gb) / den);
}

RationalFunction Mobius::pullback(const RationalFunction& h) const {
    if (h.is_zero()) return h;
    Polynomial lin_num = Polynomial(GaussianRational(a_)) * Polynomial::z() +
                         Polynomial(GaussianRational(b_));
    Polynomial lin_den = Polynomial(GaussianRational(c_)) * Polynomial::z() +
                         Polynomial(GaussianRational(d_));
    auto substitute = [&](const Polynomial& p) {
        // p((az+b)/(cz+d)) = result / (cz+d)^deg(p)
        Polynomial acc(GaussianRational(0));
        int n = p.degree();
        for (int k = 0; k <= n; ++k) {
            if (p.coeff(k).is_zero()) continue;
            acc = acc + Polynomial(p.coeff(k)) * pow(lin_num, k) * pow(lin_den, n - k);
        }
        return acc;
    };
    int dn = h.numerator().degree();
    int dd = h.denominator().degree();
    Polynomial num = substitute(h.numerator());
    Polynomial den = substitute(h.denominator());
    // Balance the (cz+d) powers: h∘psi = num/(cz+d)^dn * (cz+d)^dd/den.
    if (dn > dd)
        den = den * pow(lin_den, dn - dd);
    else if (dd > dn)
        num = num * pow(lin_den, dd - dn);
    return RationalFunction(num, den);
}

QDivisor Mobius::pullback(const QDivisor& D) const {
    Mobius inv = inverse();
    QDivisor out;
    for (const auto& [point, coeff] : D.terms()) out.add_term(inv.apply(point), coeff);
    return out;
}

RealCurve Mobius::pullback(const RealCurve& curve) const {
    Mobius inv = inverse();
    std::vector<CurvePoint> removed;
    removed.reserve(curve.removed().size());
    for (const CurvePoint& s : curve.removed()) removed.push_back(inv.apply(s));
    return RealCurve(removed);
}

std::string Mobius::str() const {
    auto linear = [](const Rational& u, const Rational& v) {
        // u*z + v with the usual cosmetic collapses.
        std::string out;
        if (!u.is_zero()) {
            if (u == Rational(1))
                out = "z";
            else if (u == Rational(-1))
                out = "-z";
            else
                out = u.str() + "*z";
        }
        if (!v.is_zero() || out.empty()) {
            if (out.empty())
                out = v.str();
            else if (v.sign() > 0)
                out += " + " + v.str();
            else
                out += " - " + (-v).str();
        }
        return out;
    };
    if (c_.is_zero()) return linear(a_ / d_, b_ / d_);
    std::string num = linear(a_, b_);
    bool num_simple = !b_.is_zero() ? false : true;
    std::string lhs = num_simple ? num : "(" + num + ")";
    std::string den = linear(c_, d_);
    bool den_simple = den == "z" || (c_.is_zero() || d_.is_zero());
    std::string rhs = den_simple && den.find(' ') == std::string::npos ? den : "(" + den + ")";
    return lhs + "/" + rhs;
}

}  // namespace dpd
