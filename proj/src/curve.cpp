#include "dpd/curve.hpp"

#include <algorithm>
#include <sstream>

#include "dpd/errors.hpp"

namespace dpd {

const GaussianRational& CurvePoint::value() const {
    if (!finite_) fail(ErrorCode::Internal, "coordinate of the point at infinity");
    return value_;
}

std::string CurvePoint::str() const {
    return finite_ ? value_.str() : std::string("inf");
}

RealCurve::RealCurve(std::vector<CurvePoint> removed) : removed_(std::move(removed)) {
    std::sort(removed_.begin(), removed_.end());
    removed_.erase(std::unique(removed_.begin(), removed_.end()), removed_.end());
    if (removed_.empty())
        fail(ErrorCode::EmptyRemovedSet, "removed set is empty: the curve must be affine");
    for (const CurvePoint& p : removed_) {
        if (!std::binary_search(removed_.begin(), removed_.end(), p.conj()))
            fail(ErrorCode::NotConjugationStable,
                 "removed set is not conjugation-stable: missing conjugate of " + p.str());
    }
}

RealCurve RealCurve::affine_line() {
    return RealCurve({CurvePoint::infinity()});
}

RealCurve RealCurve::circle() {
    return RealCurve({CurvePoint(GaussianRational::i()), CurvePoint(-GaussianRational::i())});
}

bool RealCurve::contains(const CurvePoint& p) const {
    return !std::binary_search(removed_.begin(), removed_.end(), p);
}

bool RealCurve::has_real_removed() const {
    return std::any_of(removed_.begin(), removed_.end(),
                       [](const CurvePoint& p) { return p.is_real(); });
}

std::optional<CurvePoint> RealCurve::smallest_finite_removed() const {
    for (const CurvePoint& p : removed_)
        if (p.is_finite()) return p;
    return std::nullopt;
}

std::string RealCurve::str() const {
    std::ostringstream out;
    out << "P1 minus [";
    bool first = true;
    for (const CurvePoint& p : removed_) {
        if (!first) out << ", ";
        out << p.str();
        first = false;
    }
    out << "]";
    return out.str();
}

QDivisor QDivisor::single(const CurvePoint& p, const Rational& coeff) {
    QDivisor d;
    d.add_term(p, coeff);
    return d;
}

Rational QDivisor::at(const CurvePoint& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Rational(0) : it->second;
}

void QDivisor::add_term(const CurvePoint& p, const Rational& coeff) {
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        if (coeff != Rational(0)) terms_.emplace(p, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == Rational(0)) terms_.erase(it);
}

bool QDivisor::is_integral() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) {
        return t.second.denominator() == Integer(1);
    });
}

Rational QDivisor::degree() const {
    Rational sum(0);
    for (const auto& [p, c] : terms_) sum += c;
    return sum;
}

QDivisor QDivisor::operator-() const {
    QDivisor out;
    for (const auto& [p, c] : terms_) out.terms_.emplace(p, -c);
    return out;
}

QDivisor operator+(const QDivisor& a, const QDivisor& b) {
    QDivisor out = a;
    for (const auto& [p, c] : b.terms_) out.add_term(p, c);
    return out;
}

QDivisor operator*(const Rational& s, const QDivisor& d) {
    QDivisor out;
    if (s == Rational(0)) return out;
    for (const auto& [p, c] : d.terms_) out.terms_.emplace(p, s * c);
    return out;
}

QDivisor QDivisor::pullback_tau() const {
    QDivisor out;
    for (const auto& [p, c] : terms_) out.terms_.emplace(p.conj(), c);
    return out;
}

QDivisor QDivisor::floor() const {
    QDivisor out;
    for (const auto& [p, c] : terms_) out.add_term(p, Rational(c.floor()));
    return out;
}

QDivisor QDivisor::restrict_to(const RealCurve& curve) const {
    QDivisor out;
    for (const auto& [p, c] : terms_)
        if (curve.contains(p)) out.terms_.emplace(p, c);
    return out;
}

std::string QDivisor::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        if (first) {
            if (c.sign() < 0) out << "-";
        } else {
            out << (c.sign() < 0 ? " - " : " + ");
        }
        out << c.abs().str() << "*[" << p.str() << "]";
        first = false;
    }
    return out.str();
}

bool divisor_leq(const QDivisor& d1, const QDivisor& d2) {
    for (const auto& [p, c] : d1.terms())
        if (c > d2.at(p)) return false;
    for (const auto& [p, c] : d2.terms())
        if (d1.at(p) > c) return false;
    return true;
}

QDivisor principal_divisor(const RationalFunction& h, const RealCurve& curve) {
    if (h.is_zero()) fail(ErrorCode::ZeroFunction, "divisor of the zero function");
    QDivisor out;
    for (const auto& [r, mult] : poly_gaussian_roots(h.numerator())) {
        CurvePoint p{r};
        if (curve.contains(p)) out.add_term(p, Rational(mult));
    }
    if (h.denominator().degree() > 0) {
        for (const auto& [r, mult] : poly_gaussian_roots(h.denominator())) {
            CurvePoint p{r};
            if (curve.contains(p)) out.add_term(p, Rational(-mult));
        }
    }
    CurvePoint inf = CurvePoint::infinity();
    if (curve.contains(inf)) out.add_term(inf, Rational(h.order_at_infinity()));
    return out;
}

int order_at_point(const RationalFunction& h, const CurvePoint& p) {
    if (p.is_infinity()) return h.order_at_infinity();
    return h.order_at(p.value());
}

bool regular_on_curve(const RationalFunction& f, const RealCurve& curve) {
    if (f.is_zero()) return true;
    Polynomial den = f.denominator();
    for (const CurvePoint& s : curve.removed()) {
        if (s.is_infinity()) continue;
        int m = den.root_multiplicity(s.value());
        for (int j = 0; j < m; ++j)
            den = den.divexact(Polynomial::z() - Polynomial(s.value()));
    }
    if (den.degree() != 0) return false;
    return !curve.contains(CurvePoint::infinity()) || f.order_at_infinity() >= 0;
}

} // namespace dpd
