#pragma once

// Shared fixtures for the test suite: point/polynomial shorthands, a family
// of base pairs, and random equivalence twists for property tests.

#include <optional>
#include <random>
#include <vector>

#include "dpd/errors.hpp"
#include "dpd/pair.hpp"

namespace dpd_test {

using namespace dpd;

inline CurvePoint pt(long re, long im = 0) {
    return CurvePoint(GaussianRational(Rational(re), Rational(im)));
}
inline CurvePoint ptr(const Rational& r) { return CurvePoint(GaussianRational(r)); }
inline Polynomial Z() { return Polynomial::z(); }
inline RationalFunction zrf() { return RationalFunction::z(); }
inline RationalFunction one_rf() { return RationalFunction(GaussianRational(1)); }

inline QDivisor half_pm1() {
    QDivisor d;
    d.add_term(pt(-1), Rational(1, 2));
    d.add_term(pt(1), Rational(1, 2));
    return d;
}

// The interval-base model pair (1/2{-1} + 1/2{1}, 1 - z^2) on the affine line.
inline DpdPair intro_pair() {
    return DpdPair(RealCurve::affine_line(), half_pm1(),
                   RationalFunction(Polynomial(1) - Z() * Z()));
}

// A selection of valid pairs exercising both curve kinds, fractional and
// negative divisors, and nontrivial h.
inline std::vector<DpdPair> base_pairs() {
    std::vector<DpdPair> out;
    RealCurve line = RealCurve::affine_line();
    RealCurve circ = RealCurve::circle();
    out.emplace_back(line, QDivisor(), one_rf());
    out.push_back(intro_pair());
    out.emplace_back(line, QDivisor::single(pt(0), Rational(1, 2)), zrf());
    out.emplace_back(line, QDivisor::single(pt(0), Rational(-1, 2)),
                     RationalFunction(Polynomial(1), Z()));
    out.emplace_back(line, QDivisor(), RationalFunction(Z() * Z() + Polynomial(1)));
    out.emplace_back(line, QDivisor(), RationalFunction(Z() * Z() - Polynomial(1)));
    out.emplace_back(circ, QDivisor(), one_rf());
    out.emplace_back(circ, QDivisor::single(pt(1), Rational(1, 2)),
                     RationalFunction(Polynomial(1) - Z(), Polynomial(1) + Z() * Z()));
    return out;
}

// All of base_pairs() is regular; pairs_with_singular() adds known-singular ones.
inline std::vector<DpdPair> singular_pairs() {
    std::vector<DpdPair> out;
    RealCurve line = RealCurve::affine_line();
    out.emplace_back(line, QDivisor::single(pt(0), Rational(1, 3)), zrf()); // 1/3 at ord 1
    out.emplace_back(line, QDivisor(), RationalFunction(Z() * Z()));        // A_1 point
    out.emplace_back(line, QDivisor(), RationalFunction(pow(Z(), 3)));      // cusp-type
    return out;
}

// Runs fn and reports the ErrorCode it threw, or nullopt if it returned.
template <typename F>
std::optional<ErrorCode> code_of(F&& fn) {
    try {
        std::forward<F>(fn)();
    } catch (const Error& e) {
        return e.code();
    }
    return std::nullopt;
}

inline TwistData random_twist(std::mt19937& rng) {
    std::uniform_int_distribution<int> c(-2, 2), e(0, 1), lam(0, 2);
    RationalFunction f = one_rf();
    // a real linear factor
    if (e(rng)) {
        RationalFunction lin(Z() - Polynomial(GaussianRational(c(rng))));
        f = f * (e(rng) ? lin : lin.inverse());
    }
    // a conjugate quadratic factor (kept away from +-i, which some base
    // curves remove)
    if (e(rng)) {
        GaussianRational q(Rational(c(rng)), Rational(2));
        RationalFunction quad((Z() - Polynomial(q)) * (Z() - Polynomial(q.conj())));
        f = f * (e(rng) ? quad : quad.inverse());
    }
    static const Rational lambdas[] = {Rational(1), Rational(2), Rational(1, 3)};
    return TwistData(f, lambdas[lam(rng)]);
}

} // namespace dpd_test
