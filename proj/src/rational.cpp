#include "dpd/rational.hpp"

namespace dpd {

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::PoleAtPoint: return "PoleAtPoint";
        case ErrorCode::ZeroFunction: return "ZeroFunction";
        case ErrorCode::NonGaussianRoots: return "NonGaussianRoots";
        case ErrorCode::EmptyRemovedSet: return "EmptyRemovedSet";
        case ErrorCode::NotConjugationStable: return "NotConjugationStable";
        case ErrorCode::NotReal: return "NotReal";
        case ErrorCode::ValidityViolation: return "ValidityViolation";
        case ErrorCode::PointNotOnCurve: return "PointNotOnCurve";
        case ErrorCode::RealPointRequired: return "RealPointRequired";
        case ErrorCode::InfinityUnsupported: return "InfinityUnsupported";
        case ErrorCode::RealPointRemoval: return "RealPointRemoval";
        case ErrorCode::ExtensionObstruction: return "ExtensionObstruction";
        case ErrorCode::NotInPiece: return "NotInPiece";
        case ErrorCode::RelationFails: return "RelationFails";
        case ErrorCode::NotRegular: return "NotRegular";
        case ErrorCode::RealPoint: return "RealPoint";
        case ErrorCode::ZeroScalar: return "ZeroScalar";
        case ErrorCode::TorsorConstraintViolation: return "TorsorConstraintViolation";
        case ErrorCode::CurveMismatch: return "CurveMismatch";
        case ErrorCode::NotAModel: return "NotAModel";
        case ErrorCode::ZeroDenominator: return "ZeroDenominator";
        case ErrorCode::InvalidTwist: return "InvalidTwist";
        case ErrorCode::InvalidMobius: return "InvalidMobius";
        case ErrorCode::LimitExceeded: return "LimitExceeded";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::SemanticError: return "SemanticError";
        case ErrorCode::UnknownCommand: return "UnknownCommand";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

std::string Rational::str() const {
    std::string s = v_.get_num().get_str();
    if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
    return s;
}

Rational pow(const Rational& base, long exponent) {
    if (exponent == 0) return Rational(1);
    bool neg = exponent < 0;
    unsigned long e = neg ? static_cast<unsigned long>(-exponent)
                          : static_cast<unsigned long>(exponent);
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), base.numerator().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), base.denominator().get_mpz_t(), e);
    Rational r(n, d);
    return neg ? r.inverse() : r;
}

std::string GaussianRational::str() const {
    if (im_.is_zero()) return re_.str();
    std::string imabs = im_.abs().str();
    std::string ipart = (imabs == "1") ? "i" : imabs + "*i";
    if (re_.is_zero()) return (im_.sign() < 0 ? "-" : "") + ipart;
    return re_.str() + (im_.sign() < 0 ? "-" : "+") + ipart;
}

GaussianRational pow(const GaussianRational& base, long exponent) {
    if (exponent == 0) return GaussianRational(1);
    GaussianRational b = exponent < 0 ? base.inverse() : base;
    unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                   : static_cast<unsigned long>(exponent);
    GaussianRational acc(1);
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

bool gauss_less(const GaussianRational& a, const GaussianRational& b) {
    if (a.re() != b.re()) return a.re() < b.re();
    Rational aa = a.im().abs(), ba = b.im().abs();
    if (aa != ba) return aa < ba;
    return a.im() > b.im(); // +Im first
}

} // namespace dpd
