#include "dpd/polynomial.hpp"

#include <sstream>

namespace dpd {

Polynomial Polynomial::monomial(GaussianRational coeff, int deg) {
    if (coeff.is_zero() || deg < 0) return Polynomial();
    std::vector<GaussianRational> c(static_cast<size_t>(deg) + 1, GaussianRational(0));
    c.back() = std::move(coeff);
    return Polynomial(std::move(c));
}

bool Polynomial::is_real() const {
    for (const auto& a : c_)
        if (!a.is_real()) return false;
    return true;
}

GaussianRational Polynomial::evaluate(const GaussianRational& x) const {
    GaussianRational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::conj() const {
    std::vector<GaussianRational> c;
    c.reserve(c_.size());
    for (const auto& a : c_) c.push_back(a.conj());
    return Polynomial(std::move(c));
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<GaussianRational> c;
    c.reserve(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k)
        c.push_back(GaussianRational(Rational(static_cast<long>(k))) * c_[k]);
    return Polynomial(std::move(c));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return leading().inverse() * *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<GaussianRational> c(std::max(a.c_.size(), b.c_.size()), GaussianRational(0));
    for (size_t k = 0; k < c.size(); ++k) {
        if (k < a.c_.size()) c[k] += a.c_[k];
        if (k < b.c_.size()) c[k] += b.c_[k];
    }
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial Polynomial::operator-() const {
    std::vector<GaussianRational> c;
    c.reserve(c_.size());
    for (const auto& x : c_) c.push_back(-x);
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<GaussianRational> c(a.c_.size() + b.c_.size() - 1, GaussianRational(0));
    for (size_t j = 0; j < a.c_.size(); ++j)
        for (size_t k = 0; k < b.c_.size(); ++k)
            c[j + k] += a.c_[j] * b.c_[k];
    return Polynomial(std::move(c));
}

Polynomial operator*(const GaussianRational& s, const Polynomial& p) {
    if (s.is_zero()) return Polynomial();
    std::vector<GaussianRational> c;
    c.reserve(p.c_.size());
    for (const auto& x : p.c_) c.push_back(s * x);
    return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
    if (d.is_zero()) fail(ErrorCode::ZeroDenominator, "polynomial division by zero");
    Polynomial r = *this;
    if (r.degree() < d.degree()) return {Polynomial(), r};
    std::vector<GaussianRational> q(static_cast<size_t>(r.degree() - d.degree()) + 1,
                                    GaussianRational(0));
    GaussianRational inv = d.leading().inverse();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int shift = r.degree() - d.degree();
        GaussianRational f = r.leading() * inv;
        q[static_cast<size_t>(shift)] = f;
        r = r - Polynomial::monomial(f, shift) * d;
    }
    return {Polynomial(std::move(q)), r};
}

Polynomial Polynomial::divexact(const Polynomial& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) fail(ErrorCode::Internal, "inexact polynomial division");
    return q;
}

Polynomial Polynomial::deflate(const GaussianRational& root) const {
    if (is_zero()) fail(ErrorCode::ZeroFunction, "deflating zero polynomial");
    // synthetic division by (z - root)
    std::vector<GaussianRational> q(c_.size() - 1, GaussianRational(0));
    GaussianRational carry(0);
    for (size_t k = c_.size(); k-- > 1;) {
        carry = c_[k] + carry * root;
        q[k - 1] = carry;
    }
    GaussianRational rem = c_[0] + carry * root;
    if (!rem.is_zero()) fail(ErrorCode::Internal, "deflate: not a root");
    return Polynomial(std::move(q));
}

int Polynomial::root_multiplicity(const GaussianRational& x) const {
    if (is_zero()) fail(ErrorCode::ZeroFunction, "root multiplicity in zero polynomial");
    int m = 0;
    Polynomial p = *this;
    while (!p.is_constant() && p.evaluate(x).is_zero()) {
        p = p.deflate(x);
        ++m;
    }
    return m;
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        const GaussianRational& a = c_[k];
        if (a.is_zero()) continue;
        std::string var;
        if (k == 1) var = "z";
        else if (k > 1) var = "z^" + std::to_string(k);

        if (a.is_real()) {
            Rational r = a.re();
            if (first) {
                out << (r.sign() < 0 ? "-" : "");
            } else {
                out << (r.sign() < 0 ? " - " : " + ");
            }
            Rational mag = r.abs();
            if (var.empty()) out << mag.str();
            else if (mag == Rational(1)) out << var;
            else out << mag.str() << "*" << var;
        } else {
            if (!first) out << " + ";
            out << "(" << a.str() << ")";
            if (!var.empty()) out << "*" << var;
        }
        first = false;
    }
    return out.str();
}

Polynomial pow(const Polynomial& base, int exponent) {
    if (exponent < 0) fail(ErrorCode::Internal, "negative polynomial power");
    Polynomial acc(1), b = base;
    unsigned e = static_cast<unsigned>(exponent);
    while (e) {
        if (e & 1) acc = acc * b;
        b = b * b;
        e >>= 1;
    }
    return acc;
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
        if (!b.is_zero()) b = b.monic(); // keep coefficients tame
    }
    return a.monic();
}

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p) {
    if (p.is_zero()) fail(ErrorCode::ZeroFunction, "square-free decomposition of zero");
    std::vector<std::pair<Polynomial, int>> out;
    Polynomial f = p.monic();
    if (f.degree() < 1) return out;

    // Yun's algorithm (characteristic zero)
    Polynomial g = poly_gcd(f, f.derivative());
    if (g.degree() == 0) {
        out.emplace_back(f, 1);
        return out;
    }
    Polynomial c = f.divexact(g);
    Polynomial d = f.derivative().divexact(g) - c.derivative();
    int i = 1;
    while (c.degree() > 0) {
        Polynomial a = poly_gcd(c, d);
        if (a.degree() > 0) out.emplace_back(a, i);
        c = c.divexact(a);
        d = d.divexact(a) - c.derivative();
        ++i;
    }
    return out;
}

} // namespace dpd
