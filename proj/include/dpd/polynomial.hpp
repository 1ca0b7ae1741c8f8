#pragma once

#include <utility>
#include <vector>

#include "dpd/rational.hpp"

namespace dpd {

// Dense univariate polynomial over Q(i), coefficients stored low degree
// first and trimmed so the leading coefficient is nonzero (empty = zero).
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(GaussianRational constant) { c_.push_back(std::move(constant)); trim(); }
    Polynomial(int constant) : Polynomial(GaussianRational(constant)) {}
    explicit Polynomial(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial z() { return Polynomial({GaussianRational(0), GaussianRational(1)}); }
    static Polynomial monomial(GaussianRational coeff, int deg);

    // degree of zero polynomial is -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    GaussianRational coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return GaussianRational(0);
        return c_[static_cast<size_t>(k)];
    }
    GaussianRational leading() const {
        return c_.empty() ? GaussianRational(0) : c_.back();
    }

    bool is_real() const;

    GaussianRational evaluate(const GaussianRational& x) const;

    Polynomial conj() const;       // coefficient-wise conjugation
    Polynomial derivative() const;
    Polynomial monic() const;      // zero stays zero

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;
    friend Polynomial operator*(const GaussianRational& s, const Polynomial& p);

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Euclidean division by a nonzero divisor: *this = q*d + r, deg r < deg d.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;

    // Exact division; throws Internal if the remainder is nonzero.
    Polynomial divexact(const Polynomial& d) const;

    // Quotient by (z - root); throws Internal unless root is an exact root.
    Polynomial deflate(const GaussianRational& root) const;

    // Multiplicity of (z - x), 0 when p(x) != 0.  Zero polynomial throws.
    int root_multiplicity(const GaussianRational& x) const;

    // Canonical ascending-degree form, e.g. "1 - z^2", "(1+2*i)*z".
    std::string str() const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<GaussianRational> c_;
};

Polynomial pow(const Polynomial& base, int exponent); // exponent >= 0

// Monic gcd; gcd(0, 0) = 0.
Polynomial poly_gcd(Polynomial a, Polynomial b);

// Yun square-free decomposition of a nonzero polynomial: returns monic
// square-free parts with their multiplicities, product of part^mult equal
// to the monic normalization of the input.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p);

// Complete multiset of roots in Q(i), sorted by the deterministic point
// order.  Throws NonGaussianRoots when p does not split over Q(i),
// ZeroFunction for the zero polynomial.
std::vector<std::pair<GaussianRational, int>> poly_gaussian_roots(const Polynomial& p);

} // namespace dpd
