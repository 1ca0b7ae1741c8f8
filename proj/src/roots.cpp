#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "dpd/polynomial.hpp"

// Root search over Q(i).
//
// Strategy: reduce to a square-free *real* integer polynomial (for genuinely
// Gaussian coefficients, via the degree-doubled p * conj(p)), monicize it
// (roots scale by the leading coefficient), and observe that any Q(i) root of
// a monic integer polynomial is a Gaussian integer dividing the constant
// term.  Candidates are therefore the Gaussian-integer divisors of H(0),
// enumerated from the Gaussian factorizations of the rational prime factors
// (2 ramifies as (1+i)^2, p = 1 mod 4 splits via a two-squares
// representation, p = 3 mod 4 stays inert), capped by the Cauchy root bound.

namespace dpd {
namespace {

struct GInt {
    Integer re, im;
};

GInt gmul(const GInt& a, const GInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Integer gnorm(const GInt& a) { return a.re * a.re + a.im * a.im; }

constexpr unsigned long kTrialLimit = 1000000;
constexpr unsigned long kRhoLimit = 1u << 21;

Integer isqrt(const Integer& n) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Integer pollard_rho(const Integer& n) {
    // Brent-style cycle walk; n must be odd composite, not a prime power of
    // interest to the caller beyond "give me a factor".
    for (long c = 1; c < 32; ++c) {
        Integer x = 2, y = 2, d = 1;
        unsigned long steps = 0;
        auto step = [&](Integer v) { return (v * v + c) % n; };
        while (d == 1) {
            if (++steps > kRhoLimit)
                fail(ErrorCode::LimitExceeded, "integer factorization exceeded budget");
            x = step(x);
            y = step(step(y));
            Integer diff = x > y ? x - y : y - x;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != n) return d;
    }
    fail(ErrorCode::LimitExceeded, "integer factorization exceeded budget");
}

void factor_into(Integer n, std::vector<std::pair<Integer, int>>& out) {
    if (n <= 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
        out.emplace_back(n, 1);
        return;
    }
    Integer d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

// n > 0 -> sorted prime factorization
std::vector<std::pair<Integer, int>> factor_integer(Integer n) {
    std::vector<std::pair<Integer, int>> out;
    auto take = [&](const Integer& p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    };
    take(Integer(2));
    take(Integer(3));
    for (unsigned long d = 5; d <= kTrialLimit; d += 6) {
        if (Integer(d) * Integer(d) > n) break;
        take(Integer(d));
        take(Integer(d + 2));
    }
    if (n > 1) {
        if (Integer(kTrialLimit) * Integer(kTrialLimit) > n) {
            out.emplace_back(n, 1); // below the trial bound squared => prime
        } else {
            std::vector<std::pair<Integer, int>> rest;
            factor_into(n, rest);
            std::sort(rest.begin(), rest.end());
            for (size_t i = 0; i < rest.size();) {
                size_t j = i;
                int e = 0;
                while (j < rest.size() && rest[j].first == rest[i].first) {
                    e += rest[j].second;
                    ++j;
                }
                out.emplace_back(rest[i].first, e);
                i = j;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// p prime, p = 1 mod 4 (or p = 2): a^2 + b^2 = p.
std::pair<Integer, Integer> two_squares(const Integer& p) {
    if (p == 2) return {1, 1};
    // Small p: direct scan is simplest and exact.
    if (p < 1000000) {
        for (Integer a = 1; a * a * 2 <= p; ++a) {
            Integer b2 = p - a * a;
            Integer b = isqrt(b2);
            if (b * b == b2) return {a, b};
        }
        fail(ErrorCode::Internal, "two-squares scan failed");
    }
    // Hermite-Serret: t with t^2 = -1 mod p, then Euclid down to sqrt(p).
    Integer e = (p - 1) / 4;
    Integer t = 0;
    for (Integer a = 2; a < 1000; ++a) {
        mpz_powm(t.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        Integer t2 = (t * t) % p;
        if (t2 == p - 1) break;
        t = 0;
    }
    if (t == 0) fail(ErrorCode::LimitExceeded, "no sqrt(-1) found");
    Integer x0 = p, x1 = t;
    while (x1 * x1 > p) {
        Integer r = x0 % x1;
        x0 = x1;
        x1 = r;
    }
    Integer b2 = p - x1 * x1;
    Integer b = isqrt(b2);
    if (b * b != b2) fail(ErrorCode::Internal, "Hermite-Serret failed");
    return {x1, b};
}

struct PrimePowerFactor {
    GInt pi;
    int max_exp;
    bool split; // when true, conjugate exponents enumerated independently
};

// All Gaussian-integer divisors of n (up to units) with norm <= norm_bound.
std::vector<GInt> gaussian_divisors(const Integer& n, const Integer& norm_bound) {
    std::vector<PrimePowerFactor> pps;
    for (const auto& [p, e] : factor_integer(n)) {
        if (p == 2) {
            pps.push_back({{1, 1}, 2 * e, false});
        } else if (p % 4 == 1) {
            auto [a, b] = two_squares(p);
            pps.push_back({{a, b}, e, true});
        } else {
            pps.push_back({{p, 0}, e, false});
        }
    }
    std::vector<GInt> out;
    GInt one{1, 0};
    std::function<void(size_t, const GInt&)> rec = [&](size_t idx, const GInt& acc) {
        if (gnorm(acc) > norm_bound) return;
        if (idx == pps.size()) {
            out.push_back(acc);
            return;
        }
        const auto& pp = pps[idx];
        GInt conj_pi{pp.pi.re, -pp.pi.im};
        GInt a = acc;
        for (int j = 0; j <= pp.max_exp; ++j) {
            if (pp.split) {
                GInt b = a;
                for (int k = 0; k <= pp.max_exp; ++k) {
                    rec(idx + 1, b);
                    if (k < pp.max_exp) {
                        b = gmul(b, conj_pi);
                        if (gnorm(b) > norm_bound) break;
                    }
                }
            } else {
                rec(idx + 1, a);
            }
            if (j < pp.max_exp) {
                a = gmul(a, pp.pi);
                if (gnorm(a) > norm_bound) break;
            }
        }
    };
    rec(0, one);
    return out;
}

// Horner evaluation of an integer polynomial at a Gaussian integer.
bool is_iroot(const std::vector<Integer>& h, const GInt& g) {
    Integer re = 0, im = 0;
    for (size_t k = h.size(); k-- > 0;) {
        Integer nre = re * g.re - im * g.im + h[k];
        Integer nim = re * g.im + im * g.re;
        re = nre;
        im = nim;
    }
    return re == 0 && im == 0;
}

struct GaussLess {
    bool operator()(const GaussianRational& a, const GaussianRational& b) const {
        return gauss_less(a, b);
    }
};

// g: square-free with real (rational) coefficients, degree >= 1.
// Returns every root lying in Q(i); silently omits the rest.
std::vector<GaussianRational> real_squarefree_roots(const Polynomial& g) {
    std::vector<GaussianRational> out;
    int deg = g.degree();
    if (deg == 1) {
        out.push_back(-(g.coeff(0) / g.coeff(1)));
        return out;
    }

    // integer coefficients: multiply by the lcm of denominators
    Integer lcm = 1;
    for (int k = 0; k <= deg; ++k) {
        Integer d = g.coeff(k).re().denominator();
        Integer gg;
        mpz_lcm(gg.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
        lcm = gg;
    }
    std::vector<Integer> G(static_cast<size_t>(deg) + 1);
    for (int k = 0; k <= deg; ++k) {
        Rational c = g.coeff(k).re() * Rational(lcm);
        G[static_cast<size_t>(k)] = c.numerator(); // exact integer now
    }

    if (G[0] == 0) { // square-free => simple root at zero
        out.push_back(GaussianRational(0));
        G.erase(G.begin());
        if (G.size() == 1) return out;
        if (G.size() == 2) {
            out.push_back(GaussianRational(Rational(-G[0], G[1])));
            return out;
        }
    }

    // monicize: H(w) = c^(n-1) * G(w/c), roots scale by c = lead(G)
    Integer c = G.back();
    int n = static_cast<int>(G.size()) - 1;
    std::vector<Integer> H(G.size());
    H[static_cast<size_t>(n)] = 1;
    for (int j = 0; j < n; ++j) {
        Integer scale;
        mpz_pow_ui(scale.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(n - 1 - j));
        H[static_cast<size_t>(j)] = G[static_cast<size_t>(j)] * scale;
    }

    Integer bound = 1; // Cauchy: |root| < 1 + max |coeff| for monic H
    for (size_t j = 0; j + 1 < H.size(); ++j) {
        Integer a = abs(H[j]);
        if (a > bound) bound = a + 1;
    }
    Integer norm_bound = bound * bound;

    Integer h0 = abs(H[0]);
    std::set<std::pair<Integer, Integer>> seen;
    for (const GInt& d : gaussian_divisors(h0, norm_bound)) {
        const GInt units[4] = {{d.re, d.im}, {-d.im, d.re}, {-d.re, -d.im}, {d.im, -d.re}};
        for (const GInt& u : units) {
            if (!seen.insert({u.re, u.im}).second) continue;
            if (is_iroot(H, u)) {
                out.push_back(GaussianRational(Rational(u.re, c), Rational(u.im, c)));
            }
        }
    }
    return out;
}

std::vector<GaussianRational> squarefree_roots(const Polynomial& f) {
    if (f.degree() < 1) return {};
    if (f.is_real()) return real_squarefree_roots(f);
    Polynomial n = f * f.conj();
    Polynomial radical = n.divexact(poly_gcd(n, n.derivative())).monic();
    std::vector<GaussianRational> out;
    for (const auto& r : real_squarefree_roots(radical)) {
        if (f.evaluate(r).is_zero()) out.push_back(r);
    }
    return out;
}

} // namespace

std::vector<std::pair<GaussianRational, int>> poly_gaussian_roots(const Polynomial& p) {
    if (p.is_zero()) fail(ErrorCode::ZeroFunction, "roots of the zero polynomial");
    std::map<GaussianRational, int, GaussLess> acc;
    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        for (const auto& r : squarefree_roots(factor)) acc[r] += mult;
    }
    int total = 0;
    for (const auto& [r, m] : acc) total += m;
    if (total != p.degree())
        fail(ErrorCode::NonGaussianRoots,
             "polynomial does not split over Q(i): " + p.str());
    return {acc.begin(), acc.end()};
}

} // namespace dpd
