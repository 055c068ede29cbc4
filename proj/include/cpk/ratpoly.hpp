#pragma once

#include <optional>
#include <vector>

#include "cpk/egf.hpp"
#include "cpk/ints.hpp"

namespace cpk {

// Dense polynomial with exact rational coefficients.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeff) : c_(std::move(coeff)) { trim(); }

    static RatPoly constant(const Rat& v);
    static RatPoly monomial(const Rat& coeff, int degree);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat operator()(const Rat& z) const;  // Horner
    RatPoly derivative() const;

    RatPoly& operator+=(const RatPoly& o);
    RatPoly& operator-=(const RatPoly& o);
    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }

    // Bounds of the polynomial over [a, b], 0 <= a <= b, from the sign
    // split of the coefficients (z^i is monotone on [0, inf)).
    Rat lower_bound_on(const Rat& a, const Rat& b) const;
    Rat upper_bound_on(const Rat& a, const Rat& b) const;

private:
    void trim();
    std::vector<Rat> c_;
};

// z^n/n! scaled by r, the building block of cluster polynomials.
RatPoly egf_term(const Int& r, int n);

// s_k as an exact polynomial.
RatPoly to_ratpoly(const ClusterPolynomial& s);

// Truncated EGF as a polynomial (coefficients a_n/n!).
RatPoly to_ratpoly(const EgfSeries& f);

// Largest x in [from, cap] such that p > 0 is certified on [from, x] by
// adaptive interval bounds. Returns `from` when nothing can be certified.
Rat certified_positive_prefix(const RatPoly& p, const Rat& from, const Rat& cap,
                              const Rat& min_step);

// Some b in (from, cap] with p(b) < 0, tightened by bisection to within
// tol of a sign change; requires p(from) > 0. nullopt when no negative
// value of p is found on the scan grid.
std::optional<Rat> certified_negative_point(const RatPoly& p, const Rat& from,
                                            const Rat& cap, const Rat& tol);

// Certifies p < 0 on [a, b] via adaptive interval upper bounds.
// Returns false if the certificate fails at the given subdivision limit.
bool certified_negative_on(const RatPoly& p, const Rat& a, const Rat& b,
                           int max_pieces = 4096);

}  // namespace cpk
