#include "cpk/ratpoly.hpp"

#include <algorithm>

namespace cpk {

void RatPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly RatPoly::constant(const Rat& v) {
    return RatPoly(std::vector<Rat>{v});
}

RatPoly RatPoly::monomial(const Rat& coeff, int degree) {
    std::vector<Rat> c(static_cast<size_t>(degree) + 1, Rat(0));
    c[static_cast<size_t>(degree)] = coeff;
    return RatPoly(std::move(c));
}

Rat RatPoly::operator()(const Rat& z) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= z;
        acc += *it;
    }
    return acc;
}

RatPoly RatPoly::derivative() const {
    if (c_.size() <= 1) return RatPoly();
    std::vector<Rat> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return RatPoly(std::move(d));
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Rat RatPoly::lower_bound_on(const Rat& a, const Rat& b) const {
    Rat acc(0), pa(1), pb(1);
    for (const Rat& ci : c_) {
        if (ci > 0)
            acc += ci * pa;
        else if (ci < 0)
            acc += ci * pb;
        pa *= a;
        pb *= b;
    }
    return acc;
}

Rat RatPoly::upper_bound_on(const Rat& a, const Rat& b) const {
    Rat acc(0), pa(1), pb(1);
    for (const Rat& ci : c_) {
        if (ci > 0)
            acc += ci * pb;
        else if (ci < 0)
            acc += ci * pa;
        pa *= a;
        pb *= b;
    }
    return acc;
}

RatPoly egf_term(const Int& r, int n) {
    return RatPoly::monomial(Rat(r) / Rat(factorial(n)), n);
}

RatPoly to_ratpoly(const ClusterPolynomial& s) {
    RatPoly p;
    for (const auto& [n, r] : s.r) p += egf_term(r, n);
    return p;
}

RatPoly to_ratpoly(const EgfSeries& f) {
    RatPoly p;
    for (int n = 0; n <= f.order; ++n)
        if (f.at(n) != 0) p += egf_term(f.at(n), n);
    return p;
}

Rat certified_positive_prefix(const RatPoly& p, const Rat& from, const Rat& cap,
                              const Rat& min_step) {
    Rat a = from;
    Rat step = (cap - from) / 8;
    if (step <= 0) return from;
    while (a < cap && step >= min_step) {
        Rat b = a + step;
        if (b > cap) b = cap;
        if (p.lower_bound_on(a, b) > 0) {
            a = b;
            step *= 2;
        } else {
            step /= 2;
        }
    }
    return a;
}

std::optional<Rat> certified_negative_point(const RatPoly& p, const Rat& from,
                                            const Rat& cap, const Rat& tol) {
    Rat lo = from, hi = cap;
    if (!(p(hi) < 0)) {
        bool found = false;
        for (int i = 1; i <= 64 && !found; ++i) {
            Rat x = from + (cap - from) * rat(i, 64);
            if (p(x) < 0) {
                hi = x;
                found = true;
            } else {
                lo = x;
            }
        }
        if (!found) return std::nullopt;
    }
    while (hi - lo > tol) {
        Rat mid = (lo + hi) / 2;
        if (p(mid) < 0)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

bool certified_negative_on(const RatPoly& p, const Rat& a, const Rat& b,
                           int max_pieces) {
    // Adaptive subdivision; each accepted piece carries an exact certificate
    // upper_bound_on < 0.
    struct Piece {
        Rat lo, hi;
        int depth;
    };
    std::vector<Piece> stack{{a, b, 0}};
    int used = 0;
    while (!stack.empty()) {
        Piece piece = stack.back();
        stack.pop_back();
        if (++used > max_pieces) return false;
        if (p.upper_bound_on(piece.lo, piece.hi) < 0) continue;
        if (piece.depth >= 40) return false;
        Rat mid = (piece.lo + piece.hi) / 2;
        stack.push_back({piece.lo, mid, piece.depth + 1});
        stack.push_back({mid, piece.hi, piece.depth + 1});
    }
    return true;
}

}  // namespace cpk
