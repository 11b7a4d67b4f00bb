#include "trideg/upoly.hpp"

#include <algorithm>

#include "trideg/errors.hpp"

namespace trideg {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
    return c_[i];
}

Rational UPoly::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

UPoly UPoly::operator+(const UPoly& o) const {
    std::vector<Rational> out(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
    return UPoly(std::move(out));
}

UPoly UPoly::operator-(const UPoly& o) const {
    std::vector<Rational> out(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] -= o.c_[i];
    return UPoly(std::move(out));
}

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly();
    std::vector<Rational> out(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    return UPoly(std::move(out));
}

UPoly UPoly::operator*(const Rational& k) const {
    if (k == 0) return UPoly();
    std::vector<Rational> out = c_;
    for (auto& c : out) c *= k;
    return UPoly(std::move(out));
}

Rational UPoly::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UPoly derivative(const UPoly& p) {
    if (p.degree() <= 0) return UPoly();
    std::vector<Rational> out(p.degree());
    for (int i = 1; i <= p.degree(); ++i) out[i - 1] = p.coeff(i) * i;
    return UPoly(std::move(out));
}

UDivision divmod(const UPoly& p, const UPoly& d) {
    if (d.is_zero()) throw ValueError("polynomial division by zero");
    UPoly r = p;
    std::vector<Rational> q(std::max(0, p.degree() - d.degree() + 1), Rational(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
        const int shift = r.degree() - d.degree();
        const Rational f = r.leading() / d.leading();
        q[shift] = f;
        std::vector<Rational> sub(shift, Rational(0));
        sub.insert(sub.end(), d.coeffs().begin(), d.coeffs().end());
        r = r - UPoly(std::move(sub)) * f;
    }
    return {UPoly(std::move(q)), r};
}

UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = divmod(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * (Rational(1) / a.leading());
}

std::vector<UPoly> squarefree_decomposition(const UPoly& p) {
    if (p.is_zero()) throw ValueError("squarefree decomposition of the zero polynomial");
    std::vector<UPoly> out;
    if (p.degree() == 0) return out;
    // Yun's algorithm (characteristic zero).
    UPoly f = p * (Rational(1) / p.leading());
    UPoly fp = derivative(f);
    UPoly a0 = gcd(f, fp);
    UPoly b = divmod(f, a0).quotient;
    UPoly c = divmod(fp, a0).quotient;
    UPoly d = c - derivative(b);
    while (!(b.degree() == 0)) {
        UPoly a = gcd(b, d);
        out.push_back(a);
        b = divmod(b, a).quotient;
        c = divmod(d, a).quotient;
        d = c - derivative(b);
    }
    return out;
}

namespace {

std::vector<Integer> divisors(Integer n) {
    if (n < 0) n = -n;
    std::vector<Integer> out;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Roots of a squarefree polynomial (each has multiplicity one).
std::vector<Rational> roots_of_squarefree(UPoly f) {
    std::vector<Rational> roots;
    if (f.degree() < 1) return roots;
    if (f.coeff(0) == 0) {
        roots.push_back(Rational(0));
        std::vector<Rational> shifted(f.coeffs().begin() + 1, f.coeffs().end());
        f = UPoly(std::move(shifted));
    }
    if (f.degree() == 1) {
        roots.push_back(-f.coeff(0) / f.coeff(1));
        return roots;
    }
    if (f.degree() == 2) {
        const Rational a = f.coeff(2), b = f.coeff(1), c = f.coeff(0);
        const Rational disc = b * b - 4 * a * c;
        if (is_square(disc)) {
            const Rational s(boost::multiprecision::sqrt(numer(disc)), boost::multiprecision::sqrt(denom(disc)));
            roots.push_back((-b + s) / (2 * a));
            roots.push_back((-b - s) / (2 * a));
        }
        return roots;
    }
    if (f.degree() >= 3) {
        // Clear denominators, then the rational root bound p/q with
        // p | constant term, q | leading term.
        Integer lcm(1);
        for (const Rational& c : f.coeffs()) lcm = boost::multiprecision::lcm(lcm, denom(c));
        std::vector<Integer> ic;
        ic.reserve(f.coeffs().size());
        for (const Rational& c : f.coeffs()) ic.push_back(numer(c * Rational(lcm)));
        const Integer a0 = ic.front(), an = ic.back();
        for (const Integer& p : divisors(a0))
            for (const Integer& q : divisors(an)) {
                for (int sign : {1, -1}) {
                    const Rational cand(sign * p, q);
                    if (f(cand) == 0) roots.push_back(cand);
                }
            }
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    }
    return roots;
}

} // namespace

std::vector<std::pair<Rational, int>> rational_roots(const UPoly& p) {
    if (p.is_zero()) throw ValueError("rational roots of the zero polynomial");
    std::vector<std::pair<Rational, int>> out;
    const auto sf = squarefree_decomposition(p);
    for (std::size_t i = 0; i < sf.size(); ++i)
        for (const Rational& r : roots_of_squarefree(sf[i])) out.emplace_back(r, static_cast<int>(i) + 1);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

} // namespace trideg
