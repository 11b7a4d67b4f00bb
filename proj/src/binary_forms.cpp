#include "trideg/binary_forms.hpp"

#include "trideg/errors.hpp"
#include "trideg/linalg.hpp"

namespace trideg {

bool is_binary_form(const MPoly& f) { return f.vars().size() == 2 && f.is_homogeneous(); }

static void require_binary_form(const MPoly& f, const char* who) {
    if (f.vars().size() != 2) throw ValueError(std::string(who) + ": expected a polynomial in two variables");
    if (!f.is_homogeneous()) throw ValueError(std::string(who) + ": expected a homogeneous form");
}

std::vector<Rational> binary_coeffs(const MPoly& f, int d) {
    std::vector<Rational> out(d + 1, Rational(0));
    for (const auto& [m, c] : f.terms()) out[m.exponents[1]] = c;
    return out;
}

UPoly dehomogenize(const MPoly& f) {
    const int d = f.degree();
    if (d < 0) return UPoly();
    std::vector<Rational> c(d + 1, Rational(0));
    for (const auto& [m, coef] : f.terms()) c[m.exponents[0]] = coef;
    return UPoly(std::move(c));
}

MPoly homogenize(const UPoly& u, const VarList& vars, int d) {
    MPoly out(vars);
    for (int i = 0; i <= u.degree(); ++i) {
        if (u.coeff(i) == 0) continue;
        out.add_term(Monomial{{i, d - i}}, u.coeff(i));
    }
    return out;
}

// Sylvester matrix determinant at formal degrees (d, e). Vanishing leading
// coefficients are kept: that is what makes the root at (1,0) count.
static Rational sylvester_resultant(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    const int d = static_cast<int>(a.size()) - 1;
    const int e = static_cast<int>(b.size()) - 1;
    const int n = d + e;
    if (n == 0) return Rational(1);
    QMatrix s(n, QVector(n, Rational(0)));
    for (int i = 0; i < e; ++i)
        for (int j = 0; j <= d; ++j) s[i][i + j] = a[j];
    for (int i = 0; i < d; ++i)
        for (int j = 0; j <= e; ++j) s[e + i][i + j] = b[j];
    return determinant(s);
}

Rational resultant_binary(const MPoly& f, const MPoly& g) {
    require_binary_form(f, "resultant");
    require_binary_form(g, "resultant");
    if (f.is_zero() || g.is_zero()) throw ValueError("resultant: zero input form");
    return sylvester_resultant(binary_coeffs(f, f.degree()), binary_coeffs(g, g.degree()));
}

Rational discriminant_binary(const MPoly& f) {
    require_binary_form(f, "discriminant");
    if (f.is_zero() || f.degree() < 2) throw ValueError("discriminant: need a nonzero form of degree >= 2");
    const int d = f.degree();
    if (d == 2) {
        const auto c = binary_coeffs(f, 2); // c[0] x^2 + c[1] xy + c[2] y^2
        return c[1] * c[1] - 4 * c[0] * c[2];
    }
    // Shear until the x^d coefficient is nonzero, then Res(F, F')/lc(F).
    MPoly g = f;
    for (int k = 0; binary_coeffs(g, d)[0] == 0; ++k) {
        if (k > 2 * d) throw ValueError("discriminant: could not normalize form"); // unreachable: <= d roots
        QMatrix shear = {{Rational(1), Rational(0)}, {Rational(k + 1), Rational(1)}};
        g = substitute_linear(f, shear);
    }
    UPoly u = dehomogenize(g);
    UPoly up = derivative(u);
    std::vector<Rational> ucs = u.coeffs();
    std::vector<Rational> upcs(up.coeffs());
    upcs.resize(d, Rational(0)); // formal degree d-1
    const Rational res = sylvester_resultant(ucs, upcs);
    return res / u.leading();
}

MPoly gcd_binary(const std::vector<MPoly>& forms) {
    if (forms.empty()) throw ValueError("gcd: no input forms");
    const VarList& vars = forms.front().vars();
    for (const MPoly& f : forms) {
        if (f.vars() != vars) throw ValueError("gcd: forms over different variable pairs");
        if (!f.is_zero()) require_binary_form(f, "gcd");
    }
    bool any = false;
    int inf_mult = 0; // multiplicity of the common root at (1,0), i.e. the y-power
    UPoly acc;
    for (const MPoly& f : forms) {
        if (f.is_zero()) continue;
        const UPoly u = dehomogenize(f);
        const int m = f.degree() - u.degree();
        if (!any) {
            any = true;
            inf_mult = m;
            acc = u;
        } else {
            inf_mult = std::min(inf_mult, m);
            acc = gcd(acc, u);
        }
    }
    if (!any) return MPoly(vars); // whole-line signal
    const int d = acc.degree() + inf_mult;
    MPoly g(vars);
    for (int i = 0; i <= acc.degree(); ++i) {
        if (acc.coeff(i) == 0) continue;
        g.add_term(Monomial{{i, d - i}}, acc.coeff(i));
    }
    const Rational lc = g.leading_coeff();
    return g * (Rational(1) / lc);
}

std::multiset<int> squarefree_structure(const MPoly& f) {
    require_binary_form(f, "squarefree structure");
    if (f.is_zero()) throw ValueError("squarefree structure of the zero form");
    std::multiset<int> out;
    const UPoly u = dehomogenize(f);
    const int inf_mult = f.degree() - u.degree();
    if (inf_mult > 0) out.insert(inf_mult);
    const auto sf = squarefree_decomposition(u);
    for (std::size_t i = 0; i < sf.size(); ++i)
        for (int k = 0; k < sf[i].degree(); ++k) out.insert(static_cast<int>(i) + 1);
    return out;
}

} // namespace trideg
