#pragma once

#include <vector>

#include "trideg/rational.hpp"

namespace trideg {

// Dense univariate polynomial over the rationals; coeffs[i] is the
// coefficient of t^i, with no trailing zeros stored.
class UPoly {
  public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs);

    static UPoly zero() { return UPoly(); }
    static UPoly constant(const Rational& c) { return UPoly({c}); }

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    Rational coeff(int i) const;
    Rational leading() const;

    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    UPoly operator*(const Rational& k) const;
    bool operator==(const UPoly& o) const { return c_ == o.c_; }

    Rational operator()(const Rational& x) const;

  private:
    std::vector<Rational> c_;
    void trim();
};

UPoly derivative(const UPoly& p);

// Euclidean division: p = q*d + r with deg r < deg d. Throws on zero divisor.
struct UDivision {
    UPoly quotient;
    UPoly remainder;
};
UDivision divmod(const UPoly& p, const UPoly& d);

// Monic GCD; gcd(0, 0) = 0.
UPoly gcd(UPoly a, UPoly b);

// Yun squarefree decomposition: p ~ prod_i out[i-1]^i up to a constant; each
// factor monic and squarefree, pairwise coprime. Zero input is rejected.
std::vector<UPoly> squarefree_decomposition(const UPoly& p);

// All rational roots with multiplicities, sorted ascending by root value.
std::vector<std::pair<Rational, int>> rational_roots(const UPoly& p);

} // namespace trideg
