#pragma once

#include <map>
#include <string>
#include <vector>

#include "trideg/linalg.hpp"
#include "trideg/rational.hpp"

namespace trideg {

using VarList = std::vector<std::string>;

// "x" with count 3 gives {"x1","x2","x3"}.
VarList make_vars(const std::string& stem, int count);

// Exponent vector over the ambient variable set.
struct Monomial {
    std::vector<int> exponents;

    int total_degree() const;
    bool operator==(const Monomial& o) const { return exponents == o.exponents; }
};

// Graded lexicographic, descending: higher total degree first, then lex with
// earlier variables weighing more. Map iteration order == print order.
struct GrlexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate polynomial over the rationals with a fixed, ordered
// variable list. No zero coefficients are stored.
class MPoly {
  public:
    using TermMap = std::map<Monomial, Rational, GrlexDesc>;

    MPoly() = default;
    explicit MPoly(VarList vars) : vars_(std::move(vars)) {}

    static MPoly constant(VarList vars, const Rational& c);
    static MPoly variable(VarList vars, int index); // 0-based

    const VarList& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const; // total degree; -1 for the zero polynomial
    bool is_homogeneous() const;
    Rational coeff(const Monomial& m) const;
    Rational leading_coeff() const; // 0 for the zero polynomial

    void add_term(const Monomial& m, const Rational& c);

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator*(const Rational& c) const;
    bool operator==(const MPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

    std::string str() const;

  private:
    VarList vars_;
    TermMap terms_;
    void check_same_vars(const MPoly& o) const;
};

// Exact value of f at the point; throws DimensionError on length mismatch.
Rational eval(const MPoly& f, const QVector& point);

// Formal partial derivative with respect to the variable at var_index.
MPoly partial(const MPoly& f, int var_index);

// Substitutes variable i by sum_j c[i][j] * variable_j (same ambient list);
// c must be square of size vars. Used for coordinate-change invariance.
MPoly substitute_linear(const MPoly& f, const QMatrix& c);

// Parses "2*x1^3 - x2*x3 + 1/2" against the given variable list.
MPoly parse_mpoly(const std::string& text, const VarList& vars);

} // namespace trideg
