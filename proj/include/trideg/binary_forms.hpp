#pragma once

#include <set>

#include "trideg/mpoly.hpp"
#include "trideg/upoly.hpp"

namespace trideg {

// Operations on binary forms: homogeneous polynomials in exactly two
// variables. The first variable plays the role of x, the second of y; the
// dehomogenization used throughout is t -> f(t, 1).

// True iff f has two variables and is homogeneous (zero counts as a form).
bool is_binary_form(const MPoly& f);

// Coefficient vector of f(t,1) padded to the stated degree d:
// out[i] = coefficient of x^(d-i) y^i.
std::vector<Rational> binary_coeffs(const MPoly& f, int d);

// f(t, 1) as a univariate polynomial.
UPoly dehomogenize(const MPoly& f);

// Homogenization of u to total degree d over the two given variables.
MPoly homogenize(const UPoly& u, const VarList& vars, int d);

// Sylvester resultant of two nonzero binary forms at their homogeneous
// degrees; zero iff the forms share a projective root.
Rational resultant_binary(const MPoly& f, const MPoly& g);

// Discriminant of a nonzero binary form of degree d >= 2.
// d == 2: literal b^2 - 4ac for f = a x^2 + b xy + c y^2.
// d >= 3: Res(F, F')/lc(F) on the dehomogenization F, after the smallest
// unimodular shear y -> k x + y making the x^d coefficient nonzero (the
// value is shear-invariant; only its vanishing is consumed downstream).
Rational discriminant_binary(const MPoly& f);

// Monic GCD (leading coefficient 1 in graded lex) of binary forms over one
// variable pair; its projective roots are exactly the common zero locus.
// All inputs zero returns the zero polynomial: the whole-line signal.
MPoly gcd_binary(const std::vector<MPoly>& forms);

// Multiset of multiplicities of the projective roots of f over the complex
// numbers, computed by squarefree decomposition only (no root extraction).
std::multiset<int> squarefree_structure(const MPoly& f);

} // namespace trideg
