#pragma once

#include "trideg/schemes.hpp"

namespace trideg {

// A triple (P, Q, T) annihilating the trilinear form in all three partial
// senses; membership is exactly the p+q+r equations of the kernel system.
struct KernelTriple {
    ProjPoint p, q, t;
};

enum class DegeneracyStatus {
    DegenerateWithCertificate,
    DegenerateNoRationalCertificate,
    NonDegenerateProven,
    Undetermined,
};
std::string to_string(DegeneracyStatus s);

struct DegeneracyVerdict {
    DegeneracyStatus status = DegeneracyStatus::Undetermined;
    std::optional<KernelTriple> certificate;
    std::string reason;

    bool is_degenerate() const {
        return status == DegeneracyStatus::DegenerateWithCertificate ||
               status == DegeneracyStatus::DegenerateNoRationalCertificate;
    }
    bool conclusive() const { return status != DegeneracyStatus::Undetermined; }
};

using Hint = std::pair<Axis, ProjPoint>;

// True iff all p+q+r kernel equations hold exactly at (P, Q, T).
bool verify_kernel_triple(const Tensor3& a, const KernelTriple& t);

// Constructive step from a degenerate, non-bi-degenerate point of the
// scheme along the given axis: recover the unique kernel partner of the
// evaluated matrix, then solve the stacked linear system for the remaining
// point. Returns nullopt only if the stacked system has full rank, which is
// impossible under the precondition and treated as an internal
// inconsistency signal. Violated preconditions throw ValueError.
std::optional<KernelTriple> certificate_from_point(const Tensor3& a, Axis axis, const ProjPoint& pt);

// Decision procedure:
//  - hint points are diagnosed in input order; a degenerate non-bi-degenerate
//    hint yields a verified certificate (bi-degenerate hints are recorded and
//    skipped, never fatal);
//  - when some axis has extent 2, the scheme in P^1 decides completely:
//    square associated matrix (interior case) via the discriminant of its
//    determinant, otherwise via emptiness of the minor GCD locus;
//  - extent-1 axes reduce to matrix rank;
//  - otherwise the verdict is undetermined, with the hint diagnostics in the
//    reason string.
DegeneracyVerdict decide_degeneracy(const Tensor3& a, const std::vector<Hint>& hints = {});

// The 12-term quartic hyperdeterminant of a (2,2,2) tensor.
Rational hyperdet_222(const Tensor3& a);

// Discriminant of det L for a (2,q,q) tensor; zero iff the tensor is
// degenerate. For q = 2 the b^2 - 4ac convention makes it equal
// hyperdet_222 exactly.
struct SchlafliResult {
    Rational value;
    bool det_l_identically_zero = false;
};
SchlafliResult schlafli_binary(const Tensor3& a);

// Determinant of the 3x3 Gram matrix of det N for a (2,2,3) tensor; zero
// iff the hyperdeterminant vanishes.
Rational conic_discriminant_223(const Tensor3& a);

} // namespace trideg
