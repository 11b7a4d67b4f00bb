#include "trideg/classify.hpp"

#include <algorithm>
#include <sstream>

#include "trideg/errors.hpp"

namespace trideg {

namespace {

void require_format(const Tensor3& a, int p, int q, int r_min, int r_max, const char* who) {
    if (a.is_zero()) throw ZeroTensorError();
    if (a.p() != p || a.q() != q || a.r() < r_min || (r_max > 0 && a.r() > r_max)) {
        std::ostringstream os;
        os << who << ": unsupported format (" << a.p() << "," << a.q() << "," << a.r() << ")";
        throw FormatError(os.str());
    }
}

AnalysisReport base_report(const Tensor3& a) {
    AnalysisReport rep;
    rep.p = a.p();
    rep.q = a.q();
    rep.r = a.r();
    rep.fess = essential_format(a);
    rep.concise = rep.fess == EssentialFormat{a.p(), a.q(), a.r()};
    return rep;
}

// Fills the degeneracy verdict and cross-checks it against the branch
// conclusions. A violation here would be a bug, never bad input: the branch
// logic and the verdict compute the same facts along independent routes.
void finish(AnalysisReport& rep, const Tensor3& a, std::optional<EssentialFormat> branch_fess) {
    rep.degenerate = decide_degeneracy(a);
    if (rep.det_zero && rep.degenerate.conclusive() &&
        *rep.det_zero != rep.degenerate.is_degenerate())
        throw std::logic_error("internal: branch Det-vanishing disagrees with the degeneracy verdict");
    if (branch_fess && !(rep.fess == *branch_fess))
        throw std::logic_error("internal: branch essential format disagrees with the flattening ranks");
}

// Root-pattern alphabet for a binary quadratic: identically zero, a double
// root, or two distinct roots.
enum class QuadRoots { Zero, Double, TwoDistinct };
QuadRoots quad_roots(const MPoly& d) {
    if (d.is_zero()) return QuadRoots::Zero;
    const auto s = squarefree_structure(d);
    return s.count(2) == 1 ? QuadRoots::Double : QuadRoots::TwoDistinct;
}

} // namespace

AnalysisReport classify_222(const Tensor3& a) {
    require_format(a, 2, 2, 2, 2, "classify_222");
    AnalysisReport rep = base_report(a);
    const QuadRoots rl = quad_roots(det(assoc_matrix(a, Axis::X)));
    if (rl == QuadRoots::TwoDistinct) {
        rep.branch_trace.push_back("step1: det L has two distinct roots");
        rep.det_zero = false;
        rep.tensor_rank = 2;
        rep.canonical_type = "IV";
        finish(rep, a, EssentialFormat{2, 2, 2});
        return rep;
    }
    rep.branch_trace.push_back(rl == QuadRoots::Zero ? "step1: det L is identically zero"
                                                     : "step1: det L has a double root");
    rep.det_zero = true;
    const QuadRoots rm = quad_roots(det(assoc_matrix(a, Axis::Y)));
    const QuadRoots rn = quad_roots(det(assoc_matrix(a, Axis::Z)));
    const int zeros = (rl == QuadRoots::Zero) + (rm == QuadRoots::Zero) + (rn == QuadRoots::Zero);
    const int doubles = (rl == QuadRoots::Double) + (rm == QuadRoots::Double) + (rn == QuadRoots::Double);
    std::optional<EssentialFormat> branch_fess;
    if (doubles == 3) {
        rep.branch_trace.push_back("step2: det L, det M, det N all have a double root");
        rep.tensor_rank = 3;
        rep.canonical_type = "III";
        branch_fess = EssentialFormat{2, 2, 2};
    } else if (zeros == 2 && doubles == 1) {
        rep.branch_trace.push_back("step2: two determinants vanish, the third has a double root");
        rep.tensor_rank = 2;
        rep.canonical_type = "II";
        branch_fess = rl == QuadRoots::Double   ? EssentialFormat{1, 2, 2}
                      : rm == QuadRoots::Double ? EssentialFormat{2, 1, 2}
                                                : EssentialFormat{2, 2, 1};
    } else if (zeros == 3) {
        rep.branch_trace.push_back("step2: det L, det M, det N all vanish");
        rep.tensor_rank = 1;
        rep.canonical_type = "I";
        branch_fess = EssentialFormat{1, 1, 1};
    } else {
        throw std::logic_error("internal: impossible root pattern for a (2,2,2) tensor");
    }
    finish(rep, a, branch_fess);
    return rep;
}

namespace {

// The degenerate steps shared by the (2,2,3) and (2,2,r>=4) procedures:
// branch on the Gram rank of det N (<= 2 here), then on the point structure
// of the schemes of L and M in P^1.
void degenerate_steps(AnalysisReport& rep, const Tensor3& a, const QuadricClass& nq,
                      std::optional<EssentialFormat>& branch_fess) {
    const P1Scheme lpts = points_on_p1(scheme_of(a, Axis::X));
    auto trace = [&](int step, const std::string& what) {
        rep.branch_trace.push_back("step" + std::to_string(step) + ": " + what);
    };
    const bool alg3 = a.r() >= 4; // steps are numbered one later there
    const int s2 = alg3 ? 3 : 2, s3 = alg3 ? 4 : 3, s4 = alg3 ? 5 : 4;
    switch (nq.gram_rank) {
    case 2:
        if (lpts.is_single_simple_point()) {
            trace(s2, "det N is two distinct hyperplanes; the L scheme is a simple point");
            rep.tensor_rank = 3;
            rep.canonical_type = "Va|Vb";
            branch_fess = EssentialFormat{2, 2, 3};
        } else if (lpts.is_two_simple_points()) {
            trace(s2, "det N is two distinct hyperplanes; the L scheme is two simple points");
            rep.tensor_rank = 2;
            rep.canonical_type = "IV";
            branch_fess = EssentialFormat{2, 2, 2};
        } else {
            throw std::logic_error("internal: rank-2 det N with an impossible L scheme");
        }
        return;
    case 1:
        if (lpts.is_double_point()) {
            trace(s3, "det N is a double hyperplane; the L scheme is a double point");
            rep.tensor_rank = 3;
            rep.canonical_type = "III";
            branch_fess = EssentialFormat{2, 2, 2};
        } else if (lpts.whole_line) {
            trace(s3, "det N is a double hyperplane; the L scheme is the whole line");
            rep.tensor_rank = 2;
            rep.canonical_type = "IIa";
            branch_fess = EssentialFormat{2, 2, 1};
        } else {
            throw std::logic_error("internal: rank-1 det N with an impossible L scheme");
        }
        return;
    case 0: {
        const P1Scheme mpts = points_on_p1(scheme_of(a, Axis::Y));
        if (lpts.is_double_point() && mpts.whole_line) {
            trace(s4, "det N vanishes; the L scheme is a double point, the M scheme the whole line");
            rep.tensor_rank = 2;
            rep.canonical_type = "IIc";
            branch_fess = EssentialFormat{1, 2, 2};
        } else if (mpts.is_double_point() && lpts.whole_line) {
            trace(s4, "det N vanishes; the M scheme is a double point, the L scheme the whole line");
            rep.tensor_rank = 2;
            rep.canonical_type = "IIb";
            branch_fess = EssentialFormat{2, 1, 2};
        } else if (lpts.whole_line && mpts.whole_line) {
            trace(s4, "det N vanishes; the L and M schemes are the whole line");
            rep.tensor_rank = 1;
            rep.canonical_type = "I";
            branch_fess = EssentialFormat{1, 1, 1};
        } else {
            throw std::logic_error("internal: vanishing det N with an impossible L/M scheme pair");
        }
        return;
    }
    default:
        throw std::logic_error("internal: degenerate steps reached with quadric rank > 2");
    }
}

} // namespace

AnalysisReport classify_223(const Tensor3& a) {
    require_format(a, 2, 2, 3, 3, "classify_223");
    AnalysisReport rep = base_report(a);
    const QuadricClass nq = classify_detn_quadric(a);
    if (nq.kind() == QuadricClass::Kind::SmoothConic) {
        rep.branch_trace.push_back("step1: det N is a smooth conic");
        rep.det_zero = false;
        rep.tensor_rank = 3;
        rep.canonical_type = "VI";
        finish(rep, a, EssentialFormat{2, 2, 3});
        return rep;
    }
    rep.branch_trace.push_back("step1: det N is a singular conic or zero (" + nq.label() + ")");
    rep.det_zero = true;
    std::optional<EssentialFormat> branch_fess;
    degenerate_steps(rep, a, nq, branch_fess);
    finish(rep, a, branch_fess);
    return rep;
}

AnalysisReport classify_22r(const Tensor3& a) {
    require_format(a, 2, 2, 4, 0, "classify_22r");
    AnalysisReport rep = base_report(a);
    const QuadricClass nq = classify_detn_quadric(a);
    if (nq.gram_rank == 4) {
        rep.branch_trace.push_back(a.r() == 4 ? "step1: det N is a smooth quadric"
                                              : "step1: det N is a cone over a smooth quadric in P^3");
        rep.tensor_rank = 4;
        rep.canonical_type = "concise-(2,2,4)";
        finish(rep, a, EssentialFormat{2, 2, 4});
        return rep;
    }
    if (nq.gram_rank == 3) {
        rep.branch_trace.push_back("step2: det N is a cone over a smooth conic");
        rep.tensor_rank = 3;
        rep.canonical_type = "VI";
        finish(rep, a, EssentialFormat{2, 2, 3});
        return rep;
    }
    std::optional<EssentialFormat> branch_fess;
    degenerate_steps(rep, a, nq, branch_fess);
    finish(rep, a, branch_fess);
    return rep;
}

AnalysisReport classify(const Tensor3& a, const std::vector<Hint>& hints) {
    if (a.is_zero()) throw ZeroTensorError();
    // Stable sort of the axes by extent; order[m] is the original axis at
    // working slot m.
    std::array<Axis, 3> order{Axis::X, Axis::Y, Axis::Z};
    std::stable_sort(order.begin(), order.end(),
                     [&](Axis l, Axis r) { return a.extent(l) < a.extent(r); });
    const Tensor3 w = a.permuted(order);

    AnalysisReport rep;
    if (w.p() == 2 && w.q() == 2) {
        rep = w.r() == 2 ? classify_222(w) : (w.r() == 3 ? classify_223(w) : classify_22r(w));
    } else {
        rep = base_report(w);
        rep.branch_trace.push_back("partial report: no rank algorithm for this format");
    }
    rep.axis_order = order;

    // Degeneracy is invariant under axis permutation; decide on the original
    // tensor so hints and certificate components stay in the caller's axes.
    const DegeneracyVerdict verdict = decide_degeneracy(a, hints);
    if (rep.det_zero && verdict.conclusive() && *rep.det_zero != verdict.is_degenerate())
        throw std::logic_error("internal: branch Det-vanishing disagrees with the degeneracy verdict");
    rep.degenerate = verdict;
    if (!rep.det_zero && w.r() <= w.p() + w.q() - 1 && verdict.conclusive())
        rep.det_zero = verdict.is_degenerate();
    if (w.r() > w.p() + w.q() - 1) rep.det_zero.reset();
    return rep;
}

} // namespace trideg
