#pragma once

#include "trideg/degeneracy.hpp"

namespace trideg {

// Outcome of the full analysis: degeneracy, conciseness, essential format,
// tensor rank and canonical type where the format supports them.
struct AnalysisReport {
    int p = 0, q = 0, r = 0;            // working format, axes sorted so p <= q <= r
    std::array<Axis, 3> axis_order{Axis::X, Axis::Y, Axis::Z}; // original axis at each working slot

    std::optional<bool> det_zero;       // defined when r <= p+q-1 and the verdict is conclusive
    DegeneracyVerdict degenerate;
    bool concise = false;
    EssentialFormat fess;               // aligned to the working format
    std::optional<int> tensor_rank;     // present exactly for (2,2,r) working formats
    std::optional<std::string> canonical_type;
    std::vector<std::string> branch_trace;
};

// Branch structure on the root pattern of det L, then det M and det N.
AnalysisReport classify_222(const Tensor3& a);

// Branch structure on the conic class of det N, then minors of L (and of M
// in the last step).
AnalysisReport classify_223(const Tensor3& a);

// Branch structure on the quadric class of det N and on the schemes in P^1,
// for r >= 4.
AnalysisReport classify_22r(const Tensor3& a);

// Dispatcher: permutes axes so p <= q <= r (recorded in the report),
// dispatches to the format-specific routine when the two smallest extents
// are 2, and otherwise returns a partial report (essential format,
// conciseness, degeneracy verdict; no tensor rank). Hints apply to the
// original axes.
AnalysisReport classify(const Tensor3& a, const std::vector<Hint>& hints = {});

} // namespace trideg
