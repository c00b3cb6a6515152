#pragma once

#include <span>
#include <vector>

#include "naples/core.hpp"
#include "naples/reflections.hpp"

namespace naples {

/// Splits a k-Naples parking function into maximal runs of at/backward
/// parkers and forward parkers. The first car always parks at its preference,
/// so the first run is an at/backward run.
KDecomposition k_decompose(std::span<const Vertex> prefs, int n, int k);

/// Bijection from contained k-Naples parking functions B(m, n; k) onto
/// classical PF(m, n).
///
/// Built one run at a time: at/backward runs contribute n + 1 - p, forward
/// runs contribute p - k, and before each new run the sequence built so far
/// is passed through phi. Throws NotContained when the input is not in B.
PrefSeq xi(std::span<const Vertex> prefs, int n, int k);

/// Every intermediate stage of xi; the last entry equals xi(prefs, n, k).
std::vector<PrefSeq> xi_stages(std::span<const Vertex> prefs, int n, int k);

/// Inverse of xi on PF(m, n).
///
/// Repeatedly peels the maximal suffix of cars whose classical traverse
/// length (spot - preference) is on the same side of k as the last car,
/// maps it back (n + 1 - p for length <= k, p + k otherwise) and reflects the
/// remaining prefix with phi.
PrefSeq xi_inverse(std::span<const Vertex> prefs, int n, int k);

/// Injection of PF(m, n; k) into the left-obstructed functions
/// LPF(m, n + k; k). Equals iota(xi(f), k) on contained inputs.
LotSeq xi_bar(std::span<const Vertex> prefs, int n, int k);

/// Stages of xi_bar for a non-contained input, followed by the final value.
/// For a contained input this is the single entry iota(xi(f), k).
std::vector<LotSeq> xi_bar_stages(std::span<const Vertex> prefs, int n, int k);

}  // namespace naples
