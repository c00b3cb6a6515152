#pragma once

#include <span>

#include "naples/core.hpp"

namespace naples {

struct LotSeq {
  PrefSeq prefs;
  Lot lot;

  friend bool operator==(const LotSeq&, const LotSeq&) = default;
};

// Parking reflection on PF(m, n). Each parking component [i, i + j] is moved
// to its mirror [n - i - j + 1, n - i + 1]; a preference keeps its offset
// from the left end of its component.
PrefSeq phi(std::span<const Vertex> prefs, int n);

// Reflection of the Naples components lying inside [a, b] onto [a, b]. The
// input must be contained; a and b must be a left and a right endpoint of
// Naples components. Preferences outside [a, b] are left alone.
PrefSeq phi_restricted(std::span<const Vertex> prefs, int n, int k, Vertex a, Vertex b);

// Reflection of obstruction components on the full lot; the obstructed block
// travels with its component.
LotSeq phi_bar(std::span<const Vertex> prefs, const Lot& lot);

// Shift every preference right by k onto a lot of n + k vertices whose first
// k vertices are obstructed.
LotSeq iota(std::span<const Vertex> prefs, int n, int k);

}  // namespace naples
