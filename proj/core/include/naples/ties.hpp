#pragma once

#include <span>
#include <vector>

#include "naples/core.hpp"

namespace naples {

struct PairStats {
  int ascents = 0;
  int descents = 0;
  int ties = 0;

  friend bool operator==(const PairStats&, const PairStats&) = default;
};

// Counts over adjacent car pairs (j, j + 1).
PairStats stats(std::span<const Vertex> prefs);

// b_i: first car of run i + 1 of the k-decomposition.
std::vector<int> boundary_cars(std::span<const Vertex> prefs, int n, int k);

// +1 where xi creates a tie at (b_i - 1, b_i), -1 where it destroys one.
TieChangeTuple delta_ties(std::span<const Vertex> prefs, int n, int k);

struct TComp {
  Interval span;                  // [c<, c>]
  std::vector<Interval> members;  // Naples components making up the span
};

// Naples components of the first `prefix_parts` runs that meet the Naples
// traverse path of `car` and do not lie strictly right of its preference.
TComp tcomp(std::span<const Vertex> prefs, int n, int k, int car, int prefix_parts);

// The preference that turns the last boundary pair into a tie under xi once
// psi_small has reflected the prefix. Requires the last tie change to be -1.
Vertex aim(std::span<const Vertex> prefs, int n, int k);

// Involution on B(m, n; k) negating the last tie-change entry.
PrefSeq psi_small(std::span<const Vertex> prefs, int n, int k);

// Last run of psi_small(prefs).
PrefSeq out_tail(std::span<const Vertex> prefs, int n, int k);

// Involution on B(m, n; k) negating every tie-change entry: apply psi_small,
// strip its output tail, repeat on what remains, and reassemble the tails.
PrefSeq psi_big(std::span<const Vertex> prefs, int n, int k);

}  // namespace naples
