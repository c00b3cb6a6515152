#pragma once

#include <span>

#include "naples/core.hpp"

namespace naples {

// Forward-only parking on an unobstructed path of n vertices.
ParkOutcome park_classical(std::span<const Vertex> prefs, int n);

// k-Naples rule: a blocked car first checks a-1, a-2, ..., a-k (clipped to
// [1, n]) nearest-first, and only then drives forward. The traverse interval
// of a forward parker starts at max(1, a - k) since the backward checks are
// part of its path.
ParkOutcome park_naples(std::span<const Vertex> prefs, int n, int k);

// Contained: park_naples succeeds and no car with preference a <= k ever
// finds all of [1, a] occupied on arrival.
bool is_contained(std::span<const Vertex> prefs, int n, int k);

// Forward rule where the lot's obstructed block is permanently occupied.
// Preferences inside the block are allowed.
ParkOutcome park_obstructed(std::span<const Vertex> prefs, const Lot& lot);

bool parks_classically(std::span<const Vertex> prefs, int n);
bool parks_naples(std::span<const Vertex> prefs, int n, int k);
bool parks_obstructed(std::span<const Vertex> prefs, const Lot& lot);

}  // namespace naples
