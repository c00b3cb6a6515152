#pragma once

#include <optional>
#include <span>
#include <vector>

#include "naples/core.hpp"

namespace naples {

// Two traverse intervals belong to the same component when they share a
// vertex; merely adjacent intervals stay apart.
std::vector<Interval> merge_overlapping(std::vector<Interval> intervals);

// Components of the union of traverse paths of a successful classical or
// obstructed outcome. The obstruction block is not merged in here.
std::vector<Interval> parking_components(const ParkOutcome& outcome);

// Same construction over Naples traverse paths, which include the vertices a
// car checked while backing up.
std::vector<Interval> naples_components(const ParkOutcome& outcome);

// Parking components away from the obstruction, plus the obstruction block
// merged with every component that meets it.
std::vector<Interval> obstruction_components(const ParkOutcome& outcome, const Lot& lot);

// Index into a sorted component list of the component containing v.
std::optional<std::size_t> component_of(std::span<const Interval> components, Vertex v);

}  // namespace naples
