#include "naples/reflections.hpp"

#include <algorithm>

#include "naples/components.hpp"
#include "naples/rules.hpp"

namespace naples {
namespace {

// Maps every preference that lies in one of `components` onto the matching
// reflected component inside [lo, hi]; other preferences are kept.
PrefSeq translate_into_mirror(std::span<const Vertex> prefs,
                              std::span<const Interval> components, Vertex lo, Vertex hi) {
  PrefSeq out(prefs.begin(), prefs.end());
  for (auto& p : out) {
    const auto idx = component_of(components, p);
    if (!idx) continue;
    const Interval& c = components[*idx];
    const Vertex mirror_lo = lo + hi - c.hi();
    p = mirror_lo + (p - c.lo());
  }
  return out;
}

}  // namespace

PrefSeq phi(std::span<const Vertex> prefs, int n) {
  const auto outcome = park_classical(prefs, n);
  if (!outcome.success()) {
    throw NotAParkingFunction("phi: " + format_seq(prefs) + " is not a parking function on " +
                              std::to_string(n) + " vertices");
  }
  const auto comps = parking_components(outcome);
  return translate_into_mirror(prefs, comps, 1, n);
}

PrefSeq phi_restricted(std::span<const Vertex> prefs, int n, int k, Vertex a, Vertex b) {
  if (!is_contained(prefs, n, k)) {
    throw NotContained("phi_restricted: " + format_seq(prefs) + " is not contained");
  }
  const auto comps = naples_components(park_naples(prefs, n, k));
  const bool left_ok = std::any_of(comps.begin(), comps.end(),
                                   [a](const Interval& c) { return c.lo() == a; });
  const bool right_ok = std::any_of(comps.begin(), comps.end(),
                                    [b](const Interval& c) { return c.hi() == b; });
  if (!left_ok || !right_ok || a > b) {
    throw EndpointNotComponentBoundary("phi_restricted: [" + std::to_string(a) + ", " +
                                       std::to_string(b) +
                                       "] is not bounded by Naples component endpoints");
  }
  std::vector<Interval> inside;
  for (const auto& c : comps) {
    if (a <= c.lo() && c.hi() <= b) inside.push_back(c);
  }
  auto out = translate_into_mirror(prefs, inside, a, b);
  if (!is_contained(out, n, k)) {
    throw std::logic_error("phi_restricted left the contained family for " + format_seq(prefs));
  }
  return out;
}

LotSeq phi_bar(std::span<const Vertex> prefs, const Lot& lot) {
  const auto outcome = park_obstructed(prefs, lot);
  if (!outcome.success()) {
    throw NotAParkingFunction("phi_bar: " + format_seq(prefs) + " does not park");
  }
  const auto comps = obstruction_components(outcome, lot);
  const int total = lot.total();
  auto out = translate_into_mirror(prefs, comps, 1, total);

  const auto& block = lot.obstruction();
  if (!block) return {std::move(out), lot};
  const auto idx = component_of(comps, block->lo());
  const Interval& home = comps[*idx];
  const Vertex start = (total + 1 - home.hi()) + (block->lo() - home.lo());
  return {std::move(out), Lot::with_block(total, start, block->length())};
}

LotSeq iota(std::span<const Vertex> prefs, int n, int k) {
  if (k < 0) throw std::invalid_argument("iota: shift must be non-negative");
  if (!parks_classically(prefs, n)) {
    throw NotAParkingFunction("iota: " + format_seq(prefs) + " is not a parking function");
  }
  PrefSeq out(prefs.begin(), prefs.end());
  for (auto& p : out) p += k;
  return {std::move(out), Lot::with_block(n + k, 1, k)};
}

}  // namespace naples
