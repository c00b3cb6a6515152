#include "naples/components.hpp"

#include <algorithm>

namespace naples {
namespace {

std::vector<Interval> traverse_components(const ParkOutcome& outcome, const char* what) {
  if (!outcome.success()) {
    throw NotAParkingFunction(std::string(what) + ": car " +
                              std::to_string(*outcome.failed_at()) + " cannot park");
  }
  std::vector<Interval> paths;
  paths.reserve(outcome.cars().size());
  for (const auto& rec : outcome.cars()) paths.push_back(rec.traverse);
  return merge_overlapping(std::move(paths));
}

}  // namespace

std::vector<Interval> merge_overlapping(std::vector<Interval> intervals) {
  std::sort(intervals.begin(), intervals.end());
  std::vector<Interval> merged;
  for (const auto& iv : intervals) {
    if (!merged.empty() && iv.lo() <= merged.back().hi()) {
      merged.back() = Interval(merged.back().lo(), std::max(merged.back().hi(), iv.hi()));
    } else {
      merged.push_back(iv);
    }
  }
  return merged;
}

std::vector<Interval> parking_components(const ParkOutcome& outcome) {
  return traverse_components(outcome, "parking components");
}

std::vector<Interval> naples_components(const ParkOutcome& outcome) {
  return traverse_components(outcome, "Naples components");
}

std::vector<Interval> obstruction_components(const ParkOutcome& outcome, const Lot& lot) {
  auto comps = traverse_components(outcome, "obstruction components");
  const auto& block = lot.obstruction();
  if (!block) return comps;

  Vertex lo = block->lo();
  Vertex hi = block->hi();
  std::vector<Interval> out;
  for (const auto& c : comps) {
    if (c.intersects(*block)) {
      lo = std::min(lo, c.lo());
      hi = std::max(hi, c.hi());
    } else {
      out.push_back(c);
    }
  }
  out.emplace_back(lo, hi);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::size_t> component_of(std::span<const Interval> components, Vertex v) {
  auto it = std::upper_bound(components.begin(), components.end(), v,
                             [](Vertex x, const Interval& c) { return x < c.lo(); });
  if (it == components.begin()) return std::nullopt;
  --it;
  if (!it->contains(v)) return std::nullopt;
  return static_cast<std::size_t>(it - components.begin());
}

}  // namespace naples
