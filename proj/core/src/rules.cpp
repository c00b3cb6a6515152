#include "naples/rules.hpp"

#include <algorithm>
#include <optional>

namespace naples {
namespace {

class Occupancy {
 public:
  explicit Occupancy(const Lot& lot) : taken_(static_cast<std::size_t>(lot.total()) + 2, false) {
    if (const auto& block = lot.obstruction()) {
      for (Vertex v = block->lo(); v <= block->hi(); ++v) mark(v);
    }
  }

  bool free(Vertex v) const { return !taken_[static_cast<std::size_t>(v)]; }
  void mark(Vertex v) { taken_[static_cast<std::size_t>(v)] = true; }

  std::optional<Vertex> first_free_after(Vertex a, int total) const {
    for (Vertex v = a + 1; v <= total; ++v) {
      if (free(v)) return v;
    }
    return std::nullopt;
  }

  // Every vertex of [1, a] is taken.
  bool prefix_full(Vertex a) const {
    for (Vertex v = 1; v <= a; ++v) {
      if (free(v)) return false;
    }
    return true;
  }

 private:
  std::vector<bool> taken_;
};

// Shared driver for the forward-only rules.
ParkOutcome park_forward(std::span<const Vertex> prefs, const Lot& lot) {
  check_prefs(prefs, lot.total());
  Occupancy occ(lot);
  std::vector<CarRecord> cars;
  cars.reserve(prefs.size());
  for (std::size_t j = 0; j < prefs.size(); ++j) {
    const Vertex a = prefs[j];
    if (occ.free(a)) {
      occ.mark(a);
      cars.push_back({a, a, Mode::at, Interval(a, a)});
      continue;
    }
    const auto spot = occ.first_free_after(a, lot.total());
    if (!spot) return ParkOutcome(lot, std::move(cars), static_cast<int>(j) + 1);
    occ.mark(*spot);
    cars.push_back({a, *spot, Mode::forward, Interval(a, *spot)});
  }
  return ParkOutcome(lot, std::move(cars), std::nullopt);
}

struct NaplesRun {
  ParkOutcome outcome;
  bool contained;
};

NaplesRun run_naples(std::span<const Vertex> prefs, int n, int k) {
  if (k < 0) throw std::invalid_argument("backup limit k must be non-negative");
  const Lot lot = Lot::unobstructed(n);
  check_prefs(prefs, n);
  Occupancy occ(lot);
  bool contained = true;
  std::vector<CarRecord> cars;
  cars.reserve(prefs.size());
  for (std::size_t j = 0; j < prefs.size(); ++j) {
    const Vertex a = prefs[j];
    if (a <= k && occ.prefix_full(a)) contained = false;
    if (occ.free(a)) {
      occ.mark(a);
      cars.push_back({a, a, Mode::at, Interval(a, a)});
      continue;
    }
    const Vertex lowest = std::max(1, a - k);
    std::optional<Vertex> back;
    for (Vertex v = a - 1; v >= lowest; --v) {
      if (occ.free(v)) {
        back = v;
        break;
      }
    }
    if (back) {
      occ.mark(*back);
      cars.push_back({a, *back, Mode::backward, Interval(*back, a)});
      continue;
    }
    const auto spot = occ.first_free_after(a, n);
    if (!spot) {
      return {ParkOutcome(lot, std::move(cars), static_cast<int>(j) + 1), false};
    }
    occ.mark(*spot);
    cars.push_back({a, *spot, Mode::forward, Interval(lowest, *spot)});
  }
  return {ParkOutcome(lot, std::move(cars), std::nullopt), contained};
}

}  // namespace

ParkOutcome park_classical(std::span<const Vertex> prefs, int n) {
  return park_forward(prefs, Lot::unobstructed(n));
}

ParkOutcome park_naples(std::span<const Vertex> prefs, int n, int k) {
  return run_naples(prefs, n, k).outcome;
}

bool is_contained(std::span<const Vertex> prefs, int n, int k) {
  const auto run = run_naples(prefs, n, k);
  return run.outcome.success() && run.contained;
}

ParkOutcome park_obstructed(std::span<const Vertex> prefs, const Lot& lot) {
  return park_forward(prefs, lot);
}

bool parks_classically(std::span<const Vertex> prefs, int n) {
  return park_classical(prefs, n).success();
}

bool parks_naples(std::span<const Vertex> prefs, int n, int k) {
  return park_naples(prefs, n, k).success();
}

bool parks_obstructed(std::span<const Vertex> prefs, const Lot& lot) {
  return park_obstructed(prefs, lot).success();
}

}  // namespace naples
