#include "naples/core.hpp"

#include <algorithm>
#include <sstream>

namespace naples {

InvalidPreference::InvalidPreference(int car, Vertex value)
    : Error("car " + std::to_string(car) + " has out-of-range preference " +
            std::to_string(value)),
      car_(car),
      value_(value) {}

Interval::Interval(Vertex lo, Vertex hi) : lo_(lo), hi_(hi) {
  if (lo < 1 || lo > hi) {
    throw std::invalid_argument("invalid interval [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "]");
  }
}

Lot::Lot(int total, std::optional<Interval> obstruction)
    : total_(total), obstruction_(obstruction) {
  if (total < 0) throw InvalidLot("lot size must be non-negative");
  if (obstruction_ && obstruction_->hi() > total_) {
    throw InvalidLot("obstruction [" + std::to_string(obstruction_->lo()) + ", " +
                     std::to_string(obstruction_->hi()) + "] exceeds lot of " +
                     std::to_string(total_) + " vertices");
  }
}

Lot Lot::unobstructed(int total) { return Lot(total, std::nullopt); }

Lot Lot::obstructed(int total, Interval block) { return Lot(total, block); }

Lot Lot::with_block(int total, Vertex start, int length) {
  if (length < 0) throw InvalidLot("obstruction length must be non-negative");
  if (length == 0) return unobstructed(total);
  if (start < 1) throw InvalidLot("obstruction must start at a vertex >= 1");
  return Lot(total, Interval(start, start + length - 1));
}

const char* to_string(Mode mode) noexcept {
  switch (mode) {
    case Mode::at:
      return "at";
    case Mode::backward:
      return "backward";
    case Mode::forward:
      return "forward";
  }
  return "?";
}

ParkOutcome::ParkOutcome(Lot lot, std::vector<CarRecord> cars, std::optional<int> failed_at)
    : lot_(std::move(lot)), cars_(std::move(cars)), failed_at_(failed_at) {
  if (failed_at_ && *failed_at_ != static_cast<int>(cars_.size()) + 1) {
    throw std::logic_error("failed_at must follow the last parked car");
  }
  std::vector<bool> taken(static_cast<std::size_t>(lot_.total()) + 1, false);
  for (const auto& rec : cars_) {
    if (rec.parked < 1 || rec.parked > lot_.total() || lot_.is_obstructed(rec.parked) ||
        taken[static_cast<std::size_t>(rec.parked)]) {
      throw std::logic_error("parked spots must be distinct free vertices");
    }
    taken[static_cast<std::size_t>(rec.parked)] = true;
    const bool mode_ok = (rec.mode == Mode::at && rec.parked == rec.preferred) ||
                         (rec.mode == Mode::backward && rec.parked < rec.preferred) ||
                         (rec.mode == Mode::forward && rec.parked > rec.preferred);
    if (!mode_ok) throw std::logic_error("car mode disagrees with its spot");
    if (rec.traverse.lo() > std::min(rec.preferred, rec.parked) ||
        rec.traverse.hi() != std::max(rec.preferred, rec.parked)) {
      throw std::logic_error("traverse path must end at the farther of preference and spot");
    }
  }
}

std::vector<Vertex> ParkOutcome::parked_spots() const {
  std::vector<Vertex> spots;
  spots.reserve(cars_.size());
  for (const auto& rec : cars_) spots.push_back(rec.parked);
  return spots;
}

std::vector<Vertex> ParkOutcome::occupied() const {
  auto spots = parked_spots();
  std::sort(spots.begin(), spots.end());
  return spots;
}

KDecomposition::KDecomposition(std::vector<Part> parts, int cars)
    : parts_(std::move(parts)), cars_(cars) {
  int next = 1;
  for (const auto& p : parts_) {
    if (p.start != next || p.length < 1) {
      throw std::logic_error("k-decomposition parts must tile the cars contiguously");
    }
    next += p.length;
  }
  if (next != cars_ + 1) throw std::logic_error("k-decomposition does not cover every car");
}

int KDecomposition::prefix_length(int i) const {
  if (i < 0 || i > size()) throw std::out_of_range("part index out of range");
  if (i == 0) return 0;
  const auto& p = part(i);
  return p.start + p.length - 1;
}

std::vector<int> KDecomposition::boundary_cars() const {
  std::vector<int> b;
  for (std::size_t i = 1; i < parts_.size(); ++i) b.push_back(parts_[i].start);
  return b;
}

std::vector<int> KDecomposition::lengths() const {
  std::vector<int> out;
  out.reserve(parts_.size());
  for (const auto& p : parts_) out.push_back(p.length);
  return out;
}

TieChangeTuple::TieChangeTuple(std::vector<int> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const int e = entries_[i];
    if (e < -1 || e > 1) throw std::logic_error("tie-change entries must be -1, 0 or +1");
    // Position i + 1 is even: a forward run followed by an at/backward run never ties.
    if ((i + 1) % 2 == 0 && e != 0) {
      throw std::logic_error("tie-change entry at an even boundary must be 0");
    }
  }
}

TieChangeTuple TieChangeTuple::negated() const {
  std::vector<int> out(entries_.size());
  std::transform(entries_.begin(), entries_.end(), out.begin(), [](int e) { return -e; });
  return TieChangeTuple(std::move(out));
}

void check_prefs(std::span<const Vertex> prefs, int total) {
  for (std::size_t j = 0; j < prefs.size(); ++j) {
    if (prefs[j] < 1 || prefs[j] > total) {
      throw InvalidPreference(static_cast<int>(j) + 1, prefs[j]);
    }
  }
}

Validated validate(PrefSeq prefs, Lot lot) {
  check_prefs(prefs, lot.total());
  return {std::move(prefs), std::move(lot)};
}

std::string format_seq(std::span<const Vertex> prefs) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < prefs.size(); ++i) {
    if (i) os << ',';
    os << prefs[i];
  }
  os << ')';
  return os.str();
}

}  // namespace naples
