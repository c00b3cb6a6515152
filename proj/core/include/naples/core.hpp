#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace naples {

// Vertices and car indices are 1-based everywhere in the public API.
using Vertex = int;

// A preference sequence: car j (1-based) prefers prefs[j - 1].
using PrefSeq = std::vector<Vertex>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidPreference : public Error {
 public:
  InvalidPreference(int car, Vertex value);
  int car() const noexcept { return car_; }
  Vertex value() const noexcept { return value_; }

 private:
  int car_;
  Vertex value_;
};

class InvalidLot : public Error {
 public:
  using Error::Error;
};

class NotAParkingFunction : public Error {
 public:
  using Error::Error;
};

class NotContained : public Error {
 public:
  using Error::Error;
};

class EndpointNotComponentBoundary : public Error {
 public:
  using Error::Error;
};

class WrongTieCase : public Error {
 public:
  using Error::Error;
};

class InvalidFamilyParams : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

/// Closed vertex interval [lo, hi] with 1 <= lo <= hi.
class Interval {
 public:
  Interval(Vertex lo, Vertex hi);

  Vertex lo() const noexcept { return lo_; }
  Vertex hi() const noexcept { return hi_; }
  int length() const noexcept { return hi_ - lo_ + 1; }

  bool contains(Vertex v) const noexcept { return lo_ <= v && v <= hi_; }
  bool intersects(const Interval& other) const noexcept {
    return lo_ <= other.hi_ && other.lo_ <= hi_;
  }

  friend bool operator==(const Interval&, const Interval&) = default;
  friend auto operator<=>(const Interval&, const Interval&) = default;

 private:
  Vertex lo_;
  Vertex hi_;
};

/// A directed path 1 -> 2 -> ... -> total, optionally with one obstructed block.
class Lot {
 public:
  static Lot unobstructed(int total);
  static Lot obstructed(int total, Interval block);
  // Block [start, start + length - 1]; length 0 means no obstruction.
  static Lot with_block(int total, Vertex start, int length);

  int total() const noexcept { return total_; }
  const std::optional<Interval>& obstruction() const noexcept { return obstruction_; }
  int obstruction_length() const noexcept {
    return obstruction_ ? obstruction_->length() : 0;
  }
  int free_capacity() const noexcept { return total_ - obstruction_length(); }
  bool is_obstructed(Vertex v) const noexcept {
    return obstruction_ && obstruction_->contains(v);
  }

  friend bool operator==(const Lot&, const Lot&) = default;

 private:
  Lot(int total, std::optional<Interval> obstruction);

  int total_;
  std::optional<Interval> obstruction_;
};

enum class Mode { at, backward, forward };

const char* to_string(Mode mode) noexcept;

struct CarRecord {
  Vertex preferred;
  Vertex parked;
  Mode mode;
  Interval traverse;

  friend bool operator==(const CarRecord&, const CarRecord&) = default;
};

/// Trace of a parking run. On failure the records of the cars that did park
/// are kept and failed_at names the first car that could not.
class ParkOutcome {
 public:
  ParkOutcome(Lot lot, std::vector<CarRecord> cars, std::optional<int> failed_at);

  const Lot& lot() const noexcept { return lot_; }
  const std::vector<CarRecord>& cars() const noexcept { return cars_; }
  const CarRecord& car(int index) const { return cars_.at(static_cast<std::size_t>(index - 1)); }
  std::optional<int> failed_at() const noexcept { return failed_at_; }
  bool success() const noexcept { return !failed_at_.has_value(); }

  std::vector<Vertex> parked_spots() const;
  // Sorted occupied vertices, excluding the obstruction.
  std::vector<Vertex> occupied() const;

  friend bool operator==(const ParkOutcome&, const ParkOutcome&) = default;

 private:
  Lot lot_;
  std::vector<CarRecord> cars_;
  std::optional<int> failed_at_;
};

/// Partition of the cars into maximal runs, alternating at/backward parkers
/// (odd parts) and forward parkers (even parts).
class KDecomposition {
 public:
  struct Part {
    int start;  // first car, 1-based
    int length;
    friend bool operator==(const Part&, const Part&) = default;
  };

  KDecomposition(std::vector<Part> parts, int cars);

  const std::vector<Part>& parts() const noexcept { return parts_; }
  int size() const noexcept { return static_cast<int>(parts_.size()); }
  int cars() const noexcept { return cars_; }
  // 1-based part index.
  const Part& part(int i) const { return parts_.at(static_cast<std::size_t>(i - 1)); }
  // Number of cars in the first i parts.
  int prefix_length(int i) const;
  // b_i = first car of part i + 1, for i = 1..d-1.
  std::vector<int> boundary_cars() const;
  std::vector<int> lengths() const;

  friend bool operator==(const KDecomposition&, const KDecomposition&) = default;

 private:
  std::vector<Part> parts_;
  int cars_;
};

/// Entries in {-1, 0, +1}, one per part boundary.
class TieChangeTuple {
 public:
  explicit TieChangeTuple(std::vector<int> entries);

  const std::vector<int>& entries() const noexcept { return entries_; }
  int size() const noexcept { return static_cast<int>(entries_.size()); }
  bool empty() const noexcept { return entries_.empty(); }
  int back() const { return entries_.back(); }
  TieChangeTuple negated() const;

  friend bool operator==(const TieChangeTuple&, const TieChangeTuple&) = default;

 private:
  std::vector<int> entries_;
};

/// Checks every preference lies on the lot. Returns the inputs unchanged.
struct Validated {
  PrefSeq prefs;
  Lot lot;
};
Validated validate(PrefSeq prefs, Lot lot);
void check_prefs(std::span<const Vertex> prefs, int total);

std::string format_seq(std::span<const Vertex> prefs);

}  // namespace naples
