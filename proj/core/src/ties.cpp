#include "naples/ties.hpp"

#include <algorithm>

#include "naples/bijection.hpp"
#include "naples/components.hpp"
#include "naples/reflections.hpp"
#include "naples/rules.hpp"

namespace naples {
namespace {

void require_contained(std::span<const Vertex> prefs, int n, int k, const char* what) {
  if (!is_contained(prefs, n, k)) {
    throw NotContained(std::string(what) + ": " + format_seq(prefs) +
                       " is not a contained " + std::to_string(k) +
                       "-Naples parking function");
  }
}

TieChangeTuple tie_changes(std::span<const Vertex> prefs, std::span<const Vertex> image,
                           const std::vector<int>& boundaries) {
  std::vector<int> e;
  e.reserve(boundaries.size());
  for (const int b : boundaries) {
    const auto i = static_cast<std::size_t>(b - 1);
    const bool tie_before = prefs[i - 1] == prefs[i];
    const bool tie_after = image[i - 1] == image[i];
    e.push_back(tie_after == tie_before ? 0 : (tie_after ? 1 : -1));
  }
  return TieChangeTuple(std::move(e));
}

// Everything psi_small needs about the last boundary of a contained input.
struct LastBoundary {
  KDecomposition dec;
  int d;
  int e = 0;
  int b = 0;                 // b_{d-1}
  PrefSeq reflected_prefix;  // Phi^{b<, b>}(f |' d-1)
  PrefSeq image;             // xi(f)
};

LastBoundary inspect_last_boundary(std::span<const Vertex> prefs, int n, int k) {
  require_contained(prefs, n, k, "psi");
  LastBoundary lb{k_decompose(prefs, n, k), 0};
  lb.d = lb.dec.size();
  if (lb.d < 2) return lb;

  lb.image = xi(prefs, n, k);
  const auto boundaries = lb.dec.boundary_cars();
  lb.e = tie_changes(prefs, lb.image, boundaries).back();
  lb.b = boundaries.back();
  if (lb.e == 0) return lb;

  const auto span = tcomp(prefs, n, k, lb.b, lb.d - 1).span;
  const auto prefix = prefs.first(static_cast<std::size_t>(lb.b - 1));
  lb.reflected_prefix = phi_restricted(prefix, n, k, span.lo(), span.hi());
  return lb;
}

Vertex aim_value(const LastBoundary& lb) {
  const auto i = static_cast<std::size_t>(lb.b - 1);
  return lb.reflected_prefix[i - 1] + (lb.image[i - 1] - lb.image[i]);
}

}  // namespace

PairStats stats(std::span<const Vertex> prefs) {
  PairStats s;
  for (std::size_t j = 1; j < prefs.size(); ++j) {
    if (prefs[j - 1] < prefs[j]) {
      ++s.ascents;
    } else if (prefs[j - 1] > prefs[j]) {
      ++s.descents;
    } else {
      ++s.ties;
    }
  }
  return s;
}

std::vector<int> boundary_cars(std::span<const Vertex> prefs, int n, int k) {
  return k_decompose(prefs, n, k).boundary_cars();
}

TieChangeTuple delta_ties(std::span<const Vertex> prefs, int n, int k) {
  require_contained(prefs, n, k, "delta_ties");
  const auto image = xi(prefs, n, k);
  return tie_changes(prefs, image, boundary_cars(prefs, n, k));
}

TComp tcomp(std::span<const Vertex> prefs, int n, int k, int car, int prefix_parts) {
  require_contained(prefs, n, k, "tcomp");
  if (car < 1 || car > static_cast<int>(prefs.size())) {
    throw std::out_of_range("tcomp: car index out of range");
  }
  const auto dec = k_decompose(prefs, n, k);
  const auto prefix_len = static_cast<std::size_t>(dec.prefix_length(prefix_parts));
  const auto path = park_naples(prefs, n, k).car(car).traverse;
  const auto comps = naples_components(park_naples(prefs.first(prefix_len), n, k));
  const Vertex pref = prefs[static_cast<std::size_t>(car - 1)];

  std::vector<Interval> members;
  for (const auto& c : comps) {
    if (c.intersects(path) && c.lo() <= pref) members.push_back(c);
  }
  if (members.empty()) {
    // Nothing parked yet where the car searched: it is its own component.
    return {path, {path}};
  }
  return {Interval(members.front().lo(), members.back().hi()), std::move(members)};
}

Vertex aim(std::span<const Vertex> prefs, int n, int k) {
  const auto lb = inspect_last_boundary(prefs, n, k);
  if (lb.d < 2 || lb.e != -1) {
    throw WrongTieCase("aim: last tie change of " + format_seq(prefs) + " is " +
                       std::to_string(lb.e) + ", expected -1");
  }
  return aim_value(lb);
}

PrefSeq psi_small(std::span<const Vertex> prefs, int n, int k) {
  const auto lb = inspect_last_boundary(prefs, n, k);
  if (lb.d < 2 || lb.e == 0) return PrefSeq(prefs.begin(), prefs.end());

  const auto i = static_cast<std::size_t>(lb.b - 1);
  const Vertex target = prefs[i];
  const Vertex replacement = lb.e == 1 ? lb.reflected_prefix[i - 1] : aim_value(lb);
  PrefSeq out = lb.reflected_prefix;
  for (std::size_t c = i; c < prefs.size(); ++c) {
    out.push_back(prefs[c] == target ? replacement : prefs[c]);
  }
  return out;
}

PrefSeq out_tail(std::span<const Vertex> prefs, int n, int k) {
  const auto dec = k_decompose(prefs, n, k);
  auto image = psi_small(prefs, n, k);
  if (dec.size() == 0) return image;
  const auto start = static_cast<std::size_t>(dec.part(dec.size()).start - 1);
  return PrefSeq(image.begin() + static_cast<std::ptrdiff_t>(start), image.end());
}

PrefSeq psi_big(std::span<const Vertex> prefs, int n, int k) {
  require_contained(prefs, n, k, "psi_big");
  PrefSeq current(prefs.begin(), prefs.end());
  std::vector<PrefSeq> tails;
  while (!current.empty()) {
    const auto dec = k_decompose(current, n, k);
    auto image = psi_small(current, n, k);
    if (k_decompose(image, n, k).lengths() != dec.lengths()) {
      throw std::logic_error("psi_small changed the run lengths of " + format_seq(current));
    }
    const auto cut = static_cast<std::size_t>(dec.prefix_length(dec.size() - 1));
    tails.emplace_back(image.begin() + static_cast<std::ptrdiff_t>(cut), image.end());
    image.resize(cut);
    current = std::move(image);
  }
  PrefSeq out;
  out.reserve(prefs.size());
  for (auto it = tails.rbegin(); it != tails.rend(); ++it) out.insert(out.end(), it->begin(), it->end());
  return out;
}

}  // namespace naples
