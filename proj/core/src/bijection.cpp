#include "naples/bijection.hpp"

#include "naples/rules.hpp"

namespace naples {
namespace {

bool backward_class(Mode mode) { return mode != Mode::forward; }

std::span<const Vertex> run_of(std::span<const Vertex> prefs, const KDecomposition::Part& p) {
  return prefs.subspan(static_cast<std::size_t>(p.start - 1), static_cast<std::size_t>(p.length));
}

void append(PrefSeq& out, std::span<const Vertex> tail) { out.insert(out.end(), tail.begin(), tail.end()); }

}  // namespace

KDecomposition k_decompose(std::span<const Vertex> prefs, int n, int k) {
  const auto outcome = park_naples(prefs, n, k);
  if (!outcome.success()) {
    throw NotAParkingFunction("k_decompose: " + format_seq(prefs) + " is not a " +
                              std::to_string(k) + "-Naples parking function");
  }
  std::vector<KDecomposition::Part> parts;
  const auto& cars = outcome.cars();
  for (std::size_t j = 0; j < cars.size(); ++j) {
    const bool back = backward_class(cars[j].mode);
    if (parts.empty() || back != backward_class(cars[j - 1].mode)) {
      if (parts.empty() && !back) throw std::logic_error("first car cannot park forward");
      parts.push_back({static_cast<int>(j) + 1, 1});
    } else {
      ++parts.back().length;
    }
  }
  return KDecomposition(std::move(parts), static_cast<int>(prefs.size()));
}

std::vector<PrefSeq> xi_stages(std::span<const Vertex> prefs, int n, int k) {
  if (!is_contained(prefs, n, k)) {
    throw NotContained("xi: " + format_seq(prefs) + " is not a contained " + std::to_string(k) +
                       "-Naples parking function");
  }
  const auto dec = k_decompose(prefs, n, k);
  std::vector<PrefSeq> stages;
  PrefSeq current;
  for (int i = 1; i <= dec.size(); ++i) {
    if (i > 1) current = phi(current, n);
    for (const Vertex p : run_of(prefs, dec.part(i))) {
      current.push_back(i % 2 == 1 ? n + 1 - p : p - k);
    }
    stages.push_back(current);
  }
  return stages;
}

PrefSeq xi(std::span<const Vertex> prefs, int n, int k) {
  auto stages = xi_stages(prefs, n, k);
  if (stages.empty()) return {};
  return std::move(stages.back());
}

PrefSeq xi_inverse(std::span<const Vertex> prefs, int n, int k) {
  if (k < 0) throw std::invalid_argument("xi_inverse: k must be non-negative");
  PrefSeq current(prefs.begin(), prefs.end());
  PrefSeq result;
  bool first = true;
  while (!current.empty()) {
    if (!first) current = phi(current, n);
    first = false;
    const auto outcome = park_classical(current, n);
    if (!outcome.success()) {
      throw NotAParkingFunction("xi_inverse: " + format_seq(current) +
                                " is not a parking function");
    }
    auto short_path = [&](std::size_t j) {
      const auto& rec = outcome.cars()[j];
      return rec.parked - rec.preferred <= k;
    };
    const bool tail_short = short_path(current.size() - 1);
    std::size_t cut = current.size();
    while (cut > 0 && short_path(cut - 1) == tail_short) --cut;

    PrefSeq mapped;
    for (std::size_t j = cut; j < current.size(); ++j) {
      mapped.push_back(tail_short ? n + 1 - current[j] : current[j] + k);
    }
    result.insert(result.begin(), mapped.begin(), mapped.end());
    current.resize(cut);
  }
  return result;
}

std::vector<LotSeq> xi_bar_stages(std::span<const Vertex> prefs, int n, int k) {
  const auto outcome = park_naples(prefs, n, k);
  if (!outcome.success()) {
    throw NotAParkingFunction("xi_bar: " + format_seq(prefs) + " is not a " +
                              std::to_string(k) + "-Naples parking function");
  }
  if (is_contained(prefs, n, k)) return {iota(xi(prefs, n, k), n, k)};

  const auto dec = k_decompose(prefs, n, k);
  std::vector<LotSeq> stages;

  LotSeq current{{}, Lot::unobstructed(n)};
  for (const Vertex p : run_of(prefs, dec.part(1))) current.prefs.push_back(n + 1 - p);
  stages.push_back(current);

  for (int i = 2; i <= dec.size(); ++i) {
    const auto run = run_of(prefs, dec.part(i));
    if (i == 2) {
      current = iota(phi(current.prefs, n), n, k);
    } else {
      current = phi_bar(current.prefs, current.lot);
    }
    if (i % 2 == 1) {
      for (const Vertex p : run) current.prefs.push_back(n + 1 - p);
    } else {
      append(current.prefs, run);
    }
    stages.push_back(current);
  }
  if (dec.size() % 2 == 1) stages.push_back(phi_bar(current.prefs, current.lot));
  return stages;
}

LotSeq xi_bar(std::span<const Vertex> prefs, int n, int k) {
  auto stages = xi_bar_stages(prefs, n, k);
  return std::move(stages.back());
}

}  // namespace naples
