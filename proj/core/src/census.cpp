#include "naples/census.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <thread>

#include "naples/bijection.hpp"
#include "naples/rules.hpp"
#include "naples/ties.hpp"

namespace naples {
namespace {

constexpr std::array<std::pair<Family, std::string_view>, 5> kFamilyNames{{
    {Family::pf, "PF"},
    {Family::naples, "NAPLES"},
    {Family::contained, "CONTAINED"},
    {Family::opf, "OPF"},
    {Family::lpf, "LPF"},
}};

constexpr std::array<std::pair<Claim, std::string_view>, 6> kClaimNames{{
    {Claim::bijection, "BIJECTION"},
    {Claim::ties, "TIES"},
    {Claim::injection, "INJECTION"},
    {Claim::recursion, "RECURSION"},
    {Claim::lpf_count, "LPF_COUNT"},
    {Claim::bound, "BOUND"},
}};

std::string upper(std::string_view s) {
  std::string out(s);
  for (auto& ch : out) {
    if (ch == '-') ch = '_';
    if (ch >= 'a' && ch <= 'z') ch = static_cast<char>(ch - 'a' + 'A');
  }
  return out;
}

BigInt power(int base, int exp) {
  BigInt r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

void check_guardrail(int total, int m, const EnumerateOptions& options) {
  if (options.allow_large) return;
  if (power(total, m) > BigInt(options.max_candidates)) {
    throw TooLarge(std::to_string(total) + "^" + std::to_string(m) +
                   " candidate sequences exceed the limit of " +
                   std::to_string(options.max_candidates));
  }
}

// Calls fn(i) for i in [0, count) on up to `threads` workers.
template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn fn) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&] {
        try {
          for (std::size_t i = next++; i < count; i = next++) fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

// Lexicographic walk over every sequence in [1, total]^m whose first entry is
// `first` (or over all of them when first is 0).
template <typename Visit>
void walk_candidates(int total, int m, int first, Visit&& visit) {
  if (m == 0) {
    visit(std::span<const Vertex>{});
    return;
  }
  if (total < 1) return;
  PrefSeq seq(static_cast<std::size_t>(m), 1);
  if (first > 0) seq[0] = first;
  const std::size_t lowest = first > 0 ? 1 : 0;
  while (true) {
    if (!visit(std::span<const Vertex>(seq))) return;
    std::size_t pos = seq.size();
    while (pos > lowest && seq[pos - 1] == total) --pos;
    if (pos == lowest) return;
    ++seq[pos - 1];
    std::fill(seq.begin() + static_cast<std::ptrdiff_t>(pos), seq.end(), 1);
  }
}

struct Sample {
  std::vector<PrefSeq> items;
  void add(std::span<const Vertex> f) {
    if (items.size() < VerifyReport::kMaxCounterexamples) items.emplace_back(f.begin(), f.end());
  }
};

VerifyReport make_report(Claim claim, std::map<std::string, int> params, BigInt lhs, BigInt rhs,
                         Relation relation, std::vector<PrefSeq> counterexamples) {
  VerifyReport r{claim, std::move(params), std::move(lhs), std::move(rhs), relation, false,
                 std::move(counterexamples)};
  if (r.counterexamples.size() > VerifyReport::kMaxCounterexamples) {
    r.counterexamples.resize(VerifyReport::kMaxCounterexamples);
  }
  const bool relation_holds = relation == Relation::equal ? r.lhs == r.rhs : r.lhs < r.rhs;
  r.ok = relation_holds && r.counterexamples.empty();
  return r;
}

VerifyReport verify_bijection(const VerifyParams& p, const EnumerateOptions& options) {
  const auto contained = enumerate({Family::contained, p.m, p.n, p.k}, options);
  const auto classical = enumerate({Family::pf, p.m, p.n, 0}, options);

  std::vector<PrefSeq> images(contained.size());
  std::vector<char> bad(contained.size(), 0);
  parallel_for(contained.size(), options.threads, [&](std::size_t i) {
    try {
      images[i] = xi(contained[i], p.n, p.k);
      bad[i] = !parks_classically(images[i], p.n) || xi_inverse(images[i], p.n, p.k) != contained[i];
    } catch (const Error&) {
      bad[i] = 1;
    }
  });
  std::vector<char> bad_back(classical.size(), 0);
  parallel_for(classical.size(), options.threads, [&](std::size_t i) {
    try {
      const auto f = xi_inverse(classical[i], p.n, p.k);
      bad_back[i] = !is_contained(f, p.n, p.k) || xi(f, p.n, p.k) != classical[i];
    } catch (const Error&) {
      bad_back[i] = 1;
    }
  });

  Sample sample;
  for (std::size_t i = 0; i < contained.size(); ++i) {
    if (bad[i]) sample.add(contained[i]);
  }
  for (std::size_t i = 0; i < classical.size(); ++i) {
    if (bad_back[i]) sample.add(classical[i]);
  }
  std::vector<std::size_t> order(images.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return images[a] < images[b]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (images[order[i]] == images[order[i - 1]]) sample.add(contained[order[i]]);
  }
  return make_report(Claim::bijection, {{"m", p.m}, {"n", p.n}, {"k", p.k}},
                     BigInt(contained.size()), count_classical(p.m, p.n), Relation::equal,
                     std::move(sample.items));
}

VerifyReport verify_ties(const VerifyParams& p, const EnumerateOptions& options) {
  long long lhs = 0;
  long long rhs = 0;
  for_each_member({Family::contained, p.m, p.n, p.k}, [&](std::span<const Vertex> f) {
    lhs += stats(f).ties;
    return true;
  }, options);
  for_each_member({Family::pf, p.m, p.n, 0}, [&](std::span<const Vertex> g) {
    rhs += stats(g).ties;
    return true;
  }, options);
  return make_report(Claim::ties, {{"m", p.m}, {"n", p.n}, {"k", p.k}}, BigInt(lhs), BigInt(rhs),
                     Relation::equal, {});
}

VerifyReport verify_injection(const VerifyParams& p, const EnumerateOptions& options) {
  const auto members = enumerate({Family::naples, p.m, p.n, p.k}, options);
  const Lot target = Lot::with_block(p.n + p.k, 1, p.k);

  std::vector<LotSeq> images(members.size(), LotSeq{{}, target});
  std::vector<char> bad(members.size(), 0);
  parallel_for(members.size(), options.threads, [&](std::size_t i) {
    const auto& f = members[i];
    try {
      images[i] = xi_bar(f, p.n, p.k);
      const auto& g = images[i];
      bool wrong = g.lot != target || !parks_obstructed(g.prefs, g.lot);
      if (is_contained(f, p.n, p.k)) {
        wrong = wrong || g != iota(xi(f, p.n, p.k), p.n, p.k);
      }
      if (p.k >= 1 && !g.prefs.empty() && g.prefs.front() <= p.k) wrong = true;
      bad[i] = wrong;
    } catch (const Error&) {
      bad[i] = 1;
    }
  });

  Sample sample;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (bad[i]) sample.add(members[i]);
  }
  std::vector<std::size_t> order(images.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return images[a].prefs < images[b].prefs; });
  std::size_t distinct = order.empty() ? 0 : 1;
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (images[order[i]].prefs == images[order[i - 1]].prefs) {
      sample.add(members[order[i]]);
    } else {
      ++distinct;
    }
  }
  return make_report(Claim::injection, {{"m", p.m}, {"n", p.n}, {"k", p.k}}, BigInt(distinct),
                     BigInt(members.size()), Relation::equal, std::move(sample.items));
}

std::uint64_t count_members(const FamilyParams& params, const EnumerateOptions& options) {
  std::uint64_t count = 0;
  for_each_member(params, [&](std::span<const Vertex>) {
    ++count;
    return true;
  }, options);
  return count;
}

}  // namespace

std::string_view to_string(Family family) noexcept {
  for (const auto& [f, name] : kFamilyNames) {
    if (f == family) return name;
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) noexcept {
  const auto key = upper(name);
  for (const auto& [f, n] : kFamilyNames) {
    if (n == key) return f;
  }
  return std::nullopt;
}

std::string_view to_string(Claim claim) noexcept {
  for (const auto& [c, name] : kClaimNames) {
    if (c == claim) return name;
  }
  return "?";
}

std::optional<Claim> parse_claim(std::string_view name) noexcept {
  const auto key = upper(name);
  for (const auto& [c, n] : kClaimNames) {
    if (n == key) return c;
  }
  return std::nullopt;
}

Lot family_lot(const FamilyParams& p) {
  if (p.m < 0 || p.n < 0 || p.k < 0) throw InvalidFamilyParams("m, n and k must be non-negative");
  if (p.m > p.n) {
    throw InvalidFamilyParams("m = " + std::to_string(p.m) + " exceeds n = " + std::to_string(p.n));
  }
  if (p.family != Family::opf && p.obstruction_start) {
    throw InvalidFamilyParams("an obstruction start is only meaningful for OPF");
  }
  switch (p.family) {
    case Family::pf:
      if (p.k != 0) throw InvalidFamilyParams("PF takes no backup limit; use k = 0");
      return Lot::unobstructed(p.n);
    case Family::naples:
    case Family::contained:
      return Lot::unobstructed(p.n);
    case Family::lpf:
      return Lot::with_block(p.n + p.k, 1, p.k);
    case Family::opf: {
      if (!p.obstruction_start) throw InvalidFamilyParams("OPF needs an obstruction start");
      const Vertex s = *p.obstruction_start;
      if (s < 1 || s + p.k - 1 > p.n + p.k) {
        throw InvalidFamilyParams("obstruction start " + std::to_string(s) +
                                  " does not fit a block of " + std::to_string(p.k) + " in " +
                                  std::to_string(p.n + p.k) + " vertices");
      }
      return Lot::with_block(p.n + p.k, s, p.k);
    }
  }
  throw InvalidFamilyParams("unknown family");
}

bool is_member(std::span<const Vertex> prefs, const FamilyParams& params) {
  const Lot lot = family_lot(params);
  if (static_cast<int>(prefs.size()) != params.m) return false;
  for (const Vertex v : prefs) {
    if (v < 1 || v > lot.total()) return false;
  }
  switch (params.family) {
    case Family::pf:
      return parks_classically(prefs, params.n);
    case Family::naples:
      return parks_naples(prefs, params.n, params.k);
    case Family::contained:
      return is_contained(prefs, params.n, params.k);
    case Family::opf:
    case Family::lpf:
      return parks_obstructed(prefs, lot);
  }
  return false;
}

void for_each_member(const FamilyParams& params,
                     const std::function<bool(std::span<const Vertex>)>& visit,
                     const EnumerateOptions& options) {
  const Lot lot = family_lot(params);
  check_guardrail(lot.total(), params.m, options);
  std::size_t emitted = 0;
  walk_candidates(lot.total(), params.m, 0, [&](std::span<const Vertex> f) {
    if (!is_member(f, params)) return true;
    if (options.limit && emitted >= *options.limit) return false;
    ++emitted;
    return visit(f);
  });
}

std::vector<PrefSeq> enumerate(const FamilyParams& params, const EnumerateOptions& options) {
  const Lot lot = family_lot(params);
  check_guardrail(lot.total(), params.m, options);
  std::vector<PrefSeq> out;
  if (options.limit || options.threads <= 1 || params.m == 0) {
    for_each_member(params, [&](std::span<const Vertex> f) {
      out.emplace_back(f.begin(), f.end());
      return true;
    }, options);
    return out;
  }
  std::vector<std::vector<PrefSeq>> blocks(static_cast<std::size_t>(lot.total()));
  parallel_for(blocks.size(), options.threads, [&](std::size_t i) {
    walk_candidates(lot.total(), params.m, static_cast<int>(i) + 1, [&](std::span<const Vertex> f) {
      if (is_member(f, params)) blocks[i].emplace_back(f.begin(), f.end());
      return true;
    });
  });
  for (auto& block : blocks) {
    std::move(block.begin(), block.end(), std::back_inserter(out));
  }
  return out;
}

BigInt binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  BigInt c = 1;
  for (int i = 1; i <= r; ++i) {
    c *= n - r + i;
    c /= i;
  }
  return c;
}

BigInt count_classical(int m, int n) {
  if (m < 0 || n < 0 || m > n) {
    throw InvalidFamilyParams("count_classical needs 0 <= m <= n, got m = " + std::to_string(m) +
                              ", n = " + std::to_string(n));
  }
  if (m == 0) return 1;
  return BigInt(n - m + 1) * power(n + 1, m - 1);
}

BigInt count_contained(int n) {
  if (n < 0) throw InvalidFamilyParams("count_contained needs n >= 0");
  if (n == 0) return 1;
  return power(n + 1, n - 1);
}

BigInt count_lpf(int n, int k) {
  if (n < 0 || k < 0) throw InvalidFamilyParams("count_lpf needs n, k >= 0");
  if (n == 0) return 1;
  return BigInt(k + 1) * power(k + n + 1, n - 1);
}

BigInt naples_count_recursive(int n, int k, const EnumerateOptions& options) {
  if (n < 0 || k < 0) throw InvalidFamilyParams("naples_count_recursive needs n, k >= 0");
  std::vector<BigInt> contained(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j < n; ++j) {
    contained[static_cast<std::size_t>(j)] = count_members({Family::contained, j, j, k}, options);
  }
  std::vector<BigInt> total(static_cast<std::size_t>(n) + 1);
  total[0] = 1;
  for (int t = 0; t < n; ++t) {
    BigInt sum = 0;
    for (int i = 0; i <= t; ++i) {
      sum += binomial(t, i) * std::min(i + 1 + k, t + 1) * total[static_cast<std::size_t>(i)] *
             contained[static_cast<std::size_t>(t - i)];
    }
    total[static_cast<std::size_t>(t) + 1] = sum;
  }
  return total[static_cast<std::size_t>(n)];
}

VerifyReport verify(Claim claim, const VerifyParams& p, const EnumerateOptions& options) {
  if (p.n < 0 || p.k < 0 || p.m < 0) throw InvalidFamilyParams("m, n and k must be non-negative");
  switch (claim) {
    case Claim::bijection:
      return verify_bijection(p, options);
    case Claim::ties:
      return verify_ties(p, options);
    case Claim::injection:
      return verify_injection(p, options);
    case Claim::recursion: {
      const auto brute = count_members({Family::naples, p.n, p.n, p.k}, options);
      return make_report(claim, {{"n", p.n}, {"k", p.k}}, naples_count_recursive(p.n, p.k, options),
                         BigInt(brute), Relation::equal, {});
    }
    case Claim::lpf_count: {
      const auto brute = count_members({Family::lpf, p.n, p.n, p.k}, options);
      return make_report(claim, {{"n", p.n}, {"k", p.k}}, BigInt(brute), count_lpf(p.n, p.k),
                         Relation::equal, {});
    }
    case Claim::bound: {
      const auto brute = count_members({Family::naples, p.n, p.n, p.k}, options);
      return make_report(claim, {{"n", p.n}, {"k", p.k}}, BigInt(brute), count_lpf(p.n, p.k),
                         p.k == 0 ? Relation::equal : Relation::less, {});
    }
  }
  throw InvalidFamilyParams("unknown claim");
}

}  // namespace naples
