#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "naples/core.hpp"

namespace naples {

using BigInt = boost::multiprecision::cpp_int;

enum class Family { pf, naples, contained, opf, lpf };

std::string_view to_string(Family family) noexcept;
std::optional<Family> parse_family(std::string_view name) noexcept;

struct FamilyParams {
  Family family = Family::pf;
  int m = 0;
  int n = 0;
  int k = 0;
  std::optional<Vertex> obstruction_start;  // OPF only
};

// The lot members of the family park on: n vertices, or n + k vertices with
// the obstruction for OPF/LPF. Throws InvalidFamilyParams on mismatch.
Lot family_lot(const FamilyParams& params);
bool is_member(std::span<const Vertex> prefs, const FamilyParams& params);

struct EnumerateOptions {
  unsigned threads = 1;
  // Refuse to scan more than this many candidate sequences unless allow_large.
  std::uint64_t max_candidates = 100'000'000;
  bool allow_large = false;
  std::optional<std::size_t> limit;
};

// Members of the family in lexicographic order, by filtering [N]^m through
// the simulators. Work is split by first preference and merged in order, so
// the result does not depend on the thread count.
std::vector<PrefSeq> enumerate(const FamilyParams& params, const EnumerateOptions& options = {});

// Visits members in lexicographic order on the calling thread; return false
// from the visitor to stop early.
void for_each_member(const FamilyParams& params,
                     const std::function<bool(std::span<const Vertex>)>& visit,
                     const EnumerateOptions& options = {});

// (n - m + 1)(n + 1)^(m - 1), for 0 <= m <= n.
BigInt count_classical(int m, int n);
// (n + 1)^(n - 1); 1 for n = 0.
BigInt count_contained(int n);
// (k + 1)(k + n + 1)^(n - 1); 1 for n = 0.
BigInt count_lpf(int n, int k);
// |PF_{n,k}| from the convolution recursion over |PF_{i,k}| and |B_{j,k}|,
// with |B_{j,k}| counted by enumeration.
BigInt naples_count_recursive(int n, int k, const EnumerateOptions& options = {});
BigInt binomial(int n, int r);

enum class Claim { bijection, ties, injection, recursion, lpf_count, bound };

std::string_view to_string(Claim claim) noexcept;
std::optional<Claim> parse_claim(std::string_view name) noexcept;

enum class Relation { equal, less };

struct VerifyParams {
  int m = 0;
  int n = 0;
  int k = 0;
};

struct VerifyReport {
  static constexpr std::size_t kMaxCounterexamples = 10;

  Claim claim;
  std::map<std::string, int> params;
  BigInt lhs;
  BigInt rhs;
  // Relation lhs must satisfy against rhs; only the strict bound uses less.
  Relation relation = Relation::equal;
  bool ok = false;
  std::vector<PrefSeq> counterexamples;
};

VerifyReport verify(Claim claim, const VerifyParams& params, const EnumerateOptions& options = {});

}  // namespace naples
