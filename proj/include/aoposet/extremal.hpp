#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace aoposet::extremal {

using Count = std::uint64_t;

// Arguments are capped so that the 2^i terms of the binary-expansion sums fit.
inline constexpr Count kMaxArgument = Count{1} << 20;

/// Lambda(a): the largest V-free poset with ao = a, via the binary expansion
/// a = 2^{i_0} + ... + 2^{i_{t-1}}: sum_k (2t - 2k + i_k) 2^{i_k - 1}.
Count lambda_closed(Count a);

/// Lambda(a) from the recurrence max{L(f) + L(a-f) + a - f : a/2 <= f < a}.
/// Memoised; safe to call concurrently.
Count lambda_rec(Count a);

/// Result of checking the argmax claims of the Lambda recurrence for one a.
struct ArgmaxReport {
  Count a = 0;
  Count value = 0;
  std::vector<std::pair<Count, Count>> terms;  // (f, L(f) + L(a-f) + a - f)
  bool half_attains = false;           // f = ceil(a/2)
  bool power_split_attains = false;    // f = 2^{ceil(log2 a) - 1}
  bool strict_for_power_of_two = true;  // a/2 < f < a all strictly below, when a = 2^k
};

/// Evaluates every f and checks the three claims; throws AssertionFailure naming
/// the claim and f that failed. Requires a >= 2.
ArgmaxReport lambda_argmax_properties(Count a);

/// Lambda(a, h): the largest V-free poset with ao = a and height <= h, where a
/// closed form is known: h >= a, 2h >= a, or a even with h = a/2 - 1. Nothing
/// otherwise.
std::optional<Count> lambda_h(Count a, Count h);

/// X(a): the largest acyclic N-free poset with ao = a, binary-expansion form.
Count x_closed(Count a);
/// X(a) = 2 Lambda(a) - a - 1 + ceil(log2 a) - floor(log2 a).
Count x_closed_identity(Count a);

/// Externally confirmed Lambda(a, h) values (from the enumeration oracle).
struct ConfirmedLambdaH {
  Count a;
  Count h;
  Count value;
};

/// X(a) = Lambda(a, floor((a-1)/2)) + Lambda(a, ceil((a-1)/2)) + 1. Throws
/// Unspecified when a needed Lambda(a, h) has no closed form and is not in
/// `confirmed`. Requires a >= 2.
Count x_via_max(Count a, std::span<const ConfirmedLambdaH> confirmed = {});

/// Bracket for ao(T_n): k with k 2^{k-1} - 1 < n <= (k+1) 2^k - 1 gives
/// 2^{k-1} < ao(T_n) <= 2^k.
struct AoTnBounds {
  Count n = 0;
  Count k = 0;
  Count lo = 0;         // 2^{k-1} + 1
  Count hi = 0;         // 2^k
  Count predicted = 0;  // min{a >= 1 : X(a) >= n}
  bool exact = false;   // predicted is a power of two; otherwise conjectural
};

AoTnBounds ao_Tn_bounds(Count n);

/// predicted(n) * log2(n) / n.
double asymptotic_check(Count n);

enum class Provenance { ClosedForm, Recurrence, Oracle };
std::string to_string(Provenance p);

struct TableEntry {
  Count value;
  Provenance provenance;
};

/// Tabulated Lambda(a), Lambda(a, h) and X(a) for 0 <= a <= max_a. Immutable
/// after construction apart from add_oracle, which is not thread-safe.
class ExtremalTable {
 public:
  explicit ExtremalTable(Count max_a);

  Count max_a() const { return max_a_; }
  const TableEntry& lambda(Count a) const { return lambda_.at(a); }
  std::optional<TableEntry> lambda_h(Count a, Count h) const;
  const TableEntry& x(Count a) const { return x_.at(a); }

  /// Fills a gap with an oracle value; existing closed-form entries must agree.
  void add_oracle(Count a, Count h, Count value);

  /// Violations of the table invariants; empty when all hold.
  std::vector<std::string> check_invariants() const;

 private:
  Count max_a_;
  std::vector<TableEntry> lambda_;
  std::map<std::pair<Count, Count>, TableEntry> lambda_h_;
  std::vector<TableEntry> x_;
};

// Helpers shared with the constructions.
Count ceil_log2(Count a);
Count floor_log2(Count a);
bool is_power_of_two(Count a);

}  // namespace aoposet::extremal
