#include "aoposet/extremal.hpp"

#include <bit>
#include <cmath>
#include <mutex>
#include <stdexcept>

#include "aoposet/errors.hpp"

namespace aoposet::extremal {

namespace {

constexpr Count kMaxRecurrence = 16384;

void check_argument(Count a) {
  if (a > kMaxArgument)
    throw std::invalid_argument("argument " + std::to_string(a) + " exceeds 2^20");
}

// Exponents i_0 < i_1 < ... of the binary expansion of a.
std::vector<Count> binary_exponents(Count a) {
  std::vector<Count> out;
  for (Count i = 0; a; ++i, a >>= 1)
    if (a & 1u) out.push_back(i);
  return out;
}

}  // namespace

Count floor_log2(Count a) {
  if (a == 0) throw std::invalid_argument("log2 of 0");
  return static_cast<Count>(std::bit_width(a)) - 1;
}

Count ceil_log2(Count a) { return floor_log2(a) + (is_power_of_two(a) ? 0 : 1); }

bool is_power_of_two(Count a) { return std::has_single_bit(a); }

Count lambda_closed(Count a) {
  check_argument(a);
  const auto exps = binary_exponents(a);
  const Count t = exps.size();
  Count total = 0;
  for (Count k = 0; k < t; ++k) {
    // (2t - 2k + i_k) 2^{i_k - 1}; the coefficient is even whenever i_k = 0.
    const Count coeff = 2 * t - 2 * k + exps[k];
    total += (coeff << exps[k]) / 2;
  }
  return total;
}

Count lambda_rec(Count a) {
  if (a > kMaxRecurrence)
    throw std::invalid_argument("lambda_rec is tabulated up to " + std::to_string(kMaxRecurrence));
  static std::mutex mu;
  static std::vector<Count> memo{0, 1};
  std::lock_guard lock(mu);
  while (memo.size() <= a) {
    const Count m = memo.size();
    Count best = 0;
    for (Count f = (m + 1) / 2; f < m; ++f) best = std::max(best, memo[f] + memo[m - f] + (m - f));
    memo.push_back(best);
  }
  return memo[a];
}

ArgmaxReport lambda_argmax_properties(Count a) {
  if (a < 2) throw std::invalid_argument("lambda_argmax_properties requires a >= 2");
  ArgmaxReport r;
  r.a = a;
  r.value = lambda_rec(a);
  for (Count f = (a + 1) / 2; f < a; ++f)
    r.terms.emplace_back(f, lambda_rec(f) + lambda_rec(a - f) + (a - f));

  auto term = [&](Count f) { return r.terms.at(f - (a + 1) / 2).second; };
  const Count half = (a + 1) / 2;
  const Count power = Count{1} << (ceil_log2(a) - 1);
  r.half_attains = term(half) == r.value;
  r.power_split_attains = term(power) == r.value;
  if (is_power_of_two(a))
    for (auto [f, v] : r.terms)
      if (2 * f > a && v >= r.value) r.strict_for_power_of_two = false;

  if (!r.half_attains)
    throw AssertionFailure("a=" + std::to_string(a) + ": f=ceil(a/2)=" + std::to_string(half) +
                           " gives " + std::to_string(term(half)) + " < " +
                           std::to_string(r.value));
  if (!r.power_split_attains)
    throw AssertionFailure("a=" + std::to_string(a) + ": f=2^(ceil(log2 a)-1)=" +
                           std::to_string(power) + " gives " + std::to_string(term(power)) +
                           " < " + std::to_string(r.value));
  if (!r.strict_for_power_of_two) {
    for (auto [f, v] : r.terms)
      if (2 * f > a && v >= r.value)
        throw AssertionFailure("a=" + std::to_string(a) + " is a power of two but f=" +
                               std::to_string(f) + " attains " + std::to_string(v));
  }
  return r;
}

std::optional<Count> lambda_h(Count a, Count h) {
  check_argument(a);
  if (h >= a) return lambda_closed(a);
  if (2 * h >= a) return lambda_closed(a) - (a - h);
  if (a >= 2 && a % 2 == 0 && h == a / 2 - 1)
    return lambda_closed(a) - a / 2 - (is_power_of_two(a) ? 2 : 1);
  return std::nullopt;
}

Count x_closed(Count a) {
  check_argument(a);
  if (a == 0) throw std::invalid_argument("X(a) requires a >= 1");
  if (a == 1) return 1;
  const auto exps = binary_exponents(a);
  const Count t = exps.size();
  Count total = 0;
  for (Count k = 0; k < t; ++k) total += (2 * (t - k) + exps[k] - 1) << exps[k];
  return total - 1 + ceil_log2(a) - floor_log2(a);
}

Count x_closed_identity(Count a) {
  check_argument(a);
  if (a < 2) throw std::invalid_argument("the identity form of X(a) requires a >= 2");
  return 2 * lambda_closed(a) - a - 1 + ceil_log2(a) - floor_log2(a);
}

Count x_via_max(Count a, std::span<const ConfirmedLambdaH> confirmed) {
  if (a < 2) throw std::invalid_argument("x_via_max requires a >= 2");
  auto value = [&](Count h) -> Count {
    if (auto v = lambda_h(a, h)) return *v;
    for (const auto& c : confirmed)
      if (c.a == a && c.h == h) return c.value;
    throw Unspecified("Lambda(" + std::to_string(a) + "," + std::to_string(h) +
                      ") has no closed form and no confirmed value");
  };
  const Count lo = (a - 1) / 2;
  const Count hi = a / 2;  // ceil((a-1)/2)
  return value(lo) + value(hi) + 1;
}

AoTnBounds ao_Tn_bounds(Count n) {
  if (n == 0) throw std::invalid_argument("ao_Tn_bounds requires n >= 1");
  if (n > x_closed(kMaxArgument)) throw std::invalid_argument("n too large");
  AoTnBounds b;
  b.n = n;
  b.k = 1;
  while (!(n <= ((b.k + 1) << b.k) - 1)) ++b.k;
  b.lo = (Count{1} << (b.k - 1)) + 1;
  b.hi = Count{1} << b.k;
  // X is increasing (checked in the test suite), so bisect on [1, 2^k].
  Count lo = 1, hi = b.hi;
  while (lo < hi) {
    const Count mid = lo + (hi - lo) / 2;
    if (x_closed(mid) >= n)
      hi = mid;
    else
      lo = mid + 1;
  }
  b.predicted = lo;
  b.exact = is_power_of_two(b.predicted);
  return b;
}

double asymptotic_check(Count n) {
  const auto b = ao_Tn_bounds(n);
  return static_cast<double>(b.predicted) * std::log2(static_cast<double>(n)) /
         static_cast<double>(n);
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::ClosedForm:
      return "closed-form";
    case Provenance::Recurrence:
      return "recurrence";
    case Provenance::Oracle:
      return "oracle";
  }
  return "?";
}

ExtremalTable::ExtremalTable(Count max_a) : max_a_(max_a) {
  for (Count a = 0; a <= max_a; ++a) {
    lambda_.push_back({lambda_rec(a), Provenance::Recurrence});
    x_.push_back({a == 0 ? 0 : x_closed(a), Provenance::ClosedForm});
    for (Count h = 0; h <= a; ++h)
      if (auto v = extremal::lambda_h(a, h)) lambda_h_[{a, h}] = {*v, Provenance::ClosedForm};
  }
}

std::optional<TableEntry> ExtremalTable::lambda_h(Count a, Count h) const {
  if (h > a) h = a;
  auto it = lambda_h_.find({a, h});
  if (it == lambda_h_.end()) return std::nullopt;
  return it->second;
}

void ExtremalTable::add_oracle(Count a, Count h, Count value) {
  if (a > max_a_) throw std::out_of_range("a beyond table range");
  if (h > a) h = a;
  auto it = lambda_h_.find({a, h});
  if (it != lambda_h_.end()) {
    if (it->second.value != value)
      throw AssertionFailure("oracle Lambda(" + std::to_string(a) + "," + std::to_string(h) +
                             ")=" + std::to_string(value) + " disagrees with " +
                             to_string(it->second.provenance) + " value " +
                             std::to_string(it->second.value));
    return;
  }
  lambda_h_[{a, h}] = {value, Provenance::Oracle};
}

std::vector<std::string> ExtremalTable::check_invariants() const {
  std::vector<std::string> bad;
  for (Count a = 2; a <= max_a_; ++a) {
    if (lambda_[a].value <= lambda_[a - 1].value)
      bad.push_back("Lambda not strictly increasing at a=" + std::to_string(a));
    if (x_[a].value <= x_[a - 1].value)
      bad.push_back("X not strictly increasing at a=" + std::to_string(a));
  }
  for (const auto& [key, entry] : lambda_h_) {
    const auto [a, h] = key;
    if (entry.value + (a - h) > lambda_[a].value)
      bad.push_back("Lambda(" + std::to_string(a) + "," + std::to_string(h) +
                    ") exceeds Lambda(a) - (a - h)");
  }
  return bad;
}

}  // namespace aoposet::extremal
