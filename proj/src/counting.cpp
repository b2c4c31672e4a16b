#include "rrcodes/counting.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "rrcodes/error.hpp"

namespace rrcodes {

std::string_view to_string(CountFormula f) {
  switch (f) {
    case CountFormula::Binomial: return "binomial";
    case CountFormula::Multiset: return "multiset";
    case CountFormula::U: return "U";
    case CountFormula::UShifted: return "U'";
    case CountFormula::Oracle: return "oracle";
  }
  return "?";
}

BigCount binom(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigCount r = 1;
  for (long long i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

BigCount multiset_coeff(long long n, long long s) {
  if (n < 1 || s < 0) throw Error(ErrorCode::InvalidArgument, "multiset_coeff needs n >= 1, s >= 0");
  return binom(n + s - 1, s);
}

BigCount count_U(long long n, long long s, long long w) {
  if (n < 1 || w < 0) throw Error(ErrorCode::InvalidArgument, "count_U needs n >= 1, w >= 0");
  if (s < 0 || s > n * w) return 0;
  const long long t = std::min(n, s / (w + 1));
  BigCount sum = 0;
  for (long long i = 0; i <= t; ++i) {
    BigCount term = binom(n, i) * binom(s - i * (w + 1) + n - 1, n - 1);
    if (i % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  if (sum < 0) throw Error(ErrorCode::InvalidArgument, "inclusion-exclusion went negative");
  return sum;
}

BigCount count_U_shifted(const BoundedEq& eq) {
  if (eq.lo > eq.hi) throw Error(ErrorCode::InvalidArgument, "empty range lo > hi");
  return count_U(eq.n, eq.s - eq.n * eq.lo, eq.hi - eq.lo);
}

CountResult count_family(const FamilySpec& spec) {
  spec.validate();
  const long long n = spec.curve.n;
  const long long s = spec.s;
  switch (spec.family) {
    case Family::H: return {binom(n, s), CountFormula::Binomial};
    case Family::A: return {multiset_coeff(n, s), CountFormula::Multiset};
    case Family::B: return {count_U(n, s, *spec.w), CountFormula::U};
    case Family::C: {
      const long long w = *spec.w;
      return {count_U_shifted({n, s, s - w * (n - 1), w}), CountFormula::UShifted};
    }
  }
  return {0, CountFormula::Binomial};
}

BigCount oracle_count(const BoundedEq& eq) {
  if (eq.n < 1) throw Error(ErrorCode::InvalidArgument, "oracle_count needs n >= 1");
  if (eq.lo > eq.hi) return 0;
  const long long width = eq.hi - eq.lo;
  const long long target = eq.s - eq.n * eq.lo;
  if (target < 0 || target > eq.n * width) return 0;

  // ways[v] = number of ways the first j variables reach shifted sum v
  std::vector<BigCount> ways(static_cast<std::size_t>(target) + 1, 0);
  ways[0] = 1;
  for (long long j = 0; j < eq.n; ++j) {
    std::vector<BigCount> next(ways.size(), 0);
    BigCount window = 0;
    for (long long v = 0; v <= target; ++v) {
      window += ways[static_cast<std::size_t>(v)];
      if (v - width - 1 >= 0) window -= ways[static_cast<std::size_t>(v - width - 1)];
      next[static_cast<std::size_t>(v)] = window;
    }
    ways.swap(next);
  }
  return ways[static_cast<std::size_t>(target)];
}

double log_q(const BigCount& v, std::uint64_t q) {
  if (v <= 0) throw Error(ErrorCode::InvalidArgument, "log of a non-positive count");
  const std::size_t msb = boost::multiprecision::msb(v);
  double log2v;
  if (msb < 64) {
    log2v = std::log2(static_cast<double>(static_cast<std::uint64_t>(v)));
  } else {
    const std::size_t shift = msb - 63;
    const auto top = static_cast<std::uint64_t>(v >> shift);
    log2v = std::log2(static_cast<double>(top)) + static_cast<double>(shift);
  }
  return log2v / std::log2(static_cast<double>(q));
}

std::string to_decimal(const BigCount& v) { return v.str(); }

}  // namespace rrcodes
