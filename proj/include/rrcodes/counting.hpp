#ifndef RRCODES_COUNTING_HPP
#define RRCODES_COUNTING_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "rrcodes/divisors.hpp"

namespace rrcodes {

using BigCount = boost::multiprecision::cpp_int;

enum class CountFormula { Binomial, Multiset, U, UShifted, Oracle };

std::string_view to_string(CountFormula f);

struct CountResult {
  BigCount value;
  CountFormula formula;
};

// x_1 + ... + x_n = s with lo <= x_i <= hi.
struct BoundedEq {
  long long n = 1;
  long long s = 0;
  long long lo = 0;
  long long hi = 0;
};

// C(n, k); zero when k < 0, k > n, or n < 0.
BigCount binom(long long n, long long k);

// C(n + s - 1, s): s-multisets from n elements.
BigCount multiset_coeff(long long n, long long s);

// Solutions of x_1 + ... + x_n = s with 0 <= x_i <= w, by inclusion-exclusion
//
//   sum_{i=0}^{t} (-1)^i C(n, i) C(s - i(w+1) + n - 1, n - 1),
//   t = min(n, floor(s / (w+1))).
//
// Zero outside 0 <= s <= n*w.
BigCount count_U(long long n, long long s, long long w);

// Shift y_i = x_i - lo: equals count_U(n, s - n*lo, hi - lo).
// Throws InvalidArgument if lo > hi.
BigCount count_U_shifted(const BoundedEq& eq);

// Number of divisors in the family, by the family's closed form:
// H -> C(n,s), A -> C(n+s-1,s), B -> U(n,s,w), C -> U'(n,s,s-w(n-1),w).
// Throws InfeasibleFamily / InvalidArgument per FamilySpec::validate.
CountResult count_family(const FamilySpec& spec);

// Same count by dynamic programming over the variables (repeated convolution
// with a uniform window). Shares no code with the inclusion-exclusion path.
BigCount oracle_count(const BoundedEq& eq);

// log_q(v) from the bit length and leading 64 bits of v; v must be positive.
double log_q(const BigCount& v, std::uint64_t q);

std::string to_decimal(const BigCount& v);

}  // namespace rrcodes

#endif  // RRCODES_COUNTING_HPP
