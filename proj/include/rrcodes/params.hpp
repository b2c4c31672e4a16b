#ifndef RRCODES_PARAMS_HPP
#define RRCODES_PARAMS_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rrcodes/counting.hpp"
#include "rrcodes/divisors.hpp"

namespace rrcodes {

// dim L(D) from deg D alone: exact outside 0 < deg <= 2g-2, a lower bound inside.
struct RiemannRochDim {
  enum class Kind { Exact, LowerBound };
  Kind kind = Kind::Exact;
  long long value = 0;

  bool operator==(const RiemannRochDim&) const = default;
};

RiemannRochDim riemann_roch_dim(long long deg, int g);

// c such that every codeword lies in L(c * sum of all places): k, ks, kw, kw.
long long ambient_multiplier(const FamilySpec& spec);
// n*c + 1 - g
long long ambient_dim(const FamilySpec& spec);
// ks + 1 - g
long long codeword_dim(const FamilySpec& spec);

struct CodeParameters {
  long long ambient_dim = 0;       // N
  long long codeword_dim = 0;      // l
  BigCount size;                   // |C|
  CountFormula size_formula = CountFormula::Binomial;
  double log_size = 0;             // log_q |C|
  long long min_distance_stated = 0;
  long long min_distance_proof = 0;
  double normalized_weight = 0;    // l / N
  double rate = 0;                 // log_q|C| / (N l)
  double normalized_min_distance = 0;  // 1 / (s + (1-g)/k)
  std::optional<double> delta_lower_bound;
  std::vector<std::string> validity_warnings;
};

CodeParameters code_parameters(const FamilySpec& spec);

double rate(const FamilySpec& spec);

// The g = 1 specialisations of weight, rate and distance.
struct GenusOneEntry {
  double normalized_weight = 0;
  double rate = 0;
  double normalized_min_distance = 0;
  long long rate_denominator = 0;  // nk^2 s, nk^2 s^2, nk^2 ws, nk^2 ws
};

// Requires spec.curve.g == 1.
GenusOneEntry genus_one_entry(const FamilySpec& spec);

struct RateTableRow {
  int n = 0;
  int s = 0;
  double rate_H = 0;
  double rate_A = 0;
  double rate_B = 0;
  double rate_C = 0;
};

struct RateTablePreset {
  std::int64_t q = 16;
  int k = 5;
  int w = 3;
  int g = 1;
  int n_min = 8;
  int n_max = 14;
};

// Rows ordered by n then s, with 1 <= s < n.
std::vector<RateTableRow> rate_table(const RateTablePreset& preset = {});

inline std::vector<RateTableRow> table3() { return rate_table(RateTablePreset{}); }

// Half-up rounding to `digits` decimals, printed with exactly that many.
std::string format_fixed(double x, int digits = 6);

// Header n,s,H,A,B,C then one line per row.
std::string rate_table_csv(const std::vector<RateTableRow>& rows);

nlohmann::json to_json(const CodeParameters& p, const FamilySpec& spec);

}  // namespace rrcodes

#endif  // RRCODES_PARAMS_HPP
