#include "rrcodes/params.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rrcodes/error.hpp"

namespace rrcodes {

RiemannRochDim riemann_roch_dim(long long deg, int g) {
  using Kind = RiemannRochDim::Kind;
  if (deg < 0) return {Kind::Exact, 0};
  if (deg == 0) return {Kind::Exact, 1};
  if (deg > 2LL * g - 2) return {Kind::Exact, deg + 1 - g};
  return {Kind::LowerBound, std::max(deg + 1 - g, 0LL)};
}

long long ambient_multiplier(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::H: return spec.k;
    case Family::A: return static_cast<long long>(spec.k) * spec.s;
    case Family::B:
    case Family::C: return static_cast<long long>(spec.k) * spec.w.value_or(0);
  }
  return 0;
}

long long ambient_dim(const FamilySpec& spec) {
  return static_cast<long long>(spec.curve.n) * ambient_multiplier(spec) + 1 - spec.curve.g;
}

long long codeword_dim(const FamilySpec& spec) {
  return static_cast<long long>(spec.k) * spec.s + 1 - spec.curve.g;
}

CodeParameters code_parameters(const FamilySpec& spec) {
  spec.validate();
  CodeParameters p;
  p.validity_warnings = spec.warnings();

  const int g = spec.curve.g;
  const long long n = spec.curve.n;
  const long long k = spec.k;
  const long long s = spec.s;

  const long long c = ambient_multiplier(spec);
  p.ambient_dim = ambient_dim(spec);
  if (n * c <= 2LL * g - 2) p.validity_warnings.push_back("ambient degree n*c <= 2g-2: N is only a lower bound");

  p.codeword_dim = codeword_dim(spec);
  if (riemann_roch_dim(k * s, g).kind != RiemannRochDim::Kind::Exact) {
    p.validity_warnings.push_back("ks <= 2g-2: codeword dimension is only a lower bound");
  }

  auto count = count_family(spec);
  p.size = std::move(count.value);
  p.size_formula = count.formula;
  p.log_size = log_q(p.size, static_cast<std::uint64_t>(spec.curve.q));
  if (p.size < 2) p.validity_warnings.push_back("family has a single codeword: minimum distance is vacuous");

  const bool unweighted = spec.family == Family::H || spec.family == Family::A;
  p.min_distance_stated = (unweighted && s > 1) ? 2 * (k + 1 - g) : 2 * k;
  // s = 1: distinct codewords meet in L(0), the constants.
  p.min_distance_proof = s == 1 ? 2 * (p.codeword_dim - riemann_roch_dim(0, g).value) : 2 * k;
  if (p.min_distance_stated != p.min_distance_proof) {
    p.validity_warnings.push_back("stated minimum distance " + std::to_string(p.min_distance_stated) +
                                  " differs from the distance " + std::to_string(p.min_distance_proof) +
                                  " attained by the explicit codeword pair");
  }

  const auto N = static_cast<double>(p.ambient_dim);
  const auto l = static_cast<double>(p.codeword_dim);
  p.normalized_weight = l / N;
  p.rate = p.log_size / (N * l);
  p.normalized_min_distance = 1.0 / (static_cast<double>(s) + static_cast<double>(1 - g) / static_cast<double>(k));
  // delta - (2g-1)/((s+1)g-1) has the sign of (g-1)(2g-1-k(s-1)), so the bound
  // is only emitted where it holds.
  if (g >= 1) {
    if (g == 1 || k * (s - 1) <= 2LL * g - 1) {
      p.delta_lower_bound = static_cast<double>(2 * g - 1) / static_cast<double>((s + 1) * g - 1);
    } else {
      p.validity_warnings.push_back("k(s-1) > 2g-1: (2g-1)/((s+1)g-1) exceeds delta and is not a lower bound");
    }
  }
  return p;
}

double rate(const FamilySpec& spec) { return code_parameters(spec).rate; }

GenusOneEntry genus_one_entry(const FamilySpec& spec) {
  spec.validate();
  if (spec.curve.g != 1) throw Error(ErrorCode::InvalidArgument, "genus-one table needs g = 1");
  const long long n = spec.curve.n;
  const long long k = spec.k;
  const long long s = spec.s;
  GenusOneEntry e;
  e.normalized_min_distance = 1.0 / static_cast<double>(s);
  switch (spec.family) {
    case Family::H:
      e.normalized_weight = static_cast<double>(s) / static_cast<double>(n);
      e.rate_denominator = n * k * k * s;
      break;
    case Family::A:
      e.normalized_weight = 1.0 / static_cast<double>(n);
      e.rate_denominator = n * k * k * s * s;
      break;
    case Family::B:
    case Family::C: {
      const long long w = *spec.w;
      e.normalized_weight = static_cast<double>(s) / static_cast<double>(n * w);
      e.rate_denominator = n * k * k * w * s;
      break;
    }
  }
  const double log_size = log_q(count_family(spec).value, static_cast<std::uint64_t>(spec.curve.q));
  e.rate = log_size / static_cast<double>(e.rate_denominator);
  return e;
}

std::vector<RateTableRow> rate_table(const RateTablePreset& preset) {
  std::vector<RateTableRow> rows;
  for (int n = preset.n_min; n <= preset.n_max; ++n) {
    const CurveDescriptor curve{preset.q, n, preset.g};
    for (int s = 1; s < n; ++s) {
      RateTableRow row{n, s};
      row.rate_H = rate({Family::H, curve, preset.k, s, std::nullopt});
      row.rate_A = rate({Family::A, curve, preset.k, s, std::nullopt});
      row.rate_B = rate({Family::B, curve, preset.k, s, preset.w});
      row.rate_C = rate({Family::C, curve, preset.k, s, preset.w});
      rows.push_back(row);
    }
  }
  return rows;
}

std::string format_fixed(double x, int digits) {
  long long scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const bool negative = x < 0;
  const auto r = static_cast<long long>(std::floor(std::fabs(x) * static_cast<double>(scale) + 0.5));
  std::ostringstream os;
  if (negative && r != 0) os << '-';
  os << r / scale;
  if (digits > 0) {
    std::string frac = std::to_string(r % scale);
    os << '.' << std::string(static_cast<std::size_t>(digits) - frac.size(), '0') << frac;
  }
  return os.str();
}

std::string rate_table_csv(const std::vector<RateTableRow>& rows) {
  std::ostringstream os;
  os << "n,s,H,A,B,C\n";
  for (const auto& r : rows) {
    os << r.n << ',' << r.s << ',' << format_fixed(r.rate_H) << ',' << format_fixed(r.rate_A) << ','
       << format_fixed(r.rate_B) << ',' << format_fixed(r.rate_C) << '\n';
  }
  return os.str();
}

nlohmann::json to_json(const CodeParameters& p, const FamilySpec& spec) {
  nlohmann::json j;
  j["spec"] = to_json(spec);
  j["ambient_dim"] = p.ambient_dim;
  j["codeword_dim"] = p.codeword_dim;
  j["size"] = to_decimal(p.size);
  j["size_formula"] = std::string(to_string(p.size_formula));
  j["log_size"] = p.log_size;
  j["min_distance_stated"] = p.min_distance_stated;
  j["min_distance_proof"] = p.min_distance_proof;
  j["normalized_weight"] = p.normalized_weight;
  j["rate"] = p.rate;
  j["normalized_min_distance"] = p.normalized_min_distance;
  j["delta_lower_bound"] = p.delta_lower_bound ? nlohmann::json(*p.delta_lower_bound) : nlohmann::json(nullptr);
  j["validity_warnings"] = p.validity_warnings;
  return j;
}

}  // namespace rrcodes
