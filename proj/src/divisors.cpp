#include "rrcodes/divisors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "rrcodes/error.hpp"

namespace rrcodes {

long long Divisor::degree() const { return std::accumulate(mults_.begin(), mults_.end(), 0LL); }

std::string Divisor::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < mults_.size(); ++i) os << (i ? "," : "") << mults_[i];
  os << ')';
  return os.str();
}

long long degree(const Divisor& d) { return d.degree(); }

namespace {

template <typename Op>
Divisor combine(const Divisor& a, const Divisor& b, Op op) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "divisors over " + std::to_string(a.size()) + " and " + std::to_string(b.size()) + " places");
  }
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = op(a[i], b[i]);
  return Divisor(std::move(out));
}

}  // namespace

Divisor pointwise_min(const Divisor& a, const Divisor& b) {
  return combine(a, b, [](int x, int y) { return std::min(x, y); });
}

Divisor pointwise_max(const Divisor& a, const Divisor& b) {
  return combine(a, b, [](int x, int y) { return std::max(x, y); });
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::H: return "H";
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
  }
  return "?";
}

Family parse_family(std::string_view s) {
  if (s.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(s[0]))) {
      case 'H': return Family::H;
      case 'A': return Family::A;
      case 'B': return Family::B;
      case 'C': return Family::C;
      default: break;
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown family '" + std::string(s) + "' (expected H, A, B or C)");
}

void FamilySpec::validate() const {
  if (curve.q < 2) throw Error(ErrorCode::InvalidArgument, "q must be >= 2");
  if (curve.n < 1) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  if (curve.g < 0) throw Error(ErrorCode::InvalidArgument, "g must be >= 0");
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be >= 1");
  if (s < 1) throw Error(ErrorCode::InvalidArgument, "s must be >= 1");
  const bool weighted = family == Family::B || family == Family::C;
  if (weighted && !w) throw Error(ErrorCode::InvalidArgument, "family " + std::string(to_string(family)) + " needs w");
  if (!weighted && w) {
    throw Error(ErrorCode::InvalidArgument, "family " + std::string(to_string(family)) + " takes no w");
  }
  if (weighted && *w < 1) throw Error(ErrorCode::InvalidArgument, "w must be >= 1");
  if (family == Family::H && s > curve.n) {
    throw Error(ErrorCode::InfeasibleFamily, "H needs s <= n, got s=" + std::to_string(s) + " n=" + std::to_string(curve.n));
  }
  if (weighted && static_cast<long long>(s) > static_cast<long long>(curve.n) * *w) {
    throw Error(ErrorCode::InfeasibleFamily, "s=" + std::to_string(s) + " exceeds n*w=" +
                                                 std::to_string(static_cast<long long>(curve.n) * *w));
  }
}

std::vector<std::string> FamilySpec::warnings() const {
  std::vector<std::string> out;
  if (k <= 2 * curve.g - 2) {
    out.push_back("k <= 2g-2: dimension and distance formulas are lower bounds, not exact");
  }
  if (w && *w > s) out.push_back("w > s: outside the standing hypothesis 0 < w <= s <= n*w");
  return out;
}

MultiplicityRange multiplicity_range(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::H: return {0, 1};
    case Family::A: return {0, spec.s};
    case Family::B: return {0, *spec.w};
    case Family::C: return {spec.s - static_cast<long long>(*spec.w) * (spec.curve.n - 1), *spec.w};
  }
  return {};
}

bool family_contains(const FamilySpec& spec, const Divisor& d) {
  if (d.size() != static_cast<std::size_t>(spec.curve.n)) return false;
  if (d.degree() != spec.s) return false;
  const auto [lo, hi] = multiplicity_range(spec);
  return std::all_of(d.begin(), d.end(), [lo, hi](int m) { return m >= lo && m <= hi; });
}

DivisorStream::DivisorStream(const FamilySpec& spec, std::size_t cap)
    : current_(static_cast<std::size_t>(spec.curve.n), 0), s_(spec.s), cap_(cap) {
  spec.validate();
  const auto r = multiplicity_range(spec);
  lo_ = r.lo;
  hi_ = r.hi;
}

// Lexicographically smallest assignment of positions [from, n) summing to
// `remaining`; leaves current_ untouched when infeasible.
bool DivisorStream::fill_suffix(std::size_t from, long long remaining) {
  const long long slots = static_cast<long long>(current_.size() - from);
  if (remaining < slots * lo_ || remaining > slots * hi_) return false;
  for (std::size_t j = from; j < current_.size(); ++j) {
    const long long after = static_cast<long long>(current_.size() - 1 - j);
    const long long v = std::max(lo_, remaining - after * hi_);
    current_[j] = v;
    remaining -= v;
  }
  return true;
}

bool DivisorStream::advance() {
  long long suffix = 0;
  for (std::size_t i = current_.size(); i-- > 0;) {
    if (i + 1 < current_.size()) {
      if (current_[i] < hi_ && fill_suffix(i + 1, suffix - 1)) {
        ++current_[i];
        return true;
      }
    }
    suffix += current_[i];
  }
  return false;
}

std::optional<Divisor> DivisorStream::next() {
  if (done_) return std::nullopt;
  const bool ok = started_ ? advance() : fill_suffix(0, s_);
  started_ = true;
  if (!ok) {
    done_ = true;
    return std::nullopt;
  }
  if (++yielded_ > cap_) {
    done_ = true;
    throw Error(ErrorCode::CapExceeded, "family has more than " + std::to_string(cap_) + " divisors");
  }
  std::vector<int> m(current_.begin(), current_.end());
  return Divisor(std::move(m));
}

std::vector<Divisor> enumerate_family(const FamilySpec& spec, std::size_t cap) {
  DivisorStream stream(spec, cap);
  std::vector<Divisor> out;
  while (auto d = stream.next()) out.push_back(std::move(*d));
  return out;
}

nlohmann::json to_json(const Divisor& d) { return nlohmann::json(d.mults()); }

Divisor divisor_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidArgument, "divisor must be a JSON array");
  return Divisor(j.get<std::vector<int>>());
}

nlohmann::json to_json(const FamilySpec& spec) {
  nlohmann::json j;
  j["family"] = std::string(to_string(spec.family));
  j["q"] = spec.curve.q;
  j["n"] = spec.curve.n;
  j["g"] = spec.curve.g;
  j["k"] = spec.k;
  j["s"] = spec.s;
  if (spec.w) j["w"] = *spec.w;
  return j;
}

FamilySpec spec_from_json(const nlohmann::json& j) {
  FamilySpec spec;
  try {
    spec.family = parse_family(j.at("family").get<std::string>());
    spec.curve.q = j.at("q").get<std::int64_t>();
    spec.curve.n = j.at("n").get<int>();
    spec.curve.g = j.at("g").get<int>();
    spec.k = j.at("k").get<int>();
    spec.s = j.at("s").get<int>();
    if (j.contains("w")) spec.w = j.at("w").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("bad family spec: ") + e.what());
  }
  return spec;
}

}  // namespace rrcodes
