#ifndef RRCODES_DIVISORS_HPP
#define RRCODES_DIVISORS_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace rrcodes {

// Rational places are abstract indices 0..n-1 at this layer.
struct CurveDescriptor {
  std::int64_t q = 2;
  int n = 1;  // number of rational places
  int g = 0;  // genus

  bool operator==(const CurveDescriptor&) const = default;
};

// Integer multiplicity per rational place; entries may be negative.
class Divisor {
 public:
  Divisor() = default;
  explicit Divisor(std::vector<int> mults) : mults_(std::move(mults)) {}
  Divisor(std::initializer_list<int> mults) : mults_(mults) {}

  static Divisor zero(std::size_t n) { return Divisor(std::vector<int>(n, 0)); }

  std::size_t size() const { return mults_.size(); }
  int operator[](std::size_t i) const { return mults_[i]; }
  int& operator[](std::size_t i) { return mults_[i]; }
  const std::vector<int>& mults() const { return mults_; }
  auto begin() const { return mults_.begin(); }
  auto end() const { return mults_.end(); }

  long long degree() const;

  auto operator<=>(const Divisor&) const = default;

  std::string to_string() const;

 private:
  std::vector<int> mults_;
};

long long degree(const Divisor& d);

// Throws Error{LengthMismatch} on different lengths.
Divisor pointwise_min(const Divisor& a, const Divisor& b);
Divisor pointwise_max(const Divisor& a, const Divisor& b);

enum class Family { H, A, B, C };

std::string_view to_string(Family f);
// Accepts "H", "A", "B", "C" (case-insensitive).
Family parse_family(std::string_view s);

struct FamilySpec {
  Family family = Family::H;
  CurveDescriptor curve;
  int k = 1;
  int s = 1;
  std::optional<int> w;  // B and C only

  bool operator==(const FamilySpec&) const = default;

  // Throws InvalidArgument for malformed parameters and InfeasibleFamily when
  // the divisor set is empty (H with s > n; B/C with s > n*w).
  void validate() const;

  // Soft conditions: k <= 2g-2, and the B/C hypothesis w <= s.
  std::vector<std::string> warnings() const;
};

// Inclusive per-place multiplicity bounds of a family.
struct MultiplicityRange {
  long long lo = 0;
  long long hi = 0;
};

MultiplicityRange multiplicity_range(const FamilySpec& spec);

bool family_contains(const FamilySpec& spec, const Divisor& d);

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

// Lazy lexicographic enumeration of a family's divisors. Yielding more than
// `cap` divisors throws Error{CapExceeded}.
class DivisorStream {
 public:
  DivisorStream(const FamilySpec& spec, std::size_t cap = kDefaultEnumerationCap);

  std::optional<Divisor> next();
  std::size_t yielded() const { return yielded_; }

 private:
  bool fill_suffix(std::size_t from, long long remaining);
  bool advance();

  std::vector<long long> current_;
  long long lo_;
  long long hi_;
  long long s_;
  std::size_t cap_;
  std::size_t yielded_ = 0;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Divisor> enumerate_family(const FamilySpec& spec, std::size_t cap = kDefaultEnumerationCap);

// JSON: divisor as an array of n integers; spec as {family, q, n, g, k, s, w?}.
nlohmann::json to_json(const Divisor& d);
Divisor divisor_from_json(const nlohmann::json& j);
nlohmann::json to_json(const FamilySpec& spec);
FamilySpec spec_from_json(const nlohmann::json& j);

}  // namespace rrcodes

#endif  // RRCODES_DIVISORS_HPP
