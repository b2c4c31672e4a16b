#ifndef RRCODES_REALIZE_HPP
#define RRCODES_REALIZE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rrcodes/divisors.hpp"
#include "rrcodes/gf.hpp"

// Explicit codewords over the projective line P^1(F_q), n = q + 1 places.
//
// A function f in L(c * sum of all places) is stored as the polynomial
//   h = f * prod_{a in F_q} (x - a)^c,   deg h <= c n,
// in monomial coordinates 1, x, ..., x^{cn}. Then f lies in L(kV) exactly when
//   h = p(x) * prod_{a in F_q} (x - a)^{c - k m_a},   deg p <= k deg V,
// where the degree bound on p also accounts for the place at infinity.
namespace rrcodes::realize {

struct RationalPlace {
  std::optional<gf::Element> finite;  // nullopt is the place at infinity

  bool is_infinity() const { return !finite.has_value(); }
  bool operator==(const RationalPlace&) const = default;
};

// Finite places in element order, then infinity (index q).
std::vector<RationalPlace> rational_places(const gf::Field& field);

// A subspace of F_q^N held by its canonical reduced row-echelon basis.
class Subspace {
 public:
  // Row space of `generators`.
  explicit Subspace(const gf::Matrix& generators);

  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const gf::Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const gf::FieldPtr& field() const { return basis_.field(); }

  // Reduce v in place against this basis; the result is zero iff v lies in the span.
  void reduce(std::span<gf::Element> v) const;
  bool contains(std::span<const gf::Element> v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
  friend bool operator<(const Subspace& a, const Subspace& b);

 private:
  gf::Matrix basis_;
  std::vector<std::size_t> pivots_;
};

// dim(U + V), using U's echelon form. Throws DimensionMismatch.
std::size_t sum_dim(const Subspace& u, const Subspace& v);
// dim(U + V) - dim(U n V) = 2 dim(U + V) - dim U - dim V
long long subspace_distance(const Subspace& u, const Subspace& v);
// dim U + dim V - dim(U + V)
long long intersection_dim(const Subspace& u, const Subspace& v);

// Basis {x^j prod (x - a)^{c - k m_a} : 0 <= j <= k deg d} of L(kd) inside
// L(c * sum of places), for a divisor on the q + 1 places of P^1(F_q).
// Negative-degree divisors give the zero subspace. Throws AmbientOverflow when
// some k m_P > c, InvalidArgument when d does not have q + 1 entries.
gf::Matrix embed_generators(const Divisor& d, int k, long long c, const gf::FieldPtr& field);
Subspace embed_basis(const Divisor& d, int k, long long c, const gf::FieldPtr& field);

struct Codeword {
  Divisor divisor;
  Subspace space;
};

// Throws GenusUnsupported if g != 0, InvalidArgument if n != q + 1,
// CapExceeded (with the exact family size) if the family has more than cap divisors.
std::vector<Codeword> realize_family(const FamilySpec& spec, std::size_t cap);

// Two codewords at distance 2k: the pair L(k((s-1)P + Q)), L(k((s-1)P + R))
// when both lie in the family, otherwise a member V and V - P_i + P_j.
// nullopt when the family has a single divisor.
std::optional<std::pair<Divisor, Divisor>> witness_pair(const FamilySpec& spec);

struct VerifyOptions {
  std::size_t pair_cap = 2000;         // all pairs up to this many codewords, sampling above
  std::size_t realize_cap = 200'000;   // hard limit on realized codewords
  std::uint64_t seed = 0;
  unsigned threads = 0;                // 0: RRCODES_THREADS or hardware concurrency
  bool check_containment = true;       // also test L(k min) inside both codewords
};

struct Discrepancy {
  enum class Severity { Finding, Failure };
  Severity severity = Severity::Failure;
  std::string law;
  std::optional<Divisor> first;
  std::optional<Divisor> second;
  long long expected = 0;
  long long observed = 0;
};

struct VerificationReport {
  FamilySpec spec;
  std::uint64_t seed = 0;
  bool sampled = false;
  std::size_t codewords_checked = 0;
  std::size_t family_size = 0;
  std::size_t pairs_checked = 0;
  bool dims_ok = true;
  bool all_distinct = true;
  bool count_ok = true;
  bool intersection_formula_ok = true;
  bool sum_law_ok = true;
  std::optional<long long> empirical_min_distance;
  std::optional<std::pair<Divisor, Divisor>> min_distance_pair;
  std::optional<long long> witness_distance;
  long long stated_min_distance = 0;
  long long proof_min_distance = 0;
  std::vector<Discrepancy> discrepancies;
  std::size_t failure_count = 0;

  bool passed() const { return failure_count == 0; }
  std::size_t finding_count() const;
};

VerificationReport verify(const FamilySpec& spec, const VerifyOptions& options = {});

nlohmann::json to_json(const VerificationReport& report);

// Worker count: RRCODES_THREADS if set and positive, else hardware concurrency.
unsigned worker_count(unsigned requested = 0);

}  // namespace rrcodes::realize

#endif  // RRCODES_REALIZE_HPP
