#include "rrcodes/realize.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <random>
#include <thread>
#include <tuple>

#include "rrcodes/counting.hpp"
#include "rrcodes/error.hpp"
#include "rrcodes/params.hpp"

namespace rrcodes::realize {

using gf::Element;
using gf::FieldPtr;
using gf::Matrix;

std::vector<RationalPlace> rational_places(const gf::Field& field) {
  std::vector<RationalPlace> places;
  places.reserve(field.size() + 1);
  for (std::uint32_t i = 0; i < field.size(); ++i) places.push_back({field.element(i)});
  places.push_back({std::nullopt});
  return places;
}

// ---------------------------------------------------------------------------

Subspace::Subspace(const Matrix& generators) : basis_(generators.field(), 0, generators.cols()) {
  auto echelon = gf::rref(generators);
  echelon.matrix.truncate_rows(echelon.rank);
  basis_ = std::move(echelon.matrix);
  pivots_ = std::move(echelon.pivots);
}

void Subspace::reduce(std::span<Element> v) const {
  const gf::Field& f = *field();
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    const Element lead = v[pivots_[r]];
    if (!lead.is_zero()) f.sub_scaled(v, basis_.row(r), lead);
  }
}

bool Subspace::contains(std::span<const Element> v) const {
  std::vector<Element> work(v.begin(), v.end());
  reduce(work);
  return std::all_of(work.begin(), work.end(), [](Element e) { return e.is_zero(); });
}

bool operator<(const Subspace& a, const Subspace& b) {
  if (a.basis_.rows() != b.basis_.rows()) return a.basis_.rows() < b.basis_.rows();
  return a.basis_.data() < b.basis_.data();
}

namespace {

void require_compatible(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "ambient dimensions " + std::to_string(u.ambient_dim()) + " and " +
                                                  std::to_string(v.ambient_dim()));
  }
  if (!u.field()->same_as(*v.field())) throw Error(ErrorCode::FieldMismatch, "subspaces over different fields");
}

}  // namespace

std::size_t sum_dim(const Subspace& u, const Subspace& v) {
  require_compatible(u, v);
  Matrix residual = v.basis();
  for (std::size_t r = 0; r < residual.rows(); ++r) u.reduce(residual.row(r));
  return u.dim() + gf::rank(residual);
}

long long subspace_distance(const Subspace& u, const Subspace& v) {
  const auto s = static_cast<long long>(sum_dim(u, v));
  return 2 * s - static_cast<long long>(u.dim()) - static_cast<long long>(v.dim());
}

long long intersection_dim(const Subspace& u, const Subspace& v) {
  const auto s = static_cast<long long>(sum_dim(u, v));
  return static_cast<long long>(u.dim()) + static_cast<long long>(v.dim()) - s;
}

// ---------------------------------------------------------------------------

Matrix embed_generators(const Divisor& d, int k, long long c, const FieldPtr& field) {
  const std::size_t q = field->size();
  if (d.size() != q + 1) {
    throw Error(ErrorCode::InvalidArgument,
                "divisor has " + std::to_string(d.size()) + " entries, P^1 has " + std::to_string(q + 1) + " places");
  }
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (static_cast<long long>(k) * d[i] > c) {
      throw Error(ErrorCode::AmbientOverflow, "k*m = " + std::to_string(static_cast<long long>(k) * d[i]) +
                                                  " exceeds ambient multiplier " + std::to_string(c) + " at place " +
                                                  std::to_string(i));
    }
  }
  const std::size_t ambient = static_cast<std::size_t>(c) * (q + 1) + 1;
  const long long top = static_cast<long long>(k) * d.degree();
  if (top < 0) return Matrix(field, 0, ambient);

  gf::Poly base = gf::Poly::constant(field, field->one());
  for (std::size_t a = 0; a < q; ++a) {
    const auto e = static_cast<unsigned>(c - static_cast<long long>(k) * d[a]);
    base = base * gf::poly_linear_power(field, field->element(static_cast<std::uint32_t>(a)), e);
  }
  const auto rows = static_cast<std::size_t>(top) + 1;
  Matrix m(field, rows, ambient);
  for (std::size_t j = 0; j < rows; ++j) {
    for (std::size_t i = 0; i < base.coeffs().size(); ++i) m.at(j, i + j) = base.coeffs()[i];
  }
  return m;
}

Subspace embed_basis(const Divisor& d, int k, long long c, const FieldPtr& field) {
  return Subspace(embed_generators(d, k, c, field));
}

namespace {

FieldPtr genus_zero_field(const FamilySpec& spec) {
  spec.validate();
  if (spec.curve.g != 0) {
    throw Error(ErrorCode::GenusUnsupported,
                "explicit codewords exist only for g = 0, got g = " + std::to_string(spec.curve.g));
  }
  auto field = gf::field_of_order(static_cast<std::uint64_t>(spec.curve.q));
  if (static_cast<std::int64_t>(spec.curve.n) != spec.curve.q + 1) {
    throw Error(ErrorCode::InvalidArgument, "P^1(F_q) has n = q + 1 = " + std::to_string(spec.curve.q + 1) +
                                                " places, got n = " + std::to_string(spec.curve.n));
  }
  return field;
}

}  // namespace

std::vector<Codeword> realize_family(const FamilySpec& spec, std::size_t cap) {
  const auto field = genus_zero_field(spec);
  const BigCount size = count_family(spec).value;
  if (size > cap) {
    throw Error(ErrorCode::CapExceeded, "family has " + to_decimal(size) + " codewords, cap is " + std::to_string(cap));
  }
  const long long c = ambient_multiplier(spec);
  std::vector<Codeword> out;
  DivisorStream stream(spec, cap);
  while (auto d = stream.next()) {
    Subspace space = embed_basis(*d, spec.k, c, field);
    out.push_back({std::move(*d), std::move(space)});
  }
  return out;
}

std::optional<std::pair<Divisor, Divisor>> witness_pair(const FamilySpec& spec) {
  spec.validate();
  const auto n = static_cast<std::size_t>(spec.curve.n);
  if (n >= 3) {
    Divisor v1 = Divisor::zero(n), v2 = Divisor::zero(n);
    v1[0] = v2[0] = spec.s - 1;
    v1[1] = 1;
    v2[2] = 1;
    if (family_contains(spec, v1) && family_contains(spec, v2)) return std::make_pair(v1, v2);
  }
  constexpr std::size_t kSearchLimit = 1000;
  DivisorStream stream(spec);
  for (std::size_t t = 0; t < kSearchLimit; ++t) {
    auto v = stream.next();
    if (!v) break;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        Divisor w = *v;
        --w[i];
        ++w[j];
        if (family_contains(spec, w)) return std::make_pair(*v, w);
      }
    }
  }
  return std::nullopt;
}

unsigned worker_count(unsigned requested) {
  unsigned n = requested > 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("RRCODES_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap > 0) n = std::min(n, static_cast<unsigned>(cap));
  }
  return n;
}

std::size_t VerificationReport::finding_count() const {
  return static_cast<std::size_t>(std::count_if(discrepancies.begin(), discrepancies.end(), [](const Discrepancy& d) {
    return d.severity == Discrepancy::Severity::Finding;
  }));
}

namespace {

constexpr std::size_t kStoredPerLaw = 16;

struct PairTally {
  std::size_t pairs = 0;
  bool intersection_ok = true;
  bool sum_ok = true;
  std::optional<std::tuple<long long, std::size_t, std::size_t>> best;  // (distance, i, j)
  std::vector<Discrepancy> failures;
  std::map<std::string, std::size_t> per_law;
  std::size_t failure_count = 0;

  void fail(Discrepancy d) {
    ++failure_count;
    if (per_law[d.law]++ < kStoredPerLaw) failures.push_back(std::move(d));
  }
};

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

void check_pairs(const std::vector<Codeword>& words, std::span<const std::pair<std::uint32_t, std::uint32_t>> pairs,
                 const FamilySpec& spec, const FieldPtr& field, bool containment, PairTally& tally) {
  const long long c = ambient_multiplier(spec);
  const long long k = spec.k;
  for (const auto& [i, j] : pairs) {
    const Codeword& a = words[i];
    const Codeword& b = words[j];
    const auto sum = static_cast<long long>(sum_dim(a.space, b.space));
    const auto da = static_cast<long long>(a.space.dim());
    const auto db = static_cast<long long>(b.space.dim());
    const long long inter = da + db - sum;
    const long long dist = 2 * sum - da - db;
    ++tally.pairs;

    const auto candidate = std::make_tuple(dist, static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    if (!tally.best || candidate < *tally.best) tally.best = candidate;

    const Divisor lower = pointwise_min(a.divisor, b.divisor);
    const long long lower_deg = k * lower.degree();
    const long long expected_inter = lower_deg < 0 ? 0 : lower_deg + 1;
    if (inter != expected_inter) {
      tally.intersection_ok = false;
      tally.fail({Discrepancy::Severity::Failure, "intersection", a.divisor, b.divisor, expected_inter, inter});
    }
    if (containment && lower_deg >= 0) {
      const Matrix gens = embed_generators(lower, spec.k, c, field);
      for (std::size_t r = 0; r < gens.rows(); ++r) {
        if (!a.space.contains(gens.row(r)) || !b.space.contains(gens.row(r))) {
          tally.intersection_ok = false;
          tally.fail({Discrepancy::Severity::Failure, "intersection_containment", a.divisor, b.divisor, 1, 0});
          break;
        }
      }
    }

    const Divisor upper = pointwise_max(a.divisor, b.divisor);
    const long long upper_dim = k * upper.degree() + 1;
    if (sum > upper_dim) {
      tally.sum_ok = false;
      tally.fail({Discrepancy::Severity::Failure, "sum_bound", a.divisor, b.divisor, upper_dim, sum});
    }
  }
}

}  // namespace

VerificationReport verify(const FamilySpec& spec, const VerifyOptions& options) {
  const auto field = genus_zero_field(spec);
  const CodeParameters params = code_parameters(spec);

  VerificationReport report;
  report.spec = spec;
  report.seed = options.seed;
  report.stated_min_distance = params.min_distance_stated;
  report.proof_min_distance = params.min_distance_proof;

  std::map<std::string, std::size_t> per_law;
  auto record = [&](Discrepancy d) {
    if (d.severity == Discrepancy::Severity::Failure) ++report.failure_count;
    if (per_law[d.law]++ < kStoredPerLaw) report.discrepancies.push_back(std::move(d));
  };

  const std::vector<Codeword> words = realize_family(spec, options.realize_cap);
  report.codewords_checked = words.size();
  report.family_size = static_cast<std::size_t>(params.size);

  // dimension law
  const auto ell = static_cast<long long>(spec.k) * spec.s + 1;
  for (const auto& w : words) {
    if (static_cast<long long>(w.space.dim()) != ell) {
      report.dims_ok = false;
      record({Discrepancy::Severity::Failure, "dimension", w.divisor, std::nullopt, ell,
              static_cast<long long>(w.space.dim())});
    }
  }

  // injectivity and size
  std::vector<std::size_t> order(words.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return words[x].space < words[y].space; });
  for (std::size_t t = 1; t < order.size(); ++t) {
    const auto& a = words[order[t - 1]];
    const auto& b = words[order[t]];
    if (a.space == b.space) {
      report.all_distinct = false;
      record({Discrepancy::Severity::Failure, "injectivity", a.divisor, b.divisor, 1, 0});
    }
  }
  if (words.size() != report.family_size) {
    report.count_ok = false;
    record({Discrepancy::Severity::Failure, "size", std::nullopt, std::nullopt,
            static_cast<long long>(report.family_size), static_cast<long long>(words.size())});
  }

  // pairs
  using IndexPair = std::pair<std::uint32_t, std::uint32_t>;
  std::vector<IndexPair> pairs;
  const std::size_t m = words.size();
  if (m <= options.pair_cap) {
    pairs.reserve(m * (m - (m > 0)) / 2);
    for (std::uint32_t i = 0; i < m; ++i) {
      for (std::uint32_t j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
    }
  } else {
    report.sampled = true;
    const std::size_t budget = options.pair_cap * (options.pair_cap - (options.pair_cap > 0)) / 2;
    std::mt19937_64 rng(options.seed);
    pairs.reserve(budget);
    while (pairs.size() < budget) {
      auto i = static_cast<std::uint32_t>(bounded(rng, m));
      auto j = static_cast<std::uint32_t>(bounded(rng, m));
      if (i == j) continue;
      if (i > j) std::swap(i, j);
      pairs.emplace_back(i, j);
    }
  }

  const auto witness = witness_pair(spec);
  std::optional<IndexPair> witness_index;
  if (witness) {
    auto locate = [&](const Divisor& d) {
      auto it = std::lower_bound(words.begin(), words.end(), d,
                                 [](const Codeword& w, const Divisor& x) { return w.divisor < x; });
      return static_cast<std::uint32_t>(it - words.begin());
    };
    std::uint32_t i = locate(witness->first), j = locate(witness->second);
    if (i < m && j < m) {
      if (i > j) std::swap(i, j);
      witness_index = IndexPair{i, j};
      if (report.sampled) pairs.push_back(*witness_index);
    }
  }

  const unsigned threads = std::max(1u, std::min<unsigned>(worker_count(options.threads),
                                                           static_cast<unsigned>(std::max<std::size_t>(pairs.size() / 4096, 1))));
  std::vector<PairTally> tallies(threads);
  {
    const std::span<const IndexPair> all(pairs);
    const std::size_t chunk = (pairs.size() + threads - 1) / threads;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t begin = std::min(pairs.size(), t * chunk);
      const std::size_t end = std::min(pairs.size(), begin + chunk);
      auto job = [&, t, begin, end] {
        check_pairs(words, all.subspan(begin, end - begin), spec, field, options.check_containment, tallies[t]);
      };
      if (threads == 1) {
        job();
      } else {
        pool.emplace_back(job);
      }
    }
    for (auto& th : pool) th.join();
  }

  std::optional<std::tuple<long long, std::size_t, std::size_t>> best;
  for (auto& t : tallies) {
    report.pairs_checked += t.pairs;
    report.intersection_formula_ok = report.intersection_formula_ok && t.intersection_ok;
    report.sum_law_ok = report.sum_law_ok && t.sum_ok;
    if (t.best && (!best || *t.best < *best)) best = t.best;
    // stored entries are a prefix per law; unstored ones still count as failures
    report.failure_count += t.failure_count;
    for (auto& d : t.failures) {
      --report.failure_count;
      record(std::move(d));
    }
  }

  if (best) {
    const auto [dist, i, j] = *best;
    report.empirical_min_distance = dist;
    report.min_distance_pair = std::make_pair(words[i].divisor, words[j].divisor);
    if (dist != params.min_distance_proof) {
      record({Discrepancy::Severity::Failure, "distance_proof", words[i].divisor, words[j].divisor,
              params.min_distance_proof, dist});
    }
    if (dist != params.min_distance_stated) {
      record({Discrepancy::Severity::Finding, "distance_stated", words[i].divisor, words[j].divisor,
              params.min_distance_stated, dist});
    }
  }
  if (witness_index) {
    const auto d = subspace_distance(words[witness_index->first].space, words[witness_index->second].space);
    report.witness_distance = d;
    if (d != params.min_distance_proof) {
      record({Discrepancy::Severity::Failure, "witness_pair", witness->first, witness->second,
              params.min_distance_proof, d});
    }
  }
  return report;
}

nlohmann::json to_json(const VerificationReport& r) {
  using nlohmann::json;
  json j;
  j["spec"] = to_json(r.spec);
  j["seed"] = r.seed;
  j["sampled"] = r.sampled;
  j["codewords_checked"] = r.codewords_checked;
  j["family_size"] = r.family_size;
  j["pairs_checked"] = r.pairs_checked;
  j["dims_ok"] = r.dims_ok;
  j["all_distinct"] = r.all_distinct;
  j["count_ok"] = r.count_ok;
  j["intersection_formula_ok"] = r.intersection_formula_ok;
  j["sum_law_ok"] = r.sum_law_ok;
  j["empirical_min_distance"] = r.empirical_min_distance ? json(*r.empirical_min_distance) : json(nullptr);
  j["min_distance_pair"] = r.min_distance_pair
                               ? json::array({to_json(r.min_distance_pair->first), to_json(r.min_distance_pair->second)})
                               : json(nullptr);
  j["witness_distance"] = r.witness_distance ? json(*r.witness_distance) : json(nullptr);
  j["stated_min_distance"] = r.stated_min_distance;
  j["proof_min_distance"] = r.proof_min_distance;
  json list = json::array();
  for (const auto& d : r.discrepancies) {
    json e;
    e["severity"] = d.severity == Discrepancy::Severity::Finding ? "finding" : "failure";
    e["law"] = d.law;
    e["divisor1"] = d.first ? to_json(*d.first) : json(nullptr);
    e["divisor2"] = d.second ? to_json(*d.second) : json(nullptr);
    e["expected"] = d.expected;
    e["observed"] = d.observed;
    list.push_back(std::move(e));
  }
  j["discrepancies"] = std::move(list);
  j["failure_count"] = r.failure_count;
  j["finding_count"] = r.finding_count();
  j["passed"] = r.passed();
  return j;
}

}  // namespace rrcodes::realize
