#include <doctest.h>

#include <cmath>

#include "rrcodes/error.hpp"
#include "rrcodes/params.hpp"

using namespace rrcodes;

namespace {

FamilySpec g1(Family f, int n, int s, std::optional<int> w = std::nullopt, int k = 5) {
  return FamilySpec{f, CurveDescriptor{16, n, 1}, k, s, w};
}

// Rate from first principles: log_q of an exact count over N * l.
double rate_oracle(long long count, long long q, long long N, long long l) {
  return std::log(static_cast<double>(count)) / std::log(static_cast<double>(q)) / static_cast<double>(N * l);
}

}  // namespace

TEST_CASE("riemann_roch_dim") {
  using Kind = RiemannRochDim::Kind;
  CHECK(riemann_roch_dim(10, 1) == RiemannRochDim{Kind::Exact, 10});
  CHECK(riemann_roch_dim(0, 3) == RiemannRochDim{Kind::Exact, 1});
  CHECK(riemann_roch_dim(-2, 0) == RiemannRochDim{Kind::Exact, 0});
  CHECK(riemann_roch_dim(2, 2) == RiemannRochDim{Kind::LowerBound, 1});
  CHECK(riemann_roch_dim(1, 3) == RiemannRochDim{Kind::LowerBound, 0});
  CHECK(riemann_roch_dim(5, 3) == RiemannRochDim{Kind::Exact, 3});
}

TEST_CASE("ambient dimensions") {
  CHECK(ambient_dim(g1(Family::H, 8, 1)) == 40);
  CHECK(ambient_dim(g1(Family::A, 8, 2)) == 80);
  CHECK(ambient_dim(g1(Family::B, 8, 1, 3)) == 120);
  CHECK(ambient_dim(g1(Family::C, 8, 1, 3)) == 120);
  CHECK(ambient_dim(FamilySpec{Family::H, CurveDescriptor{2, 3, 0}, 2, 1, std::nullopt}) == 7);
  CHECK(codeword_dim(g1(Family::A, 8, 2)) == 10);
}

TEST_CASE("code_parameters for A at g = 1") {
  const auto p = code_parameters(g1(Family::A, 8, 2));
  CHECK(p.ambient_dim == 80);
  CHECK(p.codeword_dim == 10);
  CHECK(p.size == 36);
  CHECK(p.size_formula == CountFormula::Multiset);
  CHECK(p.log_size == doctest::Approx(std::log(36.0) / std::log(16.0)));
  CHECK(p.rate == doctest::Approx(rate_oracle(36, 16, 80, 10)).epsilon(1e-12));
  CHECK(format_fixed(p.rate) == "0.001616");
  CHECK(p.min_distance_stated == 10);
  CHECK(p.min_distance_proof == 10);
  CHECK(p.normalized_min_distance == doctest::Approx(0.5));
  REQUIRE(p.delta_lower_bound.has_value());
  CHECK(*p.delta_lower_bound == doctest::Approx(0.5));
  CHECK(p.validity_warnings.empty());
}

TEST_CASE("stated and proof distances at g = 0") {
  const FamilySpec a{Family::A, CurveDescriptor{2, 3, 0}, 2, 3, std::nullopt};
  const auto p = code_parameters(a);
  CHECK(p.codeword_dim == 7);
  CHECK(p.min_distance_stated == 6);
  CHECK(p.min_distance_proof == 4);
  CHECK(p.validity_warnings.size() == 1);
  CHECK_FALSE(p.delta_lower_bound.has_value());

  const FamilySpec h1{Family::H, CurveDescriptor{2, 3, 0}, 2, 1, std::nullopt};
  CHECK(code_parameters(h1).min_distance_stated == 4);
  CHECK(code_parameters(h1).min_distance_proof == 4);

  // s = 1 at g = 1: the constants are the whole intersection, so D = 2(k - 1)
  const auto s1 = code_parameters(g1(Family::H, 8, 1));
  CHECK(s1.min_distance_stated == 10);
  CHECK(s1.min_distance_proof == 8);
}

TEST_CASE("single-codeword family warns") {
  const auto p = code_parameters(FamilySpec{Family::H, CurveDescriptor{2, 3, 0}, 1, 3, std::nullopt});
  CHECK(p.size == 1);
  CHECK(p.log_size == 0.0);
  bool found = false;
  for (const auto& w : p.validity_warnings) found |= w.find("single codeword") != std::string::npos;
  CHECK(found);
}

TEST_CASE("rate examples") {
  CHECK(format_fixed(rate(g1(Family::H, 8, 1))) == "0.003750");
  CHECK(format_fixed(rate(g1(Family::B, 8, 1, 3))) == "0.001250");
  CHECK(rate(g1(Family::C, 14, 13, 3)) == doctest::Approx(rate_oracle(25518731280LL, 16, 210, 65)).epsilon(1e-12));
  CHECK(format_fixed(rate(g1(Family::C, 14, 13, 3))) == "0.000633");
  CHECK(format_fixed(rate(g1(Family::C, 13, 1, 3))) == "0.009441");
}

TEST_CASE("s = 1 makes A and H coincide") {
  for (int n = 2; n <= 14; ++n) {
    CHECK(code_parameters(g1(Family::A, n, 1)).size == code_parameters(g1(Family::H, n, 1)).size);
    CHECK(rate(g1(Family::A, n, 1)) == rate(g1(Family::H, n, 1)));
  }
}

TEST_CASE("table3 layout and sample rows") {
  const auto rows = table3();
  REQUIRE(rows.size() == 70);
  std::size_t i = 0;
  for (int n = 8; n <= 14; ++n)
    for (int s = 1; s < n; ++s, ++i) {
      CHECK(rows[i].n == n);
      CHECK(rows[i].s == s);
    }
  const auto fmt = [](const RateTableRow& r) {
    return format_fixed(r.rate_H) + "/" + format_fixed(r.rate_A) + "/" + format_fixed(r.rate_B) + "/" +
           format_fixed(r.rate_C);
  };
  CHECK(fmt(rows[0]) == "0.003750/0.003750/0.001250/0.008732");
  const auto row_12_6 = std::find_if(rows.begin(), rows.end(), [](auto& r) { return r.n == 12 && r.s == 6; });
  CHECK(fmt(*row_12_6) == "0.001368/0.000315/0.000624/0.001461");
  CHECK(fmt(rows.back()) == "0.000209/0.000099/0.000403/0.000633");

  const auto csv = rate_table_csv(rows);
  CHECK(csv.rfind("n,s,H,A,B,C\n8,1,0.003750,0.003750,0.001250,0.008732\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 71);
}

TEST_CASE("rate of C decreases in s for fixed n") {
  const auto rows = table3();
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].n == rows[i - 1].n) CHECK(rows[i].rate_C < rows[i - 1].rate_C);
}

TEST_CASE("general formulas reduce to the genus-one entries") {
  for (int n = 2; n <= 14; ++n) {
    for (int s = 1; s <= n; ++s) {
      for (int k = 1; k <= 6; ++k) {
        for (Family f : {Family::H, Family::A, Family::B, Family::C}) {
          const bool weighted = f == Family::B || f == Family::C;
          for (int w = 1; w <= (weighted ? 4 : 1); ++w) {
            const auto spec = g1(f, n, s, weighted ? std::optional<int>(w) : std::nullopt, k);
            if (weighted && s > n * w) continue;
            const auto p = code_parameters(spec);
            const auto e = genus_one_entry(spec);
            CAPTURE(to_string(f));
            CAPTURE(n);
            CAPTURE(s);
            CAPTURE(k);
            CAPTURE(w);
            CHECK(std::fabs(p.normalized_weight - e.normalized_weight) < 1e-12);
            CHECK(std::fabs(p.rate - e.rate) < 1e-12);
            CHECK(std::fabs(p.normalized_min_distance - e.normalized_min_distance) < 1e-12);
            CHECK(p.ambient_dim * p.codeword_dim == e.rate_denominator);
          }
        }
      }
    }
  }
  CHECK_THROWS_AS(genus_one_entry(FamilySpec{Family::H, CurveDescriptor{2, 3, 0}, 1, 1, std::nullopt}), Error);
}

TEST_CASE("normalized distance is the proof distance over twice the dimension") {
  for (int g = 0; g <= 3; ++g)
    for (int k = std::max(1, 2 * g - 1); k <= 2 * g + 5; ++k)
      for (int s = 2; s <= 10; ++s) {
        const auto p = code_parameters(FamilySpec{Family::A, CurveDescriptor{16, 12, g}, k, s, std::nullopt});
        const double from_dims = static_cast<double>(2 * k) / static_cast<double>(2 * p.codeword_dim);
        CHECK(p.normalized_min_distance == doctest::Approx(from_dims).epsilon(1e-14));
      }
}

TEST_CASE("delta lower bound is emitted exactly where it holds") {
  int withheld = 0;
  for (int g = 1; g <= 3; ++g)
    for (int k = 2 * g - 1; k <= 2 * g + 5; ++k)
      for (int s = 1; s <= 10; ++s) {
        const auto p = code_parameters(FamilySpec{Family::A, CurveDescriptor{16, 12, g}, k, s, std::nullopt});
        // exact comparison in integers: 1/(s + (1-g)/k) >= (2g-1)/((s+1)g-1)
        const long long lhs = static_cast<long long>(k) * ((s + 1) * g - 1);
        const long long rhs = static_cast<long long>(2 * g - 1) * (static_cast<long long>(k) * s + 1 - g);
        const bool holds = lhs >= rhs;
        CAPTURE(g);
        CAPTURE(k);
        CAPTURE(s);
        CHECK(p.delta_lower_bound.has_value() == holds);
        if (holds) CHECK(p.normalized_min_distance >= *p.delta_lower_bound - 1e-15);
        withheld += !holds;
      }
  CHECK(withheld == 124);
  CHECK_FALSE(code_parameters(FamilySpec{Family::A, CurveDescriptor{2, 3, 0}, 2, 2, std::nullopt})
                  .delta_lower_bound.has_value());
}

TEST_CASE("format_fixed") {
  CHECK(format_fixed(0.0037500) == "0.003750");
  CHECK(format_fixed(0.0037496) == "0.003750");
  CHECK(format_fixed(0.00000049) == "0.000000");
  CHECK(format_fixed(1.25, 1) == "1.3");
  CHECK(format_fixed(2.0, 0) == "2");
  CHECK(format_fixed(-0.0000001) == "0.000000");
}

TEST_CASE("json") {
  const auto spec = g1(Family::C, 8, 1, 3);
  const auto j = to_json(code_parameters(spec), spec);
  CHECK(j["size"] == "2035800");
  CHECK(j["size_formula"] == "U'");
  CHECK(j["ambient_dim"] == 120);
  CHECK(j["spec"]["w"] == 3);
  CHECK(j["delta_lower_bound"].is_number());
  const FamilySpec a{Family::A, CurveDescriptor{2, 3, 0}, 2, 3, std::nullopt};
  CHECK(to_json(code_parameters(a), a)["delta_lower_bound"].is_null());
}
