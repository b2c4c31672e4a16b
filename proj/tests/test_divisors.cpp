#include <doctest.h>

#include <algorithm>
#include <functional>

#include "rrcodes/counting.hpp"
#include "rrcodes/divisors.hpp"
#include "rrcodes/error.hpp"

using namespace rrcodes;

namespace {

FamilySpec make(Family f, int n, int s, std::optional<int> w = std::nullopt, int k = 1, int g = 0) {
  return FamilySpec{f, CurveDescriptor{2, n, g}, k, s, w};
}

// Every vector in [lo, hi]^n with the given sum, by odometer over the full box.
std::vector<Divisor> brute_force(int n, long long s, long long lo, long long hi) {
  std::vector<Divisor> out;
  std::vector<int> v(static_cast<std::size_t>(n), static_cast<int>(lo));
  while (true) {
    long long sum = 0;
    for (int x : v) sum += x;
    if (sum == s) out.emplace_back(v);
    std::size_t i = v.size();
    while (i-- > 0) {
      if (v[i] < hi) {
        ++v[i];
        std::fill(v.begin() + static_cast<std::ptrdiff_t>(i) + 1, v.end(), static_cast<int>(lo));
        break;
      }
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an rrcodes::Error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("degree") {
  CHECK(Divisor{1, 1, 0, 0}.degree() == 2);
  CHECK(Divisor::zero(5).degree() == 0);
  CHECK(degree(Divisor{-2, 3, 1}) == 2);
}

TEST_CASE("pointwise_min") {
  CHECK(pointwise_min(Divisor{2, 0, 0}, Divisor{1, 1, 0}) == Divisor{1, 0, 0});
  const Divisor d{3, -1, 4};
  CHECK(pointwise_min(d, d) == d);
  CHECK(pointwise_min(Divisor{0, 3}, Divisor{3, 0}) == Divisor{0, 0});
  CHECK(pointwise_max(Divisor{0, 3}, Divisor{3, 0}) == Divisor{3, 3});
  CHECK(code_of([] { pointwise_min(Divisor{1, 2}, Divisor{1, 2, 3}); }) == ErrorCode::LengthMismatch);
}

TEST_CASE("enumerate_family examples") {
  const auto h = enumerate_family(make(Family::H, 4, 2));
  CHECK(h.size() == 6);
  for (const auto& d : h) {
    CHECK(d.degree() == 2);
    CHECK(std::all_of(d.begin(), d.end(), [](int m) { return m == 0 || m == 1; }));
  }
  CHECK(std::is_sorted(h.begin(), h.end()));

  const auto a = enumerate_family(make(Family::A, 2, 2));
  CHECK(a == std::vector<Divisor>{{0, 2}, {1, 1}, {2, 0}});

  const auto spec_c = make(Family::C, 3, 2, 2);
  const auto c = enumerate_family(spec_c);
  CHECK(c == brute_force(3, 2, -2, 2));
  CHECK(BigCount(c.size()) == count_family(spec_c).value);
}

TEST_CASE("enumerate_family is lexicographic and matches brute force") {
  for (int n = 1; n <= 5; ++n) {
    for (int s = 1; s <= 5; ++s) {
      for (int w = 1; w <= 3; ++w) {
        for (Family f : {Family::H, Family::A, Family::B, Family::C}) {
          const bool weighted = f == Family::B || f == Family::C;
          FamilySpec spec = make(f, n, s, weighted ? std::optional<int>(w) : std::nullopt);
          if (!weighted && w > 1) continue;
          if (f == Family::H && s > n) continue;
          if (weighted && s > n * w) continue;
          const auto r = multiplicity_range(spec);
          CAPTURE(to_string(f));
          CAPTURE(n);
          CAPTURE(s);
          CAPTURE(w);
          CHECK(enumerate_family(spec) == brute_force(n, s, r.lo, r.hi));
        }
      }
    }
  }
}

TEST_CASE("enumerated counts equal the counting formulas") {
  for (int n = 1; n <= 6; ++n) {
    for (int s = 1; s <= 6; ++s) {
      for (int w = 1; w <= 4; ++w) {
        for (Family f : {Family::H, Family::A, Family::B, Family::C}) {
          const bool weighted = f == Family::B || f == Family::C;
          if (!weighted && w > 1) continue;
          FamilySpec spec = make(f, n, s, weighted ? std::optional<int>(w) : std::nullopt);
          if (f == Family::H && s > n) continue;
          if (weighted && s > n * w) continue;
          const auto all = enumerate_family(spec);
          CHECK(BigCount(all.size()) == count_family(spec).value);
          for (const auto& d : all) REQUIRE(family_contains(spec, d));
        }
      }
    }
  }
}

TEST_CASE("enumeration cap") {
  const auto spec = make(Family::A, 6, 4);  // 126 divisors
  CHECK(enumerate_family(spec, 126).size() == 126);
  CHECK(code_of([&] { enumerate_family(spec, 125); }) == ErrorCode::CapExceeded);
  DivisorStream stream(spec, 10);
  for (int i = 0; i < 10; ++i) CHECK(stream.next().has_value());
  CHECK_THROWS_AS(stream.next(), Error);
}

TEST_CASE("family_contains") {
  CHECK(family_contains(make(Family::H, 3, 1), Divisor{1, 0, 0}));
  CHECK_FALSE(family_contains(make(Family::H, 3, 2), Divisor{2, 0, 0}));
  const auto c = make(Family::C, 8, 2, 3);
  CHECK(multiplicity_range(c).lo == -19);
  CHECK_FALSE(family_contains(c, Divisor{-20, 3, 3, 3, 3, 3, 3, 3}));
  CHECK(family_contains(c, Divisor{-19, 3, 3, 3, 3, 3, 3, 3}));
  CHECK_FALSE(family_contains(c, Divisor{1, 1}));  // wrong length
}

TEST_CASE("family inclusions") {
  for (int n = 2; n <= 5; ++n) {
    for (int s = 1; s <= n; ++s) {
      for (int w = 1; w <= s; ++w) {
        const auto h = make(Family::H, n, s);
        const auto a = make(Family::A, n, s);
        const auto b = make(Family::B, n, s, w);
        const auto c = make(Family::C, n, s, w);
        for (const auto& d : enumerate_family(h)) {
          CHECK(family_contains(b, d));
          CHECK(family_contains(a, d));
        }
        for (const auto& d : enumerate_family(a)) {
          const bool bounded = std::all_of(d.begin(), d.end(), [w](int m) { return m <= w; });
          CHECK(family_contains(b, d) == bounded);
        }
        for (const auto& d : enumerate_family(b)) CHECK(family_contains(c, d));
      }
    }
  }
}

TEST_CASE("distinct divisors of equal degree meet in degree at most s-1") {
  for (int n = 2; n <= 4; ++n) {
    for (int s = 1; s <= 4; ++s) {
      const auto all = enumerate_family(make(Family::A, n, s));
      for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) CHECK(pointwise_min(all[i], all[j]).degree() <= s - 1);
    }
  }
}

TEST_CASE("spec validation") {
  CHECK(code_of([] { make(Family::H, 3, 4).validate(); }) == ErrorCode::InfeasibleFamily);
  CHECK(code_of([] { enumerate_family(make(Family::H, 3, 4)); }) == ErrorCode::InfeasibleFamily);
  CHECK(code_of([] { make(Family::B, 3, 7, 2).validate(); }) == ErrorCode::InfeasibleFamily);
  CHECK(code_of([] { make(Family::B, 3, 2).validate(); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { make(Family::H, 3, 2, 1).validate(); }) == ErrorCode::InvalidArgument);
  CHECK_NOTHROW(make(Family::A, 3, 7).validate());  // s > n is allowed for A

  // soft conditions only warn
  const auto low_k = make(Family::A, 3, 2, std::nullopt, 1, 2);
  CHECK_NOTHROW(low_k.validate());
  CHECK(low_k.warnings().size() == 1);
  CHECK(make(Family::B, 8, 1, 3).warnings().size() == 1);
  CHECK(make(Family::B, 8, 3, 3).warnings().empty());
}

TEST_CASE("json round trip") {
  const FamilySpec spec{Family::C, CurveDescriptor{16, 8, 1}, 5, 2, 3};
  const auto j = to_json(spec);
  CHECK(j.dump() == R"({"family":"C","g":1,"k":5,"n":8,"q":16,"s":2,"w":3})");
  CHECK(spec_from_json(j) == spec);
  const FamilySpec h{Family::H, CurveDescriptor{4, 5, 0}, 2, 3, std::nullopt};
  CHECK_FALSE(to_json(h).contains("w"));
  CHECK(spec_from_json(to_json(h)) == h);

  const Divisor d{-2, 0, 5};
  CHECK(to_json(d).dump() == "[-2,0,5]");
  CHECK(divisor_from_json(to_json(d)) == d);
  CHECK_THROWS_AS(spec_from_json(nlohmann::json::object()), Error);
}
