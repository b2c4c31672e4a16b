#ifndef RRCODES_GF_HPP
#define RRCODES_GF_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace rrcodes::gf {

// An element of GF(p^m), stored as the integer sum c_i p^i of its
// coefficient vector over GF(p) with respect to the field's modulus.
struct Element {
  std::uint16_t value = 0;

  constexpr auto operator<=>(const Element&) const = default;
  constexpr bool is_zero() const { return value == 0; }
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// GF(p^m) with p^m <= 2^16. Immutable after construction.
//
// Multiplication goes through full log/antilog tables. For q <= 256 dense
// addition/multiplication tables are also built and used on the hot paths.
class Field {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return m_; }
  std::uint32_t size() const { return q_; }
  // Monic irreducible polynomial over GF(p), coefficients low-to-high.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  Element primitive_element() const { return generator_; }

  Element zero() const { return Element{0}; }
  Element one() const { return Element{1}; }
  // Element with canonical index i (0 <= i < q).
  Element element(std::uint32_t i) const;
  // Image of an integer under Z -> GF(p) -> GF(q).
  Element from_integer(long long v) const;

  Element add(Element a, Element b) const {
    if (dense_) return Element{add_[index(a, b)]};
    return add_slow(a, b);
  }
  Element neg(Element a) const { return Element{neg_[a.value]}; }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element mul(Element a, Element b) const {
    if (dense_) return Element{mul_[index(a, b)]};
    if (a.is_zero() || b.is_zero()) return zero();
    return Element{exp_[log_[a.value] + log_[b.value]]};
  }
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::uint64_t e) const;

  // dst[i] -= f * src[i]
  void sub_scaled(std::span<Element> dst, std::span<const Element> src, Element f) const;
  // row[i] *= f
  void scale(std::span<Element> row, Element f) const;

  std::string to_string(Element a) const;

  bool same_as(const Field& other) const { return p_ == other.p_ && m_ == other.m_; }

  friend FieldPtr field_new(std::uint32_t p, std::uint32_t m);

 private:
  Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus);

  std::size_t index(Element a, Element b) const {
    return static_cast<std::size_t>(a.value) * q_ + b.value;
  }
  Element add_slow(Element a, Element b) const;
  Element mul_slow(Element a, Element b) const;
  void build_tables();

  std::uint32_t p_;
  std::uint32_t m_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  Element generator_{};
  std::vector<std::uint16_t> exp_;  // length 2(q-1), so exp_[log a + log b] needs no reduction
  std::vector<std::uint32_t> log_;
  std::vector<std::uint16_t> neg_;
  bool dense_ = false;
  std::vector<std::uint16_t> add_;
  std::vector<std::uint16_t> mul_;
};

// Throws Error{NotPrime} if p is composite, Error{TooLarge} if p^m > 2^16.
// The modulus is the irreducible monic degree-m polynomial whose coefficient
// vector, read as base-p digits (constant term least significant), is smallest.
FieldPtr field_new(std::uint32_t p, std::uint32_t m);

// GF(q) for a prime power q.
FieldPtr field_of_order(std::uint64_t q);

bool is_prime(std::uint64_t n);

// Irreducibility over GF(p) by trial division with every monic polynomial of
// degree 1..deg/2. Coefficients low-to-high; the polynomial must be monic.
bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p);

// ---------------------------------------------------------------------------
// Univariate polynomials over GF(q)

class Poly {
 public:
  // Degree of the zero polynomial.
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  explicit Poly(FieldPtr field);
  Poly(FieldPtr field, std::vector<Element> coeffs);

  static Poly constant(FieldPtr field, Element c);
  static Poly monomial(FieldPtr field, Element c, std::size_t degree);

  const FieldPtr& field() const { return field_; }
  const std::vector<Element>& coeffs() const { return coeffs_; }
  Element coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Element{}; }
  int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  Element evaluate(Element x) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);

  std::string to_string() const;

 private:
  void normalize();

  FieldPtr field_;
  std::vector<Element> coeffs_;
};

// Throws Error{FieldMismatch} on different fields.
Poly poly_mul(const Poly& a, const Poly& b);

// (x - a)^e
Poly poly_linear_power(const FieldPtr& field, Element a, unsigned e);

// ---------------------------------------------------------------------------
// Dense matrices over GF(q)

class Matrix {
 public:
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);

  static Matrix identity(FieldPtr field, std::size_t n);
  static Matrix from_rows(FieldPtr field, const std::vector<std::vector<Element>>& rows);

  const FieldPtr& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Element& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Element at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<Element> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Element> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  const std::vector<Element>& data() const { return data_; }

  // Keeps the first n rows.
  void truncate_rows(std::size_t n);

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

struct RowEchelon {
  Matrix matrix;                    // same shape as the input, zero rows last
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Reduced row-echelon form. Pivots are chosen as the first nonzero entry
// scanning rows top-down in each column, so the output is canonical.
RowEchelon rref(Matrix m);

std::size_t rank(const Matrix& m);

// Rank of the vertical stack [a; b]. Throws DimensionMismatch / FieldMismatch.
std::size_t stack_rank(const Matrix& a, const Matrix& b);

Matrix vstack(const Matrix& a, const Matrix& b);

}  // namespace rrcodes::gf

#endif  // RRCODES_GF_HPP
