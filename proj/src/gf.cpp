#include "rrcodes/gf.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "rrcodes/error.hpp"

namespace rrcodes::gf {

namespace {

std::vector<std::uint32_t> to_digits(std::uint32_t v, std::uint32_t p, std::uint32_t m) {
  std::vector<std::uint32_t> d(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    d[i] = v % p;
    v /= p;
  }
  return d;
}

std::uint32_t from_digits(std::span<const std::uint32_t> d, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

// Remainder of a modulo the monic polynomial b over GF(p); both low-to-high.
std::vector<std::uint32_t> poly_mod_p(std::vector<std::uint32_t> a, std::span<const std::uint32_t> b,
                                      std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    if (lead != 0) {
      for (std::size_t i = 0; i <= db; ++i) {
        a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
      }
    }
    a.pop_back();
  }
  return a;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p) {
  if (poly.size() < 2) return false;
  const std::size_t deg = poly.size() - 1;
  std::vector<std::uint32_t> a(poly.begin(), poly.end());
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint32_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint32_t v = 0; v < count; ++v) {
      std::vector<std::uint32_t> divisor = to_digits(v, p, static_cast<std::uint32_t>(d));
      divisor.push_back(1);
      const auto r = poly_mod_p(a, divisor, p);
      if (std::all_of(r.begin(), r.end(), [](std::uint32_t c) { return c == 0; })) return false;
    }
  }
  return true;
}

FieldPtr field_new(std::uint32_t p, std::uint32_t m) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > Field::kMaxOrder) {
      throw Error(ErrorCode::TooLarge, std::to_string(p) + "^" + std::to_string(m) + " exceeds 2^16");
    }
  }
  for (std::uint32_t v = 0; v < q; ++v) {
    auto candidate = to_digits(v, p, m);
    candidate.push_back(1);
    if (is_irreducible(candidate, p)) {
      return FieldPtr(new Field(p, m, std::move(candidate)));
    }
  }
  // Irreducible polynomials of every degree exist over GF(p).
  throw Error(ErrorCode::InvalidArgument, "no irreducible modulus found");
}

FieldPtr field_of_order(std::uint64_t q) {
  if (q < 2) throw Error(ErrorCode::InvalidArgument, "field order must be >= 2");
  if (q > Field::kMaxOrder) throw Error(ErrorCode::TooLarge, std::to_string(q) + " exceeds 2^16");
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t m = 0;
  std::uint64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++m;
  }
  if (r != 1) throw Error(ErrorCode::InvalidArgument, std::to_string(q) + " is not a prime power");
  return field_new(static_cast<std::uint32_t>(p), m);
}

Field::Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), q_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < m_; ++i) q_ *= p_;
  build_tables();
}

Element Field::add_slow(Element a, Element b) const {
  if (p_ == 2) return Element{static_cast<std::uint16_t>(a.value ^ b.value)};
  if (m_ == 1) return Element{static_cast<std::uint16_t>((a.value + b.value) % p_)};
  std::uint32_t x = a.value, y = b.value, out = 0, place = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    out += ((x % p_ + y % p_) % p_) * place;
    x /= p_;
    y /= p_;
    place *= p_;
  }
  return Element{static_cast<std::uint16_t>(out)};
}

Element Field::mul_slow(Element a, Element b) const {
  const auto da = to_digits(a.value, p_, m_);
  const auto db = to_digits(b.value, p_, m_);
  std::vector<std::uint32_t> prod(2 * m_ - 1, 0);
  for (std::uint32_t i = 0; i < m_; ++i) {
    for (std::uint32_t j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  auto r = poly_mod_p(std::move(prod), modulus_, p_);
  r.resize(m_, 0);
  return Element{static_cast<std::uint16_t>(from_digits(r, p_))};
}

void Field::build_tables() {
  neg_.resize(q_);
  for (std::uint32_t v = 0; v < q_; ++v) {
    auto d = to_digits(v, p_, m_);
    for (auto& c : d) c = (p_ - c) % p_;
    neg_[v] = static_cast<std::uint16_t>(from_digits(d, p_));
  }

  // Smallest element of multiplicative order q-1.
  const std::uint32_t order = q_ - 1;
  for (std::uint32_t g = 1; g < q_; ++g) {
    Element x{static_cast<std::uint16_t>(g)};
    std::uint32_t k = 1;
    while (x != one()) {
      x = mul_slow(x, Element{static_cast<std::uint16_t>(g)});
      ++k;
    }
    if (k == order) {
      generator_ = Element{static_cast<std::uint16_t>(g)};
      break;
    }
  }

  exp_.assign(2 * static_cast<std::size_t>(order), 0);
  log_.assign(q_, 0);
  Element x = one();
  for (std::uint32_t i = 0; i < order; ++i) {
    exp_[i] = x.value;
    exp_[i + order] = x.value;
    log_[x.value] = i;
    x = mul_slow(x, generator_);
  }

  dense_ = q_ <= 256;
  if (dense_) {
    add_.resize(static_cast<std::size_t>(q_) * q_);
    mul_.resize(static_cast<std::size_t>(q_) * q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
      for (std::uint32_t b = 0; b < q_; ++b) {
        const Element ea{static_cast<std::uint16_t>(a)}, eb{static_cast<std::uint16_t>(b)};
        add_[a * q_ + b] = add_slow(ea, eb).value;
        mul_[a * q_ + b] = (a == 0 || b == 0) ? 0 : exp_[log_[a] + log_[b]];
      }
    }
  }
}

Element Field::element(std::uint32_t i) const {
  if (i >= q_) throw Error(ErrorCode::InvalidArgument, "element index out of range");
  return Element{static_cast<std::uint16_t>(i)};
}

Element Field::from_integer(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Element{static_cast<std::uint16_t>(r)};
}

Element Field::inv(Element a) const {
  if (a.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero in GF(" + std::to_string(q_) + ")");
  const std::uint32_t order = q_ - 1;
  return Element{exp_[(order - log_[a.value]) % order]};
}

Element Field::pow(Element a, std::uint64_t e) const {
  if (e == 0) return one();
  if (a.is_zero()) return zero();
  const std::uint64_t order = q_ - 1;
  return Element{exp_[(static_cast<std::uint64_t>(log_[a.value]) * (e % order)) % order]};
}

void Field::sub_scaled(std::span<Element> dst, std::span<const Element> src, Element f) const {
  if (f.is_zero()) return;
  const Element nf = neg(f);
  const std::size_t n = std::min(dst.size(), src.size());
  if (dense_) {
    const std::uint16_t* mrow = &mul_[static_cast<std::size_t>(nf.value) * q_];
    for (std::size_t i = 0; i < n; ++i) {
      if (src[i].value != 0) dst[i].value = add_[static_cast<std::size_t>(dst[i].value) * q_ + mrow[src[i].value]];
    }
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!src[i].is_zero()) dst[i] = add(dst[i], mul(nf, src[i]));
  }
}

void Field::scale(std::span<Element> row, Element f) const {
  for (auto& x : row) x = mul(x, f);
}

std::string Field::to_string(Element a) const { return std::to_string(a.value); }

// ---------------------------------------------------------------------------

namespace {

void require_same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a != b && !a->same_as(*b)) throw Error(ErrorCode::FieldMismatch, "operands live in different fields");
}

}  // namespace

Poly::Poly(FieldPtr field) : field_(std::move(field)) {}

Poly::Poly(FieldPtr field, std::vector<Element> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  normalize();
}

Poly Poly::constant(FieldPtr field, Element c) { return Poly(std::move(field), {c}); }

Poly Poly::monomial(FieldPtr field, Element c, std::size_t degree) {
  std::vector<Element> coeffs(degree + 1);
  coeffs[degree] = c;
  return Poly(std::move(field), std::move(coeffs));
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Element Poly::evaluate(Element x) const {
  Element acc = field_->zero();
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x), coeffs_[i]);
  return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
  require_same_field(a.field_, b.field_);
  std::vector<Element> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.field_->add(a.coeff(i), b.coeff(i));
  return Poly(a.field_, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  require_same_field(a.field_, b.field_);
  std::vector<Element> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.field_->sub(a.coeff(i), b.coeff(i));
  return Poly(a.field_, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_field(a.field_, b.field_);
  if (a.is_zero() || b.is_zero()) return Poly(a.field_);
  const Field& f = *a.field_;
  std::vector<Element> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      c[i + j] = f.add(c[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return Poly(a.field_, std::move(c));
}

bool operator==(const Poly& a, const Poly& b) {
  return (a.field_ == b.field_ || a.field_->same_as(*b.field_)) && a.coeffs_ == b.coeffs_;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Element c = coeffs_[i];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const bool unit = c == field_->one();
    if (i == 0 || !unit) os << field_->to_string(c);
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

Poly poly_mul(const Poly& a, const Poly& b) { return a * b; }

Poly poly_linear_power(const FieldPtr& field, Element a, unsigned e) {
  const Poly factor(field, {field->neg(a), field->one()});
  Poly result = Poly::constant(field, field->one());
  Poly base = factor;
  // square-and-multiply
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

// ---------------------------------------------------------------------------

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field->one();
  return m;
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<std::vector<Element>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(std::move(field), rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

void Matrix::truncate_rows(std::size_t n) {
  if (n >= rows_) return;
  rows_ = n;
  data_.resize(rows_ * cols_);
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_ &&
         (a.field_ == b.field_ || a.field_->same_as(*b.field_));
}

RowEchelon rref(Matrix m) {
  const Field& f = *m.field();
  RowEchelon out{std::move(m), 0, {}};
  Matrix& a = out.matrix;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < a.rows() && a.at(pivot, c).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != r) std::swap_ranges(a.row(pivot).begin(), a.row(pivot).end(), a.row(r).begin());
    f.scale(a.row(r), f.inv(a.at(r, c)));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i != r && !a.at(i, c).is_zero()) f.sub_scaled(a.row(i), a.row(r), a.at(i, c));
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix vstack(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  if (a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                "column counts differ: " + std::to_string(a.cols()) + " vs " + std::to_string(b.cols()));
  }
  Matrix s(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) std::copy(a.row(r).begin(), a.row(r).end(), s.row(r).begin());
  for (std::size_t r = 0; r < b.rows(); ++r) std::copy(b.row(r).begin(), b.row(r).end(), s.row(a.rows() + r).begin());
  return s;
}

std::size_t stack_rank(const Matrix& a, const Matrix& b) { return rank(vstack(a, b)); }

}  // namespace rrcodes::gf
