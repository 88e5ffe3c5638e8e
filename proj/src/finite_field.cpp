#include "ljmod/finite_field.hpp"

#include <algorithm>

#include "ljmod/errors.hpp"

namespace ljmod {

namespace {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

long long mod_pos(long long a, int l) {
  a %= l;
  return a < 0 ? a + l : a;
}

// Remainder of num modulo monic den over F_l; both constant term first.
std::vector<int> poly_rem(std::vector<int> num, const std::vector<int>& den, int l) {
  const std::size_t dd = den.size() - 1;
  for (std::size_t i = num.size(); i-- > dd;) {
    const int c = num[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j)
      num[i - dd + j] = static_cast<int>(mod_pos(num[i - dd + j] - static_cast<long long>(c) * den[j], l));
  }
  num.resize(std::min(num.size(), dd));
  return num;
}

bool irreducible(const std::vector<int>& f, int l) {
  const int m = static_cast<int>(f.size()) - 1;
  // Trial division by every monic polynomial of degree 1..m/2.
  for (int deg = 1; 2 * deg <= m; ++deg) {
    long long count = 1;
    for (int i = 0; i < deg; ++i) count *= l;
    for (long long code = 0; code < count; ++code) {
      std::vector<int> g(static_cast<std::size_t>(deg) + 1, 0);
      long long c = code;
      for (int i = 0; i < deg; ++i, c /= l) g[static_cast<std::size_t>(i)] = static_cast<int>(c % l);
      g[static_cast<std::size_t>(deg)] = 1;
      auto r = poly_rem(f, g, l);
      if (std::all_of(r.begin(), r.end(), [](int v) { return v == 0; })) return false;
    }
  }
  return true;
}

}  // namespace

FiniteField::FiniteField(int l, int m, std::vector<int> modulus)
    : l_(l), m_(m), modulus_(std::move(modulus)) {
  if (!is_prime(l_)) throw DomainError("field characteristic must be prime");
  if (m_ < 1) throw DomainError("extension degree must be positive");
  long long q = 1;
  for (int i = 0; i < m_; ++i) {
    q *= l_;
    if (q > (1 << 16)) throw DomainError("field too large (limit 65536 elements)");
  }
  q_ = static_cast<std::uint32_t>(q);
  if (modulus_.size() != static_cast<std::size_t>(m_) + 1)
    throw DomainError("modulus must have m+1 coefficients");
  for (auto& c : modulus_) c = static_cast<int>(mod_pos(c, l_));
  if (modulus_.back() != 1) throw DomainError("modulus must be monic");
  if (!irreducible(modulus_, l_)) throw DomainError("modulus is reducible");

  // Smallest encoding whose powers exhaust the nonzero elements.
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);
  for (FieldElem g = 1; g < q_; ++g) {
    FieldElem x = 1;
    std::uint32_t k = 0;
    bool ok = true;
    for (; k < q_ - 1; ++k) {
      if (k > 0 && x == 1) {
        ok = false;
        break;
      }
      exp_[k] = x;
      x = slow_mul(x, g);
    }
    if (ok && x == 1) {
      generator_ = g;
      break;
    }
  }
  if (generator_ == 0) throw InvariantViolation("no multiplicative generator found");
  for (std::uint32_t k = 0; k < q_ - 1; ++k) log_[exp_[k]] = k;
}

std::vector<int> FiniteField::default_modulus(int l, int m) {
  if (!is_prime(l)) throw DomainError("field characteristic must be prime");
  if (m == 1) return {0, 1};
  long long count = 1;
  for (int i = 0; i < m; ++i) count *= l;
  for (long long code = 0; code < count; ++code) {
    std::vector<int> f(static_cast<std::size_t>(m) + 1, 0);
    long long c = code;
    for (int i = 0; i < m; ++i, c /= l) f[static_cast<std::size_t>(i)] = static_cast<int>(c % l);
    f[static_cast<std::size_t>(m)] = 1;
    if (f[0] != 0 && irreducible(f, l)) return f;
  }
  throw InvariantViolation("no irreducible polynomial found");
}

std::shared_ptr<const FiniteField> FiniteField::make(int l, int m) {
  return std::make_shared<const FiniteField>(l, m, default_modulus(l, m));
}

FieldElem FiniteField::from_int(long long k) const {
  return static_cast<FieldElem>(mod_pos(k, l_));
}

FieldElem FiniteField::from_coeffs(const std::vector<int>& coeffs) const {
  if (coeffs.size() > static_cast<std::size_t>(m_))
    throw DomainError("field element has too many coefficients");
  FieldElem out = 0, place = 1;
  for (int c : coeffs) {
    out += static_cast<FieldElem>(mod_pos(c, l_)) * place;
    place *= static_cast<FieldElem>(l_);
  }
  return out;
}

std::vector<int> FiniteField::coeffs(FieldElem a) const {
  std::vector<int> c(static_cast<std::size_t>(m_));
  for (auto& v : c) {
    v = static_cast<int>(a % static_cast<FieldElem>(l_));
    a /= static_cast<FieldElem>(l_);
  }
  return c;
}

FieldElem FiniteField::add(FieldElem a, FieldElem b) const {
  const auto l = static_cast<FieldElem>(l_);
  if (m_ == 1) return (a + b) % l;
  FieldElem out = 0, place = 1;
  for (int i = 0; i < m_; ++i) {
    out += ((a % l + b % l) % l) * place;
    a /= l;
    b /= l;
    place *= l;
  }
  return out;
}

FieldElem FiniteField::neg(FieldElem a) const {
  const auto l = static_cast<FieldElem>(l_);
  if (m_ == 1) return (l - a) % l;
  FieldElem out = 0, place = 1;
  for (int i = 0; i < m_; ++i) {
    out += ((l - a % l) % l) * place;
    a /= l;
    place *= l;
  }
  return out;
}

FieldElem FiniteField::slow_mul(FieldElem a, FieldElem b) const {
  const auto ca = coeffs(a), cb = coeffs(b);
  std::vector<int> prod(static_cast<std::size_t>(2 * m_), 0);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j)
      prod[static_cast<std::size_t>(i + j)] = static_cast<int>(
          (prod[static_cast<std::size_t>(i + j)] +
           static_cast<long long>(ca[static_cast<std::size_t>(i)]) * cb[static_cast<std::size_t>(j)]) % l_);
  return from_coeffs(poly_rem(std::move(prod), modulus_, l_));
}

FieldElem FiniteField::mul(FieldElem a, FieldElem b) const {
  if (a == 0 || b == 0) return 0;
  std::uint32_t k = log_[a] + log_[b];
  if (k >= q_ - 1) k -= q_ - 1;
  return exp_[k];
}

FieldElem FiniteField::inv(FieldElem a) const {
  if (a == 0) throw DomainError("zero has no inverse");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FieldElem FiniteField::pow(FieldElem a, long long e) const {
  if (a == 0) {
    if (e < 0) throw DomainError("zero has no inverse");
    return e == 0 ? 1 : 0;
  }
  const long long n = q_ - 1;
  long long k = (static_cast<long long>(log_[a]) * mod_pos(e, static_cast<int>(n))) % n;
  return exp_[static_cast<std::size_t>(k)];
}

std::uint32_t FiniteField::log(FieldElem a) const {
  if (a == 0 || a >= q_) throw DomainError("log of zero or invalid element");
  return log_[a];
}

FieldElem FiniteField::exp(long long k) const {
  return exp_[static_cast<std::size_t>(mod_pos(k, static_cast<int>(q_ - 1)))];
}

std::uint32_t FiniteField::order(FieldElem a) const {
  const std::uint32_t n = q_ - 1;
  const std::uint32_t k = log(a);
  std::uint32_t g = n, b = k;
  while (b) {
    const auto t = g % b;
    g = b;
    b = t;
  }
  return n / g;
}

// ---------------------------------------------------------------------------

FieldMatrix::FieldMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FieldMatrix FieldMatrix::identity(FieldPtr field, std::size_t n) {
  FieldMatrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FieldMatrix FieldMatrix::from_columns(FieldPtr field, std::size_t rows,
                                      const std::vector<std::vector<FieldElem>>& cols) {
  FieldMatrix m(std::move(field), rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw DomainError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& o) const {
  if (cols_ != o.rows_) throw DomainError("matrix dimension mismatch");
  FieldMatrix out(field_, rows_, o.cols_);
  const auto& f = *field_;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const FieldElem a = (*this)(i, k);
      if (!a) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (o(k, j)) out(i, j) = f.add(out(i, j), f.mul(a, o(k, j)));
    }
  return out;
}

FieldMatrix FieldMatrix::operator+(const FieldMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix dimension mismatch");
  FieldMatrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_->add(data_[i], o.data_[i]);
  return out;
}

FieldMatrix FieldMatrix::operator-(const FieldMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix dimension mismatch");
  FieldMatrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_->sub(data_[i], o.data_[i]);
  return out;
}

FieldMatrix FieldMatrix::scaled(FieldElem s) const {
  FieldMatrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_->mul(data_[i], s);
  return out;
}

FieldElem FieldMatrix::trace() const {
  if (!square()) throw DomainError("trace of a non-square matrix");
  FieldElem t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t = field_->add(t, (*this)(i, i));
  return t;
}

bool FieldMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](FieldElem v) { return v == 0; });
}

std::vector<std::size_t> row_reduce(FieldMatrix& m) {
  const auto& f = *m.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    const FieldElem inv = f.inv(m(row, col));
    for (std::size_t c = 0; c < m.cols(); ++c) m(row, c) = f.mul(m(row, c), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const FieldElem factor = m(r, col);
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (m(row, c)) m(r, c) = f.sub(m(r, c), f.mul(factor, m(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t FieldMatrix::rank() const {
  FieldMatrix copy = *this;
  return row_reduce(copy).size();
}

FieldMatrix FieldMatrix::inverse() const {
  if (!square()) throw DomainError("inverse of a non-square matrix");
  FieldMatrix aug = hconcat(identity(field_, rows_));
  const auto pivots = row_reduce(aug);
  if (pivots.size() < rows_ || pivots.back() >= rows_) throw DomainError("matrix is singular");
  return aug.submatrix(0, rows_, rows_, rows_);
}

FieldMatrix FieldMatrix::pow(unsigned long long e) const {
  if (!square()) throw DomainError("power of a non-square matrix");
  FieldMatrix result = identity(field_, rows_), base = *this;
  while (e) {
    if (e & 1U) result = result * base;
    base = base * base;
    e >>= 1U;
  }
  return result;
}

FieldMatrix FieldMatrix::kernel() const {
  FieldMatrix red = *this;
  const auto pivots = row_reduce(red);
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<FieldElem>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldElem> v(cols_, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = field_->neg(red(r, free));
    basis.push_back(std::move(v));
  }
  return from_columns(field_, cols_, basis);
}

FieldMatrix FieldMatrix::column_basis() const {
  FieldMatrix red = *this;
  const auto pivots = row_reduce(red);
  FieldMatrix out(field_, rows_, pivots.size());
  for (std::size_t k = 0; k < pivots.size(); ++k)
    for (std::size_t r = 0; r < rows_; ++r) out(r, k) = (*this)(r, pivots[k]);
  return out;
}

FieldMatrix FieldMatrix::column_block(std::size_t first, std::size_t count) const {
  return submatrix(0, first, rows_, count);
}

FieldMatrix FieldMatrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr,
                                   std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DomainError("submatrix out of range");
  FieldMatrix out(field_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  return out;
}

FieldMatrix FieldMatrix::hconcat(const FieldMatrix& o) const {
  if (rows_ != o.rows_) throw DomainError("hconcat row mismatch");
  FieldMatrix out(field_, rows_, cols_ + o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < o.cols_; ++c) out(r, cols_ + c) = o(r, c);
  }
  return out;
}

FieldMatrix FieldMatrix::vconcat(const FieldMatrix& o) const {
  if (cols_ != o.cols_) throw DomainError("vconcat column mismatch");
  FieldMatrix out(field_, rows_ + o.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(o.data_.begin(), o.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return out;
}

FieldMatrix solve_in_basis(const FieldMatrix& basis, const FieldMatrix& vectors) {
  const std::size_t k = basis.cols();
  FieldMatrix aug = basis.hconcat(vectors);
  const auto pivots = row_reduce(aug);
  if (pivots.size() != k || (k > 0 && pivots.back() >= k))
    throw DomainError("vectors are not in the span of the basis");
  return aug.submatrix(0, k, k, vectors.cols());
}

}  // namespace ljmod
