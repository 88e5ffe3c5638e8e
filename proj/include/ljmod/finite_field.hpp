#pragma once

// The field with l^m elements, realized as F_l[x]/(modulus), together
// with dense matrices over it and the elimination routines the Brauer
// trace needs.

#include <cstdint>
#include <memory>
#include <vector>

namespace ljmod {

using FieldElem = std::uint32_t;

class FiniteField {
 public:
  // modulus: monic, degree m, constant term first. Throws DomainError if l
  // is not prime, the field is too large (> 2^16 elements) or the modulus is
  // reducible.
  FiniteField(int l, int m, std::vector<int> modulus);

  // First monic irreducible polynomial of degree m in lexicographic order.
  static std::vector<int> default_modulus(int l, int m);
  static std::shared_ptr<const FiniteField> make(int l, int m = 1);

  int characteristic() const { return l_; }
  int degree() const { return m_; }
  std::uint32_t size() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }

  // A fixed generator of the multiplicative group (smallest encoding).
  FieldElem generator() const { return generator_; }

  FieldElem from_int(long long k) const;
  FieldElem from_coeffs(const std::vector<int>& coeffs) const;
  std::vector<int> coeffs(FieldElem a) const;

  FieldElem add(FieldElem a, FieldElem b) const;
  FieldElem neg(FieldElem a) const;
  FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }
  FieldElem mul(FieldElem a, FieldElem b) const;
  FieldElem inv(FieldElem a) const;
  FieldElem pow(FieldElem a, long long e) const;

  // Discrete log base generator(); a must be nonzero.
  std::uint32_t log(FieldElem a) const;
  FieldElem exp(long long k) const;
  // Multiplicative order of a nonzero element.
  std::uint32_t order(FieldElem a) const;

  bool operator==(const FiniteField& o) const {
    return l_ == o.l_ && m_ == o.m_ && modulus_ == o.modulus_;
  }

 private:
  FieldElem slow_mul(FieldElem a, FieldElem b) const;

  int l_;
  int m_;
  std::vector<int> modulus_;
  std::uint32_t q_;
  FieldElem generator_ = 0;
  std::vector<FieldElem> exp_;      // length q-1
  std::vector<std::uint32_t> log_;  // length q, log_[0] unused
};

using FieldPtr = std::shared_ptr<const FiniteField>;

// Dense row-major matrix over a finite field.
class FieldMatrix {
 public:
  FieldMatrix(FieldPtr field, std::size_t rows, std::size_t cols);
  static FieldMatrix identity(FieldPtr field, std::size_t n);
  // Columns given as vectors of length rows.
  static FieldMatrix from_columns(FieldPtr field, std::size_t rows,
                                  const std::vector<std::vector<FieldElem>>& cols);

  const FieldPtr& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  FieldElem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  FieldElem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const std::vector<FieldElem>& data() const { return data_; }

  FieldMatrix operator*(const FieldMatrix& o) const;
  FieldMatrix operator+(const FieldMatrix& o) const;
  FieldMatrix operator-(const FieldMatrix& o) const;
  FieldMatrix scaled(FieldElem s) const;
  bool operator==(const FieldMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  FieldElem trace() const;
  std::size_t rank() const;
  bool is_zero() const;
  FieldMatrix inverse() const;  // throws DomainError when singular
  FieldMatrix pow(unsigned long long e) const;

  // Basis of the null space, as the columns of the result.
  FieldMatrix kernel() const;
  // Basis of the column space, chosen among the columns of *this.
  FieldMatrix column_basis() const;

  FieldMatrix column_block(std::size_t first, std::size_t count) const;
  FieldMatrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  // [this | o]
  FieldMatrix hconcat(const FieldMatrix& o) const;
  // [this ; o]
  FieldMatrix vconcat(const FieldMatrix& o) const;

 private:
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElem> data_;
};

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(FieldMatrix& m);

// Coordinates C with basis * C == vectors; throws DomainError when some
// column of vectors is outside the span of basis (full column rank assumed).
FieldMatrix solve_in_basis(const FieldMatrix& basis, const FieldMatrix& vectors);

}  // namespace ljmod
