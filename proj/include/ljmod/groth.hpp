#pragma once

// Decomposition matrices over a block basis, their exact unitriangular
// inverses, and the projection of a simple onto the superSpeh classes
// modulo the induced part.
//
// Coefficient vectors are reported raw: the global (-1)^{d+1}
// normalization of the transfer is not applied.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ljmod/segcomb.hpp"

namespace ljmod::groth {

// Largest d accepted for the epsilon = d closed form (2^12 - 1 basis
// elements, two dense 4095 x 4095 integer matrices).
inline constexpr int kMaxClosedFormDegree = 12;

class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}
  static IntMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }

  // Exact product; ResourceError on int64 overflow.
  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> data_;
};

class BlockBasis {
 public:
  BlockBasis(int d, int epsilon, std::vector<segcomb::Multisegment> elements);
  // Superunipotent block of GL_d when q has order epsilon mod l: period
  // epsilon, every residue with multiplicity d / epsilon.
  static std::shared_ptr<const BlockBasis> superunipotent(int d, int epsilon);

  int d() const { return d_; }
  int epsilon() const { return epsilon_; }
  std::size_t size() const { return elements_.size(); }
  const segcomb::Multisegment& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<segcomb::Multisegment>& elements() const { return elements_; }

  bool is_superspeh(std::size_t i) const { return elements_[i].size() == 1; }
  // Indices of the single-segment elements, in basis order.
  const std::vector<std::size_t>& superspeh_indices() const { return superspeh_; }

  // DomainError if a is not in the basis.
  std::size_t index_of(const segcomb::Multisegment& a) const;

 private:
  int d_;
  int epsilon_;
  std::vector<segcomb::Multisegment> elements_;
  std::vector<std::size_t> superspeh_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct DecompositionMatrix {
  std::shared_ptr<const BlockBasis> basis;
  IntMatrix m;  // m(b, a): multiplicity of simple b in standard a
};

// m(b, a) = 1 iff I_b is a subset of I_a, over the cyclic-cover basis.
DecompositionMatrix closed_form_matrix(int d);
DecompositionMatrix closed_form_matrix_serial(int d);

// DomainError unless m is lower unitriangular.
void check_unitriangular(const IntMatrix& m);

// Exact inverse of a lower unitriangular integer matrix. The parallel
// version shards columns across OpenMP threads and is bitwise identical to
// the serial reference.
IntMatrix invert_unitriangular(const IntMatrix& m);
IntMatrix invert_unitriangular_serial(const IntMatrix& m);

struct GrothVector {
  std::shared_ptr<const BlockBasis> basis;
  std::vector<std::size_t> support;  // basis indices
  std::vector<std::int64_t> coeffs;
};

// n(b, a) for the single-segment b: the image of <a> in the superSpeh part
// modulo the induced part.
GrothVector lj_projection(const segcomb::Multisegment& a, std::shared_ptr<const BlockBasis> basis,
                          const IntMatrix& inverse);

enum class Sign { Plus, Minus, Zero };
std::string to_string(Sign s);

struct Effectivity {
  bool effective = true;
  Sign sign = Sign::Zero;
};

// All nonzero coefficients share one sign; the zero vector counts as
// effective.
Effectivity is_effective_up_to_sign(std::span<const std::int64_t> coeffs);
inline Effectivity is_effective_up_to_sign(const GrothVector& v) {
  return is_effective_up_to_sign(std::span<const std::int64_t>(v.coeffs));
}

enum class MatrixSource { ClosedForm, KlComputed };
MatrixSource parse_matrix_source(const std::string& s);

struct SimpleVerdict {
  std::string id;
  std::size_t segment_count = 0;
  std::vector<std::int64_t> coeffs;
  bool effective = true;
  Sign sign = Sign::Zero;
};

struct SignReport {
  int d = 0;
  int epsilon = 0;
  std::vector<std::string> superspeh_ids;
  std::vector<SimpleVerdict> simples;
  bool all_effective = true;
  // Every simple a has sign (-1)^{|a|-1} on every singleton it touches.
  bool uniform_expected_sign = true;

  std::string to_json() const;
};

// epsilon = d block. KlComputed builds the matrix through the orbit to
// double-coset bridge and throws CapabilityError where none ships.
SignReport scan_block(int d, MatrixSource source);

// Header "id,<ids>", then one row per basis element.
std::string to_csv(const BlockBasis& basis, const IntMatrix& m);

}  // namespace ljmod::groth
