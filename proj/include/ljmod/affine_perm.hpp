#pragma once

// Extended affine symmetric group of type A~_{d-1} in window notation:
// bijections f of Z with f(i + d) = f(i) + d, stored as (f(1), ..., f(d)).

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ljmod::affine_kl {

class AffinePermutation {
 public:
  // DomainError unless the residues of the window are a permutation of Z/d.
  explicit AffinePermutation(std::vector<long long> window);

  static AffinePermutation identity(int d);
  // s_0, ..., s_{d-1}; s_0 swaps positions 0 and 1 (i.e. d and d+1).
  static AffinePermutation simple(int d, int i);
  // The length-zero rotation i -> i + 1.
  static AffinePermutation rotation(int d);
  // Parses "2,1,3", "[2,1,3]" or "2 1 3".
  static AffinePermutation parse(const std::string& text);

  int rank() const { return static_cast<int>(window_.size()); }
  const std::vector<long long>& window() const { return window_; }

  // f(i) for any integer i.
  long long operator()(long long i) const;

  // (sum f(i) - d(d+1)/2) / d: the rotation component.
  long long level() const;

  // Composition (this * o)(i) = this(o(i)).
  AffinePermutation operator*(const AffinePermutation& o) const;
  AffinePermutation inverse() const;

  // Right / left multiplication by s_i.
  AffinePermutation times_simple(int i) const;
  AffinePermutation simple_times(int i) const;

  bool has_right_descent(int i) const;
  bool has_left_descent(int i) const;

  std::string to_string() const;

  auto operator<=>(const AffinePermutation&) const = default;

 private:
  std::vector<long long> window_;
};

struct AffinePermutationHash {
  std::size_t operator()(const AffinePermutation& w) const;
};

// Coxeter length: sum over 1 <= i < j <= d of |floor((f(j) - f(i)) / d)|.
int length(const AffinePermutation& w);

// A reduced word for the non-rotation part:
// w = rotation^level * s_{i1} * ... * s_{ik}.
std::vector<int> reduced_word(const AffinePermutation& w);

}  // namespace ljmod::affine_kl
