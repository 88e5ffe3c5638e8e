#pragma once

// Bruhat order, Kazhdan-Lusztig polynomials and maximal double-coset
// representatives in the extended affine symmetric group. The rotation
// part has length zero; every computation happens inside one rotation
// component.

#include <cstdint>
#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ljmod/affine_perm.hpp"

namespace ljmod::affine_kl {

// Coefficients in q, constant term first, no trailing zeros (zero is empty).
struct KLPolynomial {
  std::vector<long long> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  long long at_one() const;
  std::string to_string() const;  // space-separated coefficients, "0" for zero
  bool operator==(const KLPolynomial&) const = default;
};

// u <= w in Bruhat order. DomainError if ranks or rotation components
// differ.
bool bruhat_leq(const AffinePermutation& u, const AffinePermutation& w);

inline constexpr int kDefaultMaxLength = 20;

// Memoized KL evaluation for one rank d. Safe for concurrent use: the
// tables are guarded, values are pure functions of their keys, so a lost
// insert only costs a recomputation.
class KLContext {
 public:
  // memoize = false disables the polynomial table (lower ideals are still
  // cached); used to cross-check the memo.
  explicit KLContext(int d, int max_length = kDefaultMaxLength, bool memoize = true);

  int rank() const { return d_; }
  int max_length() const { return max_length_; }

  // P_{u,w}; zero unless u <= w. ResourceError when l(w) > max_length.
  KLPolynomial kl_polynomial(const AffinePermutation& u, const AffinePermutation& w);

  // mu(u, w): coefficient of q^{(l(w)-l(u)-1)/2} in P_{u,w}.
  long long mu(const AffinePermutation& u, const AffinePermutation& w);

  // All elements below w, sorted by (length, window).
  const std::vector<AffinePermutation>& lower_ideal(const AffinePermutation& w);
  bool leq(const AffinePermutation& u, const AffinePermutation& w);

  std::size_t cached_polynomials() const;

  // Versioned JSON cache. load() returns false (and changes nothing) when
  // the file is missing, unreadable, of another format version or for
  // another rank.
  bool load(const std::string& path);
  void save(const std::string& path) const;

  static constexpr const char* kCacheFormat = "ljmod-kl-cache";
  static constexpr int kCacheVersion = 1;

 private:
  using Key = std::pair<AffinePermutation, AffinePermutation>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const;
  };
  struct Ideal {
    std::vector<AffinePermutation> sorted;
    std::unordered_set<AffinePermutation, AffinePermutationHash> members;
  };

  const Ideal& ideal(const AffinePermutation& w);
  KLPolynomial compute(const AffinePermutation& x, const AffinePermutation& w);
  void check(const AffinePermutation& u, const AffinePermutation& w) const;

  int d_;
  int max_length_;
  bool memoize_;
  mutable std::shared_mutex mu_;
  std::unordered_map<Key, KLPolynomial, KeyHash> polys_;
  std::unordered_map<AffinePermutation, std::unique_ptr<Ideal>, AffinePermutationHash> ideals_;
};

// Convenience wrapper with a fresh context.
KLPolynomial kl_polynomial(const AffinePermutation& u, const AffinePermutation& w,
                           int max_length = kDefaultMaxLength);

// Finite parabolic W_J = (S_{d/eps})^eps: the s_i, 1 <= i < d, with
// (d/eps) not dividing i.
std::vector<int> parabolic_generators(int d, int epsilon);

// Unique longest element of W_J w W_J.
AffinePermutation max_in_double_coset(const AffinePermutation& w, const std::vector<int>& j);

// Every element of the given rotation component with length <= bound, in
// (length, window) order.
std::vector<AffinePermutation> elements_up_to_length(int d, int bound, long long level = 0);

struct DoubleCosetRep {
  std::vector<int> parabolic;  // composition (d/eps, ..., d/eps)
  AffinePermutation element;   // longest element of its double coset
  int length = 0;
  int min_length = 0;          // length of the shortest element of the coset
};

// Longest representatives of the W_J double cosets that contain an element
// of length <= length_bound (within the given rotation component), ordered
// by (length, window). DomainError unless epsilon divides d.
std::vector<DoubleCosetRep> max_double_coset_reps(int d, int epsilon, int length_bound,
                                                  long long level = 0);

}  // namespace ljmod::affine_kl
