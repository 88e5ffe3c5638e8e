#pragma once

// Graded nilpotent representations of the cyclic quiver with e vertices.
// An orbit is identified with its multisegment (one Jordan string per
// segment); the closure order is the rank-condition order on the
// composite maps grade i -> grade i + l.

#include <string>
#include <vector>

#include "ljmod/finite_field.hpp"
#include "ljmod/segcomb.hpp"

namespace ljmod::quiver {

class GradedOrbit {
 public:
  explicit GradedOrbit(segcomb::Multisegment shape);

  int period() const { return shape_.period(); }
  const std::vector<int>& dims() const { return dims_; }
  const segcomb::Multisegment& shape() const { return shape_; }

 private:
  segcomb::Multisegment shape_;
  std::vector<int> dims_;
};

// Rank of N^l restricted to grade i.
int rank_invariant(const segcomb::Multisegment& a, int i, int l);

// table[i][l - 1] for l = 1..max_l.
using RankTable = std::vector<std::vector<int>>;
RankTable rank_table(const segcomb::Multisegment& a, int max_l);

// b lies in the closure of a. DomainError unless both live in the same
// (e, dims) block.
bool closure_leq(const GradedOrbit& b, const GradedOrbit& a);

// Grade of each basis vector, in the graded order used by
// build_nilpotent_matrix: by grade, then segment, then position.
std::vector<int> basis_grades(const segcomb::Multisegment& a);

// The nilpotent operator realizing a: each segment (s, r) is a string
// v_s -> v_{s+1} -> ... -> v_{s+r-1} -> 0 with v_j in grade j mod e.
// Edge coefficients are 1 unless edge_scalars supplies one nonzero field
// element per edge (segment order, then position).
FieldMatrix build_nilpotent_matrix(const segcomb::Multisegment& a, FieldPtr field,
                                   const std::vector<FieldElem>& edge_scalars = {});

// Rank of N^l composed with the projection onto grade i, by elimination.
int composite_rank(const FieldMatrix& n, const std::vector<int>& grades, int i, int l);

struct OrbitPoset {
  int e = 1;
  std::vector<int> dims;
  std::vector<segcomb::Multisegment> nodes;  // canonical block order
  std::vector<std::vector<char>> leq;        // leq[b][a]: b in closure of a
  std::vector<std::vector<std::size_t>> lower_covers;
  std::vector<int> height;                   // longest chain down to a minimal node

  std::size_t size() const { return nodes.size(); }
  std::size_t cover_count() const;
  std::string to_json() const;
  std::string to_dot() const;
};

// Pairwise comparisons shard across OpenMP threads; identical to the
// serial version.
OrbitPoset orbit_poset(int e, const std::vector<int>& dims);
OrbitPoset orbit_poset_serial(int e, const std::vector<int>& dims);

}  // namespace ljmod::quiver
