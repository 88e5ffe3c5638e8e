#pragma once

// Partitions, cyclic segments and multisegments, Whittaker partitions,
// block enumeration and the subset <-> cyclic-cover bijection.

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace ljmod::segcomb {

class Partition {
 public:
  // Throws DomainError unless parts is nonempty, positive and weakly
  // decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  int total() const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

// Dominance order: every prefix sum of lhs is <= that of rhs (zero padded).
bool dominance_leq(const Partition& lhs, const Partition& rhs);

Partition conjugate(const Partition& p);

struct Segment {
  int start = 0;   // residue in [0, period)
  int length = 1;  // >= 1
  int weight = 1;  // degree of the underlying cuspidal, >= 1

  auto operator<=>(const Segment&) const = default;
};

class Multisegment {
 public:
  // Normalizes starts into [0, period) and sorts the segments; throws
  // DomainError on an empty list or non-positive fields.
  Multisegment(int period, std::vector<Segment> segments);

  int period() const { return period_; }
  const std::vector<Segment>& segments() const { return segments_; }
  std::size_t size() const { return segments_.size(); }

  // Sum of weight * length.
  int degree() const;
  // Per residue, the total weight covering it.
  std::vector<int> content() const;
  bool all_weight_one() const;

  // Compact canonical JSON, used as a stable identifier.
  std::string id() const;

  bool operator==(const Multisegment&) const = default;

 private:
  int period_;
  std::vector<Segment> segments_;
};

// Canonical basis order: more segments first, then lexicographic on the
// sorted (start, length, weight) list.
bool basis_less(const Multisegment& lhs, const Multisegment& rhs);

Partition whittaker_partition(const Multisegment& a);

// Nonempty subset I of Z/dZ; stored sorted.
class CyclicCoverIndex {
 public:
  CyclicCoverIndex(int d, std::set<int> starts);

  int d() const { return d_; }
  const std::set<int>& starts() const { return starts_; }

  // Bitmask over residues, bit i set iff i is a start.
  std::uint64_t mask() const;
  static CyclicCoverIndex from_mask(int d, std::uint64_t mask);

  bool operator==(const CyclicCoverIndex&) const = default;

 private:
  int d_;
  std::set<int> starts_;
};

Multisegment cover_from_subset(const CyclicCoverIndex& idx);

// Inverse of cover_from_subset; throws DomainError unless a is a weight-one
// multisegment tiling Z/eZ exactly once.
CyclicCoverIndex subset_from_cover(const Multisegment& a);

// All weight-one multisegments of period e with the given content, in
// canonical basis order.
std::vector<Multisegment> enumerate_block(int e, const std::vector<int>& dims);

}  // namespace ljmod::segcomb
