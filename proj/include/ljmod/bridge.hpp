#pragma once

// Bridge from cyclic-quiver orbits to maximal double-coset representatives,
// and the decomposition numbers it yields through KL polynomials at q = 1.
//
// Convention: the bridge O -> w_O is an order isomorphism (closure order to
// Bruhat order) onto an ideal, and the multiplicity of the simple <b> in
// the standard pi(a) is P_{w_{O_a}, w_{O_b}}(1): the stalk orbit indexes the
// lower element.

#include <string>
#include <vector>

#include "ljmod/affine_kl.hpp"
#include "ljmod/groth.hpp"
#include "ljmod/quiver_orbits.hpp"

namespace ljmod::bridge {

class OrbitBridge {
 public:
  // images[k] is the element attached to poset.nodes[k]. Throws
  // ConsistencyError unless the map is injective and order-preserving in
  // both directions.
  OrbitBridge(quiver::OrbitPoset poset, int epsilon, std::vector<affine_kl::AffinePermutation> images);

  const quiver::OrbitPoset& poset() const { return poset_; }
  int epsilon() const { return epsilon_; }
  int rank() const;  // d of the affine group: total dimension
  const std::vector<affine_kl::AffinePermutation>& images() const { return images_; }
  const affine_kl::AffinePermutation& image(const segcomb::Multisegment& a) const;

  std::string to_json() const;
  // Extension point: {"e", "dims", "epsilon", "map": [{"id": <multisegment>,
  // "window": [...]}, ...]}. Validated like the constructor.
  static OrbitBridge from_json(const std::string& text);

 private:
  quiver::OrbitPoset poset_;
  int epsilon_;
  std::vector<affine_kl::AffinePermutation> images_;
};

// Every order isomorphism from the orbit poset onto an ideal of the poset
// of maximal double-coset representatives (rotation component 0) whose
// lengths follow the poset height. Stops after max_results.
std::vector<OrbitBridge> find_bridges(const quiver::OrbitPoset& poset, int epsilon,
                                      std::size_t max_results = 1000);

// The verified bridge for epsilon = d, d <= 3 (the first one found by
// find_bridges); CapabilityError otherwise.
OrbitBridge shipped_bridge(int d);

inline constexpr int kMaxShippedBridgeDegree = 3;

// P_{w_{O_a}, w_{O_b}}(1). ConsistencyError when the bridge does not
// respect the closure relation between O_a and O_b.
long long multiplicity_via_kl(const OrbitBridge& bridge, affine_kl::KLContext& ctx,
                              const segcomb::Multisegment& b, const segcomb::Multisegment& a);

// Decomposition matrix of the epsilon = d block assembled from KL values
// over the shipped bridge.
groth::DecompositionMatrix kl_decomposition_matrix(int d);

}  // namespace ljmod::bridge
