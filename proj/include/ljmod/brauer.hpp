#pragma once

// Brauer trace of finite-order operators over F_{l^m}: the sum of the
// Teichmuller lifts of the nonzero eigenvalues, valued in Z[zeta_N].
//
// The lift iota is pinned by the field's fixed multiplicative generator g:
// g^{(q-1)k/N} is sent to zeta_N^k. Every identity checked here (reduction,
// vanishing, additivity, averaging) holds for any such choice, so the
// particular generator is immaterial.

#include <cstddef>
#include <map>
#include <vector>

#include "ljmod/cyclotomic.hpp"
#include "ljmod/finite_field.hpp"

namespace ljmod::brauer {

class RootIdentification {
 public:
  // Throws IdentificationError unless conductor divides q - 1.
  RootIdentification(FieldPtr field, int conductor);
  // Uses the field's fixed generator and conductor q - 1.
  explicit RootIdentification(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  int conductor() const { return conductor_; }
  // Image of zeta_N in the field.
  FieldElem field_root() const;

  // Teichmuller lift of a root of unity of order dividing the conductor.
  Cyclotomic lift(FieldElem x) const;

 private:
  FieldPtr field_;
  int conductor_;
};

// Nonzero eigenvalue -> multiplicity. Throws PreconditionError unless rho is
// diagonalizable on its image with eigenvalues in the working field (this is
// rho^{n+1} = rho with n | q - 1).
std::map<FieldElem, std::size_t> nonzero_spectrum(const FieldMatrix& rho);

// lcm of the orders of the nonzero eigenvalues (1 if there are none).
int natural_conductor(const FieldMatrix& rho);

Cyclotomic brauer_trace(const FieldMatrix& rho);
Cyclotomic brauer_trace(const FieldMatrix& rho, const RootIdentification& ident);

// Image of t under zeta_N -> (generator)^{(q-1)/N}.
FieldElem reduce_mod_l(const Cyclotomic& t, const RootIdentification& ident);

// Matrix of rho on the invariant subspace spanned by the columns of basis
// (which must be linearly independent); DomainError if not invariant.
FieldMatrix restrict_to_subspace(const FieldMatrix& rho, const FieldMatrix& basis);
// Matrix of the induced map on V / span(basis).
FieldMatrix quotient_map(const FieldMatrix& rho, const FieldMatrix& basis);

// tr(rho2) == tr(rho2 | W1) + tr(rho2 on V / W1). w1 columns span W1 (may be
// dependent or empty); DomainError if W1 is not invariant.
bool trace_additivity_check(const FieldMatrix& rho2, const FieldMatrix& w1);

// rho maps coordinate block i into block sigma[i]; sigma is fixed-point-free.
// Returns the Brauer trace and throws InvariantViolation if it is nonzero.
Cyclotomic permutation_block_trace(const FieldMatrix& rho,
                                   const std::vector<std::size_t>& block_sizes,
                                   const std::vector<std::size_t>& sigma);

struct PGroupAverage {
  std::size_t group_order = 0;
  Cyclotomic fixed_space_trace;  // tr(gamma on V^P)
  Cyclotomic summed_trace;       // sum over h in P of tr(gamma h)
  bool integral = false;         // summed_trace divisible by |P|
  Cyclotomic average;            // summed_trace / |P| when integral

  bool holds() const { return integral && average == fixed_space_trace; }
};

// Enumerates P = <generators> (at most max_order elements, else
// ResourceError), checks |P| is a prime power coprime to l and that gamma
// normalizes P, then evaluates both sides of the averaging identity.
PGroupAverage pgroup_average(const std::vector<FieldMatrix>& generators, const FieldMatrix& gamma,
                             std::size_t max_order = 10000);

bool pgroup_average_check(const std::vector<FieldMatrix>& generators, const FieldMatrix& gamma,
                          std::size_t max_order = 10000);

}  // namespace ljmod::brauer
