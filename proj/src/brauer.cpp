#include "ljmod/brauer.hpp"

#include <numeric>
#include <set>

#include "ljmod/errors.hpp"

namespace ljmod::brauer {

RootIdentification::RootIdentification(FieldPtr field, int conductor)
    : field_(std::move(field)), conductor_(conductor) {
  if (conductor_ < 1 || (field_->size() - 1) % static_cast<std::uint32_t>(conductor_) != 0)
    throw IdentificationError("conductor " + std::to_string(conductor_) +
                              " does not divide q - 1 = " + std::to_string(field_->size() - 1));
}

RootIdentification::RootIdentification(FieldPtr field)
    : RootIdentification(field, static_cast<int>(field->size() - 1)) {}

FieldElem RootIdentification::field_root() const {
  return field_->exp(static_cast<long long>((field_->size() - 1) / static_cast<std::uint32_t>(conductor_)));
}

Cyclotomic RootIdentification::lift(FieldElem x) const {
  const std::uint32_t step = (field_->size() - 1) / static_cast<std::uint32_t>(conductor_);
  const std::uint32_t k = field_->log(x);
  if (k % step) throw IdentificationError("element is not a root of unity of the conductor's order");
  return Cyclotomic::zeta(conductor_, k / step);
}

std::map<FieldElem, std::size_t> nonzero_spectrum(const FieldMatrix& rho) {
  if (!rho.square()) throw DomainError("operator must be square");
  const auto& f = *rho.field();
  const std::size_t n = rho.rows();
  const std::size_t image_dim = rho.rank();
  std::map<FieldElem, std::size_t> spectrum;
  std::size_t found = 0;
  const auto id = FieldMatrix::identity(rho.field(), n);
  // Eigenvectors for nonzero eigenvalues automatically lie in the image.
  for (FieldElem lambda = 1; lambda < f.size() && found < image_dim; ++lambda) {
    const std::size_t mult = n - (rho - id.scaled(lambda)).rank();
    if (mult) {
      spectrum[lambda] = mult;
      found += mult;
    }
  }
  if (found != image_dim)
    throw PreconditionError(
        "operator is not semisimple of l'-order on its image over this field");
  return spectrum;
}

int natural_conductor(const FieldMatrix& rho) {
  int n = 1;
  for (const auto& [lambda, mult] : nonzero_spectrum(rho))
    n = std::lcm(n, static_cast<int>(rho.field()->order(lambda)));
  return n;
}

namespace {

Cyclotomic trace_from_spectrum(const std::map<FieldElem, std::size_t>& spectrum,
                               const RootIdentification& ident) {
  Cyclotomic sum(ident.conductor(), {0});
  for (const auto& [lambda, mult] : spectrum)
    sum += Cyclotomic::integer(static_cast<std::int64_t>(mult)) * ident.lift(lambda);
  return sum;
}

}  // namespace

Cyclotomic brauer_trace(const FieldMatrix& rho) {
  const auto spectrum = nonzero_spectrum(rho);
  int n = 1;
  for (const auto& [lambda, mult] : spectrum) n = std::lcm(n, static_cast<int>(rho.field()->order(lambda)));
  return trace_from_spectrum(spectrum, RootIdentification(rho.field(), n));
}

Cyclotomic brauer_trace(const FieldMatrix& rho, const RootIdentification& ident) {
  if (!(*rho.field() == *ident.field())) throw IdentificationError("identification is for another field");
  const auto spectrum = nonzero_spectrum(rho);
  for (const auto& [lambda, mult] : spectrum)
    if (static_cast<int>(rho.field()->order(lambda)) > ident.conductor() ||
        ident.conductor() % static_cast<int>(rho.field()->order(lambda)) != 0)
      throw IdentificationError("eigenvalue order does not divide the conductor");
  return trace_from_spectrum(spectrum, ident);
}

FieldElem reduce_mod_l(const Cyclotomic& t, const RootIdentification& ident) {
  const auto& f = *ident.field();
  const int n = t.conductor();
  if ((f.size() - 1) % static_cast<std::uint32_t>(n) != 0)
    throw IdentificationError("conductor of the trace does not divide q - 1");
  const FieldElem root = f.exp(static_cast<long long>((f.size() - 1) / static_cast<std::uint32_t>(n)));
  FieldElem acc = 0, power = 1;
  for (auto c : t.coeffs()) {
    acc = f.add(acc, f.mul(f.from_int(c), power));
    power = f.mul(power, root);
  }
  return acc;
}

FieldMatrix restrict_to_subspace(const FieldMatrix& rho, const FieldMatrix& basis) {
  return solve_in_basis(basis, rho * basis);
}

namespace {

// basis extended by standard vectors to an invertible change of basis.
FieldMatrix complete_basis(const FieldMatrix& basis) {
  FieldMatrix full = basis.hconcat(FieldMatrix::identity(basis.field(), basis.rows()));
  return full.column_basis();
}

}  // namespace

FieldMatrix quotient_map(const FieldMatrix& rho, const FieldMatrix& basis) {
  const std::size_t k = basis.cols(), n = rho.rows();
  if (basis.rank() != k) throw DomainError("subspace basis is not independent");
  restrict_to_subspace(rho, basis);  // invariance check
  const FieldMatrix t = complete_basis(basis);
  const FieldMatrix conj = t.inverse() * rho * t;
  return conj.submatrix(k, k, n - k, n - k);
}

bool trace_additivity_check(const FieldMatrix& rho2, const FieldMatrix& w1) {
  if (w1.rows() != rho2.rows()) throw DomainError("subspace dimension mismatch");
  const FieldMatrix basis = w1.column_basis();
  try {
    restrict_to_subspace(rho2, basis);
  } catch (const DomainError&) {
    throw DomainError("subspace is not invariant under the operator");
  }
  const Cyclotomic whole = brauer_trace(rho2);
  const Cyclotomic sub = brauer_trace(restrict_to_subspace(rho2, basis));
  const Cyclotomic quo = basis.cols() == rho2.rows()
                             ? Cyclotomic::integer(0)
                             : brauer_trace(quotient_map(rho2, basis));
  return whole == sub + quo;
}

Cyclotomic permutation_block_trace(const FieldMatrix& rho,
                                   const std::vector<std::size_t>& block_sizes,
                                   const std::vector<std::size_t>& sigma) {
  const std::size_t nb = block_sizes.size();
  if (sigma.size() != nb) throw DomainError("permutation size must match the number of blocks");
  std::vector<bool> seen(nb, false);
  for (std::size_t i = 0; i < nb; ++i) {
    if (sigma[i] >= nb || seen[sigma[i]]) throw DomainError("sigma is not a permutation");
    seen[sigma[i]] = true;
    if (sigma[i] == i) throw PreconditionError("block permutation has a fixed point");
  }
  std::vector<std::size_t> offset(nb + 1, 0);
  for (std::size_t i = 0; i < nb; ++i) offset[i + 1] = offset[i] + block_sizes[i];
  if (offset[nb] != rho.rows() || !rho.square()) throw DomainError("blocks do not cover the space");
  // Column j in block i may only have entries in rows of block sigma(i).
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t c = offset[i]; c < offset[i + 1]; ++c)
      for (std::size_t r = 0; r < rho.rows(); ++r)
        if (rho(r, c) && (r < offset[sigma[i]] || r >= offset[sigma[i] + 1]))
          throw PreconditionError("operator does not map block i into block sigma(i)");
  Cyclotomic t = brauer_trace(rho);
  if (!t.is_zero())
    throw InvariantViolation("fixed-point-free block permutation has nonzero Brauer trace " +
                             t.to_string());
  return t;
}

namespace {

bool is_prime_power(std::size_t n, std::size_t& prime) {
  if (n == 1) {
    prime = 1;
    return true;
  }
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    prime = p;
    return n == 1;
  }
  prime = n;
  return true;
}

}  // namespace

PGroupAverage pgroup_average(const std::vector<FieldMatrix>& generators, const FieldMatrix& gamma,
                             std::size_t max_order) {
  const auto& field = gamma.field();
  const std::size_t n = gamma.rows();
  for (const auto& g : generators)
    if (g.rows() != n || !g.square() || !(*g.field() == *field))
      throw DomainError("group generators must act on the same space");
  for (const auto& g : generators) g.inverse();  // throws when singular

  std::set<std::vector<FieldElem>> seen;
  std::vector<FieldMatrix> group{FieldMatrix::identity(field, n)};
  seen.insert(group.front().data());
  for (std::size_t i = 0; i < group.size(); ++i)
    for (const auto& g : generators) {
      FieldMatrix h = group[i] * g;
      if (seen.insert(h.data()).second) {
        if (group.size() >= max_order)
          throw ResourceError("generated group exceeds the order cap of " + std::to_string(max_order));
        group.push_back(std::move(h));
      }
    }

  std::size_t p = 0;
  if (!is_prime_power(group.size(), p))
    throw PreconditionError("generated group is not a p-group (order " + std::to_string(group.size()) + ")");
  if (group.size() > 1 && p == static_cast<std::size_t>(field->characteristic()))
    throw PreconditionError("p-group order must be prime to l");

  const FieldMatrix gamma_inv = gamma.inverse();
  for (const auto& g : generators)
    if (!seen.count((gamma * g * gamma_inv).data()))
      throw PreconditionError("gamma does not normalize the p-group");

  // V^P is the common kernel of h - 1 over the generators.
  const auto id = FieldMatrix::identity(field, n);
  FieldMatrix stacked(field, 0, n);
  for (const auto& g : generators) stacked = stacked.vconcat(g - id);
  const FieldMatrix fixed = generators.empty() ? id : stacked.kernel();

  PGroupAverage out;
  out.group_order = group.size();
  out.fixed_space_trace = fixed.cols() == 0 ? Cyclotomic::integer(0)
                                            : brauer_trace(restrict_to_subspace(gamma, fixed));
  Cyclotomic sum = Cyclotomic::integer(0);
  for (const auto& h : group) sum += brauer_trace(gamma * h);
  out.summed_trace = sum;
  out.integral = sum.divide_exact(static_cast<std::int64_t>(group.size()), out.average);
  return out;
}

bool pgroup_average_check(const std::vector<FieldMatrix>& generators, const FieldMatrix& gamma,
                          std::size_t max_order) {
  return pgroup_average(generators, gamma, max_order).holds();
}

}  // namespace ljmod::brauer
