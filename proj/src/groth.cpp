#include "ljmod/groth.hpp"

#include <atomic>
#include <sstream>

#include "json.hpp"

#include "ljmod/bridge.hpp"
#include "ljmod/errors.hpp"

namespace ljmod::groth {

using segcomb::Multisegment;

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (n_ != o.n_) throw DomainError("matrix size mismatch");
  IntMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const std::int64_t a = (*this)(i, k);
      if (!a) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        std::int64_t p = 0;
        if (__builtin_mul_overflow(a, o(k, j), &p) || __builtin_add_overflow(out(i, j), p, &out(i, j)))
          throw ResourceError("integer overflow in matrix product");
      }
    }
  return out;
}

BlockBasis::BlockBasis(int d, int epsilon, std::vector<Multisegment> elements)
    : d_(d), epsilon_(epsilon), elements_(std::move(elements)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (!index_.emplace(elements_[i].id(), i).second)
      throw DomainError("duplicate multisegment in block basis");
    if (elements_[i].size() == 1) superspeh_.push_back(i);
  }
}

std::shared_ptr<const BlockBasis> BlockBasis::superunipotent(int d, int epsilon) {
  if (d < 1 || epsilon < 1) throw DomainError("d and epsilon must be positive");
  if (d % epsilon) throw DomainError("epsilon must divide d");
  std::vector<int> dims(static_cast<std::size_t>(epsilon), d / epsilon);
  return std::make_shared<const BlockBasis>(d, epsilon, segcomb::enumerate_block(epsilon, dims));
}

std::size_t BlockBasis::index_of(const Multisegment& a) const {
  auto it = index_.find(a.id());
  if (it == index_.end()) throw DomainError("multisegment " + a.id() + " is not in the block basis");
  return it->second;
}

namespace {

std::shared_ptr<const BlockBasis> cover_basis(int d) {
  if (d < 1) throw DomainError("d must be positive");
  if (d > kMaxClosedFormDegree)
    throw ResourceError("d = " + std::to_string(d) + " exceeds the closed-form ceiling of " +
                        std::to_string(kMaxClosedFormDegree));
  return BlockBasis::superunipotent(d, d);
}

std::vector<std::uint64_t> cover_masks(const BlockBasis& basis) {
  std::vector<std::uint64_t> masks(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) masks[i] = segcomb::subset_from_cover(basis[i]).mask();
  return masks;
}

}  // namespace

DecompositionMatrix closed_form_matrix(int d) {
  auto basis = cover_basis(d);
  const auto masks = cover_masks(*basis);
  const auto n = static_cast<std::ptrdiff_t>(basis->size());
  IntMatrix m(basis->size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < n; ++b)
    for (std::ptrdiff_t a = 0; a < n; ++a)
      m(static_cast<std::size_t>(b), static_cast<std::size_t>(a)) =
          (masks[static_cast<std::size_t>(b)] & ~masks[static_cast<std::size_t>(a)]) == 0 ? 1 : 0;
  return {std::move(basis), std::move(m)};
}

DecompositionMatrix closed_form_matrix_serial(int d) {
  auto basis = cover_basis(d);
  IntMatrix m(basis->size());
  for (std::size_t b = 0; b < basis->size(); ++b) {
    const auto ib = segcomb::subset_from_cover((*basis)[b]).starts();
    for (std::size_t a = 0; a < basis->size(); ++a) {
      const auto ia = segcomb::subset_from_cover((*basis)[a]).starts();
      bool subset = true;
      for (int x : ib) subset = subset && ia.count(x);
      m(b, a) = subset ? 1 : 0;
    }
  }
  return {std::move(basis), std::move(m)};
}

void check_unitriangular(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m(i, i) != 1) throw DomainError("matrix is not unitriangular (diagonal entry != 1)");
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (m(i, j) != 0) throw DomainError("matrix is not lower triangular in the basis order");
  }
}

IntMatrix invert_unitriangular_serial(const IntMatrix& m) {
  check_unitriangular(m);
  const std::size_t n = m.size();
  IntMatrix x(n);
  // Row-by-row forward substitution: x(i, j) = [i == j] - sum_{k < i} m(i, k) x(k, j).
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      std::int64_t acc = i == j ? 1 : 0;
      for (std::size_t k = j; k < i; ++k) {
        std::int64_t p = 0;
        if (__builtin_mul_overflow(m(i, k), x(k, j), &p) || __builtin_sub_overflow(acc, p, &acc))
          throw ResourceError("integer overflow while inverting");
      }
      x(i, j) = acc;
    }
  return x;
}

IntMatrix invert_unitriangular(const IntMatrix& m) {
  check_unitriangular(m);
  const std::size_t n = m.size();
  // Sparse column structure of the strictly lower part.
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> below(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = k + 1; i < n; ++i)
      if (m(i, k)) below[k].emplace_back(i, m(i, k));

  IntMatrix x(n);
  std::atomic<bool> overflow{false};
#pragma omp parallel
  {
    std::vector<std::int64_t> col(n);
#pragma omp for schedule(dynamic, 16)
    for (std::ptrdiff_t jj = 0; jj < static_cast<std::ptrdiff_t>(n); ++jj) {
      const auto j = static_cast<std::size_t>(jj);
      std::fill(col.begin(), col.end(), 0);
      col[j] = 1;
      // Once reached, col[k] is final; push its contribution downwards.
      for (std::size_t k = j; k < n; ++k) {
        const std::int64_t xk = col[k];
        if (!xk) continue;
        for (const auto& [i, v] : below[k]) {
          std::int64_t p = 0;
          if (__builtin_mul_overflow(v, xk, &p) || __builtin_sub_overflow(col[i], p, &col[i]))
            overflow.store(true, std::memory_order_relaxed);
        }
      }
      for (std::size_t i = j; i < n; ++i) x(i, j) = col[i];
    }
  }
  if (overflow.load()) throw ResourceError("integer overflow while inverting");
  return x;
}

GrothVector lj_projection(const Multisegment& a, std::shared_ptr<const BlockBasis> basis,
                          const IntMatrix& inverse) {
  if (inverse.size() != basis->size()) throw DomainError("inverse matrix does not match the basis");
  const std::size_t col = basis->index_of(a);
  GrothVector v;
  v.support = basis->superspeh_indices();
  for (std::size_t b : v.support) v.coeffs.push_back(inverse(b, col));
  v.basis = std::move(basis);
  return v;
}

std::string to_string(Sign s) {
  switch (s) {
    case Sign::Plus: return "+";
    case Sign::Minus: return "-";
    case Sign::Zero: return "0";
  }
  return "0";
}

Effectivity is_effective_up_to_sign(std::span<const std::int64_t> coeffs) {
  bool pos = false, neg = false;
  for (auto c : coeffs) {
    pos = pos || c > 0;
    neg = neg || c < 0;
  }
  if (pos && neg) return {false, Sign::Zero};
  return {true, pos ? Sign::Plus : neg ? Sign::Minus : Sign::Zero};
}

MatrixSource parse_matrix_source(const std::string& s) {
  if (s == "closed-form") return MatrixSource::ClosedForm;
  if (s == "kl" || s == "kl-computed") return MatrixSource::KlComputed;
  throw DomainError("unknown matrix source '" + s + "'");
}

SignReport scan_block(int d, MatrixSource source) {
  DecompositionMatrix dm = source == MatrixSource::ClosedForm ? closed_form_matrix(d)
                                                              : bridge::kl_decomposition_matrix(d);
  const IntMatrix inv = invert_unitriangular(dm.m);
  const auto& basis = *dm.basis;

  SignReport report;
  report.d = d;
  report.epsilon = d;
  for (std::size_t b : basis.superspeh_indices()) report.superspeh_ids.push_back(basis[b].id());
  for (std::size_t a = 0; a < basis.size(); ++a) {
    const GrothVector v = lj_projection(basis[a], dm.basis, inv);
    const Effectivity e = is_effective_up_to_sign(v);
    SimpleVerdict s{basis[a].id(), basis[a].size(), v.coeffs, e.effective, e.sign};
    report.all_effective = report.all_effective && e.effective;
    const Sign expected = basis[a].size() % 2 == 1 ? Sign::Plus : Sign::Minus;
    if (!e.effective || e.sign != expected) report.uniform_expected_sign = false;
    report.simples.push_back(std::move(s));
  }
  return report;
}

std::string SignReport::to_json() const {
  nlohmann::ordered_json j;
  j["d"] = d;
  j["epsilon"] = epsilon;
  j["convention"] = "raw n(b,a) coefficients on the single-segment basis; no (-1)^(d+1) normalization";
  j["superspeh"] = superspeh_ids;
  j["simples"] = nlohmann::ordered_json::array();
  for (const auto& s : simples)
    j["simples"].push_back(nlohmann::ordered_json{
        {"id", s.id}, {"coeffs", s.coeffs}, {"effective", s.effective}, {"sign", to_string(s.sign)}});
  j["all_effective"] = all_effective;
  return j.dump();
}

namespace {

std::string csv_field(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_csv(const BlockBasis& basis, const IntMatrix& m) {
  if (m.size() != basis.size()) throw DomainError("matrix does not match the basis");
  std::ostringstream os;
  os << "id";
  for (const auto& a : basis.elements()) os << ',' << csv_field(a.id());
  os << '\n';
  for (std::size_t i = 0; i < basis.size(); ++i) {
    os << csv_field(basis[i].id());
    for (std::size_t j = 0; j < basis.size(); ++j) os << ',' << m(i, j);
    os << '\n';
  }
  return os.str();
}

}  // namespace ljmod::groth
