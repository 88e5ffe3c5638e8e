#include "ljmod/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "ljmod/errors.hpp"

namespace ljmod {

namespace {

using Poly = std::vector<std::int64_t>;

// Divides num by the monic den in place; returns the quotient.
Poly divide_monic(Poly num, const Poly& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() <= dd) return {0};
  Poly quot(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    const std::int64_t c = num[i];
    quot[i - dd] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  return quot;
}

void reduce_monic(Poly& p, const Poly& mod) {
  const std::size_t dm = mod.size() - 1;
  for (std::size_t i = p.size(); i-- > dm;) {
    const std::int64_t c = p[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dm; ++j) p[i - dm + j] -= c * mod[j];
  }
  p.resize(dm);
}

}  // namespace

const Poly& cyclotomic_polynomial(int n) {
  if (n < 1) throw DomainError("cyclotomic index must be positive");
  static std::map<int, Poly> cache;
  static std::mutex mu;
  std::lock_guard lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  // Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e, for every divisor d of n
  // in increasing order so the smaller factors are always cached.
  for (int d = 1; d <= n; ++d) {
    if (n % d || cache.count(d)) continue;
    Poly p(static_cast<std::size_t>(d) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(d)] = 1;
    for (int e = 1; e < d; ++e)
      if (d % e == 0) p = divide_monic(std::move(p), cache.at(e));
    cache.emplace(d, std::move(p));
  }
  return cache.at(n);
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

Cyclotomic::Cyclotomic(int conductor, std::vector<std::int64_t> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {
  if (conductor_ < 1) throw DomainError("conductor must be positive");
  const auto& phi = cyclotomic_polynomial(conductor_);
  if (coeffs_.size() < phi.size() - 1) coeffs_.resize(phi.size() - 1, 0);
  reduce_monic(coeffs_, phi);
}

Cyclotomic Cyclotomic::zeta(int n, long long k) {
  long long e = k % n;
  if (e < 0) e += n;
  std::vector<std::int64_t> c(static_cast<std::size_t>(e) + 1, 0);
  c[static_cast<std::size_t>(e)] = 1;
  return Cyclotomic(n, std::move(c));
}

Cyclotomic Cyclotomic::lift(int m) const {
  if (m % conductor_) throw DomainError("lift target must be a multiple of the conductor");
  if (m == conductor_) return *this;
  const std::size_t step = static_cast<std::size_t>(m / conductor_);
  std::vector<std::int64_t> c(coeffs_.size() * step + 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i * step] = coeffs_[i];
  return Cyclotomic(m, std::move(c));
}

bool Cyclotomic::is_zero() const {
  for (auto c : coeffs_)
    if (c) return false;
  return true;
}

bool Cyclotomic::is_integer() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i]) return false;
  return true;
}

std::int64_t Cyclotomic::integer_value() const {
  if (!is_integer()) throw DomainError("cyclotomic element is not a rational integer");
  return coeffs_.empty() ? 0 : coeffs_[0];
}

bool Cyclotomic::divide_exact(std::int64_t divisor, Cyclotomic& out) const {
  if (divisor == 0) throw DomainError("division by zero");
  std::vector<std::int64_t> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (coeffs_[i] % divisor) return false;
    c[i] = coeffs_[i] / divisor;
  }
  out = Cyclotomic(conductor_, std::move(c));
  return true;
}

Cyclotomic Cyclotomic::operator-() const {
  auto c = coeffs_;
  for (auto& v : c) v = -v;
  return Cyclotomic(conductor_, std::move(c));
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  const int m = std::lcm(a.conductor_, b.conductor_);
  auto x = a.lift(m), y = b.lift(m);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
  return x;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  const int m = std::lcm(a.conductor_, b.conductor_);
  auto x = a.lift(m), y = b.lift(m);
  std::vector<std::int64_t> prod(x.coeffs_.size() + y.coeffs_.size(), 0);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < y.coeffs_.size(); ++j)
      prod[i + j] += x.coeffs_[i] * y.coeffs_[j];
  return Cyclotomic(m, std::move(prod));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  const int m = std::lcm(a.conductor_, b.conductor_);
  return a.lift(m).coeffs_ == b.lift(m).coeffs_;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const auto c = coeffs_[i];
    if (!c) continue;
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    const auto mag = c < 0 ? -c : c;
    if (i == 0 || mag != 1) os << mag;
    if (i > 0) os << "z" << conductor_ << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace ljmod
