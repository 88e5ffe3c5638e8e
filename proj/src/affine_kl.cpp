#include "ljmod/affine_kl.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <mutex>
#include <set>

#include "json.hpp"
#include "ljmod/errors.hpp"

namespace ljmod::affine_kl {

long long KLPolynomial::at_one() const {
  long long s = 0;
  for (auto c : coeffs) s += c;
  return s;
}

std::string KLPolynomial::to_string() const {
  if (coeffs.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(coeffs[i]);
  }
  return s;
}

namespace {

using Poly = std::vector<long long>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void add_shifted(Poly& acc, const Poly& p, std::size_t shift, long long factor) {
  if (p.empty() || factor == 0) return;
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, 0);
  for (std::size_t i = 0; i < p.size(); ++i) acc[i + shift] += factor * p[i];
}

int first_right_descent(const AffinePermutation& w) {
  for (int i = 0; i < w.rank() && w.rank() > 1; ++i)
    if (w.has_right_descent(i)) return i;
  return -1;
}

void check_comparable(const AffinePermutation& u, const AffinePermutation& w) {
  if (u.rank() != w.rank()) throw DomainError("affine permutations of different rank");
  if (u.level() != w.level()) throw DomainError("affine permutations in different rotation components");
}

bool sorted_before(const AffinePermutation& a, const AffinePermutation& b) {
  const int la = length(a), lb = length(b);
  return la != lb ? la < lb : a.window() < b.window();
}

}  // namespace

bool bruhat_leq(const AffinePermutation& u, const AffinePermutation& w) {
  check_comparable(u, w);
  AffinePermutation x = u, y = w;
  // If y s < y: x <= y iff min(x, x s) <= y s.
  while (true) {
    const int lx = length(x), ly = length(y);
    if (lx > ly) return false;
    if (ly == 0) return x == y;
    const int s = first_right_descent(y);
    if (x.has_right_descent(s)) x = x.times_simple(s);
    y = y.times_simple(s);
  }
}

std::size_t KLContext::KeyHash::operator()(const Key& k) const {
  AffinePermutationHash h;
  return h(k.first) * 31 + h(k.second);
}

KLContext::KLContext(int d, int max_length, bool memoize)
    : d_(d), max_length_(max_length), memoize_(memoize) {
  if (d < 1) throw DomainError("rank must be positive");
  if (max_length < 0) throw DomainError("max length must be nonnegative");
}

void KLContext::check(const AffinePermutation& u, const AffinePermutation& w) const {
  if (u.rank() != d_ || w.rank() != d_) throw DomainError("element rank does not match the context");
  check_comparable(u, w);
  if (length(w) > max_length_)
    throw ResourceError("length " + std::to_string(length(w)) + " exceeds the cap of " +
                        std::to_string(max_length_));
}

const KLContext::Ideal& KLContext::ideal(const AffinePermutation& w) {
  {
    std::shared_lock lock(mu_);
    if (auto it = ideals_.find(w); it != ideals_.end()) return *it->second;
  }
  auto made = std::make_unique<Ideal>();
  const int s = first_right_descent(w);
  if (s < 0) {
    made->sorted.push_back(w);
    made->members.insert(w);
  } else {
    const Ideal& below = ideal(w.times_simple(s));
    made->members = below.members;
    for (const auto& z : below.sorted) made->members.insert(z.times_simple(s));
    made->sorted.assign(made->members.begin(), made->members.end());
    std::sort(made->sorted.begin(), made->sorted.end(), sorted_before);
  }
  std::unique_lock lock(mu_);
  auto [it, inserted] = ideals_.try_emplace(w, std::move(made));
  return *it->second;
}

const std::vector<AffinePermutation>& KLContext::lower_ideal(const AffinePermutation& w) {
  check(w, w);
  return ideal(w).sorted;
}

bool KLContext::leq(const AffinePermutation& u, const AffinePermutation& w) {
  check(u, w);
  return ideal(w).members.count(u) > 0;
}

KLPolynomial KLContext::kl_polynomial(const AffinePermutation& u, const AffinePermutation& w) {
  check(u, w);
  if (u == w) return {{1}};
  if (!ideal(w).members.count(u)) return {};
  {
    std::shared_lock lock(mu_);
    if (auto it = polys_.find({u, w}); it != polys_.end()) return it->second;
  }
  KLPolynomial p = compute(u, w);
  if (!memoize_) return p;
  std::unique_lock lock(mu_);
  polys_.try_emplace({u, w}, p);
  return p;
}

long long KLContext::mu(const AffinePermutation& u, const AffinePermutation& w) {
  const int gap = length(w) - length(u);
  if (gap <= 0 || gap % 2 == 0) return 0;
  const auto p = kl_polynomial(u, w);
  const auto top = static_cast<std::size_t>((gap - 1) / 2);
  return top < p.coeffs.size() ? p.coeffs[top] : 0;
}

KLPolynomial KLContext::compute(const AffinePermutation& x, const AffinePermutation& w) {
  const int s = first_right_descent(w);
  const AffinePermutation xs = x.times_simple(s);
  // P_{x,w} = P_{xs,w} whenever s is a right descent of w.
  if (!x.has_right_descent(s)) return kl_polynomial(xs, w);

  const AffinePermutation v = w.times_simple(s);
  const int lw = length(w);
  Poly p = kl_polynomial(xs, v).coeffs;
  add_shifted(p, kl_polynomial(x, v).coeffs, 1, 1);
  const Ideal& below_v = ideal(v);
  for (const auto& z : below_v.sorted) {
    if (z == v || !z.has_right_descent(s)) continue;
    const int lz = length(z);
    if ((length(v) - lz) % 2 == 0) continue;
    if (!ideal(z).members.count(x)) continue;
    const long long m = mu(z, v);
    if (!m) continue;
    add_shifted(p, kl_polynomial(x, z).coeffs, static_cast<std::size_t>((lw - lz) / 2), -m);
  }
  trim(p);
  return {std::move(p)};
}

std::size_t KLContext::cached_polynomials() const {
  std::shared_lock lock(mu_);
  return polys_.size();
}

bool KLContext::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) return false;
  nlohmann::json j;
  try {
    in >> j;
    if (j.value("format", "") != kCacheFormat || j.value("version", 0) != kCacheVersion ||
        j.value("d", 0) != d_)
      return false;
    std::vector<std::pair<Key, KLPolynomial>> entries;
    for (const auto& e : j.at("entries")) {
      AffinePermutation u(e.at(0).get<std::vector<long long>>());
      AffinePermutation w(e.at(1).get<std::vector<long long>>());
      if (u.rank() != d_ || w.rank() != d_) return false;
      entries.push_back({{u, w}, {e.at(2).get<std::vector<long long>>()}});
    }
    std::unique_lock lock(mu_);
    for (auto& [k, p] : entries) polys_.try_emplace(k, std::move(p));
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

void KLContext::save(const std::string& path) const {
  std::map<std::pair<std::vector<long long>, std::vector<long long>>, std::vector<long long>> sorted;
  {
    std::shared_lock lock(mu_);
    for (const auto& [k, p] : polys_) sorted.emplace(std::make_pair(k.first.window(), k.second.window()), p.coeffs);
  }
  nlohmann::ordered_json j;
  j["format"] = kCacheFormat;
  j["version"] = kCacheVersion;
  j["d"] = d_;
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& [k, p] : sorted) j["entries"].push_back({k.first, k.second, p});
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write cache file " + path);
  out << j.dump() << '\n';
}

KLPolynomial kl_polynomial(const AffinePermutation& u, const AffinePermutation& w, int max_length) {
  KLContext ctx(w.rank(), max_length);
  return ctx.kl_polynomial(u, w);
}

std::vector<int> parabolic_generators(int d, int epsilon) {
  if (d < 1 || epsilon < 1 || d % epsilon) throw DomainError("epsilon must divide d");
  const int block = d / epsilon;
  std::vector<int> j;
  for (int i = 1; i < d; ++i)
    if (i % block) j.push_back(i);
  return j;
}

AffinePermutation max_in_double_coset(const AffinePermutation& w, const std::vector<int>& j) {
  AffinePermutation cur = w;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int s : j) {
      if (!cur.has_right_descent(s)) {
        cur = cur.times_simple(s);
        moved = true;
      }
      if (!cur.has_left_descent(s)) {
        cur = cur.simple_times(s);
        moved = true;
      }
    }
  }
  return cur;
}

std::vector<AffinePermutation> elements_up_to_length(int d, int bound, long long level) {
  if (d < 1) throw DomainError("rank must be positive");
  AffinePermutation start = AffinePermutation::identity(d);
  const auto rot = AffinePermutation::rotation(d);
  const auto rot_inv = rot.inverse();
  for (long long k = 0; k < (level < 0 ? -level : level); ++k) start = (level > 0 ? rot : rot_inv) * start;
  std::set<std::vector<long long>> seen{start.window()};
  std::vector<AffinePermutation> out{start};
  std::deque<AffinePermutation> queue{start};
  while (!queue.empty() && d > 1) {
    AffinePermutation w = queue.front();
    queue.pop_front();
    if (length(w) >= bound) continue;
    for (int i = 0; i < d; ++i) {
      if (w.has_right_descent(i)) continue;
      AffinePermutation next = w.times_simple(i);
      if (seen.insert(next.window()).second) {
        out.push_back(next);
        queue.push_back(next);
      }
    }
  }
  std::sort(out.begin(), out.end(), sorted_before);
  return out;
}

std::vector<DoubleCosetRep> max_double_coset_reps(int d, int epsilon, int length_bound, long long level) {
  if (length_bound < 0) throw DomainError("length bound must be nonnegative");
  const auto j = parabolic_generators(d, epsilon);
  std::vector<int> composition(static_cast<std::size_t>(epsilon), d / epsilon);
  std::map<std::vector<long long>, DoubleCosetRep> reps;
  // Elements come in increasing length, so the first hit fixes min_length.
  for (const auto& w : elements_up_to_length(d, length_bound, level)) {
    AffinePermutation top = max_in_double_coset(w, j);
    if (reps.count(top.window())) continue;
    reps.emplace(top.window(), DoubleCosetRep{composition, top, length(top), length(w)});
  }
  std::vector<DoubleCosetRep> out;
  for (auto& [k, r] : reps) out.push_back(std::move(r));
  std::sort(out.begin(), out.end(), [](const DoubleCosetRep& a, const DoubleCosetRep& b) {
    return sorted_before(a.element, b.element);
  });
  return out;
}

}  // namespace ljmod::affine_kl
