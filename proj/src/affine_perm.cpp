#include "ljmod/affine_perm.hpp"

#include <algorithm>
#include <sstream>

#include "ljmod/errors.hpp"

namespace ljmod::affine_kl {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long long mod_pos(long long a, long long b) { return a - b * floor_div(a, b); }

}  // namespace

AffinePermutation::AffinePermutation(std::vector<long long> window) : window_(std::move(window)) {
  const auto d = static_cast<long long>(window_.size());
  if (d < 1) throw DomainError("affine permutation window must be nonempty");
  std::vector<bool> seen(static_cast<std::size_t>(d), false);
  for (long long v : window_) {
    auto r = static_cast<std::size_t>(mod_pos(v, d));
    if (seen[r]) throw DomainError("window residues are not a permutation of Z/dZ");
    seen[r] = true;
  }
}

AffinePermutation AffinePermutation::identity(int d) {
  std::vector<long long> w(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::simple(int d, int i) {
  if (d < 2 || i < 0 || i >= d) throw DomainError("simple reflection index out of range");
  auto w = identity(d).window_;
  if (i == 0) {
    w.front() = 0;
    w.back() = d + 1;
  } else {
    std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
  }
  return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::rotation(int d) {
  std::vector<long long> w(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) w[static_cast<std::size_t>(i)] = i + 2;
  return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::parse(const std::string& text) {
  std::string cleaned;
  for (char c : text) cleaned += (c == '[' || c == ']' || c == ',' || c == '(' || c == ')') ? ' ' : c;
  std::istringstream is(cleaned);
  std::vector<long long> w;
  long long v = 0;
  while (is >> v) w.push_back(v);
  if (!is.eof()) throw DomainError("cannot parse window '" + text + "'");
  return AffinePermutation(std::move(w));
}

long long AffinePermutation::operator()(long long i) const {
  const auto d = static_cast<long long>(window_.size());
  const long long r = mod_pos(i - 1, d);
  return window_[static_cast<std::size_t>(r)] + (i - 1 - r);
}

long long AffinePermutation::level() const {
  const auto d = static_cast<long long>(window_.size());
  long long s = 0;
  for (long long v : window_) s += v;
  return (s - d * (d + 1) / 2) / d;
}

AffinePermutation AffinePermutation::operator*(const AffinePermutation& o) const {
  if (o.rank() != rank()) throw DomainError("cannot compose affine permutations of different rank");
  std::vector<long long> w(window_.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = (*this)(o.window_[i]);
  return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::inverse() const {
  const auto d = static_cast<long long>(window_.size());
  std::vector<long long> w(window_.size());
  for (long long i = 1; i <= d; ++i) {
    const long long v = window_[static_cast<std::size_t>(i - 1)];
    const long long r = mod_pos(v - 1, d);  // v = (r + 1) + k d
    w[static_cast<std::size_t>(r)] = i - (v - 1 - r);
  }
  return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::times_simple(int i) const {
  const int d = rank();
  auto w = window_;
  if (i == 0) {
    // positions 0 and 1: f(0) = f(d) - d.
    const long long f0 = w.back() - d, f1 = w.front();
    w.front() = f0;
    w.back() = f1 + d;
  } else {
    std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
  }
  return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::simple_times(int i) const {
  return simple(rank(), i) * *this;
}

bool AffinePermutation::has_right_descent(int i) const {
  return (*this)(i) > (*this)(i + 1);
}

bool AffinePermutation::has_left_descent(int i) const {
  return inverse().has_right_descent(i);
}

std::string AffinePermutation::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < window_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(window_[i]);
  }
  return s + "]";
}

std::size_t AffinePermutationHash::operator()(const AffinePermutation& w) const {
  std::size_t h = 1469598103934665603ULL;
  for (long long v : w.window()) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

int length(const AffinePermutation& w) {
  const int d = w.rank();
  long long len = 0;
  const auto& f = w.window();
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      const long long q = floor_div(f[static_cast<std::size_t>(j)] - f[static_cast<std::size_t>(i)], d);
      len += q < 0 ? -q : q;
    }
  return static_cast<int>(len);
}

std::vector<int> reduced_word(const AffinePermutation& w) {
  const int d = w.rank();
  std::vector<int> word;
  AffinePermutation cur = w;
  // Strip right descents until only the rotation part remains.
  while (true) {
    int found = -1;
    for (int i = 0; i < d && d > 1; ++i)
      if (cur.has_right_descent(i)) {
        found = i;
        break;
      }
    if (found < 0) break;
    word.push_back(found);
    cur = cur.times_simple(found);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

}  // namespace ljmod::affine_kl
