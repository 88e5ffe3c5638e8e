#include "ljmod/arith.hpp"

#include "ljmod/errors.hpp"

namespace ljmod::arith {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

BigInt l_part(const BigInt& n, long long l) {
  if (n < 1) throw DomainError("l_part needs a positive integer");
  if (l < 2) throw DomainError("l_part needs l >= 2");
  BigInt rest = n, power = 1;
  while (rest % l == 0) {
    rest /= l;
    power *= l;
  }
  return power;
}

BigInt a_invariant(long long d, long long t, long long q) {
  if (d < 1 || t < 1 || q < 2) throw DomainError("a_invariant needs d, t >= 1 and q >= 2");
  if (d % t) throw DomainError("t must divide d");
  BigInt qt = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(t));
  return BigInt(d / t) * (qt - 1);
}

BigInt speh_congruence_count(const BigInt& m_pi, long long r, long long l) {
  if (m_pi < 1 || r < 1) throw DomainError("congruence count inputs must be positive");
  return l_part(BigInt(r), l) * m_pi;
}

bool is_l_superspeh(const BigInt& m_pi, long long r, long long d_prime, long long t, long long q,
                    long long l) {
  return speh_congruence_count(m_pi, r, l) == l_part(a_invariant(d_prime * r, t, q), l);
}

long long mult_order(long long q, long long l) {
  if (!is_prime(l)) throw DomainError("l must be prime");
  if (q < 2) throw DomainError("q must be at least 2");
  if (q % l == 0) throw DomainError("q and l must be coprime");
  const long long base = q % l;
  long long x = base, k = 1;
  while (x != 1) {
    x = x * base % l;
    ++k;
  }
  return k;
}

namespace {

bool is_prime_power(long long n) {
  if (n < 2) return false;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    return n == 1;
  }
  return true;
}

}  // namespace

BlockParams::BlockParams(long long d_, long long q_, long long l_) : d(d_), q(q_), l(l_) {
  if (d < 1) throw DomainError("d must be positive");
  if (!is_prime_power(q)) throw DomainError("q must be a prime power");
  epsilon = mult_order(q, l);
}

long long superspeh_rank(const SegmentClassParams& params, bool is_self_twist_chain) {
  if (params.r < 1 || params.r0 < 1) throw DomainError("r and r0 must be positive");
  if (!is_self_twist_chain) return 0;
  return params.r % params.r0 == 0 ? params.r0 : 1;
}

RepKind parse_rep_kind(const std::string& s) {
  if (s == "non-elliptic") return RepKind::NonElliptic;
  if (s == "liftable") return RepKind::Liftable;
  if (s == "non-self-twist") return RepKind::NonSelfTwist;
  if (s == "nu-stable") return RepKind::NuStable;
  if (s == "other") return RepKind::Other;
  throw DomainError("unknown representation kind '" + s + "'");
}

std::string to_string(Screen s) {
  switch (s) {
    case Screen::Zero: return "zero";
    case Screen::Effective: return "effective";
    case Screen::Undecided: return "undecided";
  }
  return "undecided";
}

Screen effectivity_screen(const BlockParams& block, RepKind kind) {
  switch (kind) {
    case RepKind::NonElliptic: return Screen::Zero;
    case RepKind::Liftable:
    case RepKind::NonSelfTwist:
    case RepKind::NuStable: return Screen::Effective;
    case RepKind::Other: break;
  }
  // epsilon is not a proper divisor of d: epsilon = 1, epsilon = d, or it
  // does not divide d at all.
  const long long e = block.epsilon;
  if (e == 1 || e == block.d || block.d % e != 0) return Screen::Effective;
  return Screen::Undecided;
}

}  // namespace ljmod::arith
