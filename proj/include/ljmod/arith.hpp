#pragma once

// Congruence-counting invariants and block-level effectivity screens.

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ljmod::arith {

using BigInt = boost::multiprecision::cpp_int;

bool is_prime(long long n);

// Largest power of l dividing n (n >= 1).
BigInt l_part(const BigInt& n, long long l);

// (d / t) * (q^t - 1); DomainError unless t divides d.
BigInt a_invariant(long long d, long long t, long long q);

// [r]_l * m_pi: the number of representations strictly congruent to the
// Speh representation on an r-segment over a cuspidal with m_pi such.
BigInt speh_congruence_count(const BigInt& m_pi, long long r, long long l);

// The Speh representation on an r-segment over a cuspidal of degree
// d_prime (twist stabilizer t, congruence count m_pi) is l-superSpeh iff
// its congruence count reaches l_part(a_invariant(d_prime * r, t, q)).
bool is_l_superspeh(const BigInt& m_pi, long long r, long long d_prime, long long t, long long q,
                    long long l);

// Least k >= 1 with q^k = 1 mod l; DomainError unless l is prime and
// coprime to q.
long long mult_order(long long q, long long l);

struct BlockParams {
  long long d;
  long long q;
  long long l;
  long long epsilon;  // mult_order(q, l)

  // Validates d >= 1, q a prime power >= 2, l prime not dividing q.
  BlockParams(long long d, long long q, long long l);
};

struct SegmentClassParams {
  long long d_prime = 1;
  long long r = 1;
  long long t = 1;
  long long r0 = 1;
};

// Rank of the superSpeh part of a supercuspidal-support block.
long long superspeh_rank(const SegmentClassParams& params, bool is_self_twist_chain);

enum class RepKind { NonElliptic, Liftable, NonSelfTwist, NuStable, Other };
enum class Screen { Zero, Effective, Undecided };

RepKind parse_rep_kind(const std::string& s);
std::string to_string(Screen s);

Screen effectivity_screen(const BlockParams& block, RepKind kind);

}  // namespace ljmod::arith
