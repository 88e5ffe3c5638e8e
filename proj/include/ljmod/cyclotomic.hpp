#pragma once

// Exact arithmetic in Z[zeta_N] = Z[x]/(Phi_N), power basis
// 1, x, ..., x^{phi(N)-1}.

#include <cstdint>
#include <string>
#include <vector>

namespace ljmod {

// Coefficients of the N-th cyclotomic polynomial, constant term first.
const std::vector<std::int64_t>& cyclotomic_polynomial(int n);

int euler_phi(int n);

class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(1, std::vector<std::int64_t>{0}) {}
  // Reduces coeffs (any length) modulo Phi_conductor.
  Cyclotomic(int conductor, std::vector<std::int64_t> coeffs);

  static Cyclotomic integer(std::int64_t k) { return Cyclotomic(1, {k}); }
  // zeta_N^k.
  static Cyclotomic zeta(int n, long long k);

  int conductor() const { return conductor_; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  // Same element written over Z[zeta_M], M a multiple of the conductor.
  Cyclotomic lift(int m) const;

  bool is_zero() const;
  bool is_integer() const;
  std::int64_t integer_value() const;  // requires is_integer()

  // Exact division by an integer; false when the quotient is not integral.
  bool divide_exact(std::int64_t divisor, Cyclotomic& out) const;

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  std::string to_string() const;

 private:
  int conductor_;
  std::vector<std::int64_t> coeffs_;  // length phi(conductor)
};

}  // namespace ljmod
