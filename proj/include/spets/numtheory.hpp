#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace spets {

using BigInt = boost::multiprecision::cpp_int;

// l-adic valuation of a nonzero integer.
int nu(long long ell, long long n);
int nu_big(long long ell, const BigInt& n);

// nu_ell(n!) by Legendre's formula.
long long nu_factorial(long long ell, long long n);

BigInt factorial_big(long long n);
BigInt binomial_big(long long n, long long k);

bool is_prime(long long n);
// Returns base prime p if n = p^k (k >= 1), else 0.
long long prime_power_base(long long n);

long long pow_mod(long long base, long long exp, long long mod);
long long inv_mod(long long a, long long mod);

// Multiplicative order of q modulo m (gcd(q, m) = 1).
long long ord_mod(long long q, long long m);

// nu_ell(q^e0 - 1) where e0 = ord_ell(q); ell odd, ell not dividing q.
int nu_qe0_minus_one(long long ell, long long q);

// nu_ell(q^d - 1) via the lifting-the-exponent rule, ell odd.
int nu_q_pow_minus_one(long long ell, long long q, long long d);

// Smallest prime power q0 with ord_ell(q0) = e and nu_ell(q0^e - 1) = a.
long long smallest_q0(long long e, long long ell, long long a);

// Smallest prime power q with q = 1 (mod ell) and nu_ell(q - 1) = a.
long long smallest_q1(long long ell, long long a);

// Smallest primitive root modulo an odd prime ell.
long long primitive_root(long long ell);

// x -> x^k exact powers of small integers with overflow check.
long long ipow_checked(long long base, int exp);

}  // namespace spets
