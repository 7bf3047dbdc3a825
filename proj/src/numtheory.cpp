#include "spets/numtheory.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace spets {

int nu(long long ell, long long n) {
    if (n == 0) throw std::invalid_argument("nu: zero argument");
    if (n < 0) n = -n;
    int v = 0;
    while (n % ell == 0) {
        n /= ell;
        ++v;
    }
    return v;
}

int nu_big(long long ell, const BigInt& n) {
    if (n == 0) throw std::invalid_argument("nu_big: zero argument");
    BigInt m = n < 0 ? BigInt(-n) : n;
    int v = 0;
    while (m % ell == 0) {
        m /= ell;
        ++v;
    }
    return v;
}

long long nu_factorial(long long ell, long long n) {
    long long total = 0;
    for (long long p = ell; p <= n; p *= ell) {
        total += n / p;
        if (p > n / ell) break;  // avoid overflow of p
    }
    return total;
}

BigInt factorial_big(long long n) {
    BigInt r = 1;
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt binomial_big(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long long prime_power_base(long long n) {
    if (n < 2) return 0;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        long long m = n;
        while (m % p == 0) m /= p;
        return m == 1 ? p : 0;
    }
    return n;  // n itself prime
}

long long pow_mod(long long base, long long exp, long long mod) {
    unsigned __int128 acc = 1;
    unsigned __int128 b = ((base % mod) + mod) % mod;
    while (exp > 0) {
        if (exp & 1) acc = acc * b % static_cast<unsigned long long>(mod);
        b = b * b % static_cast<unsigned long long>(mod);
        exp >>= 1;
    }
    return static_cast<long long>(acc);
}

long long inv_mod(long long a, long long mod) {
    long long t = 0, new_t = 1, r = mod, new_r = ((a % mod) + mod) % mod;
    while (new_r != 0) {
        long long q = r / new_r;
        std::swap(t -= q * new_t, new_t);
        std::swap(r -= q * new_r, new_r);
    }
    if (r != 1) throw std::invalid_argument("inv_mod: not invertible");
    return ((t % mod) + mod) % mod;
}

long long ord_mod(long long q, long long m) {
    long long x = ((q % m) + m) % m;
    if (std::gcd(x, m) != 1) throw std::invalid_argument("ord_mod: gcd != 1");
    long long ord = 1;
    long long cur = x;
    while (cur != 1) {
        cur = static_cast<long long>(static_cast<unsigned __int128>(cur) *
                                     static_cast<unsigned long long>(x) %
                                     static_cast<unsigned long long>(m));
        ++ord;
        if (ord > m) throw std::logic_error("ord_mod: diverged");
    }
    return ord;
}

int nu_qe0_minus_one(long long ell, long long q) {
    long long e0 = ord_mod(q, ell);
    int a = 0;
    long long mod = 1;
    while (true) {
        if (mod > std::numeric_limits<long long>::max() / ell)
            throw std::overflow_error("nu_qe0_minus_one: valuation too large");
        mod *= ell;
        if (pow_mod(q, e0, mod) != 1) return a;
        ++a;
    }
}

int nu_q_pow_minus_one(long long ell, long long q, long long d) {
    if (ell == 2) throw std::invalid_argument("nu_q_pow_minus_one: ell must be odd");
    if (q % ell == 0) throw std::invalid_argument("nu_q_pow_minus_one: ell | q");
    long long e0 = ord_mod(q, ell);
    if (d % e0 != 0) return 0;
    return nu_qe0_minus_one(ell, q) + nu(ell, d);
}

long long smallest_q0(long long e, long long ell, long long a) {
    for (long long q = 2; q < 1'000'000; ++q) {
        if (q % ell == 0 || prime_power_base(q) == 0) continue;
        if (ord_mod(q, ell) != e) continue;
        if (nu_qe0_minus_one(ell, q) == a) return q;
    }
    throw std::runtime_error("smallest_q0: none found");
}

long long smallest_q1(long long ell, long long a) { return smallest_q0(1, ell, a); }

long long primitive_root(long long ell) {
    if (!is_prime(ell)) throw std::invalid_argument("primitive_root: not prime");
    for (long long g = 2; g < ell; ++g)
        if (ord_mod(g, ell) == ell - 1) return g;
    throw std::logic_error("primitive_root: unreachable");
}

long long ipow_checked(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > std::numeric_limits<long long>::max() / base)
            throw std::overflow_error("ipow_checked");
        r *= base;
    }
    return r;
}

}  // namespace spets
