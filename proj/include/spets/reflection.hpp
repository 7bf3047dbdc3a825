#pragma once

#include <string>
#include <variant>
#include <vector>

#include "spets/numtheory.hpp"
#include "spets/partition.hpp"
#include "spets/spectrum.hpp"

namespace spets {

// ---------------------------------------------------------------------------
// group descriptors
// ---------------------------------------------------------------------------

class GroupDescriptor;

/// Monomial group G(e,r,n): n x n monomial matrices with e-th root of unity
/// entries whose product is an (e/r)-th root of unity.  Requires r | e.
struct Imprimitive {
    long long e = 1, r = 1, n = 1;
    bool operator==(const Imprimitive&) const = default;
};

/// Symmetric group on the full permutation lattice (rank n, degrees 1..n).
struct Symmetric {
    long long n = 1;
    bool operator==(const Symmetric&) const = default;
};

enum class ExceptionalType { G2, F4, E6, E7, E8 };

struct ExceptionalWeyl {
    ExceptionalType type = ExceptionalType::G2;
    bool operator==(const ExceptionalWeyl&) const = default;
};

/// Exotic reflection groups G12, G29, G31, G34 (indices in the
/// Shephard-Todd list), relevant at ell = 3, 5, 5, 7.
struct Aguade {
    int index = 12;
    bool operator==(const Aguade&) const = default;
};

struct Product {
    std::vector<std::pair<GroupDescriptor, long long>> factors;  // (group, multiplicity)
    bool operator==(const Product&) const = default;
};

class GroupDescriptor {
public:
    using Variant = std::variant<Imprimitive, Symmetric, ExceptionalWeyl, Aguade, Product>;

    GroupDescriptor() : v_(Symmetric{1}) {}
    GroupDescriptor(Imprimitive g);
    GroupDescriptor(Symmetric g);
    GroupDescriptor(ExceptionalWeyl g) : v_(g) {}
    GroupDescriptor(Aguade g);
    GroupDescriptor(Product g);

    const Variant& v() const { return v_; }
    template <class T>
    const T* get_if() const {
        return std::get_if<T>(&v_);
    }
    bool operator==(const GroupDescriptor&) const = default;

private:
    Variant v_;
};

GroupDescriptor imprimitive(long long e, long long r, long long n);
GroupDescriptor symmetric(long long n);
GroupDescriptor product_of(std::vector<std::pair<GroupDescriptor, long long>> factors);

std::string to_string(const GroupDescriptor& g);

// ---------------------------------------------------------------------------
// twists and cosets
// ---------------------------------------------------------------------------

struct TrivialTwist {
    bool operator==(const TrivialTwist&) const = default;
};
/// Scalar root of unity zeta of the given multiplicative order.
struct ScalarTwist {
    long long order = 1;
    bool operator==(const ScalarTwist&) const = default;
};
/// Cyclic permutation of identical product factors; cycle lengths listed in
/// the order of the flattened factor sequence and summing to its length.
struct CycleTwist {
    std::vector<long long> lengths;
    bool operator==(const CycleTwist&) const = default;
};

using TwistDescriptor = std::variant<TrivialTwist, ScalarTwist, CycleTwist>;

struct ReflectionCoset {
    GroupDescriptor group;
    TwistDescriptor twist = TrivialTwist{};
};

ReflectionCoset untwisted(GroupDescriptor g);

/// Rational rotation t/m, meaning the root of unity zeta_m^t for a fixed
/// primitive m-th root zeta_m.  Stored reduced with 0 <= num < den.
struct RootOfUnity {
    long long num = 0, den = 1;

    static RootOfUnity make(long long num, long long den);
    bool is_one() const { return num == 0; }
    long long order() const { return den; }
    RootOfUnity times(const RootOfUnity& o) const;
    RootOfUnity pow(long long k) const;
    bool operator==(const RootOfUnity&) const = default;
    auto operator<=>(const RootOfUnity&) const = default;
};

using GeneralizedDegrees = std::vector<std::pair<long long, RootOfUnity>>;

// ---------------------------------------------------------------------------
// operations
// ---------------------------------------------------------------------------

/// Invariant degrees, sorted ascending.  Product of the degrees is |G|.
std::vector<long long> degrees(const GroupDescriptor& g);

long long rank(const GroupDescriptor& g);
BigInt group_order(const GroupDescriptor& g);
long long nu_group_order(const GroupDescriptor& g, long long ell);

/// Multiset {(d_i, eps_i)} of generalized degrees of the coset.
GeneralizedDegrees generalized_degrees(const ReflectionCoset& c);

/// Coefficients (index = power of x) of prod_i (x^{d_i} - eps_i).  Supported
/// whenever all eps_i are +-1 after expansion; cycle blocks use
/// O_x = O_{x^c}(inner).
std::vector<BigInt> order_polynomial(const ReflectionCoset& c);

/// x^N * prod_i (x^{d_i} - eps_i^{-1}) with N the number of reflections;
/// the order polynomial of the associated spets, same support caveat.
std::vector<BigInt> spets_order_polynomial(const ReflectionCoset& c);

BigInt eval_poly(const std::vector<BigInt>& coeffs, long long q);

/// nu_ell of the order polynomial evaluated at q (exact, via the
/// lifting-the-exponent rule).  Requires ell odd, gcd(q, ell) = 1.
long long order_valuation(const ReflectionCoset& c, long long q, long long ell);

/// Lehrer-Springer relative Weyl group of the coset twisted by a scalar of
/// order zeta_order.  Imprimitive/Symmetric/Product only.
GroupDescriptor relative_weyl(const ReflectionCoset& c, long long zeta_order);

struct SylowOrder {
    long long structural_exponent = 0;  // a * rank(W_phi_zeta) + nu_ell |W_phi_zeta|
    long long polynomial_exponent = 0;  // nu_ell O_q(W phi)
    bool equal = false;
};

/// Both forms of the Sylow l-subgroup order; asserts they agree.
SylowOrder sylow_order(const ReflectionCoset& c, long long q, long long ell);

/// Character counts by l-defect.  Symmetric, Imprimitive (with the cyclic
/// shift-orbit rule for r > 1) and Products; exceptional groups are not
/// handled here.
DefectSpectrum irr_spectrum(const GroupDescriptor& g, long long ell);

/// Defect-zero count z(kG(e,r,m)) computed by the core-tuple orbit rule.
long long z_core_tuples(long long e, long long r, long long m, long long ell);

enum class PrimeStatus { bad, good, very_good };
enum class LatticeFlag { simply_connected, permutation, other };

PrimeStatus prime_status(const GroupDescriptor& g, long long ell, LatticeFlag lattice);

}  // namespace spets
