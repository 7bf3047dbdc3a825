#pragma once

#include <compare>
#include <map>
#include <tuple>
#include <vector>

#include "spets/numtheory.hpp"

namespace spets {

/// Integer partition, stored as a weakly decreasing list of positive parts.
/// The empty partition is the unique partition of 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    long long size() const;
    bool empty() const { return parts_.empty(); }
    int length() const { return static_cast<int>(parts_.size()); }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// e-tuple of partitions; labels Irr(G(e,1,n)) with n = total().
struct MultiPartition {
    std::vector<Partition> components;

    int e() const { return static_cast<int>(components.size()); }
    long long total() const;
    bool operator==(const MultiPartition&) const = default;
};

/// Family of ell-cores indexed by (residue i, level d, slot j), j < ell^d,
/// with weighted total sum_{i,d,j} ell^d |entry|.
struct CoreTower {
    int e = 1;
    long long ell = 2;
    std::map<std::tuple<int, int, long long>, Partition> entries;  // (i,d,j) -> core

    long long total() const;
    bool operator==(const CoreTower&) const = default;
};

struct HookData {
    std::vector<int> hooks;  // all hook lengths, sorted descending
    BigInt degree;           // |lambda|! / prod(hooks)
};

HookData hook_data(const Partition& lambda);

/// nu_ell of the symmetric-group character degree labelled by lambda.
long long nu_degree_sym(const Partition& lambda, long long ell);

/// Defect nu_ell(n!) - nu_ell(f^lambda) = sum of nu_ell over hook lengths.
long long defect_sym(const Partition& lambda, long long ell);

bool is_core(const Partition& lambda, long long ell);

struct CoreQuotient {
    Partition core;
    std::vector<Partition> quotient;  // ell components, fixed abacus order
};

/// Core and quotient on the abacus with bead count a multiple of ell;
/// the result does not depend on the bead count chosen.
CoreQuotient core_and_quotient(const Partition& lambda, long long ell);

/// Inverse of core_and_quotient.
Partition from_core_and_quotient(const Partition& core,
                                 const std::vector<Partition>& quotient,
                                 long long ell);

CoreTower core_tower_decompose(const MultiPartition& mu, long long ell);
MultiPartition core_tower_reconstruct(const CoreTower& tower);

std::vector<Partition> enumerate_partitions(long long n);
std::vector<Partition> enumerate_cores(long long n, long long ell);
long long count_cores(long long n, long long ell);

}  // namespace spets
