#include "spets/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace spets {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

long long Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

long long MultiPartition::total() const {
    long long t = 0;
    for (const auto& p : components) t += p.size();
    return t;
}

long long CoreTower::total() const {
    long long t = 0;
    for (const auto& [key, part] : entries) {
        long long weight = 1;
        for (int d = 0; d < std::get<1>(key); ++d) weight *= ell;
        t += weight * part.size();
    }
    return t;
}

HookData hook_data(const Partition& lambda) {
    const auto& p = lambda.parts();
    const int rows = lambda.length();
    std::vector<int> conj;  // column lengths
    if (rows > 0) {
        conj.assign(p[0], 0);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < p[i]; ++j) ++conj[j];
    }
    HookData out;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < p[i]; ++j)
            out.hooks.push_back((p[i] - j) + (conj[j] - i) - 1);
    std::sort(out.hooks.rbegin(), out.hooks.rend());
    out.degree = factorial_big(lambda.size());
    for (int h : out.hooks) out.degree /= h;
    return out;
}

long long nu_degree_sym(const Partition& lambda, long long ell) {
    long long v = nu_factorial(ell, lambda.size());
    const auto& p = lambda.parts();
    const int rows = lambda.length();
    std::vector<int> conj;
    if (rows > 0) {
        conj.assign(p[0], 0);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < p[i]; ++j) ++conj[j];
    }
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < p[i]; ++j) v -= nu(ell, (p[i] - j) + (conj[j] - i) - 1);
    return v;
}

long long defect_sym(const Partition& lambda, long long ell) {
    return nu_factorial(ell, lambda.size()) - nu_degree_sym(lambda, ell);
}

bool is_core(const Partition& lambda, long long ell) {
    // no hook length divisible by ell
    return defect_sym(lambda, ell) == 0;
}

namespace {

// First-column-justified beta set with b beads, b >= length.
std::vector<long long> beta_set(const Partition& lambda, long long b) {
    const auto& p = lambda.parts();
    std::vector<long long> beta(b);
    for (long long i = 0; i < b; ++i) {
        long long part = i < static_cast<long long>(p.size()) ? p[i] : 0;
        beta[i] = part + (b - 1 - i);
    }
    return beta;  // strictly decreasing
}

Partition partition_from_beta(std::vector<long long> beta) {
    std::sort(beta.rbegin(), beta.rend());
    const long long b = static_cast<long long>(beta.size());
    std::vector<int> parts;
    for (long long i = 0; i < b; ++i) {
        long long part = beta[i] - (b - 1 - i);
        if (part < 0) throw std::logic_error("partition_from_beta: invalid beta set");
        if (part > 0) parts.push_back(static_cast<int>(part));
    }
    return Partition(parts);
}

}  // namespace

CoreQuotient core_and_quotient(const Partition& lambda, long long ell) {
    if (ell < 2) throw std::invalid_argument("core_and_quotient: ell >= 2 required");
    const long long b = ell * ((lambda.length() + ell) / ell);
    auto beta = beta_set(lambda, b);

    // distribute beads onto runners
    std::vector<std::vector<long long>> runner(ell);
    for (long long x : beta) runner[x % ell].push_back(x / ell);

    CoreQuotient out;
    std::vector<long long> core_beta;
    out.quotient.resize(ell);
    for (long long r = 0; r < ell; ++r) {
        auto& pos = runner[r];
        std::sort(pos.rbegin(), pos.rend());
        out.quotient[r] = partition_from_beta(pos);
        const long long c = static_cast<long long>(pos.size());
        for (long long j = 0; j < c; ++j) core_beta.push_back(ell * j + r);
    }
    out.core = partition_from_beta(std::move(core_beta));
    return out;
}

Partition from_core_and_quotient(const Partition& core,
                                 const std::vector<Partition>& quotient, long long ell) {
    if (static_cast<long long>(quotient.size()) != ell)
        throw std::invalid_argument("from_core_and_quotient: need ell quotient components");
    if (!is_core(core, ell))
        throw std::invalid_argument("from_core_and_quotient: core has an ell-hook");
    long long need = core.length();
    for (const auto& q : quotient) need = std::max<long long>(need, ell * (q.length() + 1));
    const long long b = ell * ((need + ell) / ell);

    // runner bead counts of the core with b beads
    auto cbeta = beta_set(core, b);
    std::vector<std::vector<long long>> runner(ell);
    for (long long x : cbeta) runner[x % ell].push_back(x / ell);

    std::vector<long long> beta;
    for (long long r = 0; r < ell; ++r) {
        const long long c = static_cast<long long>(runner[r].size());
        const auto& qp = quotient[r].parts();
        if (static_cast<long long>(qp.size()) > c)
            throw std::invalid_argument("from_core_and_quotient: bead count too small");
        for (long long j = 0; j < c; ++j) {
            long long part = j < static_cast<long long>(qp.size()) ? qp[j] : 0;
            beta.push_back(ell * (part + (c - 1 - j)) + r);
        }
    }
    return partition_from_beta(std::move(beta));
}

CoreTower core_tower_decompose(const MultiPartition& mu, long long ell) {
    CoreTower tower;
    tower.e = mu.e();
    tower.ell = ell;
    for (int i = 0; i < mu.e(); ++i) {
        // level-d slots hold the iterated quotients of component i
        std::map<long long, Partition> level = {{0, mu.components[i]}};
        int d = 0;
        while (!level.empty()) {
            std::map<long long, Partition> next;
            for (const auto& [j, lam] : level) {
                auto cq = core_and_quotient(lam, ell);
                if (!cq.core.empty())
                    tower.entries[{i, d, j}] = cq.core;
                for (long long t = 0; t < ell; ++t)
                    if (!cq.quotient[t].empty()) next[ell * j + t] = cq.quotient[t];
            }
            level = std::move(next);
            ++d;
        }
    }
    return tower;
}

MultiPartition core_tower_reconstruct(const CoreTower& tower) {
    const long long ell = tower.ell;
    int max_level = 0;
    for (const auto& [key, part] : tower.entries) {
        const auto& [i, d, j] = key;
        if (i < 0 || i >= tower.e || d < 0 || j < 0 || j >= ipow_checked(ell, d))
            throw std::invalid_argument("core_tower_reconstruct: bad index");
        if (!is_core(part, ell))
            throw std::invalid_argument("core_tower_reconstruct: entry is not an ell-core");
        max_level = std::max(max_level, d);
    }
    MultiPartition mu;
    mu.components.resize(tower.e);
    for (int i = 0; i < tower.e; ++i) {
        // rebuild from the deepest level upward
        std::map<long long, Partition> level;
        for (int d = max_level; d >= 0; --d) {
            std::map<long long, Partition> cur;
            for (long long j = 0; j < ipow_checked(ell, d); ++j) {
                auto it = tower.entries.find({i, d, j});
                Partition core = it == tower.entries.end() ? Partition{} : it->second;
                std::vector<Partition> quot(ell);
                bool nontrivial = !core.empty();
                for (long long t = 0; t < ell; ++t) {
                    auto lt = level.find(ell * j + t);
                    if (lt != level.end()) {
                        quot[t] = lt->second;
                        nontrivial = true;
                    }
                }
                if (nontrivial) cur[j] = from_core_and_quotient(core, quot, ell);
            }
            level = std::move(cur);
        }
        if (auto it = level.find(0); it != level.end()) mu.components[i] = it->second;
    }
    return mu;
}

std::vector<Partition> enumerate_partitions(long long n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, long long rem, int maxpart) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min<long long>(maxpart, rem); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, static_cast<int>(n));
    return out;
}

std::vector<Partition> enumerate_cores(long long n, long long ell) {
    std::vector<Partition> out;
    for (auto& p : enumerate_partitions(n))
        if (is_core(p, ell)) out.push_back(std::move(p));
    return out;
}

long long count_cores(long long n, long long ell) {
    return static_cast<long long>(enumerate_cores(n, ell).size());
}

}  // namespace spets
