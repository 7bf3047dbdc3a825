#pragma once

#include <map>
#include <stdexcept>

namespace spets {

/// Counts of irreducible characters (or weights) by l-defect.
struct DefectSpectrum {
    std::map<long long, long long> counts;  // defect -> count, counts >= 0

    long long total() const {
        long long t = 0;
        for (auto& [d, c] : counts) t += c;
        return t;
    }
    long long z() const { return at(0); }
    long long at(long long d) const {
        auto it = counts.find(d);
        return it == counts.end() ? 0 : it->second;
    }
    void add(long long d, long long c) {
        if (c == 0) return;
        counts[d] += c;
        if (counts[d] == 0) counts.erase(d);
    }

    DefectSpectrum shifted(long long v) const {
        DefectSpectrum out;
        for (auto& [d, c] : counts) out.counts[d + v] = c;
        return out;
    }
    // product group: defects add, counts multiply
    DefectSpectrum convolved(const DefectSpectrum& other) const {
        DefectSpectrum out;
        for (auto& [d1, c1] : counts)
            for (auto& [d2, c2] : other.counts) out.add(d1 + d2, c1 * c2);
        return out;
    }
    /// this - other, pointwise; nonzero entries are the discrepancies.
    std::map<long long, long long> minus(const DefectSpectrum& other) const {
        std::map<long long, long long> out;
        for (auto& [d, c] : counts) out[d] += c;
        for (auto& [d, c] : other.counts) {
            out[d] -= c;
            if (out[d] == 0) out.erase(d);
        }
        for (auto it = out.begin(); it != out.end();)
            it = it->second == 0 ? out.erase(it) : std::next(it);
        return out;
    }
    bool operator==(const DefectSpectrum&) const = default;
};

}  // namespace spets
