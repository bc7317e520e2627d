#include "iib/universal_set.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace iib {

namespace {

// All size-i index subsets of {0..n-1}, lexicographic.
std::vector<std::vector<int>> index_combinations(int n, int i) {
    std::vector<std::vector<int>> out;
    std::vector<int> current(i);
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == i) {
            out.push_back(current);
            return;
        }
        for (int v = start; v <= n - (i - depth); ++v) {
            current[depth] = v;
            self(self, v + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

uint32_t pattern_of(const std::vector<uint8_t>& vec, const std::vector<int>& indices) {
    uint32_t p = 0;
    for (size_t b = 0; b < indices.size(); ++b)
        if (vec[indices[b]]) p |= (1u << b);
    return p;
}

// Bitset over the 2^i patterns of every index combination, flattened.
struct CoverageTable {
    CoverageTable(size_t combos, int i)
        : patterns(1u << i),
          words_per_combo((patterns + 63) / 64),
          bits(combos * words_per_combo, 0),
          uncovered(static_cast<uint64_t>(combos) * patterns) {}

    bool covered(size_t combo, uint32_t pattern) const {
        return (bits[combo * words_per_combo + pattern / 64] >> (pattern % 64)) & 1ull;
    }
    void cover(size_t combo, uint32_t pattern) {
        uint64_t& word = bits[combo * words_per_combo + pattern / 64];
        const uint64_t bit = 1ull << (pattern % 64);
        if (!(word & bit)) {
            word |= bit;
            --uncovered;
        }
    }

    uint32_t patterns;
    size_t words_per_combo;
    std::vector<uint64_t> bits;
    uint64_t uncovered;
};

}  // namespace

UniversalSet build_universal_set(int n, int i) {
    if (n < 0) throw std::invalid_argument("vector length must be non-negative");
    if (i < 0 || i > n)
        throw std::invalid_argument("coverage arity must satisfy 0 <= i <= n (got i=" +
                                    std::to_string(i) + ", n=" + std::to_string(n) + ")");

    UniversalSet us;
    us.n = n;
    us.i = i;

    if (i == 0) {
        // Nothing to cover; one vector keeps downstream loops non-trivial.
        us.vectors.emplace_back(n, 0);
        return us;
    }

    constexpr int kFullCubeLimit = 14;  // 2^14 vectors is still desk-scale
    if (n <= kFullCubeLimit) {
        us.vectors.reserve(1u << n);
        for (uint32_t bits = 0; bits < (1u << n); ++bits) {
            std::vector<uint8_t> vec(n);
            for (int b = 0; b < n; ++b) vec[b] = (bits >> b) & 1u;
            us.vectors.push_back(std::move(vec));
        }
        return us;
    }

    // Greedy cover. Track every (index-combination, pattern) pair that is
    // still uncovered; the bookkeeping is C(n,i) * 2^i entries.
    const auto combos = index_combinations(n, i);
    if (i > 20) throw std::runtime_error("universal-set construction too large: arity " +
                                         std::to_string(i));
    const uint64_t pair_count = static_cast<uint64_t>(combos.size()) << i;
    constexpr uint64_t kPairLimit = 1ull << 24;
    if (pair_count > kPairLimit)
        throw std::runtime_error("universal-set construction too large: " +
                                 std::to_string(pair_count) + " coverage pairs");

    CoverageTable table(combos.size(), i);
    std::mt19937_64 rng(0x75b5u * 1000003ull + static_cast<uint64_t>(n) * 131 + i);

    auto coverage_gain = [&](const std::vector<uint8_t>& vec) {
        uint64_t gain = 0;
        for (size_t c = 0; c < combos.size(); ++c)
            if (!table.covered(c, pattern_of(vec, combos[c]))) ++gain;
        return gain;
    };
    auto commit = [&](const std::vector<uint8_t>& vec) {
        for (size_t c = 0; c < combos.size(); ++c) table.cover(c, pattern_of(vec, combos[c]));
        us.vectors.push_back(vec);
    };

    constexpr int kBatch = 32;
    while (table.uncovered > 0) {
        std::vector<uint8_t> best_vec;
        uint64_t best_gain = 0;
        for (int b = 0; b < kBatch; ++b) {
            std::vector<uint8_t> vec(n);
            for (int j = 0; j < n; ++j) vec[j] = static_cast<uint8_t>(rng() & 1u);
            const uint64_t gain = coverage_gain(vec);
            if (gain > best_gain) {
                best_gain = gain;
                best_vec = std::move(vec);
            }
        }
        if (best_gain > 0) {
            commit(best_vec);
            continue;
        }
        // Random batches stopped helping: fill the remaining pairs directly.
        for (size_t c = 0; c < combos.size() && table.uncovered > 0; ++c) {
            for (uint32_t pattern = 0; pattern < table.patterns; ++pattern) {
                if (table.covered(c, pattern)) continue;
                std::vector<uint8_t> vec(n, 0);
                for (size_t b = 0; b < combos[c].size(); ++b)
                    vec[combos[c][b]] = (pattern >> b) & 1u;
                commit(vec);
            }
        }
    }
    return us;
}

bool is_universal(const UniversalSet& us) {
    if (us.i == 0) return !us.vectors.empty();
    if (us.i > 20) throw std::runtime_error("coverage check too large: arity " +
                                            std::to_string(us.i));
    const auto combos = index_combinations(us.n, us.i);
    const uint64_t patterns = 1ull << us.i;
    for (const auto& combo : combos) {
        std::vector<uint64_t> seen((patterns + 63) / 64, 0);
        uint64_t count = 0;
        for (const auto& vec : us.vectors) {
            const uint32_t p = pattern_of(vec, combo);
            uint64_t& word = seen[p / 64];
            const uint64_t bit = 1ull << (p % 64);
            if (!(word & bit)) {
                word |= bit;
                if (++count == patterns) break;
            }
        }
        if (count != patterns) return false;
    }
    return true;
}

}  // namespace iib
