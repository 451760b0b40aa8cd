#pragma once

// Weight-capped exhaustive search for low-weight kernel vectors, organized as
// a meet-in-the-middle scan over syndrome collisions. Weights are visited in
// increasing order and each weight is enumerated completely, so "nothing
// found below w" is a proof. Hash collisions only ever produce candidate
// pairs that are re-verified against the real syndrome, never missed ones.

#include "qldpc/gf2.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

namespace qldpc {

struct MitmBudget {
    std::uint64_t work_limit = std::uint64_t{1} << 26;  // candidate combinations per phase
    std::size_t hash_limit = std::size_t{1} << 22;      // stored half-combinations
};

namespace detail {

inline std::uint64_t fingerprint(const BinVec& v) {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (word_t w : v.words()) {
        h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h *= 0xff51afd7ed558ccdull;
    }
    return h;
}

inline std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        if (r > (std::uint64_t{1} << 62) / (n - i)) return std::uint64_t{1} << 62;
        r = r * (n - i) / (i + 1);
    }
    return r;
}

// iterate over all k-subsets of [0,n) in lexicographic order
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
    if (k == 0) {
        std::vector<std::size_t> empty;
        f(empty);
        return;
    }
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        f(idx);
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (idx[i] != i + n - k) break;
            if (i == 0) return;
        }
        if (idx[i] == i + n - k) return;
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace detail

// Generalized position/pattern column provider. For plain binary codes each
// position has one pattern (its column syndrome); for Pauli-type searches a
// position has the three patterns X, Z, Y.
struct SyndromeColumns {
    std::size_t positions = 0;
    std::size_t patterns_per_position = 1;
    // syndrome of (position, pattern)
    std::function<const BinVec&(std::size_t, std::size_t)> syndrome;
};

struct LowWeightHit {
    std::size_t weight = 0;
    std::vector<std::pair<std::size_t, std::size_t>> support; // (position, pattern)
};

struct LowWeightOutcome {
    std::optional<LowWeightHit> hit;   // first accepted candidate (min weight)
    std::size_t clean_below = 1;       // every weight < clean_below was fully enumerated
};

// Enumerates candidates of weight 1..max_weight whose syndrome vanishes and
// feeds them to `accept`; stops at the first accepted candidate. The sink
// must itself verify any additional conditions (e.g. not lying in a row
// space). Budget overruns stop the scan with clean_below reflecting only the
// completed weights.
inline LowWeightOutcome low_weight_scan(
    const SyndromeColumns& cols, std::size_t max_weight, const MitmBudget& budget,
    const std::function<bool(const LowWeightHit&)>& accept) {
    LowWeightOutcome out;
    const std::size_t n = cols.positions;
    const std::size_t pp = cols.patterns_per_position;
    if (n == 0) return out;
    const std::size_t syn_len = cols.syndrome(0, 0).size();

    auto pat_count = [&](std::size_t k) {
        std::uint64_t c = detail::binom(n, k);
        for (std::size_t i = 0; i < k && c < (std::uint64_t{1} << 62); ++i) c *= pp;
        return c;
    };

    for (std::size_t w = 1; w <= max_weight; ++w) {
        std::size_t w2 = w / 2, w1 = w - w2;
        if (pat_count(w1) > budget.work_limit || pat_count(w1) > budget.hash_limit ||
            pat_count(w2) > budget.work_limit)
            break;

        // phase 1: hash all (w1-subset, pattern) syndromes
        struct Entry {
            std::vector<std::pair<std::size_t, std::size_t>> sup;
            BinVec syn;
        };
        std::vector<Entry> entries;
        std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> table;
        detail::for_each_subset(n, w1, [&](const std::vector<std::size_t>& idx) {
            std::vector<std::size_t> pat(w1, 0);
            while (true) {
                BinVec s(syn_len);
                std::vector<std::pair<std::size_t, std::size_t>> sup(w1);
                for (std::size_t i = 0; i < w1; ++i) {
                    s.xor_with(cols.syndrome(idx[i], pat[i]));
                    sup[i] = {idx[i], pat[i]};
                }
                table[detail::fingerprint(s)].push_back(static_cast<std::uint32_t>(entries.size()));
                entries.push_back({std::move(sup), std::move(s)});
                std::size_t d = w1;
                while (d > 0 && pat[d - 1] == pp - 1) pat[--d] = 0;
                if (d == 0) break;
                ++pat[d - 1];
            }
        });

        // phase 2: probe with (w2-subset, pattern) syndromes
        bool stop = false;
        LowWeightHit found;
        auto probe = [&](const std::vector<std::size_t>& idx, const std::vector<std::size_t>& pat) {
            BinVec s(syn_len);
            for (std::size_t i = 0; i < idx.size(); ++i) s.xor_with(cols.syndrome(idx[i], pat[i]));
            auto it = table.find(detail::fingerprint(s));
            if (it == table.end()) return;
            for (std::uint32_t id : it->second) {
                const Entry& e = entries[id];
                if (!(e.syn == s)) continue;
                bool disjoint = true;
                for (auto [p1, q1] : e.sup)
                    for (std::size_t i = 0; i < idx.size() && disjoint; ++i)
                        if (p1 == idx[i]) disjoint = false;
                if (!disjoint) continue;
                LowWeightHit hit;
                hit.weight = w;
                hit.support = e.sup;
                for (std::size_t i = 0; i < idx.size(); ++i) hit.support.push_back({idx[i], pat[i]});
                std::sort(hit.support.begin(), hit.support.end());
                if (accept(hit)) {
                    found = std::move(hit);
                    stop = true;
                    return;
                }
            }
        };
        detail::for_each_subset(n, w2, [&](const std::vector<std::size_t>& idx) {
            if (stop) return;
            std::vector<std::size_t> pat(w2, 0);
            while (!stop) {
                probe(idx, pat);
                std::size_t d = w2;
                while (d > 0 && pat[d - 1] == pp - 1) pat[--d] = 0;
                if (d == 0) break;
                ++pat[d - 1];
            }
        });
        if (stop) {
            out.hit = std::move(found);
            out.clean_below = w;
            return out;
        }
        out.clean_below = w + 1;
    }
    return out;
}

// Convenience wrapper for a plain binary kernel search: min-weight v <= cap
// with M v = 0 and filter(v) true.
inline LowWeightOutcome low_weight_kernel_vector(
    const BinMat& M, std::size_t max_weight, const MitmBudget& budget,
    const std::function<bool(const BinVec&)>& filter) {
    Rref R = rref(M);
    BinMat synT = transpose(R.mat); // column syndromes as rows
    std::vector<BinVec> cols(M.cols());
    for (std::size_t j = 0; j < M.cols(); ++j) cols[j] = synT.row(j);
    SyndromeColumns sc;
    sc.positions = M.cols();
    sc.patterns_per_position = 1;
    sc.syndrome = [&cols](std::size_t p, std::size_t) -> const BinVec& { return cols[p]; };
    return low_weight_scan(sc, max_weight, budget, [&](const LowWeightHit& hit) {
        BinVec v(M.cols());
        for (auto [p, q] : hit.support) v.set(p, true);
        return filter(v);
    });
}

inline BinVec support_to_vec(const LowWeightHit& hit, std::size_t n) {
    BinVec v(n);
    for (auto [p, q] : hit.support) v.set(p, true);
    return v;
}

} // namespace qldpc
