#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "maxwalk/bigint.hpp"

namespace maxwalk::walks {

// ReflectiveN0: walk on the non-negative integers, a step from 0 goes up
// with probability 1. FreeZ: unrestricted +-1 walk, every step fair.
enum class WalkDomain { ReflectiveN0, FreeZ };

// A path of +-1 steps together with its position sequence S_0 = 0,
// S_k = S_{k-1} + steps[k-1].
struct Path {
    std::vector<std::int8_t> steps;

    unsigned length() const { return static_cast<unsigned>(steps.size()); }
    std::vector<int> positions() const;
    int height() const;              // max_k S_k
    int minimum() const;             // min_k S_k
    bool ends_at_maximum() const;    // S_n == height and minimum >= 0
    unsigned zero_visits_before_end() const;  // #{k in [0, n-1] : S_k = 0}
};

struct WeightedPath {
    Path path;
    Rational probability;  // 2^(-n) on Z, 2^(-n+v) on N0
    unsigned height;
};

// Per-height admissibility probabilities of a fixed length; absent keys
// are exact zeros (wrong parity, h > n, or unreachable height 0).
struct HeightSpectrum {
    unsigned length = 0;
    WalkDomain domain = WalkDomain::FreeZ;
    std::map<unsigned, Rational> entries;
    Rational total = 0;

    Rational at(unsigned h) const {
        auto it = entries.find(h);
        return it == entries.end() ? Rational(0) : it->second;
    }
};

// Enumeration is the brute-force oracle; everything faster is checked
// against it on this range.
inline constexpr unsigned kOracleCap = 24;

// All admissible paths of length n with exact probabilities, in
// lexicographic step order (+1 before -1). Throws std::domain_error
// above kOracleCap.
std::vector<WeightedPath> enumerate_admissible(unsigned n, WalkDomain domain);

// Admissible-path count without materializing the paths (same cap).
std::uint64_t count_admissible(unsigned n, WalkDomain domain);

// Groups enumerated paths by height; used to compare the oracle against
// the other engines.
HeightSpectrum spectrum_from_paths(unsigned n, WalkDomain domain,
                                   const std::vector<WeightedPath>& paths);

// Band transfer-matrix iteration, one independent (h+1)-state recurrence
// per height of correct parity. Exact rationals throughout.
HeightSpectrum height_spectrum_dp(unsigned n, WalkDomain domain);

Rational exact_total(unsigned n, WalkDomain domain);

// Moments of the height distribution: sum_h (h+shift)^r entries[h] / total.
Rational shifted_moment(const HeightSpectrum& spectrum, unsigned r, unsigned shift);

// Same moment from the length alone; uses the transfer matrix for small n
// and the closed-form accumulation beyond.
Rational exact_shifted_moment(unsigned n, WalkDomain domain, unsigned r, unsigned shift);

// Bidirectional ballot sequences of length n (every prefix and suffix has
// strictly more 1s than 0s), counted through the walk bijection
// B_n = 2^(n-2) q_{n-2}. Throws std::domain_error for n < 2.
BigInt ballot_count(unsigned n);

// Direct 0-1 string scan, the independent oracle for ballot_count (n <= 24).
std::uint64_t ballot_count_bruteforce(unsigned n);

// Walks on Z that are never farther from the start than at the end:
// 2^n * p_n of them.
BigInt extremal_count(unsigned n);

}  // namespace maxwalk::walks
