#include "maxwalk/walks.hpp"

#include <algorithm>
#include <stdexcept>

#include "maxwalk/closed_form.hpp"

namespace maxwalk::walks {

std::vector<int> Path::positions() const {
    std::vector<int> s(steps.size() + 1);
    s[0] = 0;
    for (size_t k = 0; k < steps.size(); ++k) s[k + 1] = s[k] + steps[k];
    return s;
}

int Path::height() const {
    int s = 0, best = 0;
    for (auto step : steps) {
        s += step;
        best = std::max(best, s);
    }
    return best;
}

int Path::minimum() const {
    int s = 0, worst = 0;
    for (auto step : steps) {
        s += step;
        worst = std::min(worst, s);
    }
    return worst;
}

bool Path::ends_at_maximum() const {
    int s = 0, best = 0, worst = 0;
    for (auto step : steps) {
        s += step;
        best = std::max(best, s);
        worst = std::min(worst, s);
    }
    return worst >= 0 && s == best;
}

unsigned Path::zero_visits_before_end() const {
    int s = 0;
    unsigned v = 1;  // S_0 = 0
    for (size_t k = 0; k + 1 < steps.size(); ++k) {
        s += steps[k];
        if (s == 0) ++v;
    }
    return steps.empty() ? 0 : v;
}

namespace {

Rational path_probability(const Path& path, WalkDomain domain) {
    unsigned n = path.length();
    if (domain == WalkDomain::FreeZ) return Rational(1, pow2(n));
    // On N0 each visit to 0 among S_0..S_{n-1} is followed by a forced
    // up-step of probability 1, so the path weight is 2^(-n+v).
    unsigned v = path.zero_visits_before_end();
    return Rational(1, pow2(n - v));
}

template <class Visit>
void dfs_admissible(unsigned n, std::vector<std::int8_t>& steps, int pos, int peak,
                    Visit&& visit) {
    if (steps.size() == n) {
        if (pos == peak) visit(steps, peak);
        return;
    }
    steps.push_back(+1);
    dfs_admissible(n, steps, pos + 1, std::max(peak, pos + 1), visit);
    steps.pop_back();
    if (pos > 0) {  // a down-step below 0 can never be admissible
        steps.push_back(-1);
        dfs_admissible(n, steps, pos - 1, peak, visit);
        steps.pop_back();
    }
}

}  // namespace

std::vector<WeightedPath> enumerate_admissible(unsigned n, WalkDomain domain) {
    if (n > kOracleCap) throw std::domain_error("enumerate_admissible: oracle scale exceeded (n > 24)");
    std::vector<WeightedPath> result;
    std::vector<std::int8_t> steps;
    steps.reserve(n);
    dfs_admissible(n, steps, 0, 0, [&](const std::vector<std::int8_t>& s, int peak) {
        Path p{s};
        result.push_back(WeightedPath{p, path_probability(p, domain), static_cast<unsigned>(peak)});
    });
    return result;
}

std::uint64_t count_admissible(unsigned n, WalkDomain) {
    if (n > kOracleCap) throw std::domain_error("count_admissible: oracle scale exceeded (n > 24)");
    std::uint64_t count = 0;
    std::vector<std::int8_t> steps;
    steps.reserve(n);
    dfs_admissible(n, steps, 0, 0, [&](const std::vector<std::int8_t>&, int) { ++count; });
    return count;
}

HeightSpectrum spectrum_from_paths(unsigned n, WalkDomain domain,
                                   const std::vector<WeightedPath>& paths) {
    HeightSpectrum spectrum;
    spectrum.length = n;
    spectrum.domain = domain;
    for (const auto& wp : paths) {
        spectrum.entries[wp.height] += wp.probability;
        spectrum.total += wp.probability;
    }
    return spectrum;
}

HeightSpectrum height_spectrum_dp(unsigned n, WalkDomain domain) {
    HeightSpectrum spectrum;
    spectrum.length = n;
    spectrum.domain = domain;
    if (n == 0) {
        spectrum.entries[0] = 1;
        spectrum.total = 1;
        return spectrum;
    }
    const BigInt denom = pow2(n);
    // One band iteration per height h of the parity of n. The vector w
    // carries 2^k times the confinement probabilities, so it stays integral
    // in both domains (the forced step from 0 contributes weight 2).
    for (unsigned h = 2 - n % 2; h <= n; h += 2) {
        std::vector<BigInt> w(h + 1), next(h + 1);
        w[0] = 1;
        for (unsigned step = 0; step < n; ++step) {
            for (unsigned j = 0; j <= h; ++j) next[j] = 0;
            for (unsigned j = 0; j <= h; ++j) {
                if (w[j] == 0) continue;
                if (j == 0 && domain == WalkDomain::ReflectiveN0) {
                    if (h >= 1) next[1] += 2 * w[0];
                } else {
                    if (j + 1 <= h) next[j + 1] += w[j];
                    if (j >= 1) next[j - 1] += w[j];
                }
            }
            w.swap(next);
        }
        if (w[h] != 0) {
            Rational prob(w[h], denom);
            spectrum.entries[h] = prob;
            spectrum.total += prob;
        }
    }
    return spectrum;
}

Rational exact_total(unsigned n, WalkDomain domain) {
    return height_spectrum_dp(n, domain).total;
}

Rational shifted_moment(const HeightSpectrum& spectrum, unsigned r, unsigned shift) {
    if (spectrum.total == 0)
        throw std::domain_error("shifted_moment: undefined distribution (total probability 0)");
    Rational acc = 0;
    for (const auto& [h, prob] : spectrum.entries) {
        BigInt base = h + shift;
        BigInt power = 1;
        for (unsigned i = 0; i < r; ++i) power *= base;
        acc += power * prob;
    }
    return acc / spectrum.total;
}

Rational exact_shifted_moment(unsigned n, WalkDomain domain, unsigned r, unsigned shift) {
    if (n <= 64) return shifted_moment(height_spectrum_dp(n, domain), r, shift);
    return closed_form::shifted_moment(n, domain, r, shift);
}

BigInt ballot_count(unsigned n) {
    if (n < 2) throw std::domain_error("ballot_count: n must be >= 2");
    Rational b = pow2(n - 2) * closed_form::q_total(n - 2);
    if (denominator(b) != 1)
        throw std::logic_error("ballot_count: 2^(n-2) q_{n-2} is not an integer");
    return numerator(b);
}

std::uint64_t ballot_count_bruteforce(unsigned n) {
    if (n < 2) throw std::domain_error("ballot_count_bruteforce: n must be >= 2");
    if (n > kOracleCap) throw std::domain_error("ballot_count_bruteforce: oracle scale exceeded (n > 24)");
    std::uint64_t count = 0;
    const std::uint64_t limit = std::uint64_t(1) << n;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        // prefix condition: running #1s minus #0s stays positive
        int balance = 0;
        bool ok = true;
        for (unsigned i = 0; i < n && ok; ++i) {
            balance += (mask >> i & 1) ? 1 : -1;
            ok = balance > 0;
        }
        if (!ok) continue;
        // suffix condition, scanned from the other end
        balance = 0;
        for (unsigned i = n; i-- > 0 && ok;) {
            balance += (mask >> i & 1) ? 1 : -1;
            ok = balance > 0;
        }
        if (ok) ++count;
    }
    return count;
}

BigInt extremal_count(unsigned n) {
    Rational e = pow2(n) * closed_form::p_total(n);
    if (denominator(e) != 1)
        throw std::logic_error("extremal_count: 2^n p_n is not an integer");
    return numerator(e);
}

}  // namespace maxwalk::walks
