#include "maxwalk/special.hpp"

#include <mutex>
#include <vector>

namespace maxwalk::special {

namespace {

std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_cache{Rational(1)};  // B_0

}  // namespace

Rational bernoulli(unsigned k) {
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    while (bernoulli_cache.size() <= k) {
        const unsigned m = static_cast<unsigned>(bernoulli_cache.size());
        // sum_{j=0}^{m} C(m+1, j) B_j = 0
        Rational acc = 0;
        for (unsigned j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * bernoulli_cache[j];
        bernoulli_cache.push_back(-acc / (m + 1));
    }
    return bernoulli_cache[k];
}

Rational harmonic(unsigned n) {
    Rational acc = 0;
    for (unsigned i = 1; i <= n; ++i) acc += Rational(1, i);
    return acc;
}

Rational odd_harmonic(unsigned n) {
    Rational acc = 0;
    for (unsigned i = 1; i <= n; ++i) acc += Rational(1, 2 * i - 1);
    return acc;
}

}  // namespace maxwalk::special
