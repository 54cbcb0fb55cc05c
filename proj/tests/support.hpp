#pragma once

// Deterministic random inputs for the property tests. Raw engine output is
// reduced by modulo so the streams are identical on every platform.

#include <random>

#include "fwps/intlat.hpp"
#include "fwps/toric.hpp"

namespace testsupport {

using fwps::Int;
using fwps::IntMatrix;
using fwps::IntVec;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    Int uniform(Int lo, Int hi) { // inclusive
        return lo + static_cast<Int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::mt19937_64 eng_;
};

inline IntMatrix random_matrix(Rng& rng, int rows, int cols, Int lo, Int hi) {
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = rng.uniform(lo, hi);
    return m;
}

/// Random weight vector with entries in [1, max_entry] and gcd 1.
inline fwps::WeightVector random_weights(Rng& rng, int len, Int max_entry) {
    for (;;) {
        IntVec a(len);
        for (Int& x : a) x = rng.uniform(1, max_entry);
        if (fwps::gcd_vector(a) == 1) return fwps::WeightVector(std::move(a));
    }
}

/// Random valid fwps fan of the given dimension, ray entries in [lo, hi].
inline fwps::FwpsFan random_fwps(Rng& rng, int dim, Int lo, Int hi) {
    for (;;) {
        std::vector<IntVec> rays;
        for (int i = 0; i <= dim; ++i) {
            IntVec v(dim);
            bool zero = true;
            for (Int& x : v) {
                x = rng.uniform(lo, hi);
                if (x != 0) zero = false;
            }
            if (zero) v[0] = 1;
            rays.push_back(fwps::primitivize(std::move(v)));
        }
        try {
            return fwps::validate_fwps(std::move(rays));
        } catch (const fwps::Error&) {
            continue; // rejection sampling
        }
    }
}

} // namespace testsupport
