// rng.hpp - seeded RNG with platform-independent derived draws.
//
// std::uniform_int_distribution is implementation-defined, which would break
// byte-identical reruns across standard libraries, so bounded draws are done
// by rejection sampling directly on mt19937_64 output.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace tritile {

class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next_u64() { return eng_(); }

    // uniform in [0, n)
    uint64_t below(uint64_t n) {
        if (n == 0) return 0;
        uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % n;
    }

    int below_int(int n) { return int(below(uint64_t(n))); }

    // uniform in [0, 1)
    double next_double() { return double(eng_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return next_double() < p; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = size_t(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // sorted k-subset of {0,...,n-1}
    std::vector<int> sample_subset(int n, int k) {
        std::vector<int> idx(n);
        for (int i = 0; i < n; ++i) idx[i] = i;
        for (int i = 0; i < k; ++i) {
            int j = i + below_int(n - i);
            std::swap(idx[i], idx[j]);
        }
        idx.resize(k);
        std::sort(idx.begin(), idx.end());
        return idx;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace tritile
