#include "delannoy/sampling.hpp"

#include <algorithm>
#include <random>

namespace delannoy {

std::vector<EvalPoint> sample_points(unsigned count, std::uint64_t seed,
                                     const std::function<bool(const EvalPoint&)>& admissible) {
    std::mt19937_64 rng(seed);
    // Modular reduction keeps the sequence identical across standard libraries.
    auto draw = [&rng]() {
        long p = static_cast<long>(rng() % 31) - 15;
        long q = static_cast<long>(rng() % 8) + 1;
        return Rational(Integer(p), Integer(q));
    };
    std::vector<EvalPoint> out;
    while (out.size() < count) {
        EvalPoint pt{draw(), draw()};
        if (!admissible(pt)) continue;
        if (std::find(out.begin(), out.end(), pt) != out.end()) continue;
        out.push_back(pt);
    }
    return out;
}

std::vector<EvalPoint> sample_generic_points(unsigned count, std::uint64_t seed) {
    return sample_points(count, seed, [](const EvalPoint& pt) {
        return !pt.r_is_excluded_half_integers() && !pt.x_is_minus_half();
    });
}

} // namespace delannoy
