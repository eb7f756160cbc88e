#include "oramsey/random.hpp"

#include <random>
#include <utility>

namespace oramsey {

OrderedColoring random_coloring(int k, int n, std::uint64_t seed) {
    OrderedColoring c(k, n);
    std::mt19937_64 gen(seed);
    auto words = c.mutable_words();
    for (auto& w : words) w = gen();
    const i64 bits = c.edge_count();
    const int tail = static_cast<int>(bits & 63);
    if (tail != 0 && !words.empty()) words.back() &= (std::uint64_t{1} << tail) - 1;
    return c;
}

std::vector<double> random_permutation(int length, std::uint64_t seed) {
    std::vector<double> perm(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::mt19937_64 gen(seed);
    for (int i = length - 1; i > 0; --i) {
        const auto j = static_cast<std::size_t>(gen() % static_cast<std::uint64_t>(i + 1));
        std::swap(perm[static_cast<std::size_t>(i)], perm[j]);
    }
    return perm;
}

}  // namespace oramsey
