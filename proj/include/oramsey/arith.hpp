#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace oramsey {

using i64 = std::int64_t;

// C(n,k) in exact signed 64-bit arithmetic.  C(n,k) = 0 for k > n.
// Throws std::overflow_error if the value does not fit, never wraps.
i64 binomial(i64 n, i64 k);

// Iterated exponential: tower(1,x) = x, tower(i+1,x) = 2^tower(i,x).
// Returns std::nullopt once the value leaves the 64-bit range.
std::optional<i64> tower(int i, i64 x);

// Exact test of log2(num/den) < thr_num/thr_den for positive arguments,
// evaluated as the integer comparison num^thr_den < den^thr_den * 2^thr_num.
bool log2_rational_less(i64 num, i64 den, i64 thr_num, i64 thr_den);

// Dense table of binomial coefficients for hot loops (rank arithmetic).
class BinomialTable {
public:
    BinomialTable(int max_n, int max_k);
    i64 at(int n, int k) const {
        if (k > n || k < 0 || n < 0) return 0;
        return table_[static_cast<std::size_t>(n) * stride_ + static_cast<std::size_t>(k)];
    }

private:
    std::size_t stride_;
    std::vector<i64> table_;
};

}  // namespace oramsey
