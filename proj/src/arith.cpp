#include "oramsey/arith.hpp"

#include <gmp.h>

#include <limits>
#include <stdexcept>

namespace oramsey {

i64 binomial(i64 n, i64 k) {
    if (n < 0 || k < 0) throw std::invalid_argument("binomial: negative argument");
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    // result after step i equals C(n-k+i, i), so every division is exact.
    unsigned __int128 result = 1;
    for (i64 i = 1; i <= k; ++i) {
        result *= static_cast<unsigned __int128>(n - k + i);
        result /= static_cast<unsigned __int128>(i);
        if (result > static_cast<unsigned __int128>(std::numeric_limits<i64>::max()))
            throw std::overflow_error("binomial: value exceeds 64-bit range");
    }
    return static_cast<i64>(result);
}

std::optional<i64> tower(int i, i64 x) {
    if (i < 1) throw std::invalid_argument("tower: height must be >= 1");
    if (x < 0) throw std::invalid_argument("tower: argument must be >= 0");
    i64 v = x;
    for (int level = 1; level < i; ++level) {
        if (v >= 63) return std::nullopt;
        v = i64{1} << v;
    }
    return v;
}

bool log2_rational_less(i64 num, i64 den, i64 thr_num, i64 thr_den) {
    if (num <= 0 || den <= 0 || thr_den <= 0 || thr_num < 0)
        throw std::invalid_argument("log2_rational_less: arguments must be positive");
    // num^thr_den < den^thr_den * 2^thr_num
    mpz_t lhs, rhs;
    mpz_init(lhs);
    mpz_init(rhs);
    mpz_ui_pow_ui(lhs, static_cast<unsigned long>(num), static_cast<unsigned long>(thr_den));
    mpz_ui_pow_ui(rhs, static_cast<unsigned long>(den), static_cast<unsigned long>(thr_den));
    mpz_mul_2exp(rhs, rhs, static_cast<mp_bitcnt_t>(thr_num));
    const bool less = mpz_cmp(lhs, rhs) < 0;
    mpz_clear(lhs);
    mpz_clear(rhs);
    return less;
}

BinomialTable::BinomialTable(int max_n, int max_k)
    : stride_(static_cast<std::size_t>(max_k) + 1),
      table_((static_cast<std::size_t>(max_n) + 1) * stride_, 0) {
    for (int n = 0; n <= max_n; ++n) {
        table_[static_cast<std::size_t>(n) * stride_] = 1;
        for (int k = 1; k <= max_k && k <= n; ++k) {
            table_[static_cast<std::size_t>(n) * stride_ + static_cast<std::size_t>(k)] =
                binomial(n, k);
        }
    }
}

}  // namespace oramsey
