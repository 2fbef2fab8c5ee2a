#pragma once

#include "qgenus/cyc_int.hpp"

#include <random>

namespace qgenus::test {

inline CycInt random_cyc(std::mt19937_64& rng, int bound)
{
    std::uniform_int_distribution<long> d(-bound, bound);
    return CycInt(d(rng), d(rng), d(rng), d(rng));
}

inline CycInt random_nonzero_cyc(std::mt19937_64& rng, int bound)
{
    for (;;) {
        CycInt c = random_cyc(rng, bound);
        if (!c.is_zero()) return c;
    }
}

// Resultant of x^4 + x^3 + x^2 + x + 1 and a(x) as a Sylvester determinant
// (fraction-free elimination); equals the field norm of a(z).
inline mpz_class norm_by_resultant(const CycInt& a)
{
    const int m = 4, n = 3, size = m + n;
    const std::array<mpz_class, 5> phi = {1, 1, 1, 1, 1};  // x^4 .. x^0
    std::array<mpz_class, 4> q;                             // x^3 .. x^0
    for (int i = 0; i < 4; ++i) q[i] = a[3 - i];
    std::vector<std::vector<mpz_class>> s(size, std::vector<mpz_class>(size, 0));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) s[r][r + k] = phi[k];
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) s[n + r][r + k] = q[k];
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < size - 1; ++k) {
        if (s[k][k] == 0) {
            int piv = -1;
            for (int r = k + 1; r < size; ++r)
                if (s[r][k] != 0) piv = r;
            if (piv < 0) return 0;
            std::swap(s[k], s[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < size; ++i)
            for (int j = k + 1; j < size; ++j) s[i][j] = (s[i][j] * s[k][k] - s[i][k] * s[k][j]) / prev;
        prev = s[k][k];
    }
    return sign * s[size - 1][size - 1];
}

}  // namespace qgenus::test
