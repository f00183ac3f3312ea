#include "stf/cornacchia.hpp"

#include <stdexcept>

namespace stf {

std::optional<FormSolution> cornacchia(u64 d, u64 m, u64 delta) {
    if (d < 1 || d >= m)
        throw std::invalid_argument("cornacchia: need 1 <= d < m");
    if (delta > m / 2)
        throw std::invalid_argument("cornacchia: need delta <= m/2");
    if ((mul_mod(delta % m, delta % m, m) + d) % m != 0)
        throw std::invalid_argument("cornacchia: delta^2 != -d mod m");

    u64 prev = m, cur = delta;
    while (cur != 0 && (u128)cur * cur >= m) {
        u64 next = prev % cur;
        prev = cur;
        cur = next;
    }
    u64 rem = m - cur * cur;
    if (rem % d != 0) return std::nullopt;
    u64 y2 = rem / d;
    u64 y = isqrt_u64(y2);
    if (y * y != y2) return std::nullopt;
    return FormSolution{(i64)cur, y};
}

FormSolution solve_form_normalized(u64 d, const PrimeField& F, SqrtAlgo algo, u64 seed) {
    const u64 p = F.p;
    if (d == 0 || d >= p)
        throw std::invalid_argument("solve_form_normalized: need 1 <= d < p");
    auto root = sqrt_mod(p - d, F, algo, seed);
    if (!root)
        throw std::domain_error("solve_form_normalized: -d is not a residue mod p");
    // canonical root already lies in [0, (p-1)/2] <= p/2
    auto sol = cornacchia(d, p, *root);
    if (!sol)
        throw std::domain_error("solve_form_normalized: no primitive representation");
    i64 x = sol->x;
    u64 y = sol->y;
    if (d == 1 && (x & 1) == 0) {
        // p = x^2 + y^2 with p odd: exactly one leg is odd, make it x
        i64 t = (i64)y;
        y = (u64)x;
        x = t;
    }
    if (x & 1) {
        // exactly one of +-x is -(2|p) mod 4
        i64 want = legendre(2, F) == 1 ? 3 : 1;
        if (((x % 4) + 4) % 4 != want) x = -x;
    }
    return FormSolution{x, y};
}

} // namespace stf
