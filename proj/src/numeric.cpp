#include "rowcomplex/numeric.hpp"

namespace rowcomplex {

CountVector binomial_row(int n) {
    if (n < 0) throw std::invalid_argument("binomial_row: negative n");
    CountVector row(static_cast<size_t>(n) + 1);
    row[0] = 1;
    for (int i = 1; i <= n; ++i) {
        row[i] = 1;
        for (int j = i - 1; j >= 1; --j) row[j] += row[j - 1];
    }
    return row;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    return binomial_row(n)[k];
}

BigInt pow2(int n) {
    if (n < 0) throw std::invalid_argument("pow2: negative exponent");
    return BigInt(1) << n;
}

Poly poly_mul(const Poly& p, const Poly& q, int cap) {
    if (p.empty() || q.empty()) return {};
    int dp = static_cast<int>(p.size()) - 1;
    int dq = static_cast<int>(q.size()) - 1;
    int dr = std::min(dp + dq, cap);
    if (dr < 0) return {};
    Poly r(static_cast<size_t>(dr) + 1);
    for (int i = 0; i <= dp && i <= dr; ++i) {
        if (p[i] == 0) continue;
        for (int j = 0; j <= dq && i + j <= dr; ++j) r[i + j] += p[i] * q[j];
    }
    return r;
}

Poly binomial_poly(int n, int cap) {
    int d = std::min(n, cap);
    if (d < 0) return {};
    Poly r(static_cast<size_t>(d) + 1);
    BigInt c = 1;
    for (int k = 0; k <= d; ++k) {
        r[k] = c;
        c = c * (n - k) / (k + 1);
    }
    return r;
}

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace rowcomplex
