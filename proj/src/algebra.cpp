#include "rowcomplex/algebra.hpp"

#include <algorithm>
#include <stdexcept>

#include "rowcomplex/count.hpp"

namespace rowcomplex {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Poly h_polynomial(const CountVector& f, int d) {
    if (d < 0) throw std::invalid_argument("h_polynomial: negative d");
    for (int k = d + 1; k < static_cast<int>(f.size()); ++k)
        if (f[k] != 0)
            throw std::invalid_argument("h_polynomial: d too small");
    Poly h(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        BigInt fi = i < static_cast<int>(f.size()) ? f[i] : BigInt(0);
        if (fi == 0) continue;
        // f_i * t^i * (1-t)^(d-i)
        BigInt c = 1;
        for (int j = 0; j <= d - i; ++j) {
            h[i + j] += (j % 2 ? -c : c) * fi;
            c = c * (d - i - j) / (j + 1);
        }
    }
    poly_trim(h);
    return h;
}

Poly h_polynomial_shifted(const CountVector& f, int w) {
    if (w < 1) throw std::invalid_argument("h_polynomial_shifted: w < 1");
    Poly h(static_cast<size_t>(w) + 1);
    for (int i = 1; i <= w; ++i) {
        BigInt fi = i - 1 < static_cast<int>(f.size()) ? f[i - 1] : BigInt(0);
        if (fi == 0) continue;
        BigInt c = 1;
        for (int j = 0; j <= w - i; ++j) {
            h[i + j] += (j % 2 ? -c : c) * fi;
            c = c * (w - i - j) / (j + 1);
        }
    }
    poly_trim(h);
    return h;
}

CountVector f_from_h(const Poly& h, int d) {
    CountVector f(static_cast<size_t>(d) + 1);
    for (int k = 0; k <= d; ++k)
        for (int i = 0; i <= k && i < static_cast<int>(h.size()); ++i)
            f[k] += h[i] * binomial(d - i, k - i);
    return f;
}

std::vector<std::vector<int>> boundary_matrix(const FacetFamily& f, int k,
                                              int p) {
    if (k < 1) throw std::invalid_argument("boundary_matrix: k must be >= 1");
    std::vector<FaceSet> rows_faces = faces_of_size(f, k - 1);
    std::vector<FaceSet> cols_faces = faces_of_size(f, k);
    std::sort(rows_faces.begin(), rows_faces.end());
    std::sort(cols_faces.begin(), cols_faces.end());
    std::vector<std::vector<int>> m(
        rows_faces.size(), std::vector<int>(cols_faces.size(), 0));
    for (size_t j = 0; j < cols_faces.size(); ++j) {
        const std::vector<int>& elems = cols_faces[j].elements();
        for (size_t drop = 0; drop < elems.size(); ++drop) {
            std::vector<int> sub;
            sub.reserve(elems.size() - 1);
            for (size_t t = 0; t < elems.size(); ++t)
                if (t != drop) sub.push_back(elems[t]);
            FaceSet face(std::move(sub));
            auto it = std::lower_bound(rows_faces.begin(), rows_faces.end(), face);
            size_t i = static_cast<size_t>(it - rows_faces.begin());
            int sign = drop % 2 ? p - 1 : 1;
            m[i][j] = sign % p;
        }
    }
    return m;
}

int rank_mod_p(std::vector<std::vector<int>> m, int p) {
    if (m.empty() || m[0].empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t pivot = rank;
        while (pivot < rows && m[pivot][col] % p == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        // Normalize the pivot row, then clear the column below.
        long long inv = 1, base = m[rank][col] % p, e = p - 2;
        while (e) {  // Fermat inverse, p prime
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (size_t j = col; j < cols; ++j)
            m[rank][j] = static_cast<int>(m[rank][j] * inv % p);
        for (size_t i = rank + 1; i < rows; ++i) {
            int factor = m[i][col] % p;
            if (factor == 0) continue;
            for (size_t j = col; j < cols; ++j)
                m[i][j] = static_cast<int>(
                    ((m[i][j] - static_cast<long long>(factor) * m[rank][j]) % p +
                     p) %
                    p);
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

std::vector<int> homology_dims(const FacetFamily& f, int p) {
    if (!is_prime(p))
        throw std::invalid_argument("homology_dims: p must be prime");
    CountVector fv = face_numbers(f);
    BigInt total = 0;
    for (const BigInt& c : fv) total += c;
    if (total > 50000)
        throw GuardExceeded("homology_dims: complex too large");
    int d = f.max_facet_size();
    std::vector<int> ranks(static_cast<size_t>(d) + 2, 0);  // ranks[k] = rank δ_k
    for (int k = 1; k <= d; ++k)
        ranks[k] = rank_mod_p(boundary_matrix(f, k, p), p);
    std::vector<int> dims;
    for (int i = 0; i < d; ++i) {
        int fk = static_cast<int>(fv[i + 1]);
        dims.push_back(fk - ranks[i + 1] - ranks[i + 2]);
    }
    return dims;
}

}  // namespace rowcomplex
