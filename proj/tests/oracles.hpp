// Independent reference computations for the unit tests. Nothing here calls into the
// library's arithmetic beyond packing and unpacking coefficient lists.
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ecc/conv.hpp"

namespace oracle {

using Poly = std::vector<std::uint32_t>;  // coefficients, lowest degree first

// Schoolbook polynomial product over GF(p), reduced by a monic modulus of degree s.
inline Poly mul_mod(const Poly& a, const Poly& b, const Poly& modulus, std::uint32_t p) {
    const std::size_t s = modulus.size() - 1;
    std::vector<std::uint64_t> prod(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + std::uint64_t(a[i]) * b[j]) % p;
    for (std::size_t d = prod.size(); d-- > s;) {
        const std::uint64_t c = prod[d];
        if (c == 0) continue;
        for (std::size_t k = 0; k <= s; ++k) prod[d - s + k] = (prod[d - s + k] + (p - c) * modulus[k]) % p;
    }
    Poly out(s, 0);
    for (std::size_t i = 0; i < s; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    return out;
}

// Remainder of a by monic b over GF(p); both lowest degree first.
inline Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::uint32_t c = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t k = 0; k <= db; ++k) a[shift + k] = (a[shift + k] + (p - c) * std::uint64_t(b[k]) % p) % p;
        a.pop_back();
    }
    return a;
}

// Trial division by every monic polynomial of degree 1..s/2.
inline bool irreducible(const Poly& f, std::uint32_t p) {
    const std::size_t s = f.size() - 1;
    for (std::size_t d = 1; d <= s / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly g(d + 1, 0);
            std::uint64_t c = code;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = c % p;
                c /= p;
            }
            g[d] = 1;
            const Poly r = poly_rem(f, g, p);
            bool zero = true;
            for (auto x : r) zero = zero && x == 0;
            if (zero) return false;
        }
    }
    return true;
}

inline std::vector<std::vector<std::uint64_t>> to_ints(const ecc::Field& f, const ecc::Matrix& m) {
    std::vector<std::vector<std::uint64_t>> out(m.rows(), std::vector<std::uint64_t>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).packed();
    (void)f;
    return out;
}

// Calls visit on every vector in GF(q)^k (q^k of them, zero included).
inline void for_each_vector(const ecc::Field& f, std::size_t k, const std::function<void(const ecc::Vector&)>& visit) {
    ecc::Vector v(k, f.zero());
    while (true) {
        visit(v);
        std::size_t i = 0;
        while (i < k) {
            const std::uint32_t next = v[i].packed() + 1;
            if (next < f.order()) {
                v[i] = ecc::FieldElement{next};
                break;
            }
            v[i] = f.zero();
            ++i;
        }
        if (i == k) return;
    }
}

// Minimum weight over all nonzero messages, encoding each with an explicit loop.
inline std::size_t brute_min_distance(const ecc::Field& f, const ecc::Matrix& g) {
    std::size_t best = g.cols() + 1;
    for_each_vector(f, g.rows(), [&](const ecc::Vector& m) {
        bool nonzero = false;
        for (auto x : m) nonzero = nonzero || !x.is_zero();
        if (!nonzero) return;
        std::size_t w = 0;
        for (std::size_t j = 0; j < g.cols(); ++j) {
            ecc::FieldElement acc = f.zero();
            for (std::size_t i = 0; i < g.rows(); ++i) acc = f.add(acc, f.mul(m[i], g(i, j)));
            w += !acc.is_zero();
        }
        best = std::min(best, w);
    });
    return best;
}

// Rank by plain Gaussian elimination on a copy.
inline std::size_t gauss_rank(const ecc::Field& f, std::vector<ecc::Vector> rows) {
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        const ecc::FieldElement inv = f.inv(rows[rank][c]);
        for (auto& x : rows[rank]) x = f.mul(x, inv);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][c].is_zero()) continue;
            const ecc::FieldElement factor = rows[i][c];
            for (std::size_t k = 0; k < cols; ++k) rows[i][k] = f.sub(rows[i][k], f.mul(factor, rows[rank][k]));
        }
        ++rank;
    }
    return rank;
}

// Every r x r column minor of g is nonzero, i.e. the code is MDS.
inline bool all_minors_nonzero(const ecc::Field& f, const ecc::Matrix& g) {
    const std::size_t r = g.rows(), n = g.cols();
    std::vector<std::size_t> pick(r);
    for (std::size_t i = 0; i < r; ++i) pick[i] = i;
    while (true) {
        std::vector<ecc::Vector> sub(r, ecc::Vector(r));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) sub[i][j] = g(i, pick[j]);
        if (gauss_rank(f, sub) < r) return false;
        std::size_t i = r;
        while (i > 0 && pick[i - 1] == n - r + i - 1) --i;
        if (i == 0) return true;
        ++pick[i - 1];
        for (std::size_t j = i; j < r; ++j) pick[j] = pick[j - 1] + 1;
    }
}

// Minimum output weight of P[z] G[z] over nonzero messages of degree <= D, by direct
// polynomial multiplication of every message.
inline std::size_t naive_conv_min(const ecc::ConvCode& code, std::size_t D) {
    const ecc::Field& f = code.field();
    const std::size_t r = code.r, n = code.n, mu = code.coeffs.size() - 1;
    std::size_t best = SIZE_MAX;
    for_each_vector(f, r * (D + 1), [&](const ecc::Vector& flat) {
        bool nonzero = false;
        for (auto x : flat) nonzero = nonzero || !x.is_zero();
        if (!nonzero) return;
        std::size_t w = 0;
        for (std::size_t t = 0; t <= D + mu; ++t) {
            for (std::size_t j = 0; j < n; ++j) {
                ecc::FieldElement acc = f.zero();
                for (std::size_t a = 0; a <= D; ++a) {
                    if (t < a || t - a > mu) continue;
                    for (std::size_t i = 0; i < r; ++i)
                        acc = f.add(acc, f.mul(flat[a * r + i], code.coeffs[t - a](i, j)));
                }
                w += !acc.is_zero();
            }
        }
        best = std::min(best, w);
    });
    return best;
}

}  // namespace oracle
