#include "ecc/codec.hpp"

#include <algorithm>
#include <numeric>

namespace ecc {

std::optional<Progression> find_progression(const BlockCode& code) {
    const std::size_t n = code.n, r = code.r;
    std::vector<bool> in(n, false);
    for (int i : code.selection) in[static_cast<std::size_t>(i)] = true;
    if (r == n) return Progression{0, 1};
    for (std::size_t k = 1; k < n; ++k) {
        if (std::gcd(k, n) != 1) continue;
        std::size_t start = n, starts = 0;
        for (std::size_t x = 0; x < n; ++x) {
            if (in[x] && !in[(x + n - k) % n]) {
                start = x;
                ++starts;
            }
        }
        if (starts != 1) continue;
        bool ok = true;
        for (std::size_t t = 0; t < r && ok; ++t) ok = in[(start + t * k) % n];
        if (ok) return Progression{static_cast<std::int64_t>(start), static_cast<std::int64_t>(k)};
    }
    return std::nullopt;
}

Vector encode(const BlockCode& code, std::span<const FieldElement> message) {
    if (message.size() != code.r) throw CodeError("encode: message length must equal r");
    return vec_mul(code.field(), message, code.generator);
}

namespace {

Progression require_progression(const BlockCode& code) {
    const auto prog = find_progression(code);
    if (!prog) throw CodeError("decode: selection is not an arithmetic progression");
    return *prog;
}

Vector syndromes_for(const BlockCode& code, const Progression& pg, std::span<const FieldElement> y) {
    const Field& f = code.field();
    const auto r = static_cast<std::int64_t>(code.r);
    Vector s(code.n - code.r);
    for (std::size_t u = 0; u < s.size(); ++u) {
        s[u] = dot(f, y, code.ctx->inv_col(pg.start + (r + static_cast<std::int64_t>(u)) * pg.step));
    }
    return s;
}

// Shortest LFSR generating s; returns connection polynomial c_0 = 1, ..., c_L.
Vector berlekamp_massey(const Field& f, const Vector& s) {
    Vector c{f.one()}, b{f.one()};
    std::size_t L = 0, m = 1;
    FieldElement bd = f.one();
    for (std::size_t i = 0; i < s.size(); ++i) {
        FieldElement d = s[i];
        for (std::size_t j = 1; j <= L && j < c.size(); ++j) d = f.add(d, f.mul(c[j], s[i - j]));
        if (d.is_zero()) {
            ++m;
            continue;
        }
        const FieldElement coef = f.div(d, bd);
        Vector t = c;
        if (c.size() < b.size() + m) c.resize(b.size() + m, f.zero());
        for (std::size_t j = 0; j < b.size(); ++j) c[j + m] = f.sub(c[j + m], f.mul(coef, b[j]));
        if (2 * L <= i) {
            L = i + 1 - L;
            b = std::move(t);
            bd = d;
            m = 1;
        } else {
            ++m;
        }
    }
    c.resize(L + 1, f.zero());
    return c;
}

}  // namespace

Vector syndromes(const BlockCode& code, std::span<const FieldElement> received) {
    if (received.size() != code.n) throw CodeError("syndromes: word length must equal n");
    return syndromes_for(code, require_progression(code), received);
}

DecodeResult decode(const BlockCode& code, std::span<const FieldElement> received) {
    if (received.size() != code.n) throw CodeError("decode: word length must equal n");
    const Field& f = code.field();
    const FourierContext& ctx = *code.ctx;
    const Progression pg = require_progression(code);
    const std::size_t n = code.n;
    const auto r = static_cast<std::int64_t>(code.r);
    const std::size_t t = (n - code.r) / 2;

    DecodeResult res;
    Vector c(received.begin(), received.end());
    const Vector s = syndromes_for(code, pg, c);
    const bool clean = std::all_of(s.begin(), s.end(), [](FieldElement x) { return x.is_zero(); });
    if (!clean) {
        // s_u = sum_j Y_j X_j^u with X_j = w^{-jk}, Y_j = e_j w^{-j(a + rk)}.
        const Vector lambda = berlekamp_massey(f, s);
        const std::size_t L = lambda.size() - 1;
        if (L == 0 || L > t) {
            res.reason = "error locator degree exceeds capability";
            return res;
        }
        std::vector<std::size_t> pos;
        for (std::size_t j = 0; j < n; ++j) {
            const FieldElement xinv = ctx.row(1)[(j * static_cast<std::size_t>(pg.step)) % n];  // w^{jk}
            FieldElement acc = f.zero(), pw = f.one();
            for (std::size_t i = 0; i <= L; ++i) {
                acc = f.add(acc, f.mul(lambda[i], pw));
                pw = f.mul(pw, xinv);
            }
            if (acc.is_zero()) pos.push_back(j);
        }
        if (pos.size() != L) {
            res.reason = "error locator does not split over the evaluation points";
            return res;
        }
        // Solve sum_j Y_j X_j^u = s_u for u < L, i.e. Y V = s with V(j, u) = X_j^u.
        Matrix v(L, L), rhs(1, L);
        for (std::size_t a = 0; a < L; ++a) {
            const FieldElement x = ctx.inv_col(static_cast<std::int64_t>(pos[a]) * pg.step)[1];  // w^{-jk}
            FieldElement pw = f.one();
            for (std::size_t u = 0; u < L; ++u) {
                v(a, u) = pw;
                pw = f.mul(pw, x);
            }
        }
        for (std::size_t u = 0; u < L; ++u) rhs(0, u) = s[u];
        const auto y = solve_left(f, v, rhs);
        if (!y) {
            res.reason = "singular magnitude system";
            return res;
        }
        for (std::size_t a = 0; a < L; ++a) {
            const std::int64_t j = static_cast<std::int64_t>(pos[a]);
            const FieldElement e = f.mul((*y)(0, a), ctx.row(j)[ctx.wrap(pg.start + r * pg.step)]);
            c[pos[a]] = f.sub(c[pos[a]], e);
        }
        const Vector s2 = syndromes_for(code, pg, c);
        if (!std::all_of(s2.begin(), s2.end(), [](FieldElement x) { return x.is_zero(); })) {
            res.reason = "corrected word fails parity checks";
            return res;
        }
        res.corrected = L;
    }
    res.message.resize(code.r);
    const FieldElement n_inv = f.inv(f.from_int(static_cast<std::int64_t>(n % f.p())));
    for (std::size_t i = 0; i < code.r; ++i) {
        res.message[i] = f.mul(n_inv, dot(f, c, ctx.inv_col(code.selection[i])));
    }
    res.codeword = std::move(c);
    res.ok = true;
    return res;
}

}  // namespace ecc
