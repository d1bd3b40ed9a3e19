#include "ecc/verifier.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

namespace ecc {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > kSaturated / a) return kSaturated;
    return a * b;
}

std::uint64_t sat_pow(std::uint64_t b, std::size_t e) {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < e; ++i) out = sat_mul(out, b);
    return out;
}

// Projective enumeration: the first nonzero coordinate of the message is 1.
class MessageSearch {
public:
    MessageSearch(const Field& f, const Matrix& g) : f_(f), g_(g), partial_(g.rows() + 1, Vector(g.cols())) {}

    std::pair<std::size_t, std::uint64_t> run() {
        for (std::size_t lead = 0; lead < g_.rows(); ++lead) {
            partial_[lead + 1] = g_.row_vector(lead);
            descend(lead + 1);
        }
        return {best_, count_};
    }

private:
    void descend(std::size_t level) {
        if (level == g_.rows()) {
            ++count_;
            best_ = std::min(best_, weight(partial_[level]));
            return;
        }
        const auto row = g_.row(level);
        auto& next = partial_[level + 1];
        const auto& cur = partial_[level];
        for (std::uint64_t c = 0; c < f_.order(); ++c) {
            const FieldElement x{static_cast<std::uint32_t>(c)};
            for (std::size_t j = 0; j < next.size(); ++j) next[j] = f_.add(cur[j], f_.mul(x, row[j]));
            descend(level + 1);
        }
    }

    const Field& f_;
    const Matrix& g_;
    std::vector<Vector> partial_;
    std::size_t best_ = std::numeric_limits<std::size_t>::max();
    std::uint64_t count_ = 0;
};

// Every minimum-weight codeword vanishes on k - 1 independent columns and spans the
// one-dimensional space of codewords vanishing there, so it suffices to visit those sets.
class ZeroSetSearch {
public:
    ZeroSetSearch(const Field& f, Matrix basis) : f_(f), basis_(std::move(basis)) {}

    std::pair<std::size_t, std::uint64_t> run() {
        descend(basis_, 0);
        return {best_, count_};
    }

private:
    void descend(const Matrix& b, std::size_t start) {
        const std::size_t dim = b.rows();
        const std::size_t N = b.cols();
        if (dim == 1) {
            ++count_;
            best_ = std::min(best_, weight(b.row(0)));
            return;
        }
        for (std::size_t j = start; j + (dim - 1) <= N; ++j) {
            std::size_t piv = dim;
            for (std::size_t i = 0; i < dim; ++i) {
                if (!b(i, j).is_zero()) {
                    piv = i;
                    break;
                }
            }
            if (piv == dim) continue;
            const FieldElement inv = f_.inv(b(piv, j));
            Matrix next(dim - 1, N);
            std::size_t out = 0;
            for (std::size_t i = 0; i < dim; ++i) {
                if (i == piv) continue;
                auto dst = next.row(out++);
                const auto src = b.row(i);
                const FieldElement factor = f_.neg(f_.mul(b(i, j), inv));
                const auto prow = b.row(piv);
                for (std::size_t c = 0; c < N; ++c) dst[c] = f_.add(src[c], f_.mul(factor, prow[c]));
            }
            descend(next, j + 1);
        }
    }

    const Field& f_;
    Matrix basis_;
    std::size_t best_ = std::numeric_limits<std::size_t>::max();
    std::uint64_t count_ = 0;
};

bool promotable(const ConvCode& code, std::size_t w, std::size_t covered) {
    if (code.layout == ConvLayout::Custom || !code.design_free_distance) return false;
    // Messages of degree t weigh at least design + t on these layouts.
    return w <= *code.design_free_distance + covered + 1;
}

}  // namespace

std::string DistanceReport::status() const { return exact ? "exact" : "lb@" + std::to_string(degree); }

std::uint64_t message_count(std::uint64_t q, std::size_t k) {
    const std::uint64_t all = sat_pow(q, k);
    if (all == kSaturated) return kSaturated;
    return (all - 1) / (q - 1);
}

std::uint64_t zero_set_count(std::size_t N, std::size_t k) {
    if (k == 0) return 0;
    std::size_t c = k - 1;
    if (c > N) return 0;
    c = std::min(c, N - c);
    unsigned __int128 acc = 1;
    for (std::size_t i = 1; i <= c; ++i) {
        acc = acc * (N - c + i) / i;
        if (acc > kSaturated) return kSaturated;
    }
    return static_cast<std::uint64_t>(acc);
}

DistanceReport min_distance(const Field& f, const Matrix& g, std::uint64_t budget) {
    Matrix basis = g;
    const auto piv = row_reduce(f, basis);
    const std::size_t k = piv.size();
    if (k == 0) throw CodeError("min_distance: zero code");
    Matrix reduced(k, g.cols());
    for (std::size_t i = 0; i < k; ++i) std::copy(basis.row(i).begin(), basis.row(i).end(), reduced.row(i).begin());

    const std::uint64_t by_msg = message_count(f.order(), k);
    const std::uint64_t by_zero = zero_set_count(g.cols(), k);
    DistanceReport rep;
    rep.exact = true;
    if (std::min(by_msg, by_zero) > budget) {
        throw CodeError("min_distance: enumeration budget exceeded");
    }
    std::pair<std::size_t, std::uint64_t> res;
    if (by_msg <= by_zero) {
        res = MessageSearch(f, reduced).run();
        rep.method = "messages";
    } else {
        res = ZeroSetSearch(f, reduced).run();
        rep.method = "zero-sets";
    }
    rep.value = res.first;
    rep.enumerated = res.second;
    return rep;
}

DistanceReport min_distance(const BlockCode& code, std::uint64_t budget) {
    return min_distance(code.field(), code.generator, budget);
}

Matrix truncated_generator(const ConvCode& code, std::size_t D) {
    const std::size_t n = code.n, r = code.r, mu = code.coeffs.size() - 1;
    Matrix g(r * (D + 1), n * (D + mu + 1));
    for (std::size_t t = 0; t <= D; ++t)
        for (std::size_t k = 0; k <= mu; ++k)
            for (std::size_t rho = 0; rho < r; ++rho)
                for (std::size_t j = 0; j < n; ++j) g(t * r + rho, (t + k) * n + j) = code.coeffs[k](rho, j);
    return g;
}

DistanceReport truncated_distance(const ConvCode& code, std::size_t D, std::uint64_t budget) {
    DistanceReport rep = min_distance(code.field(), truncated_generator(code, D), budget);
    rep.exact = false;
    rep.degree = D;
    rep.method = "truncated-" + rep.method;
    return rep;
}

DistanceReport trellis_distance(const ConvCode& code, std::uint64_t budget) {
    const Field& f = code.field();
    const std::uint64_t q = f.order();
    const std::size_t n = code.n, r = code.r;
    const std::uint64_t states = sat_pow(q, code.degree);
    const std::uint64_t inputs = sat_pow(q, r);
    if (sat_mul(states, inputs) > budget) throw CodeError("trellis_distance: enumeration budget exceeded");

    std::vector<std::size_t> offset(r, 0);
    for (std::size_t rho = 1; rho < r; ++rho) offset[rho] = offset[rho - 1] + code.row_degrees[rho - 1];
    std::vector<std::uint64_t> qpow(code.degree + 1, 1);
    for (std::size_t i = 1; i <= code.degree; ++i) qpow[i] = qpow[i - 1] * q;

    // Digit (rho, j) of a state holds P_{t-1-j, rho}.
    std::vector<Vector> state_out(states, Vector(n));
    std::vector<std::uint64_t> shift_part(states, 0);
    std::vector<std::uint32_t> digits(code.degree);
    for (std::uint64_t s = 0; s < states; ++s) {
        std::uint64_t x = s;
        for (auto& d : digits) {
            d = static_cast<std::uint32_t>(x % q);
            x /= q;
        }
        for (std::size_t rho = 0; rho < r; ++rho) {
            const std::size_t nu = code.row_degrees[rho];
            for (std::size_t j = 0; j < nu; ++j) {
                const FieldElement c{digits[offset[rho] + j]};
                if (c.is_zero()) continue;
                const auto g = code.coeffs[j + 1].row(rho);
                for (std::size_t i = 0; i < n; ++i) state_out[s][i] = f.add(state_out[s][i], f.mul(c, g[i]));
                if (j + 1 < nu) shift_part[s] += digits[offset[rho] + j] * qpow[offset[rho] + j + 1];
            }
        }
    }
    std::vector<Vector> in_out(inputs, Vector(n));
    std::vector<std::uint64_t> in_part(inputs, 0);
    for (std::uint64_t u = 0; u < inputs; ++u) {
        std::uint64_t x = u;
        for (std::size_t rho = 0; rho < r; ++rho) {
            const auto d = static_cast<std::uint32_t>(x % q);
            x /= q;
            if (d == 0) continue;
            const auto g = code.coeffs[0].row(rho);
            for (std::size_t i = 0; i < n; ++i) in_out[u][i] = f.add(in_out[u][i], f.mul(FieldElement{d}, g[i]));
            if (code.row_degrees[rho] > 0) in_part[u] += d * qpow[offset[rho]];
        }
    }

    constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(states, kInf);
    std::size_t best = kInf;
    using Item = std::pair<std::size_t, std::uint64_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    for (std::uint64_t u = 1; u < inputs; ++u) {
        const std::size_t w = weight(in_out[u]);
        const std::uint64_t ns = in_part[u];
        if (ns == 0) {
            best = std::min(best, w);
        } else if (w < dist[ns]) {
            dist[ns] = w;
            pq.emplace(w, ns);
        }
    }
    std::uint64_t visited = 0;
    while (!pq.empty()) {
        const auto [d, s] = pq.top();
        pq.pop();
        if (d != dist[s]) continue;
        if (d >= best) break;
        ++visited;
        const Vector& so = state_out[s];
        for (std::uint64_t u = 0; u < inputs; ++u) {
            std::size_t w = d;
            const Vector& io = in_out[u];
            for (std::size_t i = 0; i < n; ++i) w += !f.add(so[i], io[i]).is_zero();
            const std::uint64_t ns = shift_part[s] + in_part[u];
            if (ns == 0) {
                best = std::min(best, w);
            } else if (w < dist[ns]) {
                dist[ns] = w;
                pq.emplace(w, ns);
            }
        }
    }
    DistanceReport rep;
    rep.value = best;
    rep.exact = true;
    rep.enumerated = (visited + 1) * inputs;
    rep.method = "trellis";
    return rep;
}

bool is_progression(std::span<const int> idx, std::size_t n) {
    const std::size_t len = idx.size();
    if (len <= 1 || len == n) return len <= n;
    std::vector<bool> in(n, false);
    for (int i : idx) {
        const auto w = static_cast<std::size_t>(((i % static_cast<int>(n)) + static_cast<int>(n)) % static_cast<int>(n));
        if (in[w]) return false;
        in[w] = true;
    }
    for (std::size_t k = 1; k < n; ++k) {
        if (std::gcd(k, n) != 1) continue;
        // The start is the unique member whose predecessor is absent.
        std::size_t start = n, starts = 0;
        for (std::size_t x = 0; x < n; ++x) {
            if (in[x] && !in[(x + n - k) % n]) {
                start = x;
                ++starts;
            }
        }
        if (starts != 1) continue;
        bool ok = true;
        for (std::size_t t = 0; t < len && ok; ++t) ok = in[(start + t * k) % n];
        if (ok) return true;
    }
    return false;
}

std::optional<std::size_t> structural_degree0(const ConvCode& code) {
    if (code.coeffs.size() != 2) return std::nullopt;
    const std::size_t n = code.n, r = code.r;
    std::vector<int> zero_rows_a, b_rows;
    for (std::size_t rho = 0; rho < r; ++rho) {
        if (code.plan.rows[1][rho] < 0) {
            zero_rows_a.push_back(code.plan.rows[0][rho]);
        } else {
            b_rows.push_back(code.plan.rows[1][rho]);
        }
    }
    const std::size_t z = zero_rows_a.size();
    if (z == 0 || b_rows.empty()) return std::nullopt;
    if (!is_progression(code.plan.rows[0], n) || !is_progression(zero_rows_a, n) || !is_progression(b_rows, n)) {
        return std::nullopt;
    }
    const std::size_t d_a = n - r + 1;
    const std::size_t d_b = n - b_rows.size() + 1;
    if (d_a + d_b < n - z + 1) return std::nullopt;
    return n - z + 1;
}

DistanceReport free_distance(const ConvCode& code, std::size_t D, FreeMethod method, std::uint64_t budget) {
    if (method == FreeMethod::Auto) {
        const std::uint64_t trellis_cost = sat_mul(sat_pow(code.field().order(), code.degree),
                                                   sat_pow(code.field().order(), code.r));
        if (trellis_cost <= budget) {
            method = FreeMethod::Trellis;
        } else if (structural_degree0(code)) {
            method = FreeMethod::Structural;
        } else {
            method = FreeMethod::Truncated;
        }
    }
    switch (method) {
        case FreeMethod::Trellis: {
            DistanceReport rep = trellis_distance(code, budget);
            rep.degree = D;
            return rep;
        }
        case FreeMethod::Structural: {
            const auto w = structural_degree0(code);
            if (!w) throw CodeError("free_distance: structural bound does not apply to this layout");
            DistanceReport rep;
            rep.value = *w;
            rep.degree = 0;
            rep.exact = promotable(code, *w, 0);
            rep.method = "structural";
            return rep;
        }
        case FreeMethod::Truncated:
        case FreeMethod::Auto: {
            DistanceReport rep = truncated_distance(code, D, budget);
            rep.exact = promotable(code, rep.value, D);
            return rep;
        }
    }
    throw CodeError("free_distance: unknown method");
}

bool annihilates(const BlockCode& code) {
    return multiply(code.field(), code.generator, code.check).is_zero();
}

bool certify_dc(const BlockCode& code, InnerProduct ip) {
    const Field& f = code.field();
    Matrix dual = code.dual_generator();
    if (ip == InnerProduct::Hermitian) {
        if (f.s() % 2 != 0) return false;
        std::uint64_t l = 1;
        for (unsigned i = 0; i < f.s() / 2; ++i) l *= f.p();
        dual = frobenius(f, dual, l);
    }
    return in_row_space(f, code.generator, dual);
}

bool certify_lcd(const BlockCode& code) {
    return rank(code.field(), stack(code.generator, code.dual_generator())) == code.n;
}

namespace {

FlagState settle(FlagState s, bool ok) {
    if (s == FlagState::False) return s;
    return ok ? FlagState::Certified : FlagState::False;
}

}  // namespace

void certify(BlockCode& code, std::uint64_t budget) {
    if (code.flags.mds != FlagState::False) {
        try {
            code.flags.mds = settle(code.flags.mds, min_distance(code, budget).value == code.n - code.r + 1);
        } catch (const CodeError&) {
            // too large to enumerate; the claim stands
        }
    }
    code.flags.dc_euclidean = settle(code.flags.dc_euclidean, certify_dc(code, InnerProduct::Euclidean));
    code.flags.dc_hermitian = settle(code.flags.dc_hermitian, certify_dc(code, InnerProduct::Hermitian));
    code.flags.lcd = settle(code.flags.lcd, certify_lcd(code));
}

bool check_conv_structure(const ConvCode& code) {
    const Field& f = code.field();
    const std::size_t mu = code.coeffs.size() - 1, m = code.control.size() - 1;
    for (std::size_t t = 0; t <= mu + m; ++t) {
        Matrix acc(code.r, code.n - code.r);
        for (std::size_t k = 0; k <= std::min(t, mu); ++k) {
            if (t - k > m) continue;
            acc = add(f, acc, multiply(f, code.coeffs[k], code.control[t - k]));
        }
        if (!acc.is_zero()) return false;
    }
    // e_i . f_j = n delta_ij, so G[z] K is the scalar n times the identity.
    const FieldElement scale = f.from_int(static_cast<std::int64_t>(code.n % f.p()));
    if (multiply(f, code.coeffs[0], code.right_inverse) != scalar_identity(code.r, scale)) return false;
    for (std::size_t k = 1; k <= mu; ++k)
        if (!multiply(f, code.coeffs[k], code.right_inverse).is_zero()) return false;
    return true;
}

bool certify_conv_type(const ConvCode& code, ConvType type) {
    const Field& f = code.field();
    const auto dual = conv_dual_generator(code);
    if (type == ConvType::LCD) {
        // With both constant terms of full rank, a common nonzero codeword would give a
        // common nonzero vector in their row spaces at its lowest degree.
        if (rank(f, code.coeffs[0]) != code.r || rank(f, dual[0]) != code.n - code.r) return false;
        return rank(f, stack(code.coeffs[0], dual[0])) == code.n;
    }
    const std::size_t blocks = std::max(code.coeffs.size(), dual.size());
    Matrix g(code.r, 0), d(code.n - code.r, 0);
    for (std::size_t k = 0; k < blocks; ++k) {
        g = hconcat(g, k < code.coeffs.size() ? code.coeffs[k] : Matrix(code.r, code.n));
        d = hconcat(d, k < dual.size() ? dual[k] : Matrix(code.n - code.r, code.n));
    }
    return solve_left(f, g, d).has_value();
}

void certify(ConvCode& code, std::size_t D, std::uint64_t budget) {
    const bool sound = check_conv_structure(code);
    code.flags.dc = settle(code.flags.dc, sound && certify_conv_type(code, ConvType::DC));
    code.flags.lcd = settle(code.flags.lcd, sound && certify_conv_type(code, ConvType::LCD));
    if (code.flags.mds_conv != FlagState::False) {
        try {
            const auto rep = free_distance(code, D, FreeMethod::Auto, budget);
            if (rep.exact) code.flags.mds_conv = settle(code.flags.mds_conv, rep.value == gsb(code.n, code.r, code.degree));
        } catch (const CodeError&) {
            // over budget; the claim stands
        }
    }
}

}  // namespace ecc
