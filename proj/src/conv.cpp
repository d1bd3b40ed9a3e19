#include "ecc/conv.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ecc {

std::string to_string(ConvLayout l) {
    switch (l) {
        case ConvLayout::Custom: return "custom";
        case ConvLayout::Standard: return "standard";
        case ConvLayout::Char2: return "char2";
    }
    return "custom";
}

ConvLayout parse_conv_layout(const std::string& s) {
    if (s == "custom") return ConvLayout::Custom;
    if (s == "standard") return ConvLayout::Standard;
    if (s == "char2") return ConvLayout::Char2;
    throw CodeError("unknown layout '" + s + "'");
}

std::uint64_t gsb(std::uint64_t n, std::uint64_t r, std::uint64_t delta) {
    if (r == 0) throw CodeError("gsb: r must be positive");
    return (n - r) * (delta / r + 1) + delta + 1;
}

ConvCode make_conv(FourierPtr ctx, Plan plan) {
    const std::size_t n = ctx->n();
    if (plan.rows.empty() || plan.rows[0].empty()) throw CodeError("make_conv: empty plan");
    const std::size_t r = plan.rows[0].size();
    if (r > n) throw CodeError("make_conv: more rows than length");

    // where[j] = (row, degree) of Fourier index j
    std::vector<std::pair<int, int>> where(n, {-1, -1});
    for (std::size_t k = 0; k < plan.rows.size(); ++k) {
        if (plan.rows[k].size() != r) throw CodeError("make_conv: ragged plan");
        for (std::size_t rho = 0; rho < r; ++rho) {
            int& idx = plan.rows[k][rho];
            if (idx < 0) {
                if (k == 0) throw CodeError("make_conv: G_0 rows must be nonzero");
                idx = -1;
                continue;
            }
            idx = static_cast<int>(ctx->wrap(idx));
            auto& w = where[static_cast<std::size_t>(idx)];
            if (w.first >= 0) throw CodeError("make_conv: Fourier row used twice");
            w = {static_cast<int>(rho), static_cast<int>(k)};
        }
    }
    while (plan.rows.size() > 1 &&
           std::all_of(plan.rows.back().begin(), plan.rows.back().end(), [](int i) { return i < 0; })) {
        plan.rows.pop_back();
    }

    ConvCode code;
    code.n = n;
    code.r = r;
    for (const auto& k : plan.rows) code.coeffs.push_back(ctx->rows_matrix(k));
    code.row_degrees.assign(r, 0);
    for (std::size_t k = 0; k < plan.rows.size(); ++k)
        for (std::size_t rho = 0; rho < r; ++rho)
            if (plan.rows[k][rho] >= 0) code.row_degrees[rho] = k;
    code.degree = std::accumulate(code.row_degrees.begin(), code.row_degrees.end(), std::size_t{0});
    code.memory = *std::max_element(code.row_degrees.begin(), code.row_degrees.end());

    const Field& f = ctx->field();
    // Column for each j outside G_0: f_j - f_{sigma0(rho)} z^k, or f_j when j is unused.
    std::vector<std::tuple<int, int, int>> cols;  // (j, partner, degree)
    std::size_t cmem = 0;
    for (std::size_t j = 0; j < n; ++j) {
        const auto [rho, k] = where[j];
        if (k == 0) continue;
        if (rho < 0) {
            cols.emplace_back(static_cast<int>(j), -1, 0);
        } else {
            cols.emplace_back(static_cast<int>(j), plan.rows[0][static_cast<std::size_t>(rho)], k);
            cmem = std::max(cmem, static_cast<std::size_t>(k));
        }
    }
    code.control.assign(cmem + 1, Matrix(n, cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const auto [j, partner, k] = cols[c];
        const auto& fj = ctx->inv_col(j);
        for (std::size_t i = 0; i < n; ++i) code.control[0](i, c) = fj[i];
        if (partner >= 0) {
            const auto& fp = ctx->inv_col(partner);
            for (std::size_t i = 0; i < n; ++i) code.control[static_cast<std::size_t>(k)](i, c) = f.neg(fp[i]);
        }
    }
    code.right_inverse = ctx->inv_cols_matrix(plan.rows[0]);
    code.plan = std::move(plan);
    code.ctx = std::move(ctx);
    return code;
}

namespace {

void require_lift(std::size_t n, std::size_t r) {
    if (2 * r <= n) throw CodeError("lift: r must exceed n/2");
    if (r >= n) throw CodeError("lift: r = n leaves B empty");
}

Plan memory1_plan(std::size_t n, std::size_t r) {
    Plan p;
    p.rows.assign(2, std::vector<int>(r, -1));
    for (std::size_t i = 0; i < r; ++i) p.rows[0][i] = static_cast<int>(i);
    const std::size_t zeros = 2 * r - n;
    for (std::size_t i = zeros; i < r; ++i) p.rows[1][i] = static_cast<int>(r + i - zeros);
    return p;
}

}  // namespace

ConvCode lift_memory1(FourierPtr ctx, std::size_t r) {
    const std::size_t n = ctx->n();
    require_lift(n, r);
    ConvCode code = make_conv(std::move(ctx), memory1_plan(n, r));
    code.layout = ConvLayout::Standard;
    code.design_free_distance = 2 * (n - r) + 1;
    code.flags.mds_conv = FlagState::Claimed;
    code.flags.lcd = FlagState::Claimed;
    return code;
}

ConvCode lift_conv_lcd(FourierPtr ctx, std::size_t r) { return lift_memory1(std::move(ctx), r); }

ConvCode lift_dc_char2(FourierPtr ctx, std::size_t pairs) {
    const std::size_t n = ctx->n();
    if (ctx->field().p() != 2) throw CodeError("lift_dc_char2: requires characteristic 2");
    if (n % 2 == 0) throw CodeError("lift_dc_char2: n must be odd");
    const std::size_t m = (n - 1) / 2;
    if (2 * pairs < m || pairs >= m) throw CodeError("lift_dc_char2: need m/2 <= pairs < m");
    const std::size_t r = 2 * pairs + 1;
    Plan p;
    p.rows.assign(2, std::vector<int>(r, -1));
    p.rows[0][0] = 0;
    for (std::size_t i = 1; i <= pairs; ++i) {
        p.rows[0][2 * i - 1] = static_cast<int>(i);
        p.rows[0][2 * i] = static_cast<int>(n - i);
    }
    // The last m - pairs pairs of A are shadowed in B by e_{i+c}, e_{n-i-c}.
    const std::size_t c = m - pairs;
    for (std::size_t i = 2 * pairs - m + 1; i <= pairs; ++i) {
        p.rows[1][2 * i - 1] = static_cast<int>(i + c);
        p.rows[1][2 * i] = static_cast<int>(n - i - c);
    }
    ConvCode code = make_conv(std::move(ctx), std::move(p));
    code.layout = ConvLayout::Char2;
    code.design_free_distance = 4 * c + 1;
    code.flags.mds_conv = FlagState::Claimed;
    code.flags.dc = FlagState::Claimed;
    return code;
}

ConvCode lift_memory1_lcd_source(const BlockCode& lcd_code) {
    if (lcd_code.field().p() != 2) throw CodeError("lift_memory1_lcd_source: requires characteristic 2");
    if (lcd_code.type != CodeType::LCD || lcd_code.r % 2 == 0) {
        throw CodeError("lift_memory1_lcd_source: source must be a paired LCD design");
    }
    return lift_dc_char2(lcd_code.ctx, (lcd_code.r - 1) / 2);
}

namespace {

const std::map<std::string, std::vector<std::vector<int>>>& presets() {
    static const std::map<std::string, std::vector<std::vector<int>>> table{
        {"7.3.5.2", {{0, 1, 2}, {-1, 3, 4}, {5, -1, 6}}},
        {"7.3.4.2", {{0, 1, 2}, {-1, 3, 4}, {-1, 5, 6}}},
        {"7.2.5.3", {{0, 1}, {2, 3}, {4, 5}, {-1, 6}}},
        {"7.1.6.6", {{0}, {1}, {2}, {3}, {4}, {5}, {6}}},
        // Same parameters with the zero rows moved; these reach the generalized Singleton bound.
        {"7.3.5.2-gsb", {{0, 1, 2}, {3, -1, 4}, {5, 6, -1}}},
        {"7.2.5.3-gsb", {{0, 1}, {2, 3}, {4, 5}, {6, -1}}},
    };
    return table;
}

}  // namespace

std::vector<std::string> preset_names() {
    std::vector<std::string> out;
    for (const auto& [k, v] : presets()) out.push_back(k);
    return out;
}

Plan preset_plan(const std::string& name) {
    const auto it = presets().find(name);
    if (it == presets().end()) throw CodeError("unknown preset '" + name + "'");
    return Plan{it->second};
}

ConvCode lift_higher_memory(FourierPtr ctx, std::size_t r, Plan plan) {
    const std::size_t n = ctx->n();
    if (plan.rows.empty() || plan.rows[0].size() != r) throw CodeError("lift_higher_memory: G_0 must have r rows");
    for (std::size_t i = 0; i < r; ++i) {
        if (plan.rows[0][i] != static_cast<int>(i)) throw CodeError("lift_higher_memory: G_0 must be e_0..e_{r-1}");
    }
    std::size_t used = 0;
    for (const auto& k : plan.rows)
        for (int i : k) used += i >= 0;
    if (used != n) throw CodeError("lift_higher_memory: plan does not partition the rows");
    return make_conv(std::move(ctx), std::move(plan));  // make_conv rejects repeats
}

std::vector<Matrix> conv_dual_generator(const ConvCode& code) {
    if (code.control.empty()) throw CodeError("conv_dual_generator: no control matrix");
    const std::size_t m = code.control.size() - 1;
    std::vector<Matrix> out;
    for (std::size_t t = 0; t <= m; ++t) out.push_back(code.control[m - t].transpose());
    return out;
}

std::vector<Vector> conv_encode(const ConvCode& code, const MessagePoly& msg) {
    const Field& f = code.field();
    if (msg.coeffs.empty()) return {};
    std::vector<Vector> out(msg.coeffs.size() + code.coeffs.size() - 1, Vector(code.n));
    for (std::size_t t = 0; t < msg.coeffs.size(); ++t) {
        if (msg.coeffs[t].size() != code.r) throw CodeError("conv_encode: message coefficient length != r");
        for (std::size_t k = 0; k < code.coeffs.size(); ++k) {
            const Vector v = vec_mul(f, msg.coeffs[t], code.coeffs[k]);
            for (std::size_t j = 0; j < code.n; ++j) out[t + k][j] = f.add(out[t + k][j], v[j]);
        }
    }
    return out;
}

std::size_t conv_weight(const std::vector<Vector>& out) {
    std::size_t w = 0;
    for (const auto& v : out) w += weight(v);
    return w;
}

ConvSizing conv_design_to_spec(Rational rate, std::uint64_t free_distance, std::uint64_t prime_limit) {
    if (2 * rate.num <= rate.den || rate.num >= rate.den) {
        throw CodeError("conv_design_to_spec: rate must lie in (1/2, 1)");
    }
    if (free_distance == 0) free_distance = 1;
    // Memory-1 design: d_f = 2(n - r) + 1, so n - r >= ceil((d - 1) / 2).
    const std::int64_t gap = static_cast<std::int64_t>(free_distance / 2);
    for (std::int64_t n = 2;; ++n) {
        const std::int64_t r = rate.ceil_times(n);
        if (r >= n || 2 * r <= n) continue;
        if (n - r < gap) continue;
        ConvSizing out;
        out.n = static_cast<std::size_t>(n);
        out.r = static_cast<std::size_t>(r);
        out.delta = out.n - out.r;
        out.free_distance = 2 * out.delta + 1;
        for (std::uint64_t p = 2; p <= prime_limit; ++p) {
            if (!is_prime(p)) continue;
            const auto f = smallest_field(out.n, CharConstraint::Characteristic, p, false);
            if (f) out.fields.push_back(*f);
        }
        std::sort(out.fields.begin(), out.fields.end(), [](const FieldParams& a, const FieldParams& b) {
            return a.order() != b.order() ? a.order() < b.order() : a.p < b.p;
        });
        return out;
    }
}

}  // namespace ecc
