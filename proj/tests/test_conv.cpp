#include <doctest.h>

#include "ecc/conv.hpp"
#include "oracles.hpp"

using namespace ecc;

namespace {

FourierPtr ctx_of(std::uint64_t p, unsigned s, std::uint64_t n) { return build_fourier(build_field(p, s), n); }

// Coefficient k of G[z] H^T[z], summed directly.
bool control_annihilates(const ConvCode& c) {
    const Field& f = c.field();
    const std::size_t top = c.coeffs.size() + c.control.size() - 1;
    for (std::size_t t = 0; t < top; ++t) {
        std::vector<Vector> acc(c.r, Vector(c.n - c.r, f.zero()));
        for (std::size_t a = 0; a < c.coeffs.size(); ++a) {
            if (t < a || t - a >= c.control.size()) continue;
            const Matrix& g = c.coeffs[a];
            const Matrix& h = c.control[t - a];
            for (std::size_t i = 0; i < c.r; ++i)
                for (std::size_t j = 0; j < c.n - c.r; ++j)
                    for (std::size_t k = 0; k < c.n; ++k) acc[i][j] = f.add(acc[i][j], f.mul(g(i, k), h(k, j)));
        }
        for (const auto& row : acc)
            for (auto x : row)
                if (!x.is_zero()) return false;
    }
    return true;
}

bool right_inverse_ok(const ConvCode& c) {
    const Field& f = c.field();
    const FieldElement nn = f.from_int(static_cast<std::int64_t>(c.n % f.p()));
    for (std::size_t k = 0; k < c.coeffs.size(); ++k) {
        const Matrix prod = multiply(f, c.coeffs[k], c.right_inverse);
        for (std::size_t i = 0; i < c.r; ++i)
            for (std::size_t j = 0; j < c.r; ++j)
                if (prod(i, j) != (k == 0 && i == j ? nn : f.zero())) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("generalized Singleton bound") {
    CHECK(gsb(10, 6, 4) == 9);
    CHECK(gsb(7, 3, 5) == 14);
    CHECK(gsb(400, 350, 50) == 101);
    CHECK(gsb(511, 449, 62) == 125);
    CHECK(gsb(31, 17, 14) == 29);
    CHECK(gsb(7, 1, 6) == 49);
    CHECK(gsb(7, 2, 5) == 21);
}

TEST_CASE("memory-1 lift layout") {
    auto c = lift_memory1(ctx_of(2, 3, 7), 4);
    CHECK(c.n == 7);
    CHECK(c.r == 4);
    CHECK(c.degree == 3);
    CHECK(c.memory == 1);
    CHECK(c.plan.rows[0] == std::vector<int>{0, 1, 2, 3});
    CHECK(c.plan.rows[1] == std::vector<int>{-1, 4, 5, 6});
    CHECK(c.design_free_distance == 7u);
    CHECK(c.layout == ConvLayout::Standard);
    CHECK(c.flags.lcd == FlagState::Claimed);
    CHECK_THROWS_AS(lift_memory1(ctx_of(2, 3, 7), 3), CodeError);
    CHECK_THROWS_AS(lift_memory1(ctx_of(2, 3, 7), 7), CodeError);
}

TEST_CASE("characteristic-2 paired lift layout") {
    auto c = lift_dc_char2(ctx_of(2, 5, 31), 8);
    CHECK(c.r == 17);
    CHECK(c.degree == 14);
    CHECK(c.design_free_distance == 29u);
    std::size_t zero_rows = 0;
    for (int i : c.plan.rows[1]) zero_rows += i < 0;
    CHECK(zero_rows == 4 * 8 - 2 * 15 + 1);
    CHECK(lift_dc_char2(ctx_of(2, 5, 31), 10).design_free_distance == 21u);
    CHECK(lift_dc_char2(ctx_of(2, 5, 31), 12).design_free_distance == 13u);
    CHECK_THROWS_AS(lift_dc_char2(ctx_of(11, 1, 10), 3), CodeError);
    CHECK_THROWS_AS(lift_dc_char2(ctx_of(2, 3, 7), 1), CodeError);
    auto src = design_lcd(ctx_of(2, 5, 31), 8);
    CHECK(lift_memory1_lcd_source(src).plan == c.plan);
}

TEST_CASE("control matrix and right inverse") {
    std::vector<ConvCode> codes{lift_memory1(ctx_of(2, 3, 7), 4), lift_memory1(ctx_of(2, 3, 7), 5),
                                lift_memory1(ctx_of(11, 1, 10), 6), lift_memory1(ctx_of(2, 4, 15), 8),
                                lift_dc_char2(ctx_of(2, 5, 31), 8)};
    for (const auto& name : preset_names()) codes.push_back(lift_higher_memory(ctx_of(2, 3, 7), preset_plan(name).rows[0].size(), preset_plan(name)));
    for (const auto& c : codes) {
        CAPTURE(c.n);
        CAPTURE(c.r);
        CHECK(control_annihilates(c));
        CHECK(right_inverse_ok(c));
        // The dual has rank n - r at z = 1.
        const auto dual = conv_dual_generator(c);
        Matrix sum = dual[0];
        for (std::size_t t = 1; t < dual.size(); ++t) sum = add(c.field(), sum, dual[t]);
        CHECK(sum.rows() == c.n - c.r);
    }
}

TEST_CASE("presets") {
    CHECK(preset_names().size() == 6);
    auto c = lift_higher_memory(ctx_of(2, 3, 7), 3, preset_plan("7.3.5.2"));
    CHECK(c.degree == 5);
    CHECK(c.memory == 2);
    CHECK(c.row_degrees == std::vector<std::size_t>{2, 1, 2});
    auto d = lift_higher_memory(ctx_of(2, 3, 7), 2, preset_plan("7.2.5.3"));
    CHECK(d.degree == 5);
    CHECK(d.memory == 3);
    CHECK(lift_higher_memory(ctx_of(2, 3, 7), 1, preset_plan("7.1.6.6")).degree == 6);
    CHECK(lift_higher_memory(ctx_of(2, 3, 7), 3, preset_plan("7.3.4.2")).degree == 4);
    CHECK_THROWS_AS(preset_plan("nope"), CodeError);
    CHECK_THROWS_AS(lift_higher_memory(ctx_of(2, 3, 7), 3, Plan{{{0, 1, 2}, {3, 4, 5}}}), CodeError);
    CHECK_THROWS_AS(make_conv(ctx_of(2, 3, 7), Plan{{{0, 1}, {1, -1}}}), CodeError);
}

TEST_CASE("encoding matches the direct product") {
    auto c = lift_memory1(ctx_of(2, 3, 7), 4);
    const Field& f = c.field();
    MessagePoly m{{Vector{FieldElement{1}, FieldElement{0}, FieldElement{5}, FieldElement{2}},
                   Vector{FieldElement{0}, FieldElement{3}, FieldElement{0}, FieldElement{7}}}};
    const auto out = conv_encode(c, m);
    REQUIRE(out.size() == 3);
    for (std::size_t t = 0; t < 3; ++t) {
        for (std::size_t j = 0; j < 7; ++j) {
            FieldElement acc = f.zero();
            for (std::size_t a = 0; a < 2; ++a) {
                if (t < a || t - a > 1) continue;
                for (std::size_t i = 0; i < 4; ++i) acc = f.add(acc, f.mul(m.coeffs[a][i], c.coeffs[t - a](i, j)));
            }
            CHECK(out[t][j] == acc);
        }
    }
    CHECK(conv_weight(out) == weight(out[0]) + weight(out[1]) + weight(out[2]));
}

TEST_CASE("naive enumeration of short messages") {
    CHECK(oracle::naive_conv_min(lift_memory1(ctx_of(2, 3, 7), 4), 0) == 7);
    CHECK(oracle::naive_conv_min(lift_memory1(ctx_of(2, 3, 7), 5), 0) == 5);
    CHECK(oracle::naive_conv_min(lift_higher_memory(ctx_of(2, 3, 7), 3, preset_plan("7.3.5.2")), 1) == 13);
    CHECK(oracle::naive_conv_min(lift_higher_memory(ctx_of(2, 3, 7), 3, preset_plan("7.3.5.2-gsb")), 1) == 14);
    CHECK(oracle::naive_conv_min(lift_higher_memory(ctx_of(2, 3, 7), 2, preset_plan("7.2.5.3")), 1) == 20);
}

TEST_CASE("convolutional sizing") {
    const auto sz = conv_design_to_spec(Rational{15, 16}, 61);
    CHECK(sz.n == 480);
    CHECK(sz.r == 450);
    CHECK(sz.delta == 30);
    CHECK(sz.free_distance == 61);
    CHECK(std::find(sz.fields.begin(), sz.fields.end(), FieldParams{7, 4}) != sz.fields.end());
    CHECK(std::find(sz.fields.begin(), sz.fields.end(), FieldParams{31, 2}) != sz.fields.end());
    for (const auto& f : sz.fields) CHECK(field_admits(f, 480));
    for (std::size_t i = 1; i < sz.fields.size(); ++i) CHECK(sz.fields[i - 1].order() <= sz.fields[i].order());
}

TEST_CASE("layout names") {
    CHECK(parse_conv_layout(to_string(ConvLayout::Char2)) == ConvLayout::Char2);
    CHECK(to_string(ConvLayout::Standard) == "standard");
    CHECK_THROWS_AS(parse_conv_layout("x"), CodeError);
}
