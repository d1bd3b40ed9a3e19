#include <doctest.h>

#include "ecc/block.hpp"
#include "ecc/verifier.hpp"
#include "oracles.hpp"

using namespace ecc;

namespace {

FourierPtr ctx_of(std::uint64_t p, unsigned s, std::uint64_t n) { return build_fourier(build_field(p, s), n); }

// Direct DC test: every row of the dual generator lies in the span of the generator.
bool dual_inside(const BlockCode& c, std::uint64_t conj) {
    const Field& f = c.field();
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < c.r; ++i) rows.push_back(c.generator.row_vector(i));
    const std::size_t base = oracle::gauss_rank(f, rows);
    Matrix h = c.dual_generator();
    for (std::size_t i = 0; i < h.rows(); ++i) {
        Vector v = h.row_vector(i);
        if (conj > 1)
            for (auto& x : v) x = f.pow(x, conj);
        rows.push_back(v);
    }
    return oracle::gauss_rank(f, rows) == base;
}

BlockCode certified(BlockCode c) {
    if (certify_dc(c, InnerProduct::Euclidean)) c.flags.dc_euclidean = FlagState::Certified;
    return c;
}

}  // namespace

TEST_CASE("small fixtures reach n - r + 1 by brute force") {
    SUBCASE("[7,4,4] over GF(8)") {
        auto c = design_dc(ctx_of(2, 3, 7), 4);
        CHECK(oracle::brute_min_distance(c.field(), c.generator) == 4);
        CHECK(c.design_distance == 4);
    }
    SUBCASE("[7,5,3] LCD over GF(8)") {
        auto c = design_lcd(ctx_of(2, 3, 7), 2);
        CHECK(c.r == 5);
        CHECK(oracle::brute_min_distance(c.field(), c.generator) == 3);
    }
    SUBCASE("[10,6,5] over GF(11)") {
        auto c = design_mds(ctx_of(11, 1, 10), 0, 1, 6);
        CHECK(oracle::brute_min_distance(c.field(), c.generator) == 5);
    }
    SUBCASE("[15,9,7] LCD over GF(16): every 9-column minor is nonzero") {
        auto c = design_lcd(ctx_of(2, 4, 15), 4);
        CHECK(c.r == 9);
        CHECK(oracle::all_minors_nonzero(c.field(), c.generator));
    }
}

TEST_CASE("generator times check is zero and ranks are full") {
    std::vector<BlockCode> codes{design_dc(ctx_of(2, 3, 7), 4), design_lcd(ctx_of(2, 3, 7), 2),
                                 design_mds(ctx_of(11, 1, 10), 3, 3, 5), design_dc(ctx_of(2, 5, 31), 17),
                                 design_lcd(ctx_of(11, 1, 10), 2)};
    for (const auto& c : codes) {
        CHECK(multiply(c.field(), c.generator, c.check).is_zero());
        CHECK(c.check.cols() == c.n - c.r);
        std::vector<Vector> rows;
        for (std::size_t i = 0; i < c.r; ++i) rows.push_back(c.generator.row_vector(i));
        CHECK(oracle::gauss_rank(c.field(), rows) == c.r);
        const Matrix h = c.dual_generator();
        std::vector<Vector> hrows;
        for (std::size_t i = 0; i < h.rows(); ++i) hrows.push_back(h.row_vector(i));
        CHECK(oracle::gauss_rank(c.field(), hrows) == c.n - c.r);
    }
}

TEST_CASE("dual-containing designs") {
    auto c = design_dc(ctx_of(2, 3, 7), 4);
    CHECK(c.selection == std::vector<int>{0, 1, 2, 3});
    CHECK(dual_inside(c, 1));
    CHECK(certify_dc(c, InnerProduct::Euclidean));
    auto d = design_dc(ctx_of(2, 5, 31), 17);
    CHECK(dual_inside(d, 1));
    CHECK(certify_dc(d, InnerProduct::Euclidean));
    CHECK_THROWS_WITH_AS(design_dc(ctx_of(2, 3, 7), 3), "design_dc: dual-containing requires rate above one half", CodeError);
}

TEST_CASE("Hermitian dual-containing") {
    SUBCASE("[7,4,4] over GF(2^6)") {
        auto c = design_dc_hermitian(build_field(2, 6), 7, 4);
        CHECK(dual_inside(c, 8));
        CHECK(certify_dc(c, InnerProduct::Hermitian));
    }
    SUBCASE("[10,6,5] over GF(11^2)") {
        auto c = design_dc_hermitian(build_field(11, 2), 10, 6);
        CHECK(dual_inside(c, 11));
        CHECK(certify_dc(c, InnerProduct::Hermitian));
    }
    SUBCASE("[10,6,5] over GF(3^8)") {
        auto c = design_dc_hermitian(build_field(3, 8), 10, 6);
        CHECK(certify_dc(c, InnerProduct::Hermitian));
    }
    SUBCASE("[10,6,5] over GF(3^4) fails") {
        auto c = design_dc(ctx_of(3, 4, 10), 6);
        CHECK_FALSE(dual_inside(c, 9));
        CHECK_FALSE(certify_dc(c, InnerProduct::Hermitian));
        CHECK_THROWS_AS(design_dc_hermitian(build_field(3, 4), 10, 6), CodeError);
    }
}

TEST_CASE("LCD designs") {
    for (auto [p, s, n, pairs] : std::vector<std::tuple<std::uint64_t, unsigned, std::uint64_t, std::size_t>>{
             {2, 3, 7, 2}, {2, 4, 15, 4}, {11, 1, 10, 2}, {2, 5, 31, 7}}) {
        auto c = design_lcd(ctx_of(p, s, n), pairs);
        CAPTURE(n);
        // C meets its dual trivially iff stacking generator and dual generator has full rank n.
        std::vector<Vector> rows;
        for (std::size_t i = 0; i < c.r; ++i) rows.push_back(c.generator.row_vector(i));
        const Matrix h = c.dual_generator();
        for (std::size_t i = 0; i < h.rows(); ++i) rows.push_back(h.row_vector(i));
        CHECK(oracle::gauss_rank(c.field(), rows) == c.n);
        CHECK(certify_lcd(c));
        CHECK(c.r == 2 * pairs + 1);
    }
    CHECK_FALSE(certify_lcd(design_dc(ctx_of(2, 3, 7), 4)));
}

TEST_CASE("mds designs need a step coprime to n") {
    CHECK_THROWS_AS(design_mds(ctx_of(11, 1, 10), 0, 2, 4), CodeError);
    auto c = design_mds(ctx_of(11, 1, 10), 1, 3, 4);
    CHECK(c.selection == std::vector<int>{1, 4, 7, 0});
    CHECK(oracle::brute_min_distance(c.field(), c.generator) == 7);
}

TEST_CASE("rationals") {
    CHECK(Rational::parse("14/16") == Rational{7, 8});
    CHECK(Rational::parse("3") == Rational{3, 1});
    CHECK(Rational{7, 8}.ceil_times(400) == 350);
    CHECK(Rational{7, 8}.ceil_times(401) == 351);
    CHECK(Rational{7, 8}.floor_times(401) == 350);
    CHECK_THROWS_AS(Rational::parse("1/0"), CodeError);
    CHECK_THROWS_AS(Rational::parse("-1/2"), CodeError);
    CHECK_THROWS_AS(Rational::parse("abc"), CodeError);
}

TEST_CASE("string forms") {
    CHECK(parse_code_type("dc") == CodeType::DC);
    CHECK(parse_code_type("hermitian-dc") == CodeType::HermitianDC);
    CHECK(parse_code_type(to_string(CodeType::LCD)) == CodeType::LCD);
    CHECK(parse_flag_state("claimed") == FlagState::Claimed);
    CHECK(to_string(FlagState::Certified) == "certified");
    CHECK_THROWS_AS(parse_code_type("bogus"), CodeError);
}

TEST_CASE("smallest admissible field") {
    CHECK(smallest_field(400, CharConstraint::None, 0, false) == FieldParams{401, 1});
    CHECK(smallest_field(7, CharConstraint::None, 0, false) == FieldParams{2, 3});
    CHECK(smallest_field(15, CharConstraint::Characteristic, 2, false) == FieldParams{2, 4});
    CHECK(smallest_field(10, CharConstraint::PrimeField, 0, false) == FieldParams{11, 1});
    CHECK(smallest_field(7, CharConstraint::None, 0, true) == FieldParams{2, 6});
    CHECK_FALSE(smallest_field(10, CharConstraint::Characteristic, 2, false).has_value());
    CHECK(field_admits({7, 4}, 480));
    CHECK_FALSE(field_admits({487, 1}, 480));
}

TEST_CASE("design to spec") {
    SUBCASE("unconstrained") {
        auto res = design_to_spec({Rational{7, 8}, 25, CodeType::DC});
        CHECK(res.code.n == 400);
        CHECK(res.code.r == 350);
        CHECK(res.field == FieldParams{401, 1});
        CHECK(res.code.design_distance == 51);
        CHECK(multiply(res.code.field(), res.code.generator, res.code.check).is_zero());
        CHECK(css_from_dc(certified(res.code)) == QeccParams{400, 300, 51, false});
    }
    SUBCASE("characteristic 2") {
        DesignRequest req{Rational{7, 8}, 25, CodeType::DC};
        req.constraint = CharConstraint::Characteristic;
        req.characteristic = 2;
        auto res = design_to_spec(req);
        CHECK(res.code.n == 511);
        CHECK(res.code.r == 449);
        CHECK(res.field == FieldParams{2, 9});
        CHECK(res.code.design_distance == 63);
        CHECK(css_from_dc(certified(res.code)) == QeccParams{511, 387, 63, false});
    }
    SUBCASE("LCD dimension is odd") {
        auto res = design_to_spec({Rational{1, 2}, 2, CodeType::LCD});
        CHECK(res.code.r % 2 == 1);
        CHECK(res.code.design_distance >= 5);
        CHECK(2 * res.code.r >= res.code.n);
    }
    SUBCASE("rates of one or more cannot be met") {
        CHECK_THROWS_AS(design_to_spec({Rational{1, 1}, 1, CodeType::Plain}), CodeError);
    }
}

TEST_CASE("CSS needs a certified DC flag") {
    auto c = design_dc(ctx_of(2, 3, 7), 4);
    CHECK_THROWS_AS(css_from_dc(c), CodeError);
    certify(c);
    CHECK(css_from_dc(c) == QeccParams{7, 1, 4, false});
}
