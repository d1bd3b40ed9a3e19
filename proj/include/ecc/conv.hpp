#ifndef ECC_CONV_HPP
#define ECC_CONV_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ecc/block.hpp"

namespace ecc {

struct ConvFlags {
    FlagState mds_conv = FlagState::False;
    FlagState dc = FlagState::False;
    FlagState lcd = FlagState::False;

    friend bool operator==(const ConvFlags&, const ConvFlags&) = default;
};

/// Row layouts with a known weight floor that grows with message degree.
enum class ConvLayout { Custom, Standard, Char2 };

std::string to_string(ConvLayout l);
ConvLayout parse_conv_layout(const std::string& s);

/// Fourier row index placed at (coefficient k, row rho); -1 is a zero row.
/// rows[k][rho], with rows[0] all nonnegative.
struct Plan {
    std::vector<std::vector<int>> rows;

    std::size_t memory() const { return rows.empty() ? 0 : rows.size() - 1; }
    friend bool operator==(const Plan&, const Plan&) = default;
};

/// A polynomial generator G[z] = G_0 + G_1 z + ... + G_mu z^mu built from Fourier rows.
struct ConvCode {
    FourierPtr ctx;
    std::size_t n = 0;
    std::size_t r = 0;
    Plan plan;
    std::vector<Matrix> coeffs;  // G_0..G_mu, each r x n
    std::vector<std::size_t> row_degrees;
    std::size_t degree = 0;  // delta
    std::size_t memory = 0;  // mu
    std::optional<std::size_t> design_free_distance;
    std::vector<Matrix> control;  // H^T[z] coefficients, each n x (n - r); G[z] H^T[z] = 0
    Matrix right_inverse;         // n x r constant K with G[z] K = n I
    ConvLayout layout = ConvLayout::Custom;
    ConvFlags flags;

    const Field& field() const { return ctx->field(); }
};

/// Message polynomial P_0 + P_1 z + ... + P_D z^D, each coefficient of length r.
struct MessagePoly {
    std::vector<Vector> coeffs;
    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

/// Generalized Singleton bound (n - r)(floor(delta / r) + 1) + delta + 1.
std::uint64_t gsb(std::uint64_t n, std::uint64_t r, std::uint64_t delta);

/// Builds G[z], a control matrix and a constant right inverse from a plan.
ConvCode make_conv(FourierPtr ctx, Plan plan);

/// G = A + Bz with A = e_0..e_{r-1}, B = (2r - n) zero rows then e_r..e_{n-1}.
ConvCode lift_memory1(FourierPtr ctx, std::size_t r);
/// Same generator as lift_memory1, claimed LCD.
ConvCode lift_conv_lcd(FourierPtr ctx, std::size_t r);
/// Characteristic 2, n = 2m + 1: A = e_0 and `pairs` pairs, B carries the remaining pairs.
ConvCode lift_dc_char2(FourierPtr ctx, std::size_t pairs);
ConvCode lift_memory1_lcd_source(const BlockCode& lcd_code);

/// Plans for length 7: "7.3.5.2", "7.3.4.2", "7.2.5.3", "7.1.6.6", "7.3.5.2-gsb", "7.2.5.3-gsb".
std::vector<std::string> preset_names();
Plan preset_plan(const std::string& name);
/// G_0 must be e_0..e_{r-1} and the plan must use every row exactly once.
ConvCode lift_higher_memory(FourierPtr ctx, std::size_t r, Plan plan);

/// Coefficients of H[z^{-1}] z^m, each (n - r) x n, where m is the control memory.
std::vector<Matrix> conv_dual_generator(const ConvCode& code);

/// P[z] G[z] as coefficient vectors of length n.
std::vector<Vector> conv_encode(const ConvCode& code, const MessagePoly& msg);
/// Hamming weight summed over all output coefficients.
std::size_t conv_weight(const std::vector<Vector>& out);

/// Memory-1 sizing for rate >= R and free distance >= d.
struct ConvSizing {
    std::size_t n = 0;
    std::size_t r = 0;
    std::size_t delta = 0;
    std::size_t free_distance = 0;
    std::vector<FieldParams> fields;  // admissible GF(p^s), p below the scan limit, by order
};

ConvSizing conv_design_to_spec(Rational rate, std::uint64_t free_distance, std::uint64_t prime_limit = 1000);

}  // namespace ecc

#endif  // ECC_CONV_HPP
