#ifndef ECC_BLOCK_HPP
#define ECC_BLOCK_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ecc/fourier.hpp"

namespace ecc {

/// Tri-state property flag: designs claim, verifier oracles certify.
enum class FlagState { False, Claimed, Certified };

std::string to_string(FlagState s);
FlagState parse_flag_state(const std::string& s);
inline bool holds(FlagState s) { return s != FlagState::False; }

struct BlockFlags {
    FlagState mds = FlagState::False;
    FlagState dc_euclidean = FlagState::False;
    FlagState dc_hermitian = FlagState::False;
    FlagState lcd = FlagState::False;

    friend bool operator==(const BlockFlags&, const BlockFlags&) = default;
};

enum class CodeType { Plain, DC, HermitianDC, LCD };

std::string to_string(CodeType t);
CodeType parse_code_type(const std::string& s);

/// Exact positive rational, parsed from "p/q" strings.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational parse(const std::string& text);
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    /// ceil(num * x / den)
    std::int64_t ceil_times(std::int64_t x) const;
    std::int64_t floor_times(std::int64_t x) const;
    friend bool operator==(const Rational&, const Rational&) = default;
};

/// A linear block code generated by selected rows of a Fourier matrix.
struct BlockCode {
    FourierPtr ctx;
    std::size_t n = 0;
    std::size_t r = 0;
    std::vector<int> selection;      // Fourier row indices of the generator, in order
    std::vector<int> check_indices;  // indices j of the inverse columns f_j with A f_j = 0
    Matrix generator;                // r x n
    Matrix check;                    // n x (n - r)
    std::size_t design_distance = 0;
    CodeType type = CodeType::Plain;
    BlockFlags flags;

    const Field& field() const { return ctx->field(); }
    /// Rows f_j^T of the transposed check columns, which generate the Euclidean dual.
    Matrix dual_generator() const { return check.transpose(); }
};

/// Quantum code parameters [[n, k, d]] from the CSS construction.
struct QeccParams {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t d = 0;
    bool hermitian = false;
    friend bool operator==(const QeccParams&, const QeccParams&) = default;
};

enum class CharConstraint { None, Characteristic, PrimeField };

struct DesignRequest {
    Rational rate;
    std::uint64_t errors = 0;  // t
    CodeType type = CodeType::Plain;
    CharConstraint constraint = CharConstraint::None;
    std::uint64_t characteristic = 0;  // used with CharConstraint::Characteristic
    bool prefer_mersenne = true;       // characteristic 2 only: lengths 2^i - 1
};

struct FieldParams {
    std::uint64_t p = 0;
    unsigned s = 0;
    std::uint64_t order() const;
    friend bool operator==(const FieldParams&, const FieldParams&) = default;
};

struct DesignResult {
    BlockCode code;
    FieldParams field;
};

BlockCode design_mds(FourierPtr ctx, std::int64_t start, std::int64_t step, std::size_t r);
BlockCode design_dc(FourierPtr ctx, std::size_t r);
/// Hermitian DC code over GF(p^{2s}); w must satisfy w^{p^s} = w, i.e. n | p^s - 1.
BlockCode design_dc_hermitian(FieldPtr field, std::size_t n, std::size_t r);
/// Rows e_0 and the pairs {e_i, e_{n-i}} for i = 1..pairs.
BlockCode design_lcd(FourierPtr ctx, std::size_t pairs);

/// Builds a code from an explicit row selection; check columns are the complement.
BlockCode code_from_selection(FourierPtr ctx, std::vector<int> selection, CodeType type, BlockFlags flags);

/// Smallest field of the requested kind containing an element of order n.
/// With `hermitian` the returned field is GF(l^2) where n | l - 1.
std::optional<FieldParams> smallest_field(std::uint64_t n, CharConstraint constraint, std::uint64_t characteristic,
                                          bool hermitian);
/// Whether GF(p^s) contains an element of order n.
bool field_admits(FieldParams f, std::uint64_t n);

DesignResult design_to_spec(const DesignRequest& req);

QeccParams css_from_dc(const BlockCode& code);

}  // namespace ecc

#endif  // ECC_BLOCK_HPP
