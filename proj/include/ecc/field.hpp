#ifndef ECC_FIELD_HPP
#define ECC_FIELD_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace ecc {

/// Raised for every violated precondition in the toolkit.
class CodeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * An element of GF(p^s) in packed form: the coefficient vector (c_0, ..., c_{s-1})
 * of its polynomial representation stored as the base-p integer sum c_i p^i.
 * Zero is 0 and the multiplicative identity is 1.
 */
class FieldElement {
public:
    constexpr FieldElement() = default;
    constexpr explicit FieldElement(std::uint32_t packed) : packed_(packed) {}

    constexpr std::uint32_t packed() const { return packed_; }
    constexpr bool is_zero() const { return packed_ == 0; }

    friend constexpr bool operator==(FieldElement, FieldElement) = default;
    friend constexpr auto operator<=>(FieldElement, FieldElement) = default;

private:
    std::uint32_t packed_ = 0;
};

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
bool is_prime(std::uint64_t n);
/// Distinct prime factors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
/// Returns (p, s) when q = p^s for a prime p, otherwise p = 0.
std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t q);

/// Least s > 0 with p^s = 1 (mod n). Throws when gcd(p, n) != 1.
unsigned order_mod(std::uint64_t p, std::uint64_t n);

/**
 * Immutable description of GF(p^s) together with its arithmetic.
 *
 * The modulus is the smallest monic irreducible polynomial of degree s (ordering the
 * candidates by their packed lower coefficients), the generator is the smallest element
 * of multiplicative order q - 1. Fields with q <= 2^20 carry log/antilog tables; larger
 * ones fall back to schoolbook polynomial multiplication.
 */
class Field {
public:
    static constexpr std::uint64_t kMaxOrder = 1ull << 32;
    static constexpr std::uint64_t kTableLimit = 1ull << 20;

    std::uint32_t p() const { return p_; }
    unsigned s() const { return s_; }
    std::uint64_t order() const { return q_; }
    /// Modulus coefficients c_0..c_s (constant term first); empty for prime fields.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    FieldElement generator() const { return generator_; }

    FieldElement zero() const { return FieldElement{0}; }
    FieldElement one() const { return FieldElement{1}; }
    FieldElement from_int(std::int64_t v) const;
    FieldElement from_coeffs(const std::vector<std::uint32_t>& coeffs) const;
    std::vector<std::uint32_t> coeffs(FieldElement x) const;
    bool contains(FieldElement x) const { return x.packed() < q_; }

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement sub(FieldElement a, FieldElement b) const;
    FieldElement neg(FieldElement a) const;
    FieldElement mul(FieldElement a, FieldElement b) const;
    FieldElement inv(FieldElement a) const;
    FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
    FieldElement pow(FieldElement a, std::uint64_t e) const;
    /// x -> x^l. An automorphism whenever l is a power of p.
    FieldElement frobenius(FieldElement x, std::uint64_t l) const { return pow(x, l); }

    /// Multiplicative order of a nonzero element.
    std::uint64_t element_order(FieldElement x) const;
    /// Discrete log base the generator; only for fields with tables.
    bool has_tables() const { return !log_.empty(); }

    /// `GF <p> <s> <c_0> ... <c_s>`, the modulus omitted for prime fields.
    std::string header() const;
    /// Human form of one element: decimal for prime fields, comma-joined coefficients otherwise.
    std::string format(FieldElement x) const;
    FieldElement parse(const std::string& token) const;

    friend std::shared_ptr<const Field> build_field(std::uint64_t p, unsigned s);
    friend std::shared_ptr<const Field> build_field_with_modulus(std::uint64_t p,
                                                                 std::vector<std::uint32_t> modulus);

private:
    Field() = default;
    void init_tables();
    FieldElement slow_mul(FieldElement a, FieldElement b) const;

    std::uint32_t p_ = 2;
    unsigned s_ = 1;
    std::uint64_t q_ = 2;
    std::vector<std::uint32_t> modulus_;
    FieldElement generator_{1};
    std::vector<std::uint32_t> exp_;  // 2(q-1) entries so exp_[log a + log b] needs no reduction
    std::vector<std::uint32_t> log_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Builds GF(p^s) deterministically. Rejects non-prime p and q > 2^32.
FieldPtr build_field(std::uint64_t p, unsigned s);
/// Builds GF(p^s) over a caller-supplied monic modulus (c_0..c_s); verifies irreducibility.
FieldPtr build_field_with_modulus(std::uint64_t p, std::vector<std::uint32_t> modulus);

/// Element of exact multiplicative order n, computed as generator^((q-1)/n).
FieldElement element_of_order(const Field& field, std::uint64_t n);

/// True when the monic polynomial (c_0..c_s) is irreducible over GF(p).
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& monic);

}  // namespace ecc

#endif  // ECC_FIELD_HPP
