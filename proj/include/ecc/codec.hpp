#ifndef ECC_CODEC_HPP
#define ECC_CODEC_HPP

#include <optional>
#include <string>

#include "ecc/block.hpp"

namespace ecc {

struct Progression {
    std::int64_t start = 0;
    std::int64_t step = 1;
};

/// Finds (a, k) with selection = {a + t k : t < r} as a set; nullopt otherwise.
std::optional<Progression> find_progression(const BlockCode& code);

Vector encode(const BlockCode& code, std::span<const FieldElement> message);

struct DecodeResult {
    bool ok = false;
    Vector message;
    Vector codeword;
    std::size_t corrected = 0;
    std::string reason;
};

/// Syndrome decoding up to floor((n - r) / 2) symbol errors. Never returns a message
/// whose codeword fails the parity checks.
DecodeResult decode(const BlockCode& code, std::span<const FieldElement> received);

/// The n - r syndromes y . f_j over the check columns in progression order.
Vector syndromes(const BlockCode& code, std::span<const FieldElement> received);

}  // namespace ecc

#endif  // ECC_CODEC_HPP
