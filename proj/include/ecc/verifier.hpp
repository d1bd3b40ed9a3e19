#ifndef ECC_VERIFIER_HPP
#define ECC_VERIFIER_HPP

#include <cstdint>
#include <string>

#include "ecc/block.hpp"
#include "ecc/conv.hpp"

namespace ecc {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct DistanceReport {
    std::size_t value = 0;
    bool exact = false;
    std::size_t degree = 0;  // messages of degree <= degree were covered exhaustively
    std::uint64_t enumerated = 0;
    std::string method;

    /// "exact" or "lb@D".
    std::string status() const;
};

/// Number of evaluations each exhaustive strategy would need for a k x N generator.
std::uint64_t message_count(std::uint64_t q, std::size_t k);
std::uint64_t zero_set_count(std::size_t N, std::size_t k);

/// Exact minimum distance of the code generated by g. Picks the cheaper of message
/// enumeration and zero-set enumeration; throws when both exceed the budget.
DistanceReport min_distance(const Field& f, const Matrix& g, std::uint64_t budget = kDefaultBudget);
DistanceReport min_distance(const BlockCode& code, std::uint64_t budget = kDefaultBudget);

/// Block generator of P[z] G[z] restricted to messages of degree <= D.
Matrix truncated_generator(const ConvCode& code, std::size_t D);
/// Exact minimum weight over nonzero messages of degree <= D, no promotion.
DistanceReport truncated_distance(const ConvCode& code, std::size_t D, std::uint64_t budget = kDefaultBudget);
/// Exact free distance by shortest path on the encoder state graph.
DistanceReport trellis_distance(const ConvCode& code, std::uint64_t budget = kDefaultBudget);
/// Degree-0 minimum of a memory-1 code from MDS subcode structure; nullopt when not applicable.
std::optional<std::size_t> structural_degree0(const ConvCode& code);

enum class FreeMethod { Auto, Trellis, Truncated, Structural };

DistanceReport free_distance(const ConvCode& code, std::size_t D, FreeMethod method = FreeMethod::Auto,
                             std::uint64_t budget = kDefaultBudget);

enum class InnerProduct { Euclidean, Hermitian };

/// True when `idx` is {a, a+k, ..., a+(len-1)k} mod n for some a and gcd(k, n) = 1.
bool is_progression(std::span<const int> idx, std::size_t n);

bool annihilates(const BlockCode& code);
bool certify_dc(const BlockCode& code, InnerProduct ip);
bool certify_lcd(const BlockCode& code);
/// Upgrades claimed flags that pass their oracle and clears the ones that fail.
/// MDS is certified only when min_distance fits in the budget.
void certify(BlockCode& code, std::uint64_t budget = kDefaultBudget);

/// G[z] H^T[z] = 0 and G[z] K = n I.
bool check_conv_structure(const ConvCode& code);
enum class ConvType { DC, LCD };
bool certify_conv_type(const ConvCode& code, ConvType type);
void certify(ConvCode& code, std::size_t D, std::uint64_t budget = kDefaultBudget);

}  // namespace ecc

#endif  // ECC_VERIFIER_HPP
