#ifndef ECC_SERIES_HPP
#define ECC_SERIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "ecc/block.hpp"

namespace ecc {

enum class Family { CharP, PrimeFields, Char2Mersenne, HermitianChar2, HermitianPrimeSq };
enum class SeriesType { DC, LCD, QECC };

std::string to_string(Family f);
Family parse_family(const std::string& s);
SeriesType parse_series_type(const std::string& s);

struct SeriesSpec {
    Family family = Family::Char2Mersenne;
    Rational rate;
    SeriesType type = SeriesType::DC;
    std::uint64_t characteristic = 2;  // CharP only
    std::uint64_t start = 0;           // first index (i, p or n by family); 0 picks the family default
};

struct SeriesElement {
    FieldParams field;
    std::size_t n = 0;
    std::size_t r = 0;
    std::size_t d = 0;
    std::optional<QeccParams> qecc;
};

std::vector<SeriesElement> enumerate(const SeriesSpec& spec, std::size_t count);

struct LimitRow {
    std::size_t n = 0;
    double rate_gap = 0;   // |r/n - R|
    double rdist_gap = 0;  // |d/n - (1 - R)|
};

std::vector<LimitRow> limit_report(const std::vector<SeriesElement>& list, Rational rate);

}  // namespace ecc

#endif  // ECC_SERIES_HPP
