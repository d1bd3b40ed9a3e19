#include "ecc/series.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ecc {

namespace {

std::string normalize(std::string s) {
    std::replace(s.begin(), s.end(), '_', '-');
    return s;
}

}  // namespace

std::string to_string(Family f) {
    switch (f) {
        case Family::CharP: return "char-p";
        case Family::PrimeFields: return "prime-fields";
        case Family::Char2Mersenne: return "char2-mersenne";
        case Family::HermitianChar2: return "hermitian-char2";
        case Family::HermitianPrimeSq: return "hermitian-prime-sq";
    }
    return "char-p";
}

Family parse_family(const std::string& s) {
    const std::string t = normalize(s);
    for (Family f : {Family::CharP, Family::PrimeFields, Family::Char2Mersenne, Family::HermitianChar2,
                     Family::HermitianPrimeSq}) {
        if (t == to_string(f)) return f;
    }
    throw CodeError("unknown series family '" + s + "'");
}

SeriesType parse_series_type(const std::string& s) {
    if (s == "dc") return SeriesType::DC;
    if (s == "lcd") return SeriesType::LCD;
    if (s == "qecc") return SeriesType::QECC;
    throw CodeError("unknown series type '" + s + "'");
}

std::vector<SeriesElement> enumerate(const SeriesSpec& spec, std::size_t count) {
    const Rational R = spec.rate;
    if (R.num <= 0 || R.num >= R.den) throw CodeError("series: rate must lie strictly between 0 and 1");
    if (spec.type != SeriesType::LCD && 2 * R.num < R.den) {
        throw CodeError("series: dual-containing families need rate at least 1/2");
    }
    if (spec.family == Family::CharP && !is_prime(spec.characteristic)) {
        throw CodeError("series: characteristic must be prime");
    }
    const bool hermitian = spec.family == Family::HermitianChar2 || spec.family == Family::HermitianPrimeSq;

    std::vector<SeriesElement> out;
    std::uint64_t idx = spec.start;
    if (idx == 0) {
        switch (spec.family) {
            case Family::CharP: idx = 2; break;
            case Family::PrimeFields:
            case Family::HermitianPrimeSq: idx = 3; break;
            case Family::Char2Mersenne:
            case Family::HermitianChar2: idx = 2; break;
        }
    }
    for (; out.size() < count; ++idx) {
        SeriesElement e;
        switch (spec.family) {
            case Family::Char2Mersenne:
            case Family::HermitianChar2:
                if (idx > 32) throw CodeError("series: index beyond 2^32 - 1");
                e.n = static_cast<std::size_t>((1ull << idx) - 1);
                e.field = {2, static_cast<unsigned>(hermitian ? 2 * idx : idx)};
                break;
            case Family::PrimeFields:
            case Family::HermitianPrimeSq:
                if (!is_prime(idx)) continue;
                e.n = static_cast<std::size_t>(idx - 1);
                e.field = {idx, hermitian ? 2u : 1u};
                break;
            case Family::CharP:
                if (std::gcd(idx, spec.characteristic) != 1) continue;
                e.n = static_cast<std::size_t>(idx);
                e.field = {spec.characteristic, order_mod(spec.characteristic, idx)};
                break;
        }
        const auto n = static_cast<std::int64_t>(e.n);
        std::int64_t r = R.floor_times(n);
        if (spec.type == SeriesType::LCD) {
            if (r % 2 == 0) ++r;
        } else {
            r = std::max<std::int64_t>(r, n / 2 + 1);
        }
        if (r < 1 || r >= n) continue;  // the whole space carries no distance
        e.r = static_cast<std::size_t>(r);
        e.d = e.n - e.r + 1;
        if (spec.type == SeriesType::QECC) e.qecc = QeccParams{e.n, 2 * e.r - e.n, e.d, hermitian};
        out.push_back(e);
    }
    return out;
}

std::vector<LimitRow> limit_report(const std::vector<SeriesElement>& list, Rational rate) {
    std::vector<LimitRow> rows;
    const double R = rate.value();
    for (const auto& e : list) {
        const double n = static_cast<double>(e.n);
        rows.push_back({e.n, std::abs(static_cast<double>(e.r) / n - R), std::abs(static_cast<double>(e.d) / n - (1 - R))});
    }
    return rows;
}

}  // namespace ecc
