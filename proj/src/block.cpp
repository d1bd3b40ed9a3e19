#include "ecc/block.hpp"

#include <algorithm>
#include <numeric>

namespace ecc {

std::string to_string(FlagState s) {
    switch (s) {
        case FlagState::False: return "false";
        case FlagState::Claimed: return "claimed";
        case FlagState::Certified: return "certified";
    }
    return "false";
}

FlagState parse_flag_state(const std::string& s) {
    if (s == "false") return FlagState::False;
    if (s == "claimed") return FlagState::Claimed;
    if (s == "certified") return FlagState::Certified;
    throw CodeError("unknown flag state '" + s + "'");
}

std::string to_string(CodeType t) {
    switch (t) {
        case CodeType::Plain: return "MDS";
        case CodeType::DC: return "DC";
        case CodeType::HermitianDC: return "DC-H";
        case CodeType::LCD: return "LCD";
    }
    return "MDS";
}

CodeType parse_code_type(const std::string& s) {
    if (s == "MDS" || s == "plain" || s == "mds") return CodeType::Plain;
    if (s == "DC" || s == "dc") return CodeType::DC;
    if (s == "DC-H" || s == "hermitian_dc" || s == "hermitian-dc") return CodeType::HermitianDC;
    if (s == "LCD" || s == "lcd") return CodeType::LCD;
    throw CodeError("unknown code type '" + s + "'");
}

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    Rational r;
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            r.num = std::stoll(text, &used);
            if (used != text.size()) throw CodeError("");
            r.den = 1;
        } else {
            const std::string a = text.substr(0, slash), b = text.substr(slash + 1);
            r.num = std::stoll(a, &used);
            if (used != a.size()) throw CodeError("");
            r.den = std::stoll(b, &used);
            if (used != b.size()) throw CodeError("");
        }
    } catch (const std::exception&) {
        throw CodeError("malformed rational '" + text + "'");
    }
    if (r.den <= 0 || r.num < 0) throw CodeError("rational '" + text + "' must be nonnegative with positive denominator");
    const auto g = std::gcd(r.num, r.den);
    if (g > 1) {
        r.num /= g;
        r.den /= g;
    }
    return r;
}

std::int64_t Rational::ceil_times(std::int64_t x) const { return (num * x + den - 1) / den; }
std::int64_t Rational::floor_times(std::int64_t x) const { return num * x / den; }

std::uint64_t FieldParams::order() const {
    unsigned __int128 q = 1;
    for (unsigned i = 0; i < s; ++i) {
        q *= p;
        if (q > (static_cast<unsigned __int128>(1) << 64) - 1) return ~0ull;
    }
    return static_cast<std::uint64_t>(q);
}

namespace {

BlockFlags mds_claim() {
    BlockFlags f;
    f.mds = FlagState::Claimed;
    return f;
}

std::vector<int> complement_of(std::size_t n, const std::vector<int>& selection) {
    std::vector<bool> used(n, false);
    for (int i : selection) used[static_cast<std::size_t>(i)] = true;
    std::vector<int> out;
    for (std::size_t j = 0; j < n; ++j)
        if (!used[j]) out.push_back(static_cast<int>(j));
    return out;
}

BlockCode assemble(FourierPtr ctx, std::vector<int> selection, std::vector<int> check, std::size_t distance,
                   CodeType type, BlockFlags flags) {
    BlockCode code;
    code.n = ctx->n();
    code.r = selection.size();
    code.generator = ctx->rows_matrix(selection);
    code.check = ctx->inv_cols_matrix(check);
    code.selection = std::move(selection);
    code.check_indices = std::move(check);
    code.design_distance = distance;
    code.type = type;
    code.flags = flags;
    code.ctx = std::move(ctx);
    return code;
}

}  // namespace

BlockCode code_from_selection(FourierPtr ctx, std::vector<int> selection, CodeType type, BlockFlags flags) {
    const std::size_t n = ctx->n();
    std::vector<bool> seen(n, false);
    for (int& i : selection) {
        i = static_cast<int>(ctx->wrap(i));
        if (seen[static_cast<std::size_t>(i)]) throw CodeError("selection repeats a Fourier row");
        seen[static_cast<std::size_t>(i)] = true;
    }
    if (selection.empty()) throw CodeError("selection is empty");
    auto check = complement_of(n, selection);
    const std::size_t d = n - selection.size() + 1;
    return assemble(std::move(ctx), std::move(selection), std::move(check), d, type, flags);
}

BlockCode design_mds(FourierPtr ctx, std::int64_t start, std::int64_t step, std::size_t r) {
    const auto n = static_cast<std::int64_t>(ctx->n());
    if (r < 1 || r > ctx->n()) throw CodeError("design_mds: r out of range");
    if (std::gcd(((step % n) + n) % n, n) != 1) throw CodeError("design_mds: step must be coprime to n");
    std::vector<int> sel, check;
    for (std::int64_t t = 0; t < n; ++t) {
        const int idx = static_cast<int>(ctx->wrap(start + t * step));
        (t < static_cast<std::int64_t>(r) ? sel : check).push_back(idx);
    }
    return assemble(std::move(ctx), std::move(sel), std::move(check), static_cast<std::size_t>(n) - r + 1,
                    CodeType::Plain, mds_claim());
}

BlockCode design_dc(FourierPtr ctx, std::size_t r) {
    const std::size_t n = ctx->n();
    if (r <= n / 2) throw CodeError("design_dc: dual-containing requires rate above one half");
    if (r > n) throw CodeError("design_dc: r exceeds n");
    BlockCode code = design_mds(std::move(ctx), 0, 1, r);
    code.type = CodeType::DC;
    code.flags.dc_euclidean = FlagState::Claimed;
    return code;
}

BlockCode design_dc_hermitian(FieldPtr field, std::size_t n, std::size_t r) {
    if (field->s() % 2 != 0) throw CodeError("design_dc_hermitian: field degree must be even");
    std::uint64_t l = 1;
    for (unsigned i = 0; i < field->s() / 2; ++i) l *= field->p();
    if (n == 0 || (l - 1) % n != 0) {
        throw CodeError("design_dc_hermitian: l = p^(s/2) is not 1 mod n, Hermitian self-alignment fails");
    }
    BlockCode code = design_dc(build_fourier(std::move(field), n), r);
    code.type = CodeType::HermitianDC;
    code.flags.dc_hermitian = FlagState::Claimed;
    return code;
}

BlockCode design_lcd(FourierPtr ctx, std::size_t pairs) {
    const std::size_t n = ctx->n();
    if (2 * pairs + 1 > n) throw CodeError("design_lcd: pair count too large");
    std::vector<int> sel{0};
    for (std::size_t i = 1; i <= pairs; ++i) {
        sel.push_back(static_cast<int>(i));
        sel.push_back(static_cast<int>(n - i));
    }
    // Dual columns: (f_{r+1}, f_{n-r-1}), ..., then f_{n/2} last for even n.
    std::vector<int> check;
    for (std::size_t i = pairs + 1; i <= (n - 1) / 2; ++i) {
        check.push_back(static_cast<int>(i));
        check.push_back(static_cast<int>(n - i));
    }
    if (n % 2 == 0) check.push_back(static_cast<int>(n / 2));
    BlockFlags flags = mds_claim();
    flags.lcd = FlagState::Claimed;
    return assemble(std::move(ctx), std::move(sel), std::move(check), n - 2 * pairs, CodeType::LCD, flags);
}

bool field_admits(FieldParams f, std::uint64_t n) {
    if (n == 0 || f.p == 0 || f.s == 0) return false;
    // p^s mod n == 1 without forming p^s.
    return mod_pow(f.p, f.s, n) == 1 % n;
}

std::optional<FieldParams> smallest_field(std::uint64_t n, CharConstraint constraint, std::uint64_t characteristic,
                                          bool hermitian) {
    if (n == 0) return std::nullopt;
    const std::uint64_t limit = hermitian ? (1ull << 16) : Field::kMaxOrder;
    auto finish = [&](std::uint64_t p, unsigned s) -> std::optional<FieldParams> {
        return FieldParams{p, hermitian ? 2 * s : s};
    };
    switch (constraint) {
        case CharConstraint::None:
            for (std::uint64_t q = n + 1; q <= limit; q += n) {
                const auto [p, s] = prime_power(q);
                if (p != 0) return finish(p, s);
            }
            return std::nullopt;
        case CharConstraint::Characteristic: {
            if (!is_prime(characteristic) || std::gcd(characteristic, n) != 1) return std::nullopt;
            const unsigned s = order_mod(characteristic, n);
            unsigned __int128 q = 1;
            for (unsigned i = 0; i < s; ++i) {
                q *= characteristic;
                if (q > limit) return std::nullopt;
            }
            return finish(characteristic, s);
        }
        case CharConstraint::PrimeField:
            for (std::uint64_t q = n + 1; q <= limit; q += n) {
                if (is_prime(q)) return finish(q, 1);
            }
            return std::nullopt;
    }
    return std::nullopt;
}

DesignResult design_to_spec(const DesignRequest& req) {
    const Rational R = req.rate;
    if (R.num <= 0 || R.num >= R.den) throw CodeError("design_to_spec: rate must lie strictly between 0 and 1");
    const bool dc_type = req.type == CodeType::DC || req.type == CodeType::HermitianDC;
    if (dc_type && 2 * R.num <= R.den) {
        throw CodeError("design_to_spec: dual-containing requires rate above one half");
    }
    if (req.constraint == CharConstraint::Characteristic && !is_prime(req.characteristic)) {
        throw CodeError("design_to_spec: characteristic must be prime");
    }
    const bool hermitian = req.type == CodeType::HermitianDC;
    const bool char2 = req.constraint == CharConstraint::Characteristic && req.characteristic == 2;
    const std::uint64_t needed = 2 * req.errors + 1;
    const auto t2 = static_cast<std::int64_t>(2 * req.errors);
    const std::int64_t lower = std::max<std::int64_t>(1, (t2 * R.den + (R.den - R.num) - 1) / (R.den - R.num));
    constexpr std::int64_t kMaxLength = 1 << 20;

    for (std::int64_t n = lower; n <= kMaxLength; ++n) {
        const auto un = static_cast<std::uint64_t>(n);
        if (char2 && req.prefer_mersenne && ((un + 1) & un) != 0) continue;
        if (req.constraint == CharConstraint::Characteristic && std::gcd(un, req.characteristic) != 1) continue;

        std::size_t r = 0, pairs = 0, distance = 0;
        if (req.type == CodeType::LCD) {
            std::int64_t dim = R.ceil_times(n);
            if (dim % 2 == 0) ++dim;
            if (dim > n) continue;
            pairs = static_cast<std::size_t>((dim - 1) / 2);
            r = static_cast<std::size_t>(dim);
            distance = un - 2 * pairs;
        } else {
            std::int64_t rr = std::max<std::int64_t>(1, R.ceil_times(n));
            if (dc_type) rr = std::max<std::int64_t>(rr, n / 2 + 1);
            // Odd dimension keeps the characteristic-2 LCD/DC convolutional path available at this length.
            if (char2 && dc_type && rr % 2 == 0) ++rr;
            if (rr > n) continue;
            r = static_cast<std::size_t>(rr);
            distance = un - r + 1;
        }
        if (distance < needed) continue;

        const auto params = smallest_field(un, req.constraint, req.characteristic, hermitian);
        if (!params) continue;
        FieldPtr field = build_field(params->p, params->s);
        DesignResult out{BlockCode{}, *params};
        switch (req.type) {
            case CodeType::Plain: out.code = design_mds(build_fourier(field, un), 0, 1, r); break;
            case CodeType::DC: out.code = design_dc(build_fourier(field, un), r); break;
            case CodeType::HermitianDC: out.code = design_dc_hermitian(field, un, r); break;
            case CodeType::LCD: out.code = design_lcd(build_fourier(field, un), pairs); break;
        }
        return out;
    }
    throw CodeError("design_to_spec: no admissible length found");
}

QeccParams css_from_dc(const BlockCode& code) {
    const bool euclid = code.flags.dc_euclidean == FlagState::Certified;
    const bool herm = code.flags.dc_hermitian == FlagState::Certified;
    if (!euclid && !herm) throw CodeError("css_from_dc: dual containment is not certified");
    return QeccParams{code.n, 2 * code.r - code.n, code.n - code.r + 1, herm};
}

}  // namespace ecc
