#include "ecc/field.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ecc {

namespace {

using Poly = std::vector<std::uint64_t>;  // little-endian coefficients over GF(p)

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return mod_pow(a, p - 2, p); }

Poly poly_mod(Poly a, const Poly& f, std::uint64_t p) {
    trim(a);
    const std::size_t df = f.size() - 1;
    const std::uint64_t lead_inv = inv_mod(f.back(), p);
    while (a.size() > df) {
        const std::uint64_t c = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - 1 - df;
        for (std::size_t i = 0; i <= df; ++i) {
            a[shift + i] = (a[shift + i] + (p - c) * f[i]) % p;
        }
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
    return poly_mod(std::move(out), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
    Poly result{1};
    base = poly_mod(std::move(base), f, p);
    while (e > 0) {
        if (e & 1) result = poly_mulmod(result, base, f, p);
        e >>= 1;
        if (e) base = poly_mulmod(base, base, f, p);
    }
    return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    if (mod == 1) return 0;
    unsigned __int128 result = 1;
    unsigned __int128 b = base % mod;
    while (exp > 0) {
        if (exp & 1) result = result * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<std::uint64_t>(result);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t q) {
    if (q < 2) return {0, 0};
    const auto f = prime_factors(q);
    if (f.size() != 1) return {0, 0};
    unsigned s = 0;
    while (q > 1) {
        q /= f[0];
        ++s;
    }
    return {f[0], s};
}

unsigned order_mod(std::uint64_t p, std::uint64_t n) {
    if (n == 0) throw CodeError("order_mod: length must be positive");
    if (std::gcd(p, n) != 1) throw CodeError("order_mod: characteristic divides length");
    if (n == 1) return 1;
    // The order divides phi(n); walk powers directly since it is at most n - 1.
    std::uint64_t acc = p % n;
    unsigned s = 1;
    while (acc != 1) {
        acc = static_cast<std::uint64_t>(static_cast<unsigned __int128>(acc) * p % n);
        ++s;
    }
    return s;
}

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& monic) {
    if (monic.size() < 2 || monic.back() != 1) return false;
    const std::size_t s = monic.size() - 1;
    if (s == 1) return true;
    Poly f(monic.begin(), monic.end());
    // Ben-Or: no irreducible factor of degree i <= s/2, i.e. gcd(x^{p^i} - x, f) = 1.
    Poly h{0, 1};
    for (std::size_t i = 1; i <= s / 2; ++i) {
        h = poly_powmod(h, p, f, p);
        Poly t = h;
        if (t.size() < 2) t.resize(2, 0);
        t[1] = (t[1] + p - 1) % p;
        if (poly_gcd(f, t, p).size() > 1) return false;
    }
    return true;
}

FieldPtr build_field_with_modulus(std::uint64_t p, std::vector<std::uint32_t> modulus) {
    if (!is_prime(p) || p >= Field::kMaxOrder) throw CodeError("build_field: p is not a prime below 2^32");
    auto field = std::shared_ptr<Field>(new Field());
    field->p_ = static_cast<std::uint32_t>(p);
    field->s_ = modulus.empty() ? 1 : static_cast<unsigned>(modulus.size() - 1);
    unsigned __int128 q = 1;
    for (unsigned i = 0; i < field->s_; ++i) {
        q *= p;
        if (q > Field::kMaxOrder) throw CodeError("build_field: field order exceeds 2^32");
    }
    field->q_ = static_cast<std::uint64_t>(q);
    if (field->s_ > 1) {
        if (!is_irreducible(field->p_, modulus)) throw CodeError("build_field: modulus is not irreducible");
        field->modulus_ = std::move(modulus);
    }

    // Smallest element of full order q - 1.
    const std::uint64_t group = field->q_ - 1;
    const auto factors = prime_factors(group);
    field->generator_ = FieldElement{1};
    for (std::uint64_t g = 1; g < field->q_; ++g) {
        const FieldElement cand{static_cast<std::uint32_t>(g)};
        bool ok = true;
        for (auto l : factors) {
            if (field->pow(cand, group / l) == field->one()) {
                ok = false;
                break;
            }
        }
        if (ok) {
            field->generator_ = cand;
            break;
        }
    }
    if (field->q_ <= Field::kTableLimit) field->init_tables();
    return field;
}

FieldPtr build_field(std::uint64_t p, unsigned s) {
    if (!is_prime(p)) throw CodeError("build_field: p is not prime");
    if (s == 0) throw CodeError("build_field: extension degree must be positive");
    if (s == 1) return build_field_with_modulus(p, {});
    unsigned __int128 q = 1;
    for (unsigned i = 0; i < s; ++i) {
        q *= p;
        if (q > Field::kMaxOrder) throw CodeError("build_field: field order exceeds 2^32");
    }
    const auto lower = static_cast<std::uint64_t>(q);
    std::vector<std::uint32_t> cand(s + 1, 0);
    cand[s] = 1;
    for (std::uint64_t packed = 0; packed < lower; ++packed) {
        std::uint64_t v = packed;
        for (unsigned i = 0; i < s; ++i) {
            cand[i] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        if (cand[0] == 0) continue;  // divisible by x
        if (is_irreducible(static_cast<std::uint32_t>(p), cand)) return build_field_with_modulus(p, cand);
    }
    throw CodeError("build_field: no irreducible polynomial found");
}

void Field::init_tables() {
    const std::uint64_t group = q_ - 1;
    exp_.assign(2 * group + 1, 0);
    log_.assign(q_, 0);
    FieldElement acc = one();
    for (std::uint64_t i = 0; i < group; ++i) {
        exp_[i] = acc.packed();
        log_[acc.packed()] = static_cast<std::uint32_t>(i);
        acc = slow_mul(acc, generator_);
    }
    for (std::uint64_t i = group; i < exp_.size(); ++i) exp_[i] = exp_[i - group];
}

FieldElement Field::from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return FieldElement{static_cast<std::uint32_t>(r)};
}

FieldElement Field::from_coeffs(const std::vector<std::uint32_t>& c) const {
    if (c.size() > s_) throw CodeError("field element has too many coefficients");
    std::uint64_t packed = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] >= p_) throw CodeError("field coefficient out of range");
        packed = packed * p_ + c[i];
    }
    return FieldElement{static_cast<std::uint32_t>(packed)};
}

std::vector<std::uint32_t> Field::coeffs(FieldElement x) const {
    std::vector<std::uint32_t> out(s_, 0);
    std::uint64_t v = x.packed();
    for (unsigned i = 0; i < s_; ++i) {
        out[i] = static_cast<std::uint32_t>(v % p_);
        v /= p_;
    }
    return out;
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
    if (s_ == 1) {
        std::uint64_t r = std::uint64_t{a.packed()} + b.packed();
        if (r >= p_) r -= p_;
        return FieldElement{static_cast<std::uint32_t>(r)};
    }
    if (p_ == 2) return FieldElement{a.packed() ^ b.packed()};
    std::uint64_t x = a.packed(), y = b.packed(), out = 0, scale = 1;
    for (unsigned i = 0; i < s_; ++i) {
        out += ((x % p_ + y % p_) % p_) * scale;
        x /= p_;
        y /= p_;
        scale *= p_;
    }
    return FieldElement{static_cast<std::uint32_t>(out)};
}

FieldElement Field::neg(FieldElement a) const {
    if (p_ == 2) return a;
    if (s_ == 1) return FieldElement{a.is_zero() ? 0u : p_ - a.packed()};
    std::uint64_t x = a.packed(), out = 0, scale = 1;
    for (unsigned i = 0; i < s_; ++i) {
        out += ((p_ - x % p_) % p_) * scale;
        x /= p_;
        scale *= p_;
    }
    return FieldElement{static_cast<std::uint32_t>(out)};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement Field::mul(FieldElement a, FieldElement b) const {
    if (a.is_zero() || b.is_zero()) return zero();
    if (!log_.empty()) return FieldElement{exp_[std::uint64_t{log_[a.packed()]} + log_[b.packed()]]};
    return slow_mul(a, b);
}

FieldElement Field::slow_mul(FieldElement a, FieldElement b) const {
    if (s_ == 1) {
        return FieldElement{static_cast<std::uint32_t>(std::uint64_t{a.packed()} * b.packed() % p_)};
    }
    const auto ca = coeffs(a), cb = coeffs(b);
    Poly prod(2 * s_ - 1, 0);
    for (unsigned i = 0; i < s_; ++i) {
        if (ca[i] == 0) continue;
        for (unsigned j = 0; j < s_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{ca[i]} * cb[j]) % p_;
    }
    const Poly f(modulus_.begin(), modulus_.end());
    prod = poly_mod(std::move(prod), f, p_);
    std::vector<std::uint32_t> out(prod.begin(), prod.end());
    return from_coeffs(out);
}

FieldElement Field::inv(FieldElement a) const {
    if (a.is_zero()) throw CodeError("inversion of zero");
    if (!log_.empty()) {
        const std::uint64_t group = q_ - 1;
        return FieldElement{exp_[(group - log_[a.packed()]) % group]};
    }
    return pow(a, q_ - 2);
}

FieldElement Field::pow(FieldElement a, std::uint64_t e) const {
    if (e == 0) return one();
    if (a.is_zero()) return zero();
    if (!log_.empty()) {
        const std::uint64_t group = q_ - 1;
        const auto l = static_cast<unsigned __int128>(log_[a.packed()]) * (e % group) % group;
        return FieldElement{exp_[static_cast<std::uint64_t>(l)]};
    }
    FieldElement result = one();
    while (e > 0) {
        if (e & 1) result = slow_mul(result, a);
        a = slow_mul(a, a);
        e >>= 1;
    }
    return result;
}

std::uint64_t Field::element_order(FieldElement x) const {
    if (x.is_zero()) throw CodeError("zero has no multiplicative order");
    std::uint64_t ord = q_ - 1;
    for (auto l : prime_factors(q_ - 1)) {
        while (ord % l == 0 && pow(x, ord / l) == one()) ord /= l;
    }
    return ord;
}

std::string Field::header() const {
    std::ostringstream os;
    os << "GF " << p_ << ' ' << s_;
    for (auto c : modulus_) os << ' ' << c;
    return os.str();
}

std::string Field::format(FieldElement x) const {
    if (s_ == 1) return std::to_string(x.packed());
    std::string out;
    const auto c = coeffs(x);
    for (unsigned i = 0; i < s_; ++i) {
        if (i) out += ',';
        out += std::to_string(c[i]);
    }
    return out;
}

FieldElement Field::parse(const std::string& token) const {
    std::vector<std::uint32_t> c;
    std::stringstream ss(token);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
            throw CodeError("malformed field element '" + token + "'");
        }
        const auto v = std::stoull(part);
        if (v >= p_) throw CodeError("field coefficient out of range in '" + token + "'");
        c.push_back(static_cast<std::uint32_t>(v));
    }
    if (c.empty() || (s_ > 1 && c.size() != s_) || (s_ == 1 && c.size() != 1)) {
        throw CodeError("field element '" + token + "' has the wrong number of coefficients");
    }
    return from_coeffs(c);
}

FieldElement element_of_order(const Field& field, std::uint64_t n) {
    const std::uint64_t group = field.order() - 1;
    if (n == 0 || group % n != 0) throw CodeError("element_of_order: n does not divide p^s - 1");
    const FieldElement w = field.pow(field.generator(), group / n);
    if (field.element_order(w) != n) throw CodeError("element_of_order: order check failed");
    return w;
}

}  // namespace ecc
