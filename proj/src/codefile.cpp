#include "ecc/codefile.hpp"

#include <sstream>

namespace ecc {

std::string format_vector(const Field& f, std::span<const FieldElement> v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += f.format(v[i]);
    }
    return out;
}

Vector parse_vector(const Field& f, const std::string& line) {
    std::istringstream is(line);
    Vector v;
    std::string tok;
    while (is >> tok) v.push_back(f.parse(tok));
    return v;
}

std::string format_matrix(const Field& f, const Matrix& m) {
    std::string out = "MATRIX " + std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    if (m.cols() == 0) return out;  // blank rows would be indistinguishable from padding
    for (std::size_t i = 0; i < m.rows(); ++i) out += format_vector(f, m.row(i)) + "\n";
    return out;
}

namespace {

std::string join(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(v[i]);
    }
    return out;
}

std::string field_tag(const Field& f) { return "FIELD " + std::to_string(f.p()) + " " + std::to_string(f.s()); }

std::string preamble(const FourierContext& ctx) {
    return ctx.field().header() + "\nOMEGA " + ctx.field().format(ctx.omega()) + "\n";
}

std::string block(const Field& f, const std::string& label, const Matrix& m) {
    return "BLOCK " + label + "\n" + format_matrix(f, m);
}

class Reader {
public:
    explicit Reader(const std::string& text) {
        std::istringstream is(text);
        std::string line;
        while (std::getline(is, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.find_first_not_of(" \t") == std::string::npos) continue;
            lines_.push_back(line);
        }
    }

    bool done() const { return pos_ >= lines_.size(); }
    const std::string& peek() const {
        if (done()) throw CodeError("code file: unexpected end of input");
        return lines_[pos_];
    }
    const std::string& next() {
        const std::string& l = peek();
        ++pos_;
        return l;
    }
    /// Tokens of the next line, which must start with `key`.
    std::vector<std::string> expect(const std::string& key) {
        std::istringstream is(next());
        std::vector<std::string> toks;
        std::string t;
        while (is >> t) toks.push_back(t);
        if (toks.empty() || toks[0] != key) throw CodeError("code file: expected " + key + " line");
        toks.erase(toks.begin());
        return toks;
    }

    Matrix matrix(const Field& f, const std::string& label) {
        const auto b = expect("BLOCK");
        if (b.size() != 1 || b[0] != label) throw CodeError("code file: expected block " + label);
        const auto dims = expect("MATRIX");
        if (dims.size() != 2) throw CodeError("code file: malformed MATRIX line");
        const std::size_t rows = number(dims[0]), cols = number(dims[1]);
        Matrix m(rows, cols);
        for (std::size_t i = 0; cols > 0 && i < rows; ++i) {
            const Vector v = parse_vector(f, next());
            if (v.size() != cols) throw CodeError("code file: row length mismatch in " + label);
            std::copy(v.begin(), v.end(), m.row(i).begin());
        }
        return m;
    }

    static std::size_t number(const std::string& s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
            throw CodeError("code file: expected a number, got '" + s + "'");
        }
        return static_cast<std::size_t>(std::stoull(s));
    }
    static int index(const std::string& s) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(s, &used);
            if (used != s.size()) throw CodeError("");
            return v;
        } catch (const std::exception&) {
            throw CodeError("code file: bad index '" + s + "'");
        }
    }

private:
    std::vector<std::string> lines_;
    std::size_t pos_ = 0;
};

FourierPtr read_context(Reader& rd, std::size_t& n_out, std::vector<std::string>& params, const std::string& key) {
    const auto gf = rd.expect("GF");
    if (gf.size() < 2) throw CodeError("code file: malformed GF line");
    const std::uint64_t p = Reader::number(gf[0]);
    const auto s = static_cast<unsigned>(Reader::number(gf[1]));
    std::vector<std::uint32_t> modulus;
    for (std::size_t i = 2; i < gf.size(); ++i) modulus.push_back(static_cast<std::uint32_t>(Reader::number(gf[i])));
    if (s == 1 ? !modulus.empty() : modulus.size() != s + 1) throw CodeError("code file: modulus length mismatch");
    FieldPtr field = build_field_with_modulus(p, modulus);
    const auto om = rd.expect("OMEGA");
    if (om.size() != 1) throw CodeError("code file: malformed OMEGA line");
    const FieldElement omega = field->parse(om[0]);
    params = rd.expect(key);
    if (params.empty()) throw CodeError("code file: malformed " + key + " line");
    n_out = Reader::number(params[0]);
    return std::make_shared<const FourierContext>(field, n_out, omega);
}

std::string kv(const std::string& v, const std::string& key) {
    if (v.rfind(key + "=", 0) != 0) throw CodeError("code file: expected flag " + key);
    return v.substr(key.size() + 1);
}

}  // namespace

std::string summary_line(const BlockCode& code) {
    return "CODE " + std::to_string(code.n) + " " + std::to_string(code.r) + " " +
           std::to_string(code.design_distance) + " " + to_string(code.type) + " " + field_tag(code.field());
}

std::string summary_line(const ConvCode& code) {
    const std::string df = code.design_free_distance ? std::to_string(*code.design_free_distance) : "-";
    return "CONV " + std::to_string(code.n) + " " + std::to_string(code.r) + " " + std::to_string(code.degree) + " " +
           std::to_string(code.memory) + " " + df + " " + field_tag(code.field());
}

std::string serialize(const BlockCode& code) {
    const Field& f = code.field();
    std::string out = preamble(*code.ctx);
    out += summary_line(code) + "\n";
    out += "SELECTION " + join(code.selection) + "\n";
    out += "CHECK " + join(code.check_indices) + "\n";
    out += "FLAGS mds=" + to_string(code.flags.mds) + " dc_euclidean=" + to_string(code.flags.dc_euclidean) +
           " dc_hermitian=" + to_string(code.flags.dc_hermitian) + " lcd=" + to_string(code.flags.lcd) + "\n";
    out += block(f, "generator", code.generator);
    out += block(f, "check", code.check);
    return out;
}

std::string serialize(const ConvCode& code) {
    const Field& f = code.field();
    std::string out = preamble(*code.ctx);
    out += summary_line(code) + "\n";
    out += "LAYOUT " + to_string(code.layout) + "\n";
    out += "PLAN " + std::to_string(code.plan.rows.size()) + " " + std::to_string(code.r) + "\n";
    for (const auto& k : code.plan.rows) out += join(k) + "\n";
    out += "FLAGS mds_conv=" + to_string(code.flags.mds_conv) + " dc=" + to_string(code.flags.dc) +
           " lcd=" + to_string(code.flags.lcd) + "\n";
    for (std::size_t k = 0; k < code.coeffs.size(); ++k) out += block(f, "Gz^" + std::to_string(k), code.coeffs[k]);
    for (std::size_t k = 0; k < code.control.size(); ++k) {
        out += block(f, "control^" + std::to_string(k), code.control[k]);
    }
    out += block(f, "right_inverse", code.right_inverse);
    return out;
}

FileKind detect_kind(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.rfind("CODE ", 0) == 0) return FileKind::Block;
        if (line.rfind("CONV ", 0) == 0) return FileKind::Conv;
    }
    throw CodeError("code file: neither CODE nor CONV line found");
}

BlockCode parse_block(const std::string& text) {
    Reader rd(text);
    BlockCode code;
    std::vector<std::string> params;
    code.ctx = read_context(rd, code.n, params, "CODE");
    if (params.size() != 7 || params[4] != "FIELD") throw CodeError("code file: malformed CODE line");
    code.r = Reader::number(params[1]);
    code.design_distance = Reader::number(params[2]);
    code.type = parse_code_type(params[3]);
    if (Reader::number(params[5]) != code.field().p() || Reader::number(params[6]) != code.field().s()) {
        throw CodeError("code file: FIELD disagrees with GF header");
    }
    for (const auto& t : rd.expect("SELECTION")) code.selection.push_back(Reader::index(t));
    const auto chk = rd.expect("CHECK");
    for (const auto& t : chk) code.check_indices.push_back(Reader::index(t));
    const auto fl = rd.expect("FLAGS");
    if (fl.size() != 4) throw CodeError("code file: malformed FLAGS line");
    code.flags.mds = parse_flag_state(kv(fl[0], "mds"));
    code.flags.dc_euclidean = parse_flag_state(kv(fl[1], "dc_euclidean"));
    code.flags.dc_hermitian = parse_flag_state(kv(fl[2], "dc_hermitian"));
    code.flags.lcd = parse_flag_state(kv(fl[3], "lcd"));
    if (code.selection.size() != code.r || code.selection.size() + code.check_indices.size() != code.n) {
        throw CodeError("code file: index lists disagree with n and r");
    }
    for (int i : code.selection)
        if (i < 0 || static_cast<std::size_t>(i) >= code.n) throw CodeError("code file: selection index out of range");
    for (int i : code.check_indices)
        if (i < 0 || static_cast<std::size_t>(i) >= code.n) throw CodeError("code file: check index out of range");
    const Field& f = code.field();
    code.generator = rd.matrix(f, "generator");
    code.check = rd.matrix(f, "check");
    if (code.generator != code.ctx->rows_matrix(code.selection) ||
        code.check != code.ctx->inv_cols_matrix(code.check_indices)) {
        throw CodeError("code file: matrices disagree with the Fourier indices");
    }
    return code;
}

ConvCode parse_conv(const std::string& text) {
    Reader rd(text);
    std::size_t n = 0;
    std::vector<std::string> params;
    FourierPtr ctx = read_context(rd, n, params, "CONV");
    if (params.size() != 8 || params[5] != "FIELD") throw CodeError("code file: malformed CONV line");
    const std::size_t r = Reader::number(params[1]);
    const ConvLayout layout = parse_conv_layout(rd.expect("LAYOUT").at(0));
    const auto pl = rd.expect("PLAN");
    if (pl.size() != 2 || Reader::number(pl[1]) != r) throw CodeError("code file: malformed PLAN line");
    Plan plan;
    for (std::size_t k = 0, rows = Reader::number(pl[0]); k < rows; ++k) {
        std::istringstream is(rd.next());
        std::vector<int> row;
        std::string t;
        while (is >> t) row.push_back(Reader::index(t));
        plan.rows.push_back(std::move(row));
    }
    ConvCode code = make_conv(ctx, std::move(plan));
    code.layout = layout;
    if (params[4] != "-") code.design_free_distance = Reader::number(params[4]);
    if (code.r != r || code.degree != Reader::number(params[2]) || code.memory != Reader::number(params[3])) {
        throw CodeError("code file: CONV parameters disagree with the plan");
    }
    const auto fl = rd.expect("FLAGS");
    if (fl.size() != 3) throw CodeError("code file: malformed FLAGS line");
    code.flags.mds_conv = parse_flag_state(kv(fl[0], "mds_conv"));
    code.flags.dc = parse_flag_state(kv(fl[1], "dc"));
    code.flags.lcd = parse_flag_state(kv(fl[2], "lcd"));
    const Field& f = code.field();
    for (std::size_t k = 0; k < code.coeffs.size(); ++k) {
        if (rd.matrix(f, "Gz^" + std::to_string(k)) != code.coeffs[k]) throw CodeError("code file: Gz block mismatch");
    }
    for (std::size_t k = 0; k < code.control.size(); ++k) {
        if (rd.matrix(f, "control^" + std::to_string(k)) != code.control[k]) {
            throw CodeError("code file: control block mismatch");
        }
    }
    if (rd.matrix(f, "right_inverse") != code.right_inverse) throw CodeError("code file: right inverse mismatch");
    return code;
}

bool same_code(const BlockCode& a, const BlockCode& b) {
    return a.field().header() == b.field().header() && a.ctx->omega() == b.ctx->omega() && a.n == b.n && a.r == b.r &&
           a.selection == b.selection && a.check_indices == b.check_indices && a.generator == b.generator &&
           a.check == b.check && a.design_distance == b.design_distance && a.type == b.type && a.flags == b.flags;
}

bool same_code(const ConvCode& a, const ConvCode& b) {
    return a.field().header() == b.field().header() && a.ctx->omega() == b.ctx->omega() && a.n == b.n && a.r == b.r &&
           a.plan == b.plan && a.coeffs == b.coeffs && a.row_degrees == b.row_degrees && a.degree == b.degree &&
           a.memory == b.memory && a.design_free_distance == b.design_free_distance && a.control == b.control &&
           a.right_inverse == b.right_inverse && a.layout == b.layout && a.flags == b.flags;
}

}  // namespace ecc
