// Command-line front end: field-info, design, verify, encode, decode, series.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "ecc/codec.hpp"
#include "ecc/codefile.hpp"
#include "ecc/series.hpp"
#include "ecc/verifier.hpp"

using namespace ecc;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot write " + out_path);
    out << text;
}

std::vector<Vector> read_vectors(const Field& f, const std::string& path, std::size_t len) {
    std::vector<Vector> out;
    std::istringstream is(read_file(path));
    std::string line;
    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        Vector v = parse_vector(f, line);
        if (v.size() != len) throw UsageError("vector of length " + std::to_string(v.size()) + ", expected " + std::to_string(len));
        out.push_back(std::move(v));
    }
    return out;
}

std::string qecc_line(const QeccParams& q) {
    return "QECC " + std::to_string(q.n) + " " + std::to_string(q.k) + " " + std::to_string(q.d);
}

std::string flags_line(const BlockFlags& f) {
    return "FLAGS mds=" + to_string(f.mds) + " dc_euclidean=" + to_string(f.dc_euclidean) +
           " dc_hermitian=" + to_string(f.dc_hermitian) + " lcd=" + to_string(f.lcd);
}

std::string flags_line(const ConvFlags& f) {
    return "FLAGS mds_conv=" + to_string(f.mds_conv) + " dc=" + to_string(f.dc) + " lcd=" + to_string(f.lcd);
}

const char* boolstr(bool b) { return b ? "true" : "false"; }

bool downgraded(FlagState before, FlagState after) { return before != FlagState::False && after == FlagState::False; }

struct FieldInfoOpts {
    std::uint64_t p = 0;
    std::uint64_t n = 0;
    unsigned s = 0;
};

int run_field_info(const FieldInfoOpts& o) {
    unsigned s = o.s;
    if (o.n > 0) {
        const unsigned ord = order_mod(o.p, o.n);
        std::cout << "ORDERMOD " << ord << "\n";
        if (s == 0) s = ord;
    }
    if (s == 0) s = 1;
    FieldPtr f = build_field(o.p, s);
    std::cout << f->header() << "\n";
    std::cout << "ORDER " << f->order() << "\n";
    std::cout << "GENERATOR " << f->format(f->generator()) << "\n";
    if (o.n > 0) {
        if ((f->order() - 1) % o.n == 0) {
            std::cout << "OMEGA " << f->format(element_of_order(*f, o.n)) << "\n";
        } else {
            std::cout << "OMEGA none\n";
        }
    }
    return 0;
}

struct DesignBlockOpts {
    std::string rate, type = "dc", out;
    std::uint64_t errors = 0, characteristic = 0, p = 0, n = 0, r = 0;
    unsigned s = 0;
    std::int64_t start = 0, step = 1;
    bool prime_field = false, hermitian = false, no_mersenne = false;
};

int run_design_block(const DesignBlockOpts& o) {
    CodeType type = parse_code_type(o.type);
    if (o.hermitian) {
        if (type != CodeType::DC && type != CodeType::HermitianDC) throw UsageError("--hermitian applies to dc designs");
        type = CodeType::HermitianDC;
    }
    BlockCode code;
    if (!o.rate.empty()) {
        DesignRequest req;
        req.rate = Rational::parse(o.rate);
        req.errors = o.errors;
        req.type = type;
        if (o.characteristic != 0 && o.prime_field) throw UsageError("--char and --prime-field are exclusive");
        if (o.characteristic != 0) {
            req.constraint = CharConstraint::Characteristic;
            req.characteristic = o.characteristic;
        } else if (o.prime_field) {
            req.constraint = CharConstraint::PrimeField;
        }
        req.prefer_mersenne = !o.no_mersenne;
        code = design_to_spec(req).code;
    } else {
        if (o.n == 0 || o.r == 0) throw UsageError("design block needs --rate or both --n and --r");
        std::optional<FieldParams> fp;
        if (o.p != 0) {
            fp = FieldParams{o.p, o.s != 0 ? o.s : 0};
            if (fp->s == 0) fp->s = order_mod(o.p, o.n) * (type == CodeType::HermitianDC ? 2 : 1);
        } else {
            fp = smallest_field(o.n, CharConstraint::None, 0, type == CodeType::HermitianDC);
            if (!fp) throw UsageError("no admissible field for this length");
        }
        FieldPtr field = build_field(fp->p, fp->s);
        switch (type) {
            case CodeType::Plain: code = design_mds(build_fourier(field, o.n), o.start, o.step, o.r); break;
            case CodeType::DC: code = design_dc(build_fourier(field, o.n), o.r); break;
            case CodeType::HermitianDC: code = design_dc_hermitian(field, o.n, o.r); break;
            case CodeType::LCD:
                if (o.r % 2 == 0) throw UsageError("LCD dimension must be odd");
                code = design_lcd(build_fourier(field, o.n), (o.r - 1) / 2);
                break;
        }
    }
    // Rank-based checks are cheap at every size; distance certification is left to verify.
    code.flags.dc_euclidean = code.flags.dc_euclidean == FlagState::False ? FlagState::False
                              : certify_dc(code, InnerProduct::Euclidean) ? FlagState::Certified
                                                                           : FlagState::False;
    code.flags.dc_hermitian = code.flags.dc_hermitian == FlagState::False ? FlagState::False
                              : certify_dc(code, InnerProduct::Hermitian) ? FlagState::Certified
                                                                           : FlagState::False;
    code.flags.lcd = code.flags.lcd == FlagState::False ? FlagState::False
                     : certify_lcd(code)                ? FlagState::Certified
                                                        : FlagState::False;
    std::string tail;
    if (code.flags.dc_euclidean == FlagState::Certified || code.flags.dc_hermitian == FlagState::Certified) {
        tail = qecc_line(css_from_dc(code)) + "\n";
    }
    if (o.out.empty()) {
        std::cout << serialize(code) << tail;
    } else {
        emit(serialize(code), o.out);
        std::cout << summary_line(code) << "\n" << flags_line(code.flags) << "\n" << tail;
    }
    return 0;
}

struct DesignConvOpts {
    std::string type = "mds", preset, rate, out;
    std::uint64_t n = 0, r = 0, p = 0, dfree = 0;
    unsigned s = 0;
};

int run_design_conv(const DesignConvOpts& o) {
    if (!o.rate.empty()) {
        const ConvSizing sz = conv_design_to_spec(Rational::parse(o.rate), o.dfree);
        std::cout << "CONVSPEC " << sz.n << " " << sz.r << " " << sz.delta << " 1 " << sz.free_distance << "\n";
        std::cout << "FIELDS";
        for (const auto& f : sz.fields) std::cout << " " << f.p << "^" << f.s;
        std::cout << "\n";
        return 0;
    }
    if (o.n == 0) throw UsageError("design conv needs --n (and --r) or --rate with --dfree");
    FieldParams fp;
    if (o.p != 0) {
        fp = {o.p, o.s != 0 ? o.s : order_mod(o.p, o.n)};
    } else if (o.type == "dc") {
        const auto f = smallest_field(o.n, CharConstraint::Characteristic, 2, false);
        if (!f) throw UsageError("no characteristic-2 field for this length");
        fp = *f;
    } else {
        const auto f = smallest_field(o.n, CharConstraint::None, 0, false);
        if (!f) throw UsageError("no admissible field for this length");
        fp = *f;
    }
    FourierPtr ctx = build_fourier(build_field(fp.p, fp.s), o.n);
    ConvCode code;
    if (!o.preset.empty()) {
        Plan plan = preset_plan(o.preset);
        if (plan.rows[0].size() != o.r && o.r != 0) throw UsageError("--r disagrees with the preset");
        code = lift_higher_memory(ctx, plan.rows[0].size(), plan);
    } else if (o.type == "mds") {
        code = lift_memory1(ctx, o.r);
    } else if (o.type == "lcd") {
        code = lift_conv_lcd(ctx, o.r);
    } else if (o.type == "dc") {
        if (o.r % 2 == 0) throw UsageError("characteristic-2 DC lifts need odd r");
        code = lift_dc_char2(ctx, (o.r - 1) / 2);
    } else {
        throw UsageError("unknown conv type '" + o.type + "'");
    }
    if (o.out.empty()) {
        std::cout << serialize(code);
    } else {
        emit(serialize(code), o.out);
        std::cout << summary_line(code) << "\n";
    }
    return 0;
}

struct VerifyOpts {
    std::string file, ip;
    std::size_t free_deg = 0;
    std::uint64_t budget = kDefaultBudget;
};

int run_verify(const VerifyOpts& o) {
    const std::string text = read_file(o.file);
    if (detect_kind(text) == FileKind::Block) {
        BlockCode code = parse_block(text);
        const BlockFlags before = code.flags;
        const bool annihilated = annihilates(code);
        try {
            const auto rep = min_distance(code, o.budget);
            std::cout << "DIST " << rep.value << " exact\n";
        } catch (const CodeError&) {
            std::cout << "DIST " << code.design_distance << " claimed\n";
        }
        InnerProduct ip = code.type == CodeType::HermitianDC ? InnerProduct::Hermitian : InnerProduct::Euclidean;
        if (o.ip == "euclidean") ip = InnerProduct::Euclidean;
        if (o.ip == "hermitian") ip = InnerProduct::Hermitian;
        std::cout << "DC " << boolstr(certify_dc(code, ip)) << "\n";
        std::cout << "LCD " << boolstr(certify_lcd(code)) << "\n";
        certify(code, o.budget);
        std::cout << flags_line(code.flags) << "\n";
        const bool failed = !annihilated || downgraded(before.mds, code.flags.mds) ||
                            downgraded(before.dc_euclidean, code.flags.dc_euclidean) ||
                            downgraded(before.dc_hermitian, code.flags.dc_hermitian) ||
                            downgraded(before.lcd, code.flags.lcd);
        return failed ? 1 : 0;
    }
    ConvCode code = parse_conv(text);
    const ConvFlags before = code.flags;
    const bool sound = check_conv_structure(code);
    try {
        const auto rep = free_distance(code, o.free_deg, FreeMethod::Auto, o.budget);
        std::cout << "DIST " << rep.value << " " << rep.status() << "\n";
    } catch (const CodeError&) {
        std::cout << "DIST " << (code.design_free_distance ? std::to_string(*code.design_free_distance) : "-")
                  << " claimed\n";
    }
    std::cout << "DC " << boolstr(certify_conv_type(code, ConvType::DC)) << "\n";
    std::cout << "LCD " << boolstr(certify_conv_type(code, ConvType::LCD)) << "\n";
    certify(code, o.free_deg, o.budget);
    std::cout << flags_line(code.flags) << "\n";
    const bool failed = !sound || downgraded(before.mds_conv, code.flags.mds_conv) ||
                        downgraded(before.dc, code.flags.dc) || downgraded(before.lcd, code.flags.lcd);
    return failed ? 1 : 0;
}

int run_encode(const std::string& code_file, const std::string& msg_file) {
    const BlockCode code = parse_block(read_file(code_file));
    for (const auto& m : read_vectors(code.field(), msg_file, code.r)) {
        std::cout << format_vector(code.field(), encode(code, m)) << "\n";
    }
    return 0;
}

int run_decode(const std::string& code_file, const std::string& recv_file, std::size_t inject, std::uint64_t seed) {
    const BlockCode code = parse_block(read_file(code_file));
    const Field& f = code.field();
    std::mt19937_64 rng(seed);
    bool all_ok = true;
    for (auto y : read_vectors(f, recv_file, code.n)) {
        if (inject > 0) {
            std::vector<std::size_t> pos(code.n);
            std::iota(pos.begin(), pos.end(), 0);
            std::shuffle(pos.begin(), pos.end(), rng);
            std::uniform_int_distribution<std::uint64_t> nz(1, f.order() - 1);
            for (std::size_t i = 0; i < std::min(inject, code.n); ++i) {
                y[pos[i]] = f.add(y[pos[i]], FieldElement{static_cast<std::uint32_t>(nz(rng))});
            }
        }
        const auto res = decode(code, y);
        if (res.ok) {
            std::cout << format_vector(f, res.message) << "\n";
        } else {
            all_ok = false;
            std::cout << "FAIL " << res.reason << "\n";
        }
    }
    return all_ok ? 0 : 1;
}

struct SeriesOpts {
    std::string family, rate, type = "dc";
    std::size_t count = 5;
    std::uint64_t p = 2, start = 0;
    bool report = false;
};

int run_series(const SeriesOpts& o) {
    SeriesSpec spec;
    spec.family = parse_family(o.family);
    spec.rate = Rational::parse(o.rate);
    spec.type = parse_series_type(o.type);
    spec.characteristic = o.p;
    spec.start = o.start;
    const auto list = enumerate(spec, o.count);
    for (const auto& e : list) {
        std::cout << e.n << " " << e.r << " " << e.d << " FIELD " << e.field.p << " " << e.field.s;
        if (e.qecc) std::cout << " " << qecc_line(*e.qecc);
        std::cout << "\n";
    }
    if (o.report) {
        for (const auto& row : limit_report(list, spec.rate)) {
            std::cout << "LIMIT " << row.n << " " << row.rate_gap << " " << row.rdist_gap << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fourier-matrix code design toolkit"};
    app.require_subcommand(1);

    FieldInfoOpts fi;
    auto* field_info = app.add_subcommand("field-info", "OrderMod and field details");
    field_info->add_option("--p", fi.p, "characteristic")->required();
    field_info->add_option("--n", fi.n, "length; prints OrderMod(p, n)");
    field_info->add_option("--s", fi.s, "extension degree");

    auto* design = app.add_subcommand("design", "build a code");
    design->require_subcommand(1);
    DesignBlockOpts db;
    auto* dblock = design->add_subcommand("block", "block code");
    dblock->add_option("--rate", db.rate, "rate bound p/q");
    dblock->add_option("--errors", db.errors, "errors to correct");
    dblock->add_option("--type", db.type, "mds|dc|lcd|hermitian-dc");
    dblock->add_option("--char", db.characteristic, "fixed characteristic");
    dblock->add_flag("--prime-field", db.prime_field, "prime fields only");
    dblock->add_flag("--hermitian", db.hermitian, "Hermitian DC over GF(l^2)");
    dblock->add_flag("--no-mersenne", db.no_mersenne, "characteristic 2: any odd length");
    dblock->add_option("--n", db.n, "length");
    dblock->add_option("--r", db.r, "dimension");
    dblock->add_option("--p", db.p, "field characteristic");
    dblock->add_option("--s", db.s, "field degree");
    dblock->add_option("--start", db.start, "first row (mds)");
    dblock->add_option("--step", db.step, "row step (mds)");
    dblock->add_option("--out", db.out, "write the code file here");

    DesignConvOpts dc;
    auto* dconv = design->add_subcommand("conv", "convolutional code");
    dconv->add_option("--n", dc.n, "length");
    dconv->add_option("--r", dc.r, "rank");
    dconv->add_option("--type", dc.type, "mds|lcd|dc");
    dconv->add_option("--preset", dc.preset, "higher-memory plan");
    dconv->add_option("--s", dc.s, "field degree");
    dconv->add_option("--p", dc.p, "field characteristic");
    dconv->add_option("--rate", dc.rate, "rate bound p/q for sizing");
    dconv->add_option("--dfree", dc.dfree, "free distance bound for sizing");
    dconv->add_option("--out", dc.out, "write the code file here");

    VerifyOpts vo;
    auto* verify = app.add_subcommand("verify", "certify a code file");
    verify->add_option("file", vo.file)->required();
    verify->add_option("--free-deg", vo.free_deg, "message degree bound");
    verify->add_option("--ip", vo.ip, "euclidean|hermitian")->check(CLI::IsMember({"euclidean", "hermitian"}));
    verify->add_option("--budget", vo.budget, "enumeration budget");

    std::string enc_code, enc_msg;
    auto* enc = app.add_subcommand("encode", "encode messages");
    enc->add_option("code", enc_code)->required();
    enc->add_option("messages", enc_msg)->required();

    std::string dec_code, dec_recv;
    std::size_t inject = 0;
    std::uint64_t seed = 1;
    auto* dec = app.add_subcommand("decode", "decode received words");
    dec->add_option("code", dec_code)->required();
    dec->add_option("received", dec_recv)->required();
    dec->add_option("--inject", inject, "random symbol errors added per word");
    dec->add_option("--seed", seed, "error injection seed");

    SeriesOpts so;
    auto* series = app.add_subcommand("series", "infinite code families");
    series->add_option("--family", so.family)->required();
    series->add_option("--rate", so.rate)->required();
    series->add_option("--type", so.type, "dc|lcd|qecc");
    series->add_option("--count", so.count);
    series->add_option("--p", so.p, "characteristic for char-p");
    series->add_option("--start", so.start, "first index");
    series->add_flag("--report", so.report, "print convergence rows");

    if (argc <= 1) {
        std::cerr << app.help();
        return 2;
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*field_info) return run_field_info(fi);
        if (*dblock) return run_design_block(db);
        if (*dconv) return run_design_conv(dc);
        if (*verify) return run_verify(vo);
        if (*enc) return run_encode(enc_code, enc_msg);
        if (*dec) return run_decode(dec_code, dec_recv, inject, seed);
        if (*series) return run_series(so);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CodeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
