#include "fusionring/cli.hpp"

#include "fusionring/check.hpp"
#include "fusionring/kernels.hpp"
#include "fusionring/serialize.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>

namespace fusionring::cli {

namespace {

struct Config {
    std::string command;
    std::string type;
    int level = 0;
    int genus = 0;
    std::string weights;
    std::string format = "json";
    double tol_int = Tolerances{}.integrality;
    bool exhaustive = false;
    int threads = 0;
    long long weyl_cap = kDefaultWeylCap;
    long long torus_cap = Limits{}.torus_cap;

    Limits limits() const { return {weyl_cap, torus_cap}; }
    Tolerances tolerances() const {
        Tolerances t;
        t.integrality = tol_int;
        return t;
    }
};

std::vector<Weight> parse_weight_list(const std::string& text, int rank) {
    std::vector<Weight> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ';'))
        if (item.find_first_not_of(" \t") != std::string::npos) out.push_back(parse_weight(item, rank));
    return out;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int cmd_weights(const Config& cfg, std::ostream& out) {
    const LevelData ld = LevelData::build(parse_affine_type(cfg.type), cfg.level, cfg.limits());
    const WeightSet w = weight_set(ld);
    if (cfg.format == "csv") out << to_csv(w);
    else emit(out, to_json(w));
    return kOk;
}

int cmd_fuse(const Config& cfg, std::ostream& out, std::ostream& err) {
    const FusionRing ring(LevelData::build(parse_affine_type(cfg.type), cfg.level, cfg.limits()), cfg.tolerances());
    const FusionTable table = fusion_table(ring);
    const std::size_t P = table.size();

    bool agree = true;
    std::size_t pairs = 0;
    for (std::size_t l = 0; l < P && agree; ++l)
        for (std::size_t m = l; m < P && agree; ++m) {
            if (!cfg.exhaustive && l > 2) break;
            const auto kw = kac_walton_product(ring, l, m);
            for (std::size_t n = 0; n < P; ++n)
                if (kw[n] != table(l, m, n)) {
                    err << "Kac-Walton disagrees at (" << table.weights[l] << " | " << table.weights[m] << " | "
                        << table.weights[n] << "): " << kw[n] << " vs " << table(l, m, n) << "\n";
                    agree = false;
                }
            ++pairs;
        }
    const double ortho = orthonormality_residual(ring);
    const bool ortho_ok = ortho < ring.tolerances().orthonormality;
    if (table.type.r > 1 && !negative_entries(table).empty())
        err << "warning: " << negative_entries(table).size() << " negative coefficients in " << table.type.str()
            << " at level " << table.level << "\n";

    if (cfg.format == "csv") {
        out << to_csv(table);
    } else {
        Json j = to_json(table);
        j["verification"] = {
            {"orthonormality_residual", ortho},
            {"orthonormality_ok", ortho_ok},
            {"kac_walton", {{"mode", cfg.exhaustive ? "exhaustive" : "sample"}, {"pairs", pairs}, {"agree", agree}}},
        };
        emit(out, j);
    }
    return agree && ortho_ok ? kOk : kSuiteFailure;
}

int cmd_verlinde(const Config& cfg, std::ostream& out, std::ostream& err) {
    const AffineType type = parse_affine_type(cfg.type);
    if (cfg.genus < 0) throw InvalidInput("genus must be non-negative");
    const FusionRing ring(LevelData::build(type, cfg.level, cfg.limits()), cfg.tolerances());
    const auto weights = parse_weight_list(cfg.weights, ring.level().roots().rank());
    const VerlindeResult v = verlinde_trace(ring, cfg.genus, weights);
    if (cfg.format == "csv") {
        out << "value_integer,raw_re,raw_im,residual\n"
            << v.value << ',' << v.raw.real() << ',' << v.raw.imag() << ',' << v.residual << "\n";
    } else {
        emit(out, {{"value_integer", v.value},
                   {"raw_complex", {v.raw.real(), v.raw.imag()}},
                   {"residual", v.residual},
                   {"integral", v.integral}});
    }
    if (v.integral) return kOk;
    if (type.r > 1 && cfg.genus >= 1) {
        err << "warning: non-integral Verlinde trace for a twisted type (residual " << v.residual << ")\n";
        return kOk;
    }
    err << "non-integral Verlinde trace (residual " << v.residual << ")\n";
    return kIntegrality;
}

int cmd_smatrix(const Config& cfg, std::ostream& out, std::ostream& err) {
    SMatrix s = s_matrix(parse_affine_type(cfg.type), cfg.level, cfg.limits());
    s.tolerance = Tolerances{}.unitarity;
    const double r = unitarity_residual(s);
    if (cfg.format == "csv") {
        out << to_csv(s);
    } else {
        Json j = to_json(s);
        j["unitarity_residual"] = r;
        emit(out, j);
    }
    if (r < s.tolerance) return kOk;
    err << "S-matrix unitarity residual " << r << " exceeds " << s.tolerance << "\n";
    return kSuiteFailure;
}

int cmd_check(const Config& cfg, std::ostream& out, std::ostream& err) {
    SuiteOptions opt;
    opt.tol = cfg.tolerances();
    opt.limits = cfg.limits();
    opt.exhaustive = true;
    const SuiteReport rep = run_invariant_suite(parse_affine_type(cfg.type), cfg.level, opt);
    if (cfg.format == "csv") {
        out << "name,passed,warning,detail\n";
        for (const auto& i : rep.items)
            out << i.name << ',' << (i.passed ? 1 : 0) << ',' << (i.warning ? 1 : 0) << ",\"" << i.detail << "\"\n";
    } else {
        emit(out, to_json(rep));
    }
    for (const auto& i : rep.items)
        if (!i.passed) err << (i.warning ? "warning: " : "FAILED: ") << i.name << ": " << i.detail << "\n";
    return rep.passed() ? kOk : kSuiteFailure;
}

int cmd_decompose(const Config& cfg, std::ostream& out) {
    const FusionRing ring(LevelData::build(parse_affine_type(cfg.type), cfg.level, cfg.limits()), cfg.tolerances());
    const auto& ld = ring.level();
    const auto w = parse_weight_list(cfg.weights, ld.roots().rank());
    if (w.size() != 2) throw InvalidInput("decompose needs exactly two weights, e.g. --weights \"1,0;0,1\"");
    const std::size_t l = ring.require_index(w[0]), m = ring.require_index(w[1]);
    const auto classical = tensor_decompose(ld.roots(), w[0], w[1]);
    const auto fused = kac_walton_product(ring, l, m);

    if (cfg.format == "csv") {
        out << "kind,weight,multiplicity\n";
        for (const auto& [xi, c] : classical) out << "classical,\"" << xi << "\"," << c << "\n";
        for (std::size_t n = 0; n < fused.size(); ++n)
            if (fused[n] != 0) out << "fusion,\"" << ld.weights()[n] << "\"," << fused[n] << "\n";
        return kOk;
    }
    Json cj = Json::array(), fj = Json::array();
    for (const auto& [xi, c] : classical) cj.push_back({xi.coords, c});
    for (std::size_t n = 0; n < fused.size(); ++n)
        if (fused[n] != 0) fj.push_back({ld.weights()[n].coords, fused[n]});
    emit(out, {{"type", ld.type().str()},
               {"level", ld.level()},
               {"lambda", w[0].coords},
               {"mu", w[1].coords},
               {"classical", cj},
               {"fusion", fj}});
    return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Fusion rings of affine Kac-Moody algebras", "fusionring"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("type", cfg.type, "affine type, e.g. A1~1, C2~1, A4~2")->required();
        sub->add_option("-k,--level", cfg.level, "level k >= 0")->required();
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--tol-int", cfg.tol_int, "integrality rounding tolerance");
        sub->add_option("--threads", cfg.threads, "OpenMP threads (0 = runtime default)");
        sub->add_option("--weyl-cap", cfg.weyl_cap, "largest Weyl group enumerated directly");
        sub->add_option("--torus-cap", cfg.torus_cap, "largest |T_k| enumerated");
        sub->callback([&cfg, sub] { cfg.command = sub->get_name(); });
        return sub;
    };
    add_common(app.add_subcommand("weights", "P_k, dual coweights and Sigma_k phases"));
    auto* fuse = add_common(app.add_subcommand("fuse", "fusion table"));
    fuse->add_flag("--exhaustive", cfg.exhaustive, "Kac-Walton cross-check on every pair");
    auto* verlinde = add_common(app.add_subcommand("verlinde", "Verlinde trace at genus g"));
    verlinde->add_option("--genus", cfg.genus, "genus g >= 0");
    verlinde->add_option("--weights", cfg.weights, "marked weights, e.g. \"1,0;0,1\"");
    add_common(app.add_subcommand("smatrix", "modular S-matrix"));
    auto* check = add_common(app.add_subcommand("check", "full invariant suite"));
    check->add_flag("--exhaustive", cfg.exhaustive, "accepted for symmetry; the suite is always exhaustive");
    auto* decompose = add_common(app.add_subcommand("decompose", "classical and fused product of two weights"));
    decompose->add_option("--weights", cfg.weights, "two weights, e.g. \"1,0;0,1\"")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kInvalidInput;
    }

    kernels::set_threads(cfg.threads);
    try {
        if (cfg.level < 0) throw InvalidInput("level must be non-negative");
        if (cfg.command == "weights") return cmd_weights(cfg, out);
        if (cfg.command == "fuse") return cmd_fuse(cfg, out, err);
        if (cfg.command == "verlinde") return cmd_verlinde(cfg, out, err);
        if (cfg.command == "smatrix") return cmd_smatrix(cfg, out, err);
        if (cfg.command == "check") return cmd_check(cfg, out, err);
        if (cfg.command == "decompose") return cmd_decompose(cfg, out);
        err << "unknown command\n";
        return kInvalidInput;
    } catch (const InvalidInput& e) {
        err << "invalid input: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << "\n";
        return kCapExceeded;
    } catch (const IntegralityViolation& e) {
        err << "integrality violation: " << e.what() << "\n";
        return kIntegrality;
    } catch (const NumericalFailure& e) {
        err << "numerical failure: " << e.what() << "\n";
        return kSuiteFailure;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}

}  // namespace fusionring::cli
