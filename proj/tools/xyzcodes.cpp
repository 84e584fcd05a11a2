#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "xyz/code.hpp"
#include "xyz/css.hpp"
#include "xyz/cyclic.hpp"
#include "xyz/dimension.hpp"
#include "xyz/distance.hpp"
#include "xyz/errors.hpp"
#include "xyz/io.hpp"
#include "xyz/version.hpp"

using json = nlohmann::json;
using namespace xyz;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInternal = 4;

struct RunConfig {
    std::string h1, h2, h3, cyclic;
    std::vector<std::size_t> chamon, xyz3d;
    std::size_t cap = 4;
    std::uint64_t budget = 2'000'000'000ULL;
    std::string dstar;
    std::uint64_t seed = 0;
    std::string json_path;
    unsigned workers = 0;
    // barrier / fractal / css extras
    std::vector<std::size_t> sizes;
    std::size_t n3 = 3;
    std::string exponents = "0,1";
    unsigned p = 1;
    std::vector<int> axes{0, 1};
    std::string emit;
};

std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
    std::string out;
    char buf[3];
    for (unsigned i = 0; i < len; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", digest[i]);
        out += buf;
    }
    return out;
}

std::string fmt_double(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

struct Source {
    std::optional<XYZCode> code;
    std::optional<CyclicSpec> spec;
    std::array<BitMatrix, 3> h;
    json inputs = json::array();
    std::string label;
};

Source load_source(const RunConfig& cfg, bool need_code = true) {
    Source src;
    int given = (!cfg.h1.empty() || !cfg.h2.empty() || !cfg.h3.empty()) + !cfg.cyclic.empty() + !cfg.chamon.empty() +
                !cfg.xyz3d.empty();
    if (given != 1) throw InputError("give exactly one of --h1/--h2/--h3, --cyclic, --chamon, --3dxyz");
    if (!cfg.h1.empty() || !cfg.h2.empty() || !cfg.h3.empty()) {
        const std::string* paths[3] = {&cfg.h1, &cfg.h2, &cfg.h3};
        for (int l = 0; l < 3; ++l) {
            if (paths[l]->empty()) throw InputError("--h1, --h2 and --h3 must all be given");
            std::string text = read_text_file(*paths[l]);
            src.h[l] = parse_matrix(text, *paths[l]);
            src.inputs.push_back({{"path", *paths[l]}, {"sha256", sha256_hex(text)}});
        }
        src.label = "matrices";
    } else if (!cfg.cyclic.empty()) {
        std::string text = read_text_file(cfg.cyclic);
        src.spec = parse_cyclic(text, cfg.cyclic);
        src.inputs.push_back({{"path", cfg.cyclic}, {"sha256", sha256_hex(text)}});
        src.label = "cyclic";
    } else {
        const auto& n = cfg.chamon.empty() ? cfg.xyz3d : cfg.chamon;
        if (n.size() != 3 || n[0] == 0 || n[1] == 0 || n[2] == 0) throw InputError("expected three positive sizes");
        src.spec = cfg.chamon.empty() ? CyclicSpec::xyz3d(n[0], n[1], n[2]) : CyclicSpec::chamon(n[0], n[1], n[2]);
        src.label = cfg.chamon.empty() ? "3dxyz" : "chamon";
    }
    if (src.spec)
        for (int l = 0; l < 3; ++l) src.h[l] = src.spec->matrix(l);
    // Hash the matrices actually used, so generated families are identified too.
    json mats = json::array();
    for (int l = 0; l < 3; ++l) mats.push_back(sha256_hex(format_matrix(src.h[l])));
    src.inputs.push_back({{"matrices_sha256", mats}});
    if (need_code) src.code = build(src.h[0], src.h[1], src.h[2]);
    return src;
}

json base_report(const std::string& command, const RunConfig& cfg, const Source* src) {
    json r;
    r["tool"] = "xyzcodes";
    r["version"] = kVersion;
    r["command"] = command;
    r["seed"] = cfg.seed;
    r["cap"] = cfg.cap;
    r["budget"] = cfg.budget;
    if (src) {
        r["inputs"] = src->inputs;
        r["source"] = src->label;
        json shapes = json::array();
        for (int l = 0; l < 3; ++l) shapes.push_back({src->h[l].rows(), src->h[l].cols()});
        r["matrix_shapes"] = shapes;
    }
    return r;
}

void write_json(const RunConfig& cfg, const json& report) {
    if (cfg.json_path.empty()) return;
    std::string text = report.dump(2) + "\n";
    if (cfg.json_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.json_path, std::ios::binary);
    if (!out) throw InputError("cannot write " + cfg.json_path);
    out << text;
}

json operator_json(const XYZCode& code, const PauliOperator& op) {
    json sup = json::array();
    for (std::size_t q : op.support()) sup.push_back({{"qubit", code.describe_qubit(q)}, {"pauli", std::string(1, op.letter(q))}});
    return sup;
}

std::string operator_text(const XYZCode& code, const PauliOperator& op) {
    std::string out;
    for (std::size_t q : op.support()) {
        if (!out.empty()) out += ", ";
        out += std::string(1, op.letter(q)) + " on " + code.describe_qubit(q);
    }
    return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_validate(const RunConfig& cfg) {
    Source src = load_source(cfg);
    const XYZCode& code = *src.code;
    bool abelian = check_abelian(code);
    bool minus_one = minus_one_in_group(code.group(), cfg.seed);
    TMembership t = in_T(src.h[0], src.h[1], src.h[2]);
    std::cout << "N = " << code.num_qubits() << ", generators = " << code.num_generators() << "\n";
    std::cout << "abelian: " << yes_no(abelian) << ", minus_one: " << yes_no(minus_one)
              << ", in_T: " << (t.ok ? std::string("yes") : "no (" + t.diagnostic + ")") << "\n";
    json r = base_report("validate", cfg, &src);
    r["num_qubits"] = code.num_qubits();
    r["num_generators"] = code.num_generators();
    r["abelian"] = abelian;
    r["minus_one_in_group"] = minus_one;
    r["in_T"] = t.ok;
    r["in_T_diagnostic"] = t.diagnostic;
    write_json(cfg, r);
    return abelian ? kExitOk : kExitInternal;
}

int cmd_dim(const RunConfig& cfg) {
    Source src = load_source(cfg);
    DimensionReport d = dimension_formula(*src.code);
    std::cout << "N = " << src.code->num_qubits() << "\n";
    std::cout << "k = " << d.k_bruteforce << " (symplectic rank)\n";
    std::cout << "base (n1-m1)(n2-m2)(n3-m3) = " << d.base << "\n";
    if (d.r) std::cout << "relations r = " << *d.r << ", base + r = " << d.base + static_cast<long long>(*d.r) << "\n";
    if (d.formula_applicable)
        std::cout << "formula: s = " << *d.s << ", kernels = (" << *d.k1t << ", " << *d.k2 << ", " << *d.k3
                  << "), k = " << *d.k_formula << "\n";
    else
        std::cout << "formula: bounds only, k >= " << d.base << "\n";
    std::cout << "agreement: " << yes_no(d.agreement) << "\n";
    json r = base_report("dim", cfg, &src);
    r["k_bruteforce"] = d.k_bruteforce;
    r["base"] = d.base;
    r["r"] = d.r ? json(*d.r) : json(nullptr);
    r["s"] = d.s ? json(*d.s) : json(nullptr);
    r["k_formula"] = d.k_formula ? json(*d.k_formula) : json(nullptr);
    r["free_index"] = d.free_index ? json(*d.free_index) : json(nullptr);
    r["formula_applicable"] = d.formula_applicable;
    r["agreement"] = d.agreement;
    r["note"] = d.note;
    write_json(cfg, r);
    return d.agreement ? kExitOk : kExitInternal;
}

SearchConfig search_config(const RunConfig& cfg) {
    SearchConfig sc;
    sc.cap = cfg.cap;
    sc.budget = cfg.budget;
    sc.workers = cfg.workers;
    return sc;
}

int cmd_distance(const RunConfig& cfg) {
    Source src = load_source(cfg);
    const XYZCode& code = *src.code;
    DistanceReport d = distance_capped(code, search_config(cfg));
    json r = base_report("distance", cfg, &src);
    r["nodes"] = d.nodes;
    r["budget_exceeded"] = d.budget_exceeded;
    r["lower_bound"] = d.lower_bound;
    r["upper_bound"] = d.upper_bound;
    r["exact_d"] = d.exact_d ? json(*d.exact_d) : json(nullptr);
    if (d.exact_d) {
        std::cout << "d = " << *d.exact_d << ", witness: " << operator_text(code, *d.best_logical_found) << "\n";
        r["witness"] = operator_json(code, *d.best_logical_found);
    } else if (d.budget_exceeded) {
        std::cout << "budget exceeded after " << d.nodes << " nodes; d >= " << d.lower_bound << "\n";
    } else {
        std::cout << "d > " << cfg.cap << " (bounds: " << d.lower_bound << " <= d <= " << d.upper_bound << ")\n";
    }
    if (!cfg.dstar.empty()) {
        DStarStrategy strat = cfg.dstar == "exhaustive" ? DStarStrategy::exhaustive : DStarStrategy::greedy;
        DStarReport ds = dstar(src.h[0], src.h[1], src.h[2], strat, cfg.budget, cfg.seed);
        d.dstar = ds.value();
        json dj;
        dj["strategy"] = cfg.dstar;
        dj["exact"] = ds.exact;
        dj["doubled"] = ds.doubled;
        dj["value"] = ds.value();
        dj["w"] = ds.w;
        dj["best_perm"] = ds.perms[ds.best_perm];
        dj["witness_M"] = ds.witness.flatten().support();
        dj["witness_shape"] = ds.witness.shape();
        std::cout << "d* " << (ds.exact ? "= " : "<= ") << fmt_double(ds.value()) << " (w = " << ds.w << ")";
        if (d.exact_d && ds.exact) {
            d.sandwich_ok = sandwich_holds(*d.exact_d, ds.best_doubled, ds.w);
            std::cout << ", sandwich: " << fmt_double(ds.value() / ds.w) << " <= " << *d.exact_d
                      << " <= " << fmt_double(1.5 * ds.w * ds.value()) << " " << (*d.sandwich_ok ? "ok" : "FAILED");
            dj["sandwich_ok"] = *d.sandwich_ok;
        }
        std::cout << "\n";
        r["dstar"] = dj;
    }
    write_json(cfg, r);
    if (d.budget_exceeded) return kExitBudget;
    if (d.sandwich_ok && !*d.sandwich_ok) return kExitInternal;
    return kExitOk;
}

int cmd_css(const RunConfig& cfg) {
    Source src = load_source(cfg);
    const XYZCode& code = *src.code;
    CssCode c = css_convert(code);
    std::size_t k = css_dimension(c), k0 = dimension_bruteforce(code);
    json r = base_report("css", cfg, &src);
    r["n"] = c.n;
    r["k"] = k;
    r["original_k"] = k0;
    r["hx_rows"] = c.hx.rows();
    r["hz_rows"] = c.hz.rows();
    std::cout << "css: n = " << c.n << ", k = " << k << " (original k = " << k0 << ")\n";
    int rc = k == 2 * k0 ? kExitOk : kExitInternal;
    try {
        CssDistanceReport d = css_distance_capped(c, search_config(cfg));
        r["dx"] = d.dx ? json(*d.dx) : json(nullptr);
        r["dz"] = d.dz ? json(*d.dz) : json(nullptr);
        r["d"] = d.d ? json(*d.d) : json(nullptr);
        r["nodes"] = d.nodes;
        if (d.d) {
            std::cout << "d = " << *d.d << " (dx = " << (d.dx ? std::to_string(*d.dx) : "> cap")
                      << ", dz = " << (d.dz ? std::to_string(*d.dz) : "> cap") << ")\n";
            for (const auto* w : {&d.x_witness, &d.z_witness})
                if (*w && !even_on_groups(**w)) rc = kExitInternal;
        } else {
            std::cout << "d > " << cfg.cap << "\n";
        }
    } catch (const BudgetError& e) {
        std::cout << "budget exceeded: " << e.what() << "\n";
        r["budget_exceeded"] = true;
        rc = kExitBudget;
    }
    if (!cfg.emit.empty()) {
        std::ofstream(cfg.emit + ".hx") << format_matrix(c.hx);
        std::ofstream(cfg.emit + ".hz") << format_matrix(c.hz);
        std::ofstream(cfg.emit + ".alist") << "# hx\n" << to_alist(c.hx) << "# hz\n" << to_alist(c.hz);
        std::cout << "wrote " << cfg.emit << ".hx, .hz, .alist\n";
    }
    write_json(cfg, r);
    return rc;
}

std::vector<long> parse_exponent_list(const std::string& s) {
    std::vector<long> out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stol(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw ParseError("--exponents", 0, "bad exponent '" + tok + "'");
        }
    }
    return out;
}

int cmd_barrier(const RunConfig& cfg) {
    if (cfg.sizes.size() != 2) throw InputError("barrier needs two sizes n1 n2");
    auto exps = parse_exponent_list(cfg.exponents);
    BarrierPath path = energy_barrier_path(cfg.sizes[0], cfg.sizes[1], cfg.n3, exps);
    std::cout << "syndrome weights:";
    for (auto w : path.syndrome_weights) std::cout << ' ' << w;
    std::cout << "\n";
    const std::vector<std::pair<std::size_t, std::size_t>> reference = {{2, 3}, {3, 4}, {4, 5}, {5, 6}};
    json refs = json::array();
    bool constant = true;
    for (auto [a, b] : reference) {
        std::size_t m = energy_barrier_path(a, b, cfg.n3, exps).max_weight;
        refs.push_back({{"n1", a}, {"n2", b}, {"max", m}});
        constant = constant && m == path.max_weight;
    }
    std::cout << "max = " << path.max_weight << ", constant across sizes: " << yes_no(constant)
              << ", endpoint is the two-plane logical: " << yes_no(path.endpoint_is_plane && path.endpoint_logical)
              << "\n";
    json r = base_report("barrier", cfg, nullptr);
    r["n"] = {cfg.sizes[0], cfg.sizes[1], cfg.n3};
    r["exponents"] = exps;
    r["syndrome_weights"] = path.syndrome_weights;
    r["max"] = path.max_weight;
    r["reference"] = refs;
    r["constant_across_sizes"] = constant;
    r["endpoint_is_plane"] = path.endpoint_is_plane;
    r["endpoint_logical"] = path.endpoint_logical;
    write_json(cfg, r);
    return path.endpoint_is_plane && path.endpoint_zero_syndrome ? kExitOk : kExitInternal;
}

int cmd_fractal(const RunConfig& cfg) {
    Source src = load_source(cfg, false);
    if (!src.spec) throw InputError("fractal needs --cyclic, --chamon or --3dxyz");
    if (cfg.axes.size() != 2) throw InputError("--axes takes two axis indices");
    FractalResult f = fractal_operator(*src.spec, cfg.axes[0], cfg.axes[1], cfg.p);
    std::cout << "fractal operator p = " << cfg.p << ": weight " << f.op.weight() << ", image weight "
              << f.image_weight << " <= " << f.bound << " " << (f.image_weight <= f.bound ? "ok" : "FAILED")
              << ", frobenius identity: " << yes_no(f.frobenius_ok) << "\n";
    json r = base_report("fractal", cfg, &src);
    r["p"] = cfg.p;
    r["axes"] = cfg.axes;
    r["operator_weight"] = f.op.weight();
    r["image_weight"] = f.image_weight;
    r["bound"] = f.bound;
    r["frobenius_ok"] = f.frobenius_ok;
    r["image"] = f.image.to_string();
    const auto& n = src.spec->n;
    if (n[cfg.axes[0]] * n[cfg.axes[1]] <= 4096) {
        std::size_t kd = phi_kernel_dimension(*src.spec, cfg.axes[0], cfg.axes[1]);
        std::cout << "kernel dimension of multiplication by Q_i + Q_j: " << kd << "\n";
        r["kernel_dimension"] = kd;
    }
    write_json(cfg, r);
    return f.frobenius_ok && f.image_weight <= f.bound ? kExitOk : kExitInternal;
}

void add_source_options(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--h1", cfg.h1, "matrix file for H1");
    sub->add_option("--h2", cfg.h2, "matrix file for H2");
    sub->add_option("--h3", cfg.h3, "matrix file for H3");
    sub->add_option("--cyclic", cfg.cyclic, "cyclic spec file");
    sub->add_option("--chamon", cfg.chamon, "Chamon code sizes n1 n2 n3")->expected(3);
    sub->add_option("--3dxyz", cfg.xyz3d, "3D XYZ code sizes n1 n2 n3")->expected(3);
}

void add_common_options(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--cap", cfg.cap, "maximum weight for capped searches")->check(CLI::PositiveNumber);
    sub->add_option("--budget", cfg.budget, "operation budget for searches");
    sub->add_option("--seed", cfg.seed, "seed for all randomized steps");
    sub->add_option("--json", cfg.json_path, "write a JSON report to this path ('-' for stdout)");
    sub->add_option("--workers", cfg.workers, "worker threads (0 = all cores)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"XYZ product code analysis"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);
    RunConfig cfg;

    auto* validate = app.add_subcommand("validate", "commutation, -1 membership and T membership");
    auto* dim = app.add_subcommand("dim", "code dimension by every available route");
    auto* distance = app.add_subcommand("distance", "capped minimum-distance search and d*");
    auto* css = app.add_subcommand("css", "CSS conversion with dimension and capped distance");
    auto* barrier = app.add_subcommand("barrier", "energy-barrier flip path for identical circulants");
    auto* fractal = app.add_subcommand("fractal", "fractal operator and its image weight");
    for (auto* sub : {validate, dim, distance, css, fractal}) add_source_options(sub, cfg);
    for (auto* sub : {validate, dim, distance, css, barrier, fractal}) add_common_options(sub, cfg);
    distance->add_option("--dstar", cfg.dstar, "also compute d*")
        ->check(CLI::IsMember({"exhaustive", "greedy"}));
    css->add_option("--emit", cfg.emit, "write PREFIX.hx, PREFIX.hz and PREFIX.alist");
    barrier->add_option("sizes", cfg.sizes, "n1 n2")->expected(2)->required();
    barrier->add_option("--n3", cfg.n3, "third size");
    barrier->add_option("--exponents", cfg.exponents, "circulant exponents, e.g. 0,1");
    fractal->add_option("--p", cfg.p, "exponent p of (Q_i+Q_j)^(2^p-1)");
    fractal->add_option("--axes", cfg.axes, "two axes i j")->expected(2);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (*validate) return cmd_validate(cfg);
        if (*dim) return cmd_dim(cfg);
        if (*distance) return cmd_distance(cfg);
        if (*css) return cmd_css(cfg);
        if (*barrier) return cmd_barrier(cfg);
        if (*fractal) return cmd_fractal(cfg);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitParse;
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const InternalError& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitOk;
}
