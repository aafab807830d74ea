#include "cyclic_spectra/cli.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "cyclic_spectra/cumulants.hpp"
#include "cyclic_spectra/limits_id.hpp"
#include "cyclic_spectra/verify.hpp"
#include "json.hpp"

namespace cyclic_spectra {

namespace {

using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitMismatch = 3;
constexpr const char* kSchema = "cyclic-spectra/1";

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Output {
    std::string path;
    std::string format = "json";
};

void emit(std::ostream& out, const Output& o, const std::string& text) {
    if (o.path.empty()) {
        out << text;
        if (!text.empty() && text.back() != '\n') out << '\n';
        return;
    }
    std::ofstream f(o.path);
    if (!f) throw InputError("cannot write " + o.path);
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
}

std::string csv_cell(const json& v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

void flatten(const json& j, const std::string& prefix, std::ostream& os) {
    for (const auto& [k, v] : j.items()) {
        const std::string key = prefix.empty() ? k : prefix + "." + k;
        if (v.is_object())
            flatten(v, key, os);
        else
            os << key << "," << csv_cell(v) << "\n";
    }
}

// A single JSON record, or key,value rows (nested keys dotted) for csv.
void emit_record(std::ostream& out, const Output& o, const json& j) {
    if (o.format != "csv") return emit(out, o, j.dump(2));
    std::ostringstream os;
    os << "key,value\n";
    json body = j;
    body.erase("schema");
    flatten(body, "", os);
    emit(out, o, os.str());
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InputError("cannot read " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep))
        if (!cur.empty()) out.push_back(cur);
    return out;
}

std::vector<Rational> parse_rationals(const std::string& s) {
    std::vector<Rational> out;
    for (const auto& t : split(s, ',')) out.push_back(Rational::parse(t));
    return out;
}

std::vector<std::size_t> parse_sizes(const std::string& s) {
    std::vector<std::size_t> out;
    for (const auto& t : split(s, ',')) {
        const auto dash = t.find('-');
        if (dash != std::string::npos && dash > 0) {
            const std::size_t a = std::stoul(t.substr(0, dash)), b = std::stoul(t.substr(dash + 1));
            for (std::size_t v = a; v <= b; ++v) out.push_back(v);
        } else {
            out.push_back(std::stoul(t));
        }
    }
    if (out.empty()) throw InputError("empty range");
    return out;
}

struct GraphInput {
    std::vector<std::string> family;
    std::string file;
    std::string product = "star";

    RootedGraph load() {
        if (!file.empty()) return parse_graph(read_file(file));
        if (family.empty()) throw InputError("a graph is required (--family or --graph)");
        if (family.size() == 2) {
            if (family[0] == "star-of")
                product = "star";
            else if (family[0] == "comb-of")
                product = "comb";
            else
                throw InputError("expected star-of or comb-of before the family, got " + family[0]);
            return named_graph(family[1]);
        }
        return named_graph(family[0]);
    }
    std::string label() const {
        if (!file.empty()) return file;
        return family.empty() ? "" : family.back();
    }
};

void add_graph_options(CLI::App* cmd, GraphInput& g) {
    cmd->add_option("--family", g.family, "named graph, e.g. complete:3, optionally preceded by star-of / comb-of")
        ->expected(1, 2);
    cmd->add_option("--graph", g.file, "graph file (edge list or JSON)");
}

void add_output_options(CLI::App* cmd, Output& o, const std::string& default_format) {
    o.format = default_format;
    cmd->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--output,-o", o.path, "write to a file instead of stdout");
}

json spectrum_entry_json(const SpectrumEntry& e) {
    json j = {{"value", e.value}, {"multiplicity", e.multiplicity}};
    j["exact"] = e.exact ? json(e.exact->to_string()) : json(nullptr);
    return j;
}

// ---- spectrum ----

struct SpectrumArgs {
    GraphInput graph;
    std::size_t fold = 1;
    std::size_t oracle_max = 400;
    bool no_oracle = false;
    std::string plot;
    Output out;
};

RootedSpectralData iterated_comb(const RootedSpectralData& base, std::size_t fold) {
    RootedSpectralData acc = base;
    for (std::size_t i = 1; i < fold; ++i) acc = comb_char_poly(acc, base);
    return acc;
}

int cmd_spectrum(SpectrumArgs& a, std::ostream& out) {
    const RootedGraph g = a.graph.load();
    if (a.fold == 0) throw InputError("--fold must be >= 1");
    const std::string product = a.graph.product;
    if (product != "star" && product != "comb") throw InputError("--product must be star or comb");
    const auto base = spectral_data(g);

    SpectrumReport report;
    std::size_t dim = 0;
    if (product == "star") {
        dim = a.fold * (g.n() - 1) + 1;
        const TransformPair p = cyclic_boolean_power(transform_pair(base), a.fold);
        report = extract_spectrum(p.rc, dim);
    } else {
        dim = 1;
        for (std::size_t i = 0; i < a.fold; ++i) {
            dim *= g.n();
            if (dim > kMaxVertices) throw InputError("comb power exceeds the vertex cap");
        }
        const auto sd = iterated_comb(base, a.fold);
        report = extract_spectrum(renormalized_cauchy(sd), sd.dim);
    }

    bool checked = false, mismatch = false;
    std::vector<std::optional<double>> oracle(report.entries.size());
    if (!a.no_oracle && dim <= a.oracle_max) {
        const RootedGraph full = product == "star" ? star_power(g, a.fold) : comb_power(g, a.fold);
        const SpectrumReport o = eigensolve(to_real(adjacency(full.graph)));
        checked = true;
        if (o.entries.size() != report.entries.size()) mismatch = true;
        for (std::size_t i = 0; i < report.entries.size() && i < o.entries.size(); ++i) {
            oracle[i] = o.entries[i].value;
            const double diff = std::abs(o.entries[i].value - report.entries[i].value);
            if (diff > 1e-9 * std::max(1.0, std::abs(o.entries[i].value)) ||
                o.entries[i].multiplicity != report.entries[i].multiplicity)
                mismatch = true;
        }
    }

    if (a.out.format == "csv") {
        std::ostringstream os;
        os.precision(17);
        os << "value,multiplicity,exact,oracle,diff\n";
        for (std::size_t i = 0; i < report.entries.size(); ++i) {
            const auto& e = report.entries[i];
            os << e.value << "," << e.multiplicity << "," << (e.exact ? e.exact->to_string() : "") << ",";
            if (oracle[i]) os << *oracle[i] << "," << std::abs(*oracle[i] - e.value);
            else os << ",";
            os << "\n";
        }
        emit(out, a.out, os.str());
    } else {
        json entries = json::array();
        for (std::size_t i = 0; i < report.entries.size(); ++i) {
            json e = spectrum_entry_json(report.entries[i]);
            e["oracle"] = oracle[i] ? json(*oracle[i]) : json(nullptr);
            e["diff"] = oracle[i] ? json(std::abs(*oracle[i] - report.entries[i].value)) : json(nullptr);
            entries.push_back(e);
        }
        json j = {{"schema", kSchema},     {"command", "spectrum"}, {"graph", a.graph.label()},
                  {"product", product},    {"fold", a.fold},        {"dim", report.dim},
                  {"eigenvalues", entries}, {"oracle_checked", checked}, {"mismatch", mismatch}};
        emit(out, a.out, j.dump(2));
    }
    if (!a.plot.empty()) {
        std::ostringstream os;
        os.precision(17);
        os << "index,value\n";
        std::size_t idx = 0;
        for (const auto& e : report.entries)
            for (std::size_t m = 0; m < e.multiplicity; ++m) os << idx++ << "," << e.value << "\n";
        emit(out, Output{a.plot, "csv"}, os.str());
    }
    return mismatch ? kExitMismatch : kExitOk;
}

// ---- verify ----

struct VerifyArgs {
    std::string suite;
    SuiteConfig config;
    std::string certificate = "cyclic-spectra-certificate.json";
    Output out;
};

int cmd_verify(VerifyArgs& a, std::ostream& out, std::ostream& err) {
    a.config.threads = default_thread_count();
    const SuiteReport r = run_suite(a.suite, a.config);
    const std::string text = suite_report_json(r);
    emit_record(out, a.out, json::parse(text));
    if (!r.ok()) {
        emit(out, Output{a.certificate, "json"}, text);
        err << r.failures.size() << " of " << r.trials << " trials failed; certificate written to " << a.certificate
            << "\n";
        return kExitMismatch;
    }
    return kExitOk;
}

// ---- cumulants ----

struct CumulantArgs {
    std::string phi, omega;
    GraphInput graph;
    std::size_t order = 8;
    Output out;
};

int cmd_cumulants(CumulantArgs& a, std::ostream& out, std::ostream& err) {
    if (a.order < 1) throw InputError("--order must be >= 1");
    MomentData m;
    if (!a.phi.empty() || !a.omega.empty()) {
        const auto phi = parse_rationals(a.phi), omega = parse_rationals(a.omega);
        if (phi.empty() || omega.empty()) throw InputError("--phi and --omega are both required");
        m = MomentData::from_sequences(phi, omega);
        if (m.order > a.order) {
            m = MomentData::from_sequences(std::vector<Rational>(phi.begin(), phi.begin() + a.order),
                                           std::vector<Rational>(omega.begin(), omega.begin() + a.order));
        } else if (m.order < a.order) {
            err << "note: only " << m.order << " moments given; table truncated to that order\n";
        }
    } else {
        const RootedGraph g = a.graph.load();
        m = MomentData::from_matrix(to_rational(adjacency(g.graph)), g.root, a.order);
    }
    const auto b = boolean_cumulants(m);
    const auto c = cyclic_boolean_cumulants(m);
    const auto check = moment_cumulant_check(m, c, m.order);
    if (a.out.format == "csv") {
        emit(out, a.out, cumulant_table_csv(m));
    } else {
        std::vector<Rational> h(m.order + 1);
        if (m.order >= 2) h = h_coefficients(m);
        json rows = json::array();
        for (std::size_t n = 1; n <= m.order; ++n) {
            json row = {{"n", n}, {"c", c[n].to_string()}, {"b", b[n].to_string()}};
            row["h"] = m.order >= 2 ? json(h[n].to_string()) : json((m.omega[1] - m.phi[1]).to_string());
            rows.push_back(row);
        }
        json j = {{"schema", kSchema},
                  {"command", "cumulants"},
                  {"order", m.order},
                  {"cumulants", rows},
                  {"moment_cumulant_check", check.ok}};
        emit(out, a.out, j.dump(2));
    }
    return check.ok ? kExitOk : kExitMismatch;
}

// ---- limits ----

struct LimitArgs {
    std::size_t n = 7;
    GraphInput graph;
    unsigned k = 4;
    unsigned k_max = 6;
    std::string Ns = "1,2,4,8,16,32,64";
    std::size_t N_max = 0;
    unsigned d = 2, N = 10;
    std::map<std::string, Output> outputs;  // per subcommand, so defaults do not clash
    Output out;
};

int limits_beta(LimitArgs& a, std::ostream& out) {
    const BetaTable t = beta_table(static_cast<unsigned>(a.n));
    if (a.out.format == "csv") {
        std::ostringstream os;
        os << "n,beta\n";
        for (std::size_t n = 1; n <= a.n; ++n) os << n << "," << t.beta[n].get_str() << "\n";
        emit(out, a.out, os.str());
    } else {
        json beta = json::array(), gamma = json::array();
        for (std::size_t n = 1; n <= a.n; ++n) {
            beta.push_back(t.beta[n].get_str());
            json row = json::array();
            for (std::size_t k = 1; k <= n; ++k) row.push_back(t.gamma[n][k].get_str());
            gamma.push_back(row);
        }
        json j = {{"schema", kSchema}, {"command", "limits beta"}, {"n", a.n},
                  {"beta", beta},      {"gamma", gamma},           {"routes_agree", t.routes_agree}};
        emit(out, a.out, j.dump(2));
    }
    return t.routes_agree ? kExitOk : kExitMismatch;
}

int limits_carleman(LimitArgs& a, std::ostream& out) {
    const CarlemanReport r = carleman_check(static_cast<unsigned>(a.n));
    json j = {{"schema", kSchema}, {"command", "limits carleman"}, {"n", a.n}, {"ok", r.ok},
              {"partial_sums", r.partial_sums}};
    j["first_violation"] = r.first_violation ? json(*r.first_violation) : json(nullptr);
    if (a.out.format == "csv") {
        std::ostringstream os;
        os << "n,partial_sum\n";
        for (std::size_t i = 0; i < r.partial_sums.size(); ++i) os << i + 1 << "," << json(r.partial_sums[i]).dump() << "\n";
        emit(out, a.out, os.str());
    } else {
        emit(out, a.out, j.dump(2));
    }
    return r.ok ? kExitOk : kExitMismatch;
}

std::string rows_csv(const std::vector<std::string>& header, const std::vector<std::vector<json>>& rows) {
    std::ostringstream os;
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
    os << "\n";
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i) os << ",";
            os << (r[i].is_string() ? r[i].get<std::string>() : r[i].dump());
        }
        os << "\n";
    }
    return os.str();
}

int emit_rows(std::ostream& out, const Output& o, const std::string& command, const std::vector<std::string>& header,
              const std::vector<std::vector<json>>& rows) {
    if (o.format == "csv") {
        emit(out, o, rows_csv(header, rows));
    } else {
        json arr = json::array();
        for (const auto& r : rows) {
            json obj;
            for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = r[i];
            arr.push_back(obj);
        }
        emit(out, o, json({{"schema", kSchema}, {"command", command}, {"rows", arr}}).dump(2));
    }
    return kExitOk;
}

int limits_clt(LimitArgs& a, std::ostream& out) {
    const RootedGraph g = a.graph.load();
    const CLTLimitReport r = clt_report(g, a.k, parse_sizes(a.Ns));
    std::vector<std::vector<json>> rows;
    for (const auto& [N, v] : r.finite_N_values) rows.push_back({N, a.k, v, r.omega_limit, std::abs(v - r.omega_limit)});
    return emit_rows(out, a.out, "limits clt", {"N", "k", "value", "limit", "abs_err"}, rows);
}

int limits_gap(LimitArgs& a, std::ostream& out) {
    const RootedGraph g = a.graph.load();
    const auto report = a.N_max ? spectral_gap_report(g, a.N_max) : spectral_gap_report(g, parse_sizes(a.Ns));
    std::vector<std::vector<json>> rows;
    for (const auto& r : report)
        rows.push_back({r.N, r.lambda, r.lambda_multiplicity, r.mu, r.mu_multiplicity, r.bulk_max});
    return emit_rows(out, a.out, "limits gap",
                     {"N", "lambda", "lambda_multiplicity", "mu", "mu_multiplicity", "bulk_max"}, rows);
}

int limits_comb(LimitArgs& a, std::ostream& out) {
    const RootedGraph g = a.graph.load();
    const unsigned d = static_cast<unsigned>(g.n());
    // factor moments with the root as the distinguished vector
    std::vector<std::size_t> perm(g.n());
    for (std::size_t v = 0; v < g.n(); ++v) perm[v] = v == g.root ? 0 : (v < g.root ? v + 1 : v);
    const FactorMoments m = factor_moments(to_rational(adjacency(g.graph.relabeled(perm))), a.k_max);
    std::vector<std::vector<json>> rows;
    for (unsigned k = 1; k <= a.k_max; ++k) {
        const Rational lim = comb_limit_moment(d, k, m);
        for (std::size_t N : parse_sizes(a.Ns)) {
            const Rational v = finite_N_comb_moment(d, static_cast<unsigned>(N), k, m);
            BigInt dn;
            mpz_ui_pow_ui(dn.get_mpz_t(), d, N);
            const double scaled = (v / Rational(dn)).to_double();
            rows.push_back({N, k, scaled, lim.to_double(), std::abs(scaled - lim.to_double()), v.to_string(),
                            lim.to_string()});
        }
    }
    return emit_rows(out, a.out, "limits comb", {"N", "k", "value", "limit", "abs_err", "exact_moment", "exact_limit"},
                     rows);
}

int limits_alpha(LimitArgs& a, std::ostream& out) {
    const BigInt v = alpha_k(a.d, a.N, a.k);
    emit_record(out, a.out,
                json({{"schema", kSchema}, {"command", "limits alpha"}, {"d", a.d}, {"N", a.N}, {"k", a.k},
                      {"alpha", v.get_str()}}));
    return kExitOk;
}

// ---- idcheck ----

struct IdArgs {
    std::string spectrum, weights;
    GraphInput graph;
    unsigned nth_root = 0;
    Output out;
};

int cmd_idcheck(IdArgs& a, std::ostream& out) {
    SpectrumReport s;
    std::vector<double> w;
    if (!a.spectrum.empty()) {
        for (const auto& tok : split(a.spectrum, ',')) {
            const auto colon = tok.rfind(':');
            if (colon == std::string::npos || colon == 0) throw InputError("spectrum entries are value:multiplicity");
            const Rational v = Rational::parse(tok.substr(0, colon));
            const long mult = std::stol(tok.substr(colon + 1));
            if (mult < 1) throw InputError("multiplicities must be positive");
            s.entries.push_back({v.to_double(), static_cast<std::size_t>(mult), v});
            s.dim += static_cast<std::size_t>(mult);
        }
        std::sort(s.entries.begin(), s.entries.end(), [](const auto& x, const auto& y) { return x.value < y.value; });
        if (a.weights.empty()) throw InputError("--weights is required with --spectrum");
        // weights follow the order given on the command line
        std::vector<std::pair<Rational, double>> given;
        const auto vals = split(a.spectrum, ',');
        const auto ws = split(a.weights, ',');
        if (ws.size() != vals.size()) throw std::invalid_argument("inconsistent weights");
        for (std::size_t i = 0; i < vals.size(); ++i)
            given.emplace_back(Rational::parse(vals[i].substr(0, vals[i].rfind(':'))), Rational::parse(ws[i]).to_double());
        for (const auto& e : s.entries)
            for (const auto& [v, wt] : given)
                if (v == *e.exact) w.push_back(wt);
    } else {
        const RootedGraph g = a.graph.load();
        const auto sd = spectral_data(g);
        s = extract_spectrum(renormalized_cauchy(sd), sd.dim);
        const auto fac = factorize_green(green(sd));
        for (const auto& e : s.entries) {
            double wt = 0;
            for (const auto& p : fac.poles)
                if (std::abs(p.value - e.value) <= 1e-9 * std::max(1.0, std::abs(e.value))) wt = p.weight;
            w.push_back(wt);
        }
    }
    const IDVerdict v = cb_id_classify(s, w);
    json j = {{"schema", kSchema},
              {"command", "idcheck"},
              {"divisible", v.divisible},
              {"case", to_string(v.id_case)},
              {"reason", v.reason}};
    j["alpha"] = v.alpha ? json(*v.alpha) : json(nullptr);
    j["beta"] = v.beta ? json(*v.beta) : json(nullptr);
    if (a.nth_root > 0) {
        if (v.id_case != IDCase::two_nonzero) throw InputError("--nth-root needs two non-zero eigenvalues");
        const auto find_exact = [&](double x) {
            for (const auto& e : s.entries)
                if (e.value == x && e.exact) return *e.exact;
            throw InputError("--nth-root needs exact eigenvalues");
        };
        const NthRoot r = cb_id_nth_root(find_exact(*v.alpha), find_exact(*v.beta), a.nth_root);
        const TransformPair back = cyclic_boolean_power(r.transforms, a.nth_root);
        const TransformPair orig = cb_id_nth_root(find_exact(*v.alpha), find_exact(*v.beta), 1).transforms;
        j["nth_root"] = {{"n", a.nth_root},
                         {"alpha_n", r.alpha_n},
                         {"beta_n", r.beta_n},
                         {"weights", {r.weight_alpha, r.weight_beta}},
                         {"quadratic", r.quadratic.to_string()},
                         {"round_trip", back.rc == orig.rc && back.g == orig.g}};
    }
    emit_record(out, a.out, j);
    return kExitOk;
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact spectra of iterated star and comb products of rooted graphs"};
    app.require_subcommand(1);

    SpectrumArgs sa;
    auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of a star or comb power, checked against the oracle");
    add_graph_options(spectrum, sa.graph);
    spectrum->add_option("--fold", sa.fold, "number of factors");
    spectrum->add_option("--product", sa.graph.product, "star or comb")->check(CLI::IsMember({"star", "comb"}));
    spectrum->add_option("--oracle-max", sa.oracle_max, "largest dimension checked by the dense eigensolver");
    spectrum->add_flag("--no-oracle", sa.no_oracle, "skip the dense eigensolver");
    spectrum->add_option("--plot", sa.plot, "write (index, eigenvalue) CSV to this file");
    add_output_options(spectrum, sa.out, "json");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "run a seeded randomized identity suite");
    verify->add_option("suite", va.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--trials", va.config.trials, "number of random trials");
    verify->add_option("--max-vertices", va.config.max_vertices, "vertex bound for random graphs");
    verify->add_option("--seed", va.config.seed, "random seed");
    verify->add_option("--certificate", va.certificate, "mismatch certificate path");
    add_output_options(verify, va.out, "json");

    CumulantArgs ca;
    auto* cumulants = app.add_subcommand("cumulants", "Boolean and cyclic-Boolean cumulant tables");
    cumulants->add_option("--phi", ca.phi, "state moments phi(a), phi(a^2), ...");
    cumulants->add_option("--omega", ca.omega, "trace moments omega(a), omega(a^2), ...");
    add_graph_options(cumulants, ca.graph);
    cumulants->add_option("--order", ca.order, "truncation order");
    add_output_options(cumulants, ca.out, "csv");

    LimitArgs la;
    auto* limits = app.add_subcommand("limits", "limit theorems");
    limits->require_subcommand(1);
    auto* beta = limits->add_subcommand("beta", "beta_n and gamma_{n,k} tables");
    beta->add_option("--n", la.n, "largest n");
    add_output_options(beta, la.outputs["beta"], "json");
    auto* carleman = limits->add_subcommand("carleman", "Carleman bound beta_n <= (11 n)^{2n}");
    carleman->add_option("--n", la.n, "largest n");
    add_output_options(carleman, la.outputs["carleman"], "json");
    auto* clt = limits->add_subcommand("clt", "trace moments of normalized star powers");
    add_graph_options(clt, la.graph);
    clt->add_option("--k", la.k, "moment order");
    clt->add_option("--N", la.Ns, "comma separated N values or ranges a-b");
    add_output_options(clt, la.outputs["clt"], "csv");
    auto* gap = limits->add_subcommand("gap", "extreme eigenvalues of normalized star powers");
    add_graph_options(gap, la.graph);
    gap->add_option("--N", la.Ns, "comma separated N values or ranges a-b");
    gap->add_option("--N-max", la.N_max, "use N = 1..N_max");
    add_output_options(gap, la.outputs["gap"], "csv");
    auto* comb = limits->add_subcommand("comb", "d^{-N} scaled trace moments of comb powers");
    add_graph_options(comb, la.graph);
    comb->add_option("--k-max", la.k_max, "largest moment order");
    comb->add_option("--N", la.Ns, "comma separated N values or ranges a-b");
    add_output_options(comb, la.outputs["comb"], "csv");
    auto* alpha = limits->add_subcommand("alpha", "alpha_k(d, N)");
    alpha->add_option("--d", la.d)->required();
    alpha->add_option("--N", la.N)->required();
    alpha->add_option("--k", la.k)->required();
    add_output_options(alpha, la.outputs["alpha"], "json");

    IdArgs ia;
    auto* idcheck = app.add_subcommand("idcheck", "cyclic-Boolean infinite divisibility");
    idcheck->add_option("--spectrum", ia.spectrum, "value:multiplicity,...");
    idcheck->add_option("--weights", ia.weights, "state weights in the same order");
    add_graph_options(idcheck, ia.graph);
    idcheck->add_option("--nth-root", ia.nth_root, "also compute the n-th root");
    add_output_options(idcheck, ia.out, "json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    }

    try {
        if (*spectrum) return cmd_spectrum(sa, out);
        if (*verify) return cmd_verify(va, out, err);
        if (*cumulants) return cmd_cumulants(ca, out, err);
        if (*idcheck) return cmd_idcheck(ia, out);
        for (auto* sub : limits->get_subcommands()) la.out = la.outputs.at(sub->get_name());
        if (*beta) return limits_beta(la, out);
        if (*carleman) return limits_carleman(la, out);
        if (*clt) return limits_clt(la, out);
        if (*gap) return limits_gap(la, out);
        if (*comb) return limits_comb(la, out);
        if (*alpha) return limits_alpha(la, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

}  // namespace cyclic_spectra
