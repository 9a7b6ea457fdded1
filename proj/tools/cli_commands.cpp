#include "cli_commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>
#include <toml.hpp>

#include "sepcore/montecarlo.hpp"

namespace sepcore::cli {

using json = nlohmann::ordered_json;

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void dump(const json& j, std::ostream& os, int level) {
    const std::string pad(2 * (level + 1), ' '), close(2 * level, ' ');
    switch (j.type()) {
        case json::value_t::object: {
            if (j.empty()) {
                os << "{}";
                return;
            }
            os << "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) os << ",\n";
                first = false;
                os << pad << json(it.key()).dump() << ": ";
                dump(it.value(), os, level + 1);
            }
            os << "\n" << close << "}";
            return;
        }
        case json::value_t::array: {
            if (j.empty()) {
                os << "[]";
                return;
            }
            const bool nested = j.front().is_structured();
            os << (nested ? "[\n" : "[");
            bool first = true;
            for (const auto& v : j) {
                if (!first) os << (nested ? ",\n" : ", ");
                first = false;
                if (nested) os << pad;
                dump(v, os, level + 1);
            }
            os << (nested ? "\n" + close + "]" : "]");
            return;
        }
        case json::value_t::number_float: {
            const double v = j.get<double>();
            os << (std::isfinite(v) ? fmt17(v) : "null");
            return;
        }
        default: os << j.dump();
    }
}

std::string to_text(const json& j) {
    std::ostringstream os;
    dump(j, os, 0);
    os << "\n";
    return os.str();
}

json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw CliError(kInputError, "IoError", "cannot write " + path);
    f << text;
}

[[noreturn]] void input_error(const std::string& msg) { throw CliError(kInputError, "InputError", msg); }

std::vector<StatKind> parse_stats(const std::vector<std::string>& names) {
    if (names.empty()) input_error("no statistics requested");
    std::vector<StatKind> out;
    for (const auto& n : names) {
        auto k = parse_stat(n);
        if (!k) input_error("unknown statistic '" + n + "'");
        if (std::find(out.begin(), out.end(), *k) == out.end()) out.push_back(*k);
    }
    return out;
}

RootKind parse_root(const std::string& s) {
    if (s == "cholesky") return RootKind::Cholesky;
    if (s == "symmetric") return RootKind::Symmetric;
    input_error("root must be cholesky or symmetric, got '" + s + "'");
}

SamplerSpec make_sampler(const std::string& dist, double ga, double gb, double nu, bool center) {
    auto d = parse_dist(dist);
    if (!d) input_error("unknown distribution '" + dist + "'");
    SamplerSpec s;
    s.dist = *d;
    s.alpha = ga;
    s.beta = gb;
    s.nu = nu;
    s.centered = center;
    if (s.dist == SamplerSpec::Dist::StudentT && !(nu > 2.0)) input_error("t sampler needs nu > 2");
    if (s.dist == SamplerSpec::Dist::GammaStd && !(ga > 0.0 && gb > 0.0)) input_error("gamma needs positive parameters");
    return s;
}

json sampler_json(const SamplerSpec& s) {
    json j;
    j["dist"] = s.describe();
    j["centered"] = s.centered;
    return j;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (char c : line) {
        if (c == '"') {
            quoted = !quoted;
        } else if (c == ',' && !quoted) {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

bool parse_double(const std::string& s, double& v) {
    const char* b = s.c_str();
    while (*b == ' ' || *b == '\t') ++b;
    char* end = nullptr;
    v = std::strtod(b, &end);
    if (end == b) return false;
    while (*end == ' ' || *end == '\t') ++end;
    return *end == '\0';
}

Matrix read_data(const std::string& path, const Shape& shape, bool row_major) {
    std::ifstream f(path);
    if (!f) input_error("cannot open data file " + path);
    std::vector<std::vector<double>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto fields = split(line);
        std::vector<double> vals(fields.size());
        bool numeric = true;
        for (std::size_t i = 0; i < fields.size(); ++i) numeric = numeric && parse_double(fields[i], vals[i]);
        if (!numeric) {
            if (rows.empty() && lineno == 1) continue;  // header
            input_error("non-numeric entry on line " + std::to_string(lineno));
        }
        if (static_cast<int>(vals.size()) != shape.p()) {
            input_error("line " + std::to_string(lineno) + " has " + std::to_string(vals.size()) +
                        " entries, expected p1*p2 = " + std::to_string(shape.p()));
        }
        for (double v : vals)
            if (!std::isfinite(v)) input_error("non-finite entry on line " + std::to_string(lineno));
        rows.push_back(std::move(vals));
    }
    if (rows.empty()) input_error("data file has no rows");
    Matrix y(rows.size(), shape.p());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (int c = 0; c < shape.p(); ++c) {
            // Row-major input lists entry (a, b) of Y_i at a*p2 + b.
            const int src = row_major ? (c % shape.p1) * shape.p2 + c / shape.p1 : c;
            y(i, c) = rows[i][src];
        }
    }
    return y;
}

StatKind base_of(StatKind k) {
    switch (k) {
        case StatKind::T1a:
        case StatKind::T1b: return StatKind::T1;
        case StatKind::T2t: return StatKind::T2;
        case StatKind::T3t: return StatKind::T3;
        default: return k;
    }
}

bool is_transform(StatKind k) { return base_of(k) != k; }

// TOML access with unknown-key rejection.
class Config {
public:
    Config(const toml::table& t, std::string where) : t_(t), where_(std::move(where)) {}

    void allow(std::initializer_list<const char*> keys) {
        for (const char* k : keys) allowed_.insert(k);
    }

    void check() const {
        for (const auto& [k, v] : t_) {
            if (!allowed_.count(std::string(k.str()))) {
                input_error("unknown key '" + std::string(k.str()) + "' in " + where_);
            }
        }
    }

    bool has(const char* k) const { return t_.contains(k); }

    long long integer(const char* k, std::optional<long long> def = std::nullopt) const {
        if (auto v = t_[k].value<long long>()) return *v;
        if (t_.contains(k)) input_error(where_ + "." + k + " must be an integer");
        if (!def) input_error("missing key '" + std::string(k) + "' in " + where_);
        return *def;
    }

    double real(const char* k, std::optional<double> def = std::nullopt) const {
        if (auto v = t_[k].value<double>()) return *v;
        if (t_.contains(k)) input_error(where_ + "." + k + " must be a number");
        if (!def) input_error("missing key '" + std::string(k) + "' in " + where_);
        return *def;
    }

    std::string str(const char* k, std::optional<std::string> def = std::nullopt) const {
        if (auto v = t_[k].value<std::string>()) return *v;
        if (t_.contains(k)) input_error(where_ + "." + k + " must be a string");
        if (!def) input_error("missing key '" + std::string(k) + "' in " + where_);
        return *def;
    }

    bool boolean(const char* k, bool def) const {
        if (auto v = t_[k].value<bool>()) return *v;
        if (t_.contains(k)) input_error(where_ + "." + k + " must be a boolean");
        return def;
    }

    std::vector<std::string> strings(const char* k) const {
        std::vector<std::string> out;
        const toml::array* a = t_[k].as_array();
        if (!a) {
            if (t_.contains(k)) input_error(where_ + "." + k + " must be an array of strings");
            return out;
        }
        for (const auto& e : *a) {
            auto v = e.value<std::string>();
            if (!v) input_error(where_ + "." + k + " must contain strings");
            out.push_back(*v);
        }
        return out;
    }

    std::vector<double> reals(const char* k) const {
        std::vector<double> out;
        const toml::array* a = t_[k].as_array();
        if (!a) {
            if (t_.contains(k)) input_error(where_ + "." + k + " must be an array of numbers");
            return out;
        }
        for (const auto& e : *a) {
            auto v = e.value<double>();
            if (!v) input_error(where_ + "." + k + " must contain numbers");
            out.push_back(*v);
        }
        return out;
    }

    std::vector<std::vector<double>> rows(const char* k, std::size_t width) const {
        std::vector<std::vector<double>> out;
        const toml::array* a = t_[k].as_array();
        if (!a) {
            if (t_.contains(k)) input_error(where_ + "." + k + " must be an array of arrays");
            return out;
        }
        for (const auto& e : *a) {
            const toml::array* r = e.as_array();
            if (!r || r->size() != width) {
                input_error(where_ + "." + k + " rows must have " + std::to_string(width) + " entries");
            }
            std::vector<double> row;
            for (const auto& x : *r) {
                auto v = x.value<double>();
                if (!v) input_error(where_ + "." + k + " must contain numbers");
                row.push_back(*v);
            }
            out.push_back(row);
        }
        return out;
    }

    std::optional<Config> sub(const char* k) const {
        if (!t_.contains(k)) return std::nullopt;
        const toml::table* s = t_[k].as_table();
        if (!s) input_error(where_ + "." + k + " must be a table");
        return Config(*s, where_ + "." + k);
    }

private:
    const toml::table& t_;
    std::string where_;
    std::set<std::string> allowed_;
};

toml::table load_toml(const std::string& path) {
    try {
        return toml::parse_file(path);
    } catch (const toml::parse_error& e) {
        std::ostringstream os;
        os << "cannot parse " << path << ": " << e.description();
        input_error(os.str());
    }
}

constexpr std::initializer_list<const char*> kSamplerKeys = {"dist", "gamma_alpha", "gamma_beta", "nu", "center"};

SamplerSpec sampler_from(const Config& c) {
    return make_sampler(c.str("dist", "gaussian"), c.real("gamma_alpha", 4.0), c.real("gamma_beta", 2.0),
                        c.real("nu", 6.0), c.boolean("center", false));
}

int as_int(double v, const char* what) {
    if (v != std::floor(v) || v < 1 || v > 1e9) input_error(std::string(what) + " must be a positive integer");
    return static_cast<int>(v);
}

Shape shape_of(double p1, double p2) { return Shape(as_int(p1, "p1"), as_int(p2, "p2")); }

std::string csv_line(const std::vector<std::string>& fields) {
    std::string s;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) s += ",";
        s += fields[i];
    }
    return s + "\n";
}

std::string fmt_or_empty(double v) { return std::isfinite(v) ? fmt17(v) : ""; }

}  // namespace

int report_error(int code, const std::string& kind, const std::string& msg) {
    json j;
    j["error"] = kind;
    j["message"] = msg;
    j["exit_code"] = code;
    std::cerr << to_text(j);
    return code;
}

int cmd_test(const TestArgs& a) {
    if (a.p1 < 1 || a.p2 < 1) input_error("--p1 and --p2 must be positive");
    const Shape shape(a.p1, a.p2);
    const std::vector<StatKind> kinds = parse_stats(a.stats);
    const RootKind root = parse_root(a.root);
    const SamplerSpec sampler = make_sampler(a.dist, a.gamma_alpha, a.gamma_beta, a.nu, a.center);
    if (a.calib != "mc" && a.calib != "asymptotic") input_error("--calib must be mc or asymptotic");
    if (!(a.alpha > 0.0 && a.alpha < 1.0)) input_error("--alpha must lie in (0,1)");
    if (a.reps < 1) input_error("--reps must be >= 1");
    if (a.calib == "asymptotic") {
        for (StatKind k : kinds) {
            if (k != StatKind::T1a && k != StatKind::T1b) {
                input_error(std::string("asymptotic calibration is only defined for T1a/T1b, not ") + stat_name(k));
            }
        }
    }

    Matrix y = read_data(a.data, shape, a.row_major);
    const int n = static_cast<int>(y.rows());
    kcd::check_existence(n, shape);
    if (a.center) y = y.rowwise() - y.colwise().mean();
    const Matrix S = generators::covariance_of(y, false);

    std::vector<StatKind> available;
    std::map<StatKind, std::string> missing;
    for (StatKind k : kinds) {
        if (k == StatKind::T1b) {
            missing[k] = "requires the separable component of the unobserved standardized sample";
        } else if (k == StatKind::LRT && n < shape.p()) {
            missing[k] = "undefined when n < p";
        } else {
            available.push_back(k);
        }
    }
    std::vector<StatKind> eval_kinds = available;
    for (StatKind k : available) eval_kinds.push_back(base_of(k));

    stats::EvalOptions opt;
    opt.root = root;
    opt.data = &y;
    stats::Evaluation ev = stats::evaluate(S, n, shape, eval_kinds, opt);

    std::optional<McResult> null_run;
    if (a.calib == "mc" && !available.empty()) {
        McConfig cfg;
        cfg.J = a.reps;
        cfg.n = n;
        cfg.shape = shape;
        cfg.sampler = sampler;
        cfg.alpha = a.alpha;
        cfg.master_seed = a.seed;
        cfg.root_kind = root;
        cfg.stats = available;
        cfg.threads = a.threads;
        null_run = montecarlo::simulate_null(cfg);
    }

    json out;
    out["command"] = "test";
    out["n"] = n;
    out["p1"] = shape.p1;
    out["p2"] = shape.p2;
    out["root"] = a.root;
    out["mle"] = {{"iterations", ev.mle.iterations},
                  {"converged", ev.mle.converged},
                  {"objective", num(ev.mle.objective)}};
    json reports = json::array();
    for (StatKind k : kinds) {
        json r;
        r["kind"] = stat_name(k);
        r["alpha"] = a.alpha;
        if (missing.count(k)) {
            r["available"] = false;
            r["reason"] = missing[k];
            reports.push_back(r);
            continue;
        }
        const double value = ev.values[stat_index(k)];
        r["available"] = true;
        r["raw"] = num(ev.values[stat_index(base_of(k))]);
        r["transformed"] = is_transform(k) ? num(value) : json(nullptr);
        double crit;
        if (null_run) {
            crit = null_run->critical_values[std::find(available.begin(), available.end(), k) - available.begin()];
            r["calibration"] = {{"type", "monte_carlo"}, {"J", a.reps}, {"seed", a.seed}, {"sampler", sampler_json(sampler)}};
        } else {
            crit = stats::tw1_quantile(1.0 - a.alpha);
            r["calibration"] = {{"type", "asymptotic"}, {"reference", "TW1"}};
        }
        r["decision_value"] = num(value);
        r["critical_value"] = num(crit);
        r["reject"] = value > crit;
        reports.push_back(r);
    }
    out["reports"] = reports;
    emit(to_text(out), a.out);
    return kOk;
}

int cmd_simulate(const SimulateArgs& a) {
    if (a.p1 < 1 || a.p2 < 1 || a.n < 1) input_error("--p1, --p2 and --n must be positive");
    const Shape shape(a.p1, a.p2);
    SamplerSpec sampler = make_sampler(a.dist, a.gamma_alpha, a.gamma_beta, a.nu, false);
    sampler.seed = a.seed;
    Matrix root = Matrix::Identity(shape.p(), shape.p());
    if (!a.preset.empty()) {
        Rng core_rng(a.core_seed);
        Matrix c = generators::random_core(shape, generators::preset_spectrum(a.preset, shape.p()), core_rng);
        root = matcore::sym_sqrt(generators::shrink_core(c, a.w));
    }
    if (!a.separable.empty()) {
        SeparableFactor k = generators::separable_preset(a.separable, shape);
        root = matcore::apply_kron(matcore::cholesky(k.K2), matcore::cholesky(k.K1), root);
    }
    Matrix y = generators::sample_data(a.n, root, sampler);
    std::string text;
    std::vector<std::string> header;
    for (int b = 0; b < shape.p2; ++b)
        for (int i = 0; i < shape.p1; ++i) header.push_back("y" + std::to_string(i + 1) + "_" + std::to_string(b + 1));
    text += csv_line(header);
    for (Eigen::Index r = 0; r < y.rows(); ++r) {
        std::vector<std::string> f;
        for (Eigen::Index c = 0; c < y.cols(); ++c) f.push_back(fmt17(y(r, c)));
        text += csv_line(f);
    }
    emit(text, a.out);
    return kOk;
}

int cmd_calibrate(const std::string& path, int threads) {
    const toml::table t = load_toml(path);
    Config c(t, "config");
    c.allow({"rows", "stats", "J", "alpha", "seed", "root", "output", "threads"});
    c.allow(kSamplerKeys);
    c.check();
    const auto rows = c.rows("rows", 3);
    if (rows.empty()) input_error("config.rows must list [p1, p2, n] triples");
    const std::vector<StatKind> kinds = parse_stats(c.strings("stats"));
    McConfig base;
    base.J = static_cast<int>(c.integer("J", 1000));
    base.alpha = c.real("alpha", 0.05);
    base.master_seed = static_cast<std::uint64_t>(c.integer("seed", 1));
    base.root_kind = parse_root(c.str("root", "cholesky"));
    base.sampler = sampler_from(c);
    base.stats = kinds;
    base.threads = threads > 0 ? threads : static_cast<int>(c.integer("threads", 0));
    if (base.J < 1) input_error("J must be >= 1");

    std::string text;
    std::vector<std::string> header = {"p1", "p2", "n"};
    for (StatKind k : kinds) header.push_back(stat_name(k));
    text += csv_line(header);
    for (const auto& r : rows) {
        McConfig cfg = base;
        cfg.shape = shape_of(r[0], r[1]);
        cfg.n = as_int(r[2], "n");
        McResult res = montecarlo::simulate_null(cfg);
        std::vector<std::string> f = {std::to_string(cfg.shape.p1), std::to_string(cfg.shape.p2), std::to_string(cfg.n)};
        for (double q : res.critical_values) f.push_back(fmt17(q));
        text += csv_line(f);
    }
    emit(text, c.str("output", ""));
    return kOk;
}

int cmd_power(const std::string& path, int threads) {
    const toml::table t = load_toml(path);
    Config c(t, "config");
    c.allow({"preset", "construction", "r", "c", "w", "grid", "gammas", "n_values", "core_seed", "stats", "J", "K",
             "alpha", "seed", "root", "output", "threads"});
    c.allow(kSamplerKeys);
    c.check();

    const bool rank_core = c.has("construction");
    if (rank_core == c.has("preset")) input_error("config needs exactly one of 'preset' or 'construction'");
    const std::vector<double> params = rank_core ? c.reals("c") : c.reals("w");
    if (params.empty()) input_error(rank_core ? "config.c must list spike strengths" : "config.w must list weights");

    std::vector<std::array<int, 3>> grid;
    for (const auto& r : c.rows("grid", 3)) grid.push_back({as_int(r[0], "p1"), as_int(r[1], "p2"), as_int(r[2], "n")});
    const auto gammas = c.rows("gammas", 2);
    for (double nv : c.reals("n_values")) {
        const int n = as_int(nv, "n");
        for (const auto& g : gammas) {
            const double p1 = g[0] * std::sqrt(double(n)), p2 = g[1] * std::sqrt(double(n));
            if (std::abs(p1 - std::round(p1)) > 1e-9 || std::abs(p2 - std::round(p2)) > 1e-9) {
                input_error("gammas and n_values must give integer p1, p2");
            }
            grid.push_back({static_cast<int>(std::round(p1)), static_cast<int>(std::round(p2)), n});
        }
    }
    if (grid.empty()) input_error("config needs 'grid' or 'gammas' with 'n_values'");

    const std::vector<StatKind> kinds = parse_stats(c.strings("stats"));
    const int J = static_cast<int>(c.integer("J", 1000));
    const int K = static_cast<int>(c.integer("K", 1000));
    if (J < 1 || K < 1) input_error("J and K must be >= 1");
    const std::uint64_t seed = static_cast<std::uint64_t>(c.integer("seed", 1));
    const std::uint64_t core_seed = static_cast<std::uint64_t>(c.integer("core_seed", 7));
    const int nthreads = threads > 0 ? threads : static_cast<int>(c.integer("threads", 0));

    std::string text = csv_line({"stat", rank_core ? "c" : "w", "n", "p1", "p2", "gamma1", "gamma2", "power", "se"});
    for (const auto& g : grid) {
        McConfig cfg;
        cfg.J = J;
        cfg.shape = Shape(g[0], g[1]);
        cfg.n = g[2];
        cfg.alpha = c.real("alpha", 0.05);
        cfg.master_seed = seed;
        cfg.root_kind = parse_root(c.str("root", "cholesky"));
        cfg.sampler = sampler_from(c);
        cfg.threads = nthreads;
        for (StatKind k : kinds) {
            if (k == StatKind::LRT && cfg.n < cfg.shape.p()) continue;
            cfg.stats.push_back(k);
        }
        if (cfg.stats.empty()) continue;
        const Calibration calib = montecarlo::simulate_null(cfg).calibration();

        Rng core_rng(core_seed);
        std::optional<Matrix> base_core;
        Matrix a;
        int r = 0;
        Construction cons{};
        if (rank_core) {
            auto parsed = generators::parse_construction(c.str("construction"));
            if (!parsed) input_error("construction must be square2, ladder2 or orthoblock");
            cons = *parsed;
            r = static_cast<int>(c.integer("r"));
            a = generators::make_rank_r_core(cfg.shape.p1, cfg.shape.p2, r, cons, core_rng);
        } else {
            base_core = generators::random_core(
                cfg.shape, generators::preset_spectrum(c.str("preset"), cfg.shape.p()), core_rng, cfg.root_kind);
        }

        McConfig alt = cfg;
        alt.J = K;
        alt.master_seed = montecarlo::replicate_seed(seed, 0xA17E);
        for (double prm : params) {
            CoreModel model;
            if (rank_core) {
                if (!(prm >= 0.0)) input_error("spike strengths must be nonnegative");
                model = CoreModel::partial_isotropy(cfg.shape, a, 1.0 / (1.0 + r * prm / cfg.shape.p()), cons);
            } else {
                model = CoreModel::shrunk(CoreModel::explicit_core(cfg.shape, *base_core), prm);
            }
            PowerResult pr = montecarlo::empirical_power(model, alt, calib);
            for (std::size_t i = 0; i < pr.stats.size(); ++i) {
                text += csv_line({stat_name(pr.stats[i]), fmt17(prm), std::to_string(cfg.n),
                                  std::to_string(cfg.shape.p1), std::to_string(cfg.shape.p2),
                                  fmt17(cfg.shape.p1 / std::sqrt(double(cfg.n))),
                                  fmt17(cfg.shape.p2 / std::sqrt(double(cfg.n))), fmt17(pr.rate[i]), fmt17(pr.se[i])});
            }
        }
    }
    emit(text, c.str("output", ""));
    return kOk;
}

int cmd_null_dist(const std::string& path, int threads) {
    const toml::table t = load_toml(path);
    Config c(t, "config");
    c.allow({"p1", "p2", "n", "J", "stats", "alpha", "seed", "root", "samples_output", "summary_output",
             "normal_reference", "threads"});
    c.allow(kSamplerKeys);
    c.check();
    McConfig cfg;
    cfg.shape = Shape(static_cast<int>(c.integer("p1")), static_cast<int>(c.integer("p2")));
    cfg.n = static_cast<int>(c.integer("n"));
    cfg.J = static_cast<int>(c.integer("J", 1000));
    cfg.alpha = c.real("alpha", 0.05);
    cfg.master_seed = static_cast<std::uint64_t>(c.integer("seed", 1));
    cfg.root_kind = parse_root(c.str("root", "cholesky"));
    cfg.sampler = sampler_from(c);
    cfg.stats = parse_stats(c.strings("stats"));
    cfg.threads = threads > 0 ? threads : static_cast<int>(c.integer("threads", 0));
    const auto normal_ref = c.reals("normal_reference");
    if (!normal_ref.empty() && normal_ref.size() != 2) input_error("normal_reference must be [mean, sd]");

    McResult res = montecarlo::simulate_null(cfg);

    std::vector<std::string> header;
    for (StatKind k : cfg.stats) header.push_back(stat_name(k));
    std::string csv = csv_line(header);
    for (int j = 0; j < cfg.J; ++j) {
        std::vector<std::string> f;
        for (const auto& s : res.samples) f.push_back(fmt_or_empty(s[j]));
        csv += csv_line(f);
    }
    emit(csv, c.str("samples_output", ""));

    json out;
    out["command"] = "null-dist";
    out["n"] = cfg.n;
    out["p1"] = cfg.shape.p1;
    out["p2"] = cfg.shape.p2;
    out["J"] = cfg.J;
    out["alpha"] = cfg.alpha;
    out["seed"] = cfg.master_seed;
    out["sampler"] = sampler_json(cfg.sampler);
    json per = json::array();
    for (std::size_t i = 0; i < cfg.stats.size(); ++i) {
        const auto& v = res.samples[i];
        double mean = 0.0, sq = 0.0;
        for (double x : v) mean += x / v.size();
        for (double x : v) sq += (x - mean) * (x - mean);
        json s;
        s["kind"] = stat_name(cfg.stats[i]);
        s["mean"] = num(mean);
        s["sd"] = num(v.size() > 1 ? std::sqrt(sq / (v.size() - 1)) : 0.0);
        s["critical_value"] = num(res.critical_values[i]);
        if (cfg.stats[i] == StatKind::T1a || cfg.stats[i] == StatKind::T1b) {
            s["size_vs_tw1"] = num(montecarlo::empirical_size(res, cfg.stats[i], Reference::tracy_widom()));
        } else if (!normal_ref.empty()) {
            s["size_vs_normal"] =
                num(montecarlo::empirical_size(res, cfg.stats[i], Reference::normal(normal_ref[0], normal_ref[1])));
        }
        per.push_back(s);
    }
    out["statistics"] = per;
    const std::string summary_path = c.str("summary_output", "");
    if (summary_path.empty() && c.str("samples_output", "").empty()) {
        std::cerr << to_text(out);
    } else {
        emit(to_text(out), summary_path);
    }
    return kOk;
}

int cmd_diagnose(const std::string& path, int threads) {
    const toml::table t = load_toml(path);
    Config c(t, "config");
    c.allow({"seed", "output", "threads", "mp", "bbp", "t3", "contrast"});
    c.check();
    const std::uint64_t seed = static_cast<std::uint64_t>(c.integer("seed", 1));
    const int nthreads = threads > 0 ? threads : static_cast<int>(c.integer("threads", 0));
    json out;
    out["command"] = "diagnose";
    out["seed"] = seed;
    bool any = false;

    if (auto mp = c.sub("mp")) {
        mp->allow({"p1", "p2", "n", "reps", "bins"});
        mp->check();
        McConfig cfg;
        cfg.shape = Shape(static_cast<int>(mp->integer("p1")), static_cast<int>(mp->integer("p2")));
        cfg.n = static_cast<int>(mp->integer("n"));
        cfg.J = static_cast<int>(mp->integer("reps", 5));
        cfg.master_seed = seed;
        cfg.threads = nthreads;
        auto d = montecarlo::esd_diagnostic(cfg, static_cast<int>(mp->integer("bins", 40)));
        json j;
        j["gamma_hat"] = num(double(cfg.shape.p()) / cfg.n);
        j["ks"] = num(d.ks);
        j["bin_edges"] = json::array();
        for (double e : d.bin_edges) j["bin_edges"].push_back(num(e));
        j["counts"] = d.counts;
        j["retained"] = d.retained;
        out["mp"] = j;
        any = true;
    }
    if (auto bb = c.sub("bbp")) {
        bb->allow({"construction", "r", "p1", "p2", "n", "c", "reps"});
        bb->check();
        auto cons = generators::parse_construction(bb->str("construction", "orthoblock"));
        if (!cons) input_error("bbp.construction must be square2, ladder2 or orthoblock");
        auto rows = montecarlo::bbp_study(*cons, static_cast<int>(bb->integer("r", 1)), bb->reals("c"),
                                          static_cast<int>(bb->integer("p1")), static_cast<int>(bb->integer("p2")),
                                          static_cast<int>(bb->integer("n")), static_cast<int>(bb->integer("reps", 200)),
                                          seed, nthreads);
        json arr = json::array();
        for (const auto& r : rows) {
            json j;
            j["c"] = num(r.c);
            j["lambda"] = num(r.lambda);
            j["population_spikes"] = json::array();
            j["limits"] = json::array();
            j["mean_top"] = json::array();
            for (double v : r.population_spikes) j["population_spikes"].push_back(num(v));
            for (double v : r.limits) j["limits"].push_back(num(v));
            for (double v : r.mean_top) j["mean_top"].push_back(num(v));
            arr.push_back(j);
        }
        out["bbp"] = arr;
        any = true;
    }
    if (auto t3 = c.sub("t3")) {
        t3->allow({"p1", "p2", "n", "reps"});
        t3->check();
        const Shape s(static_cast<int>(t3->integer("p1")), static_cast<int>(t3->integer("p2")));
        const int n = static_cast<int>(t3->integer("n"));
        json j;
        j["mean_t3"] = num(montecarlo::t3_limit_check(n, s, static_cast<int>(t3->integer("reps", 200)), seed, nthreads));
        j["limit"] = num(double(s.p()) / n);
        out["t3"] = j;
        any = true;
    }
    if (auto ct = c.sub("contrast")) {
        ct->allow({"p1", "p2", "n", "reps", "presets"});
        ct->check();
        const Shape s(static_cast<int>(ct->integer("p1")), static_cast<int>(ct->integer("p2")));
        const int n = static_cast<int>(ct->integer("n"));
        json j = json::object();
        for (const auto& name : ct->strings("presets")) {
            j[name] = num(montecarlo::contrast_check(n, s, generators::separable_preset(name, s),
                                                     static_cast<int>(ct->integer("reps", 200)), seed, nthreads));
        }
        out["contrast"] = j;
        any = true;
    }
    if (!any) input_error("config enables no diagnostic block (mp, bbp, t3, contrast)");
    emit(to_text(out), c.str("output", ""));
    return kOk;
}

namespace {

struct Check {
    std::string name;
    bool ok;
    std::string detail;
};

Matrix random_psd(int p, Rng& rng) {
    std::normal_distribution<double> nd;
    Matrix g(p, 2 * p);
    for (Eigen::Index j = 0; j < g.cols(); ++j)
        for (Eigen::Index i = 0; i < g.rows(); ++i) g(i, j) = nd(rng);
    return g * g.transpose() / double(2 * p);
}

Matrix random_invertible(int d, Rng& rng) {
    std::normal_distribution<double> nd;
    Matrix g(d, d);
    for (Eigen::Index j = 0; j < g.cols(); ++j)
        for (Eigen::Index i = 0; i < g.rows(); ++i) g(i, j) = nd(rng);
    g.diagonal().array() += 3.0;
    return g;
}

double rel(const Matrix& a, const Matrix& b) { return (a - b).norm() / std::max(1.0, b.norm()); }

}  // namespace

int cmd_validate(const std::optional<std::string>& tw_table, int threads) {
    std::vector<Check> checks;
    auto add = [&](const std::string& name, bool ok, const std::string& detail) {
        checks.push_back({name, ok, detail});
    };
    Rng rng(20240601);

    {
        double worst = 0.0;
        for (Shape s : {Shape(2, 3), Shape(4, 4), Shape(4, 2)}) {
            Matrix m = random_psd(s.p(), rng);
            const double tr = m.trace();
            worst = std::max({worst, std::abs(matcore::partial_trace_1(m, s).trace() - tr) / tr,
                              std::abs(matcore::partial_trace_2(m, s).trace() - tr) / tr});
        }
        add("partial-trace identities", worst < 1e-10, "max rel err " + fmt17(worst));
    }
    {
        bool ok = true;
        for (Shape s : {Shape(2, 3), Shape(4, 4), Shape(4, 2)}) {
            Matrix m = random_psd(s.p(), rng);
            Matrix r = matcore::rearrange(m, s);
            std::vector<double> a(m.data(), m.data() + m.size()), b(r.data(), r.data() + r.size());
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            ok = ok && a == b && matcore::rearrange_inverse(r, s) == m;
        }
        add("rearrangement isometry", ok, ok ? "exact" : "mismatch");
    }
    {
        Matrix S(4, 4);
        S << .5, 0, 0, .5, 0, .5, -.5, 0, 0, -.5, .5, 0, .5, 0, 0, .5;
        Matrix C(4, 4);
        C << 1, 0, 0, 1, 0, 1, -1, 0, 0, -1, 1, 0, 1, 0, 0, 1;
        KcdResult r = kcd::decompose(S, 2, Shape(2, 2));
        const double ek = (r.K.full() - 0.5 * Matrix::Identity(4, 4)).cwiseAbs().maxCoeff();
        const double ec = (r.C - C).cwiseAbs().maxCoeff();
        add("counterexample regression", ek < 1e-8 && ec < 1e-8, "K err " + fmt17(ek) + ", C err " + fmt17(ec));
    }
    {
        double worst_tr = 0.0, worst_sig = 0.0;
        for (Shape s : {Shape(2, 3), Shape(4, 4), Shape(4, 2)}) {
            Matrix m = random_psd(s.p(), rng);
            KcdResult r = kcd::decompose(m, s.p() + 2, s);
            worst_tr = std::max({worst_tr,
                                 (matcore::partial_trace_1(r.C, s) - s.p2 * Matrix::Identity(s.p1, s.p1)).cwiseAbs().maxCoeff(),
                                 (matcore::partial_trace_2(r.C, s) - s.p1 * Matrix::Identity(s.p2, s.p2)).cwiseAbs().maxCoeff()});
            const double sig = matcore::singular_values(matcore::rearrange(r.C, s))(0);
            worst_sig = std::max(worst_sig, std::abs(sig - std::sqrt(double(s.p()))));
        }
        add("core constraints", worst_tr < 1e-6, "max err " + fmt17(worst_tr));
        add("sigma1 of rearranged core", worst_sig < 1e-7, "max err " + fmt17(worst_sig));
    }
    {
        double worst = 0.0;
        for (Shape s : {Shape(2, 3), Shape(4, 4)}) {
            Matrix m = random_psd(s.p(), rng);
            Matrix g = matcore::kron(random_invertible(s.p2, rng), random_invertible(s.p1, rng));
            Matrix k1 = kcd::kronecker_mle(m, s.p() + 2, s).K.full();
            Matrix k2 = kcd::kronecker_mle(matcore::symmetrize(g * m * g.transpose()), s.p() + 2, s).K.full();
            worst = std::max(worst, rel(k2, g * k1 * g.transpose()));
        }
        add("flip-flop equivariance", worst < 1e-7, "max rel err " + fmt17(worst));
    }
    {
        const Shape s(3, 3);
        Matrix m = random_psd(s.p(), rng);
        SeparableFactor k{random_psd(3, rng) + Matrix::Identity(3, 3), random_psd(3, rng) + Matrix::Identity(3, 3), s};
        Matrix h = matcore::kron(matcore::cholesky(k.K2), matcore::cholesky(k.K1));
        Matrix m2 = matcore::symmetrize(h * m * h.transpose());
        double worst = 0.0;
        for (RootKind rk : {RootKind::Cholesky, RootKind::Symmetric}) {
            Spectrum e1 = matcore::eigvals_sym(kcd::core_matrix(m, kcd::kronecker_mle(m, 20, s).K, rk));
            Spectrum e2 = matcore::eigvals_sym(kcd::core_matrix(m2, kcd::kronecker_mle(m2, 20, s).K, rk));
            worst = std::max(worst, (e1 - e2).norm() / e1.norm());
        }
        add("core spectrum Kronecker-invariance", worst < 1e-8, "max rel err " + fmt17(worst));
    }
    {
        std::string problem;
        if (tw_table) {
            std::ifstream f(*tw_table);
            std::vector<double> vals;
            double v;
            std::string tok;
            while (f >> tok) {
                for (char& ch : tok)
                    if (ch == ',') ch = ' ';
                std::istringstream is(tok);
                while (is >> v) vals.push_back(v);
            }
            if (!f.eof() && vals.empty()) problem = "cannot read table file";
            if (problem.empty()) problem = stats::check_tw1_table(vals);
        } else {
            problem = stats::check_tw1_table(stats::tw1_table());
        }
        add("TW1 table", problem.empty(), problem.empty() ? "ok" : problem);
    }
    {
        McConfig cfg;
        cfg.J = 16;
        cfg.n = 30;
        cfg.shape = Shape(3, 3);
        cfg.master_seed = 5;
        cfg.stats = {StatKind::T1a, StatKind::T2t, StatKind::T3t};
        cfg.threads = 1;
        McResult a = montecarlo::simulate_null(cfg);
        cfg.threads = std::max(2, montecarlo::resolve_threads(threads));
        McResult b = montecarlo::simulate_null(cfg);
        add("Monte Carlo determinism", a.samples == b.samples, "thread counts 1 vs " + std::to_string(cfg.threads));
    }

    bool all = true;
    for (const auto& ch : checks) {
        std::cout << (ch.ok ? "PASS " : "FAIL ") << ch.name << ": " << ch.detail << "\n";
        all = all && ch.ok;
    }
    std::cout << (all ? "all invariants hold\n" : "invariant failures detected\n");
    return all ? kOk : kFailed;
}

}  // namespace sepcore::cli
