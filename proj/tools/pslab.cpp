// pslab: primes in intersections of Piatetski-Shapiro sets.
//
// Subcommands:
//   count    exact pi_gamma / intersection counts with analytic comparison
//   theorem  asymptotic verification over an x grid, with fitted exponent
//   lemma    numerical check batteries for the exponential-sum toolbox
//   hb       Heath-Brown identity residual against the sieve
//   expsum   exponential-sum scans (prime-weighted, bilinear, raw phases)
//
// Exit codes: 0 success / all checks pass, 1 check failure, 2 usage error.
// Output is fully deterministic for fixed inputs and seed: files are
// assembled in memory and written once.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pslab/pslab.hpp"

namespace {

using namespace pslab;

struct cli_options {
    run_config cfg;
    std::string config_path;
    bool threads_set = false, epsilon_set = false, eta_set = false, slack_set = false;
    bool seed_set = false, segment_set = false, out_set = false, format_set = false;
    unsigned threads = 1;
    double epsilon = 0.01, eta = 0.05, slack = 10.0;
    u64 seed = 1, segment = default_segment_size;
    std::string out_path, format_name = "csv";
};

void add_config_flags(CLI::App* sub, cli_options& o) {
    sub->add_option("--config", o.config_path, "JSON config file (flags override it)");
    sub->add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1u, 256u));
    sub->add_option("--epsilon", o.epsilon, "epsilon parameter, in (0, 0.1]");
    sub->add_option("--eta", o.eta, "eta parameter, in (0, 0.5]");
    sub->add_option("--slack", o.slack, "envelope slack multiplier, >= 1");
    sub->add_option("--seed", o.seed, "RNG seed for sampled checks");
    sub->add_option("--segment-size", o.segment, "sieve segment length");
    sub->add_option("--out", o.out_path, "output file (default stdout)");
    sub->add_option("--format", o.format_name, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
}

// Precedence: defaults < PSLAB_THREADS < config file < explicit flags.
run_config resolve_config(const CLI::App* sub, cli_options& o) {
    run_config cfg;
    apply_environment(cfg);
    if (!o.config_path.empty()) apply_config_file(cfg, o.config_path);
    if (sub->count("--threads")) cfg.threads = o.threads;
    if (sub->count("--epsilon")) cfg.epsilon = o.epsilon;
    if (sub->count("--eta")) cfg.eta = o.eta;
    if (sub->count("--slack")) cfg.slack = o.slack;
    if (sub->count("--seed")) cfg.seed = o.seed;
    if (sub->count("--segment-size")) cfg.segment_size = o.segment;
    if (sub->count("--out")) cfg.output_path = o.out_path;
    if (sub->count("--format")) cfg.format = parse_format(o.format_name);
    cfg.validate();
    if (cfg.threads == 0) cfg.threads = 1;  // deterministic default, no hw probing
    return cfg;
}

void emit(const run_config& cfg, const std::string& text) {
    if (cfg.output_path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
    } else {
        std::ofstream out(cfg.output_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file: " + cfg.output_path);
        out.write(text.data(), static_cast<std::streamsize>(text.size()));
    }
}

gamma_exponent parse_gamma_arg(const std::string& s) {
    gamma_exponent g = gamma_exponent::parse(s);
    if (!g.above_half())
        throw std::invalid_argument("gamma must lie in (1/2, 1): got " + s);
    return g;
}

std::vector<u64> parse_u64_list(const std::string& s) {
    std::vector<u64> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        std::size_t pos = 0;
        unsigned long long v = std::stoull(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("bad integer in list: " + tok);
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

nlohmann::ordered_json count_report_json(const count_report& r) {
    nlohmann::ordered_json j;
    j["x"] = r.x;
    auto gs = nlohmann::ordered_json::array();
    for (const auto& g : r.gammas) gs.push_back(g.str());
    j["gammas"] = gs;
    j["exact_count"] = r.exact_count;
    j["main_term"] = r.main_term;
    if (std::isfinite(r.leitmann_term)) j["leitmann_term"] = r.leitmann_term;
    else j["leitmann_term"] = nullptr;
    j["abs_error"] = r.abs_error;
    if (std::isfinite(r.rel_error)) j["rel_error"] = r.rel_error;
    else j["rel_error"] = nullptr;
    return j;
}

// ---------------------------------------------------------------------------
// count
// ---------------------------------------------------------------------------
int cmd_count(const CLI::App* sub, cli_options& o, const std::vector<std::string>& gammas_raw,
              u64 x) {
    run_config cfg = resolve_config(sub, o);
    if (x < 2) throw std::invalid_argument("x must be >= 2");
    std::vector<gamma_exponent> gs;
    for (const auto& s : gammas_raw) gs.push_back(parse_gamma_arg(s));
    worker_pool pool(cfg.threads);
    count_report r = make_count_report(x, gs, pool, cfg.segment_size);
    std::string text;
    if (cfg.format == output_format::csv) {
        text = std::string(count_csv_header()) + "\n" + count_csv_row(r, std::nullopt) + "\n";
    } else {
        auto arr = nlohmann::ordered_json::array();
        arr.push_back(count_report_json(r));
        text = arr.dump(2) + "\n";
    }
    emit(cfg, text);
    return 0;
}

// ---------------------------------------------------------------------------
// theorem
// ---------------------------------------------------------------------------
int cmd_theorem(const CLI::App* sub, cli_options& o, const std::string& g1_raw,
                const std::string& g2_raw, const std::string& grid_raw) {
    run_config cfg = resolve_config(sub, o);
    gamma_pair pair(parse_gamma_arg(g1_raw), parse_gamma_arg(g2_raw));
    std::vector<u64> grid = parse_u64_list(grid_raw);
    worker_pool pool(cfg.threads);
    theorem_run run = theorem_report(pair, grid, pool, cfg.segment_size);
    std::string text;
    if (cfg.format == output_format::csv) {
        text = std::string(count_csv_header()) + "\n";
        for (std::size_t i = 0; i < run.rows.size(); ++i) {
            bool last = i + 1 == run.rows.size();
            text += count_csv_row(run.rows[i], last ? run.fitted_exponent : std::nullopt);
            text += "\n";
        }
    } else {
        nlohmann::ordered_json j;
        auto rows = nlohmann::ordered_json::array();
        for (const auto& r : run.rows) rows.push_back(count_report_json(r));
        j["rows"] = rows;
        if (run.fitted_exponent) j["fitted_exponent"] = *run.fitted_exponent;
        else j["fitted_exponent"] = nullptr;
        text = j.dump(2) + "\n";
    }
    emit(cfg, text);
    return 0;
}

// ---------------------------------------------------------------------------
// lemma batteries
// ---------------------------------------------------------------------------
std::vector<lemma_check_report> battery_psi_fourier(const run_config& cfg, u64 points) {
    std::vector<lemma_check_report> out;
    const double hs[3] = {16.0, 256.0, 4096.0};
    for (double H : hs) {
        // Integer and half-integer corners first, then the uniform grid.
        out.push_back(psi_fourier_check(0.0, H, cfg.slack));
        out.push_back(psi_fourier_check(1.0, H, cfg.slack));
        out.push_back(psi_fourier_check(-2.0, H, cfg.slack));
        out.push_back(psi_fourier_check(0.5, H, cfg.slack));
        for (u64 i = 0; i < points; ++i) {
            double theta = (static_cast<double>(i) + 0.5) / static_cast<double>(points);
            out.push_back(psi_fourier_check(theta, H, cfg.slack));
        }
    }
    return out;
}

std::vector<lemma_check_report> battery_weyl(const run_config& cfg, u64 trials) {
    std::vector<lemma_check_report> out;
    std::mt19937_64 rng(cfg.seed);
    for (u64 t = 0; t < trials; ++t) {
        u64 N = 16 + rng() % 497;  // N <= 512
        std::vector<std::complex<double>> z(N);
        for (auto& v : z) {
            double u = static_cast<double>(rng() >> 11) * 0x1p-53;
            v = e_phase(static_cast<ld>(u)).c();
        }
        auto scan = weyl_vdc_scan(z);
        out.push_back(weyl_vdc_check(z, scan.worst_q));
    }
    return out;
}

std::vector<lemma_check_report> battery_vdc(const run_config& cfg) {
    std::vector<lemma_check_report> out;
    worker_pool pool(cfg.threads);
    // First-derivative test: linear phases with non-integer slope, and slowly
    // varying monomials that stay inside one integer-free derivative band.
    const double slopes[3] = {1.0 / 3.0, 2.0 / 7.0, 0.45};
    for (double s : slopes) {
        phase_spec f({{s, 1.0, 0.0}});
        out.push_back(vdc_derivative_check(f, 10, 20, 1, cfg.slack, pool));
    }
    out.push_back(vdc_derivative_check(phase_spec({{0.25, 0.5, 0.0}}), 100, 200, 1, cfg.slack, pool));
    out.push_back(vdc_derivative_check(phase_spec({{0.1, 2.0 / 3.0, 0.0}}), 50, 100, 1, cfg.slack, pool));
    // Second-derivative test on curved monomials.
    const double amps[3] = {3.0, 7.0, 20.0};
    for (double T : amps) {
        out.push_back(vdc_derivative_check(phase_spec({{T, 0.5, 0.0}}), 100, 200, 2, cfg.slack, pool));
        out.push_back(vdc_derivative_check(phase_spec({{T, 0.5, 0.0}}), 1000, 2000, 2, cfg.slack, pool));
    }
    out.push_back(vdc_derivative_check(phase_spec({{5.0, 1.5, 0.0}}), 100, 200, 2, cfg.slack, pool));
    return out;
}

std::vector<lemma_check_report> battery_zhai_sk(const run_config& cfg) {
    std::vector<lemma_check_report> out;
    worker_pool pool(cfg.threads);
    out.push_back(zhai_sk_check(phase_spec({{0.8, 0.5, 0.0}}), 4096, sk_regime::small_R,
                                cfg.eta, cfg.slack, pool));
    out.push_back(zhai_sk_check(phase_spec({{0.5, 0.5, 0.0}, {0.3, 1.0 / 3.0, 0.0}}), 4096,
                                sk_regime::small_R, cfg.eta, cfg.slack, pool));
    out.push_back(zhai_sk_check(phase_spec({{2.0, 1.5, 0.0}}), 1024, sk_regime::large_R,
                                cfg.eta, cfg.slack, pool));
    out.push_back(zhai_sk_check(phase_spec({{1.0, 1.25, 0.0}, {0.5, 0.75, 0.0}}), 1024,
                                sk_regime::large_R, cfg.eta, cfg.slack, pool));
    return out;
}

std::vector<lemma_check_report> battery_min_sum(const run_config& cfg) {
    std::vector<lemma_check_report> out;
    out.push_back(min_sum_zhai(2048, {64.0}, {0.9}, {0.0}, cfg.slack).report);
    out.push_back(min_sum_zhai(2048, {32.0, 64.0}, {0.9, 0.8}, {0.0, 0.5}, cfg.slack).report);
    out.push_back(min_sum_zhai(1024, {16.0, 16.0}, {0.97, 0.95}, {0.25, 0.75}, cfg.slack).report);
    return out;
}

std::vector<lemma_check_report> battery_kratzel(const run_config& cfg) {
    std::vector<lemma_check_report> out;
    const double golden = 0.61803398874989484820;
    out.push_back(kratzel_min_sum_check(phase_spec({{0.5, 1.0, 0.0}}), 100, 64.0, cfg.slack));
    out.push_back(kratzel_min_sum_check(phase_spec({{0.5, 1.0, 0.0}}), 1000, 64.0, cfg.slack));
    out.push_back(kratzel_min_sum_check(phase_spec({{golden, 1.0, 0.0}}), 1000, 64.0, cfg.slack));
    out.push_back(kratzel_min_sum_check(phase_spec({{0.3, 1.0, 0.0}}), 500, 32.0, cfg.slack));
    return out;
}

std::vector<lemma_check_report> battery_bprocess(const run_config& cfg) {
    std::vector<lemma_check_report> out;
    phase_spec unit_w({{1.0, 0.0, 0.0}});
    const double amps[4] = {40.0, 100.0, 200.0, 400.0};
    for (double T : amps) {
        out.push_back(b_process(phase_spec({{T, 0.5, 0.0}}), unit_w, 1000, 2000, 5.0).report);
        out.push_back(b_process(phase_spec({{T, 2.0 / 3.0, 0.0}}), unit_w, 1000, 2000, 5.0).report);
    }
    out.push_back(b_process(phase_spec({{100.0, 0.5, 0.0}, {20.0, 1.0 / 3.0, 0.0}}), unit_w,
                            1000, 2000, 5.0).report);
    out.push_back(b_process(phase_spec({{-150.0, 0.5, 0.0}, {-10.0, 1.0 / 3.0, 0.0}}), unit_w,
                            2000, 4000, 5.0).report);
    (void)cfg;
    return out;
}

std::vector<lemma_check_report> battery_delta(const run_config& cfg) {
    std::vector<lemma_check_report> out;
    const u64 ns[3] = {1000, 10000, 1000000};
    const u64 qs[3] = {1, 5, 17};
    const double gs[4] = {0.51, 0.7, 0.9, 0.97};
    for (u64 n : ns)
        for (u64 q : qs)
            for (double g : gs)
                if (n > 2 * q) out.push_back(delta_expansion_check(n, q, g, cfg.slack));
    return out;
}

std::vector<lemma_check_report> battery_case4(const run_config& cfg, u64 side) {
    std::vector<lemma_check_report> out;
    out.reserve(side * side);
    const i64 den1 = 2 * (static_cast<i64>(side) + 1);
    for (u64 i = 0; i < side; ++i) {
        // gamma1 = 1/2 + (i+1)/(2(side+1)) runs through (1/2, 1).
        gamma_exponent g1(static_cast<i64>(side) + 2 + static_cast<i64>(i), den1);
        for (u64 j = 0; j < side; ++j) {
            // gamma2 = 1/2 + (j+1)/(side+1) * (gamma1 - 1/2), strictly inside.
            i64 num2 = (static_cast<i64>(side) + 1) * (static_cast<i64>(side) + 1) +
                       (static_cast<i64>(i) + 1) * (static_cast<i64>(j) + 1);
            i64 den2 = den1 * (static_cast<i64>(side) + 1);
            gamma_pair pair(g1, gamma_exponent(num2, den2));
            auto ca = case4_coefficients(pair);
            bool signs = ca.A < 0 && ca.B < 0 && ca.C < 0 && ca.disc_AC > 0 && ca.disc_1 > 0;
            double rel = std::fabs(ca.disc_AC - ca.disc_AC_factored) /
                         std::fabs(ca.disc_AC_factored);
            auto r = make_report("case4",
                                 {{"gamma1", pair.g1().value()},
                                  {"gamma2", pair.g2().value()},
                                  {"A", ca.A},
                                  {"B", ca.B},
                                  {"C", ca.C},
                                  {"disc_AC", ca.disc_AC},
                                  {"disc_1", ca.disc_1}},
                                 rel, 1e-12, cfg.slack);
            r.pass = r.pass && signs;
            out.push_back(r);
        }
    }
    return out;
}

std::vector<lemma_check_report> battery_mh_eh(const run_config& cfg) {
    std::vector<lemma_check_report> out;
    std::mt19937_64 rng(cfg.seed);
    const double hs[2] = {16.0, 256.0};
    gamma_exponent g(9, 10);
    for (double H : hs)
        for (int t = 0; t < 25; ++t) {
            u64 n = 100 + rng() % 100000;
            out.push_back(mh_eh_split(n, H, g, cfg.slack).residual_report);
        }
    return out;
}

int cmd_lemma(const CLI::App* sub, cli_options& o, const std::string& id, u64 trials,
              u64 points, u64 grid_side) {
    run_config cfg = resolve_config(sub, o);
    std::vector<lemma_check_report> reports;
    if (id == "psi-fourier") reports = battery_psi_fourier(cfg, points);
    else if (id == "weyl") reports = battery_weyl(cfg, trials);
    else if (id == "vdc") reports = battery_vdc(cfg);
    else if (id == "zhai-sk") reports = battery_zhai_sk(cfg);
    else if (id == "min-sum") reports = battery_min_sum(cfg);
    else if (id == "kratzel") reports = battery_kratzel(cfg);
    else if (id == "bprocess") reports = battery_bprocess(cfg);
    else if (id == "delta") reports = battery_delta(cfg);
    else if (id == "case4") reports = battery_case4(cfg, grid_side);
    else if (id == "mh-eh") reports = battery_mh_eh(cfg);
    else {
        std::cerr << "unknown lemma id: " << id
                  << " (valid: psi-fourier weyl vdc zhai-sk min-sum kratzel bprocess delta"
                     " case4 mh-eh)\n";
        return 2;
    }
    emit(cfg, to_json(reports).dump(2) + "\n");
    for (const auto& r : reports)
        if (!r.pass) return 1;
    return 0;
}

// ---------------------------------------------------------------------------
// hb
// ---------------------------------------------------------------------------
int cmd_hb(const CLI::App* sub, cli_options& o, u64 limit, unsigned k, u64 z) {
    run_config cfg = resolve_config(sub, o);
    hb_result r = z == 0 ? heath_brown_decompose(limit, k)
                         : heath_brown_decompose(limit, k, z);
    std::ostringstream os;
    os << "k=" << r.k << " z=" << r.z << " limit=" << limit
       << " max_residual=" << format_g17(r.max_residual)
       << " worst_n=" << r.worst_n << "\n";
    emit(cfg, os.str());
    return r.max_residual <= 1e-8 ? 0 : 1;
}

// ---------------------------------------------------------------------------
// expsum
// ---------------------------------------------------------------------------
phase_spec parse_terms(const std::vector<std::string>& raw) {
    std::vector<phase_term> terms;
    for (const auto& s : raw) {
        std::stringstream ss(s);
        std::string tok;
        std::vector<double> vals;
        while (std::getline(ss, tok, ','))
            vals.push_back(std::stod(tok));
        if (vals.size() < 2 || vals.size() > 3)
            throw std::invalid_argument("term must be a,alpha[,u]: " + s);
        terms.push_back({vals[0], vals[1], vals.size() == 3 ? vals[2] : 0.0});
    }
    return phase_spec(terms);
}

int cmd_expsum(const CLI::App* sub, cli_options& o, const std::string& kind,
               const std::string& g1_raw, const std::string& g2_raw, i64 h1, i64 h2,
               const std::string& x_grid_raw, const std::string& m_grid_raw, u64 n_inner,
               const std::vector<std::string>& terms_raw, u64 m0, u64 m1) {
    run_config cfg = resolve_config(sub, o);
    worker_pool pool(cfg.threads);
    std::string text;

    if (kind == "raw") {
        if (terms_raw.empty()) throw std::invalid_argument("raw kind needs --term");
        phase_spec f = parse_terms(terms_raw);
        auto s = exp_sum(f, m0, m1, pool);
        if (cfg.format == output_format::json) {
            nlohmann::ordered_json j;
            j["kind"] = "raw";
            j["m0"] = m0;
            j["m1"] = m1;
            j["sum_re"] = s.real();
            j["sum_im"] = s.imag();
            text = j.dump(2) + "\n";
        } else {
            double env = static_cast<double>(m1 - m0);
            text = "X,abs_sum,envelope,ratio,note\n";
            text += std::to_string(m1) + "," + format_g17(std::abs(s)) + "," +
                    format_g17(env) + "," + format_g17(env > 0 ? std::abs(s) / env : 0.0) +
                    ",\n";
        }
        emit(cfg, text);
        return 0;
    }

    if (kind != "tstar" && kind != "type1" && kind != "type2")
        throw std::invalid_argument("kind must be tstar, type1, type2 or raw");
    if (h1 == 0 || h2 == 0)
        throw std::invalid_argument("frequencies h1, h2 must be nonzero for prime kinds");
    gamma_pair pair(parse_gamma_arg(g1_raw), parse_gamma_arg(g2_raw));
    double expo = pair.g1().value() + pair.g2().value() - 1.0;

    struct row {
        double X;
        double abs_sum;
        std::string note;
    };
    std::vector<row> rows;

    if (kind == "tstar") {
        for (u64 X : parse_u64_list(x_grid_raw)) {
            auto s = prime_exp_sum(X, 2 * X, h1, h2, pair, pool, cfg.segment_size);
            rows.push_back({static_cast<double>(X), std::abs(s), ""});
        }
    } else {
        if (n_inner == 0) throw std::invalid_argument("type kinds need --n");
        for (u64 M : parse_u64_list(m_grid_raw)) {
            bilinear_spec spec(M, n_inner, h1, h2, pair);
            spec.seed = cfg.seed;
            spec.a_kind = coeff_kind::mu_signs;
            spec.b_kind = kind == "type2" ? coeff_kind::random_unimodular : coeff_kind::unit;
            auto s = kind == "type2" ? type_II_sum(spec, pool) : type_I_sum(spec, pool);
            std::string note = spec.inner_range_in_window(cfg.epsilon) ? "" : "outside-window";
            rows.push_back({spec.X(), std::abs(s), note});
        }
    }

    if (cfg.format == output_format::json) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            nlohmann::ordered_json j;
            j["X"] = r.X;
            j["abs_sum"] = r.abs_sum;
            double env = std::pow(r.X, expo);
            j["envelope"] = env;
            j["ratio"] = r.abs_sum / env;
            j["note"] = r.note;
            arr.push_back(j);
        }
        text = arr.dump(2) + "\n";
    } else {
        text = "X,abs_sum,envelope,ratio,note\n";
        for (const auto& r : rows) {
            double env = std::pow(r.X, expo);
            text += format_g17(r.X) + "," + format_g17(r.abs_sum) + "," + format_g17(env) +
                    "," + format_g17(r.abs_sum / env) + "," + r.note + "\n";
        }
    }
    emit(cfg, text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"primes in intersections of Piatetski-Shapiro sets"};
    app.require_subcommand(1);

    cli_options o;

    auto* count_sub = app.add_subcommand("count", "exact counts against the analytic terms");
    std::vector<std::string> gammas_raw;
    u64 count_x = 0;
    count_sub->add_option("--gamma", gammas_raw, "exponent as a/b, repeatable")->required();
    count_sub->add_option("--x", count_x, "count primes up to x")->required();
    add_config_flags(count_sub, o);

    auto* theorem_sub = app.add_subcommand("theorem", "asymptotic verification over an x grid");
    std::string g1_raw, g2_raw, grid_raw;
    theorem_sub->add_option("--gamma1", g1_raw, "larger exponent a/b")->required();
    theorem_sub->add_option("--gamma2", g2_raw, "smaller exponent a/b")->required();
    theorem_sub->add_option("--x-grid", grid_raw, "comma-separated ascending x values")->required();
    add_config_flags(theorem_sub, o);

    auto* lemma_sub = app.add_subcommand("lemma", "numerical check batteries");
    std::string lemma_id;
    u64 trials = 200, points = 512, grid_side = 100;
    lemma_sub->add_option("--id", lemma_id, "battery id")->required();
    lemma_sub->add_option("--trials", trials, "random trials for seeded batteries");
    lemma_sub->add_option("--points", points, "grid points for theta batteries");
    lemma_sub->add_option("--grid-side", grid_side, "side length of the gamma grid");
    add_config_flags(lemma_sub, o);

    auto* hb_sub = app.add_subcommand("hb", "Heath-Brown identity residual");
    u64 hb_limit = 0, hb_z = 0;
    unsigned hb_k = 4;
    hb_sub->add_option("--limit", hb_limit, "check n up to this limit")->required();
    hb_sub->add_option("--k", hb_k, "identity order, 1..4")->check(CLI::Range(1u, 4u));
    hb_sub->add_option("--z", hb_z, "truncation parameter (default from limit)");
    add_config_flags(hb_sub, o);

    auto* exp_sub = app.add_subcommand("expsum", "exponential-sum scans");
    std::string exp_kind, exp_g1, exp_g2, exp_x_grid, exp_m_grid;
    i64 exp_h1 = 1, exp_h2 = 1;
    u64 exp_n = 0, exp_m0 = 0, exp_m1 = 0;
    std::vector<std::string> exp_terms;
    exp_sub->add_option("--kind", exp_kind, "tstar, type1, type2 or raw")->required();
    exp_sub->add_option("--gamma1", exp_g1, "larger exponent a/b");
    exp_sub->add_option("--gamma2", exp_g2, "smaller exponent a/b");
    exp_sub->add_option("--h1", exp_h1, "first frequency");
    exp_sub->add_option("--h2", exp_h2, "second frequency");
    exp_sub->add_option("--x-grid", exp_x_grid, "tstar: comma-separated X values");
    exp_sub->add_option("--m-grid", exp_m_grid, "type kinds: comma-separated M values");
    exp_sub->add_option("--n", exp_n, "type kinds: inner range length");
    exp_sub->add_option("--term", exp_terms, "raw: phase term a,alpha[,u], repeatable");
    exp_sub->add_option("--m0", exp_m0, "raw: range start (exclusive)");
    exp_sub->add_option("--m1", exp_m1, "raw: range end (inclusive)");
    add_config_flags(exp_sub, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (count_sub->parsed()) return cmd_count(count_sub, o, gammas_raw, count_x);
        if (theorem_sub->parsed()) return cmd_theorem(theorem_sub, o, g1_raw, g2_raw, grid_raw);
        if (lemma_sub->parsed())
            return cmd_lemma(lemma_sub, o, lemma_id, trials, points, grid_side);
        if (hb_sub->parsed()) return cmd_hb(hb_sub, o, hb_limit, hb_k, hb_z);
        if (exp_sub->parsed())
            return cmd_expsum(exp_sub, o, exp_kind, exp_g1, exp_g2, exp_h1, exp_h2, exp_x_grid,
                              exp_m_grid, exp_n, exp_terms, exp_m0, exp_m1);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
