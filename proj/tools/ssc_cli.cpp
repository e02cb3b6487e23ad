// Command line front end; all computation goes through the shared C API.
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ssc/ssc.h"

namespace {

using nlohmann::json;

int fail(ssc_status st) {
    std::cerr << "error: " << ssc_last_error() << "\n";
    (void)st;
    return 2;
}

void write_file(const std::string& path, const char* content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
}

std::string take(char* s) {
    std::string copy = s ? s : "";
    ssc_string_free(s);
    return copy;
}

int run_bounds(double v, double rate_fraction, int64_t L, double a, double alpha0,
               const std::string& dict, const std::string& out) {
    json cfg;
    cfg["v"] = v;
    cfg["rate_fraction"] = rate_fraction;
    cfg["L"] = L;
    cfg["a"] = a;
    cfg["alpha0"] = alpha0;
    cfg["dict"] = dict;
    char* report = nullptr;
    char* csv = nullptr;
    const ssc_status st = ssc_bounds_report(cfg.dump().c_str(), &report, &csv);
    if (st != SSC_OK) return fail(st);
    write_file(out, report);
    write_file(out + ".per_l.csv", csv);
    ssc_string_free(report);
    ssc_string_free(csv);
    std::cout << "wrote " << out << " and " << out << ".per_l.csv\n";
    return 0;
}

int run_simulate(const std::string& config_path, int64_t trials, int64_t seed,
                 int threads, const std::string& out_dir) {
    std::ifstream in(config_path);
    if (!in) {
        std::cerr << "error: cannot read config " << config_path << "\n";
        return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    json cfg;
    try {
        cfg = json::parse(buf.str());
    } catch (const std::exception& e) {
        std::cerr << "error: bad config JSON: " << e.what() << "\n";
        return 2;
    }
    if (trials > 0) cfg["trials"] = trials;
    if (seed >= 0) cfg["master_seed"] = uint64_t(seed);
    if (threads > 0) cfg["threads"] = threads;

    char* summary = nullptr;
    char* trials_csv = nullptr;
    char* hist_csv = nullptr;
    const ssc_status st =
        ssc_simulate(cfg.dump().c_str(), &summary, &trials_csv, &hist_csv);
    if (st != SSC_OK) return fail(st);

    std::filesystem::create_directories(out_dir);
    write_file(out_dir + "/summary.json", summary);
    write_file(out_dir + "/trials.csv", trials_csv);
    write_file(out_dir + "/histogram.csv", hist_csv);
    std::cout << take(summary) << "\n";
    ssc_string_free(trials_csv);
    ssc_string_free(hist_csv);
    std::cout << "wrote " << out_dir << "/{summary.json,trials.csv,histogram.csv}\n";
    return 0;
}

int run_verify(const std::string& suite, int64_t lmax, const std::string& out) {
    char* report = nullptr;
    int64_t violations = 0;
    const ssc_status st = ssc_verify_lemmas(suite.c_str(), lmax, &report, &violations);
    if (st != SSC_OK) return fail(st);
    if (!out.empty()) write_file(out, report);
    std::cout << take(report) << "\n";
    if (violations > 0) {
        std::cerr << violations << " violation(s) found\n";
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sparse superposition codes workbench"};
    app.require_subcommand(1);

    double v = 15.0, rate_fraction = 0.5, a = 1.0, alpha0 = 0.1;
    int64_t L = 10;
    std::string dict = "bernoulli", out;
    auto* bounds = app.add_subcommand("bounds", "analytic error-bound report");
    bounds->add_option("--v", v, "SNR")->required();
    bounds->add_option("--rate-fraction", rate_fraction, "R as a fraction of capacity")
        ->required();
    bounds->add_option("--L", L, "number of sections")->required();
    bounds->add_option("--a", a, "section size rate")->required();
    bounds->add_option("--alpha0", alpha0, "section error rate threshold")->required();
    bounds->add_option("--dict", dict, "bernoulli|gaussian");
    bounds->add_option("--out", out, "output JSON path")->required();

    std::string config_path, sim_out;
    int64_t trials = 0, seed = -1;
    int threads = 0;
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo decoding run");
    simulate->add_option("--config", config_path, "config JSON file")->required();
    simulate->add_option("--trials", trials, "override trial count");
    simulate->add_option("--seed", seed, "override master seed");
    simulate->add_option("--threads", threads, "worker thread count");
    simulate->add_option("--out", sim_out, "output directory")->required();

    std::string suite = "all", verify_out;
    int64_t lmax = 2000;
    auto* verify = app.add_subcommand("verify-lemmas", "numerical lemma sweeps");
    verify->add_option("--suite", suite, "phi|quad1d|quad2d|quad3d|em|all");
    verify->add_option("--lmax", lmax, "largest l for the phi/ratio sweep");
    verify->add_option("--out", verify_out, "report JSON path");

    int64_t lmin = 1, plmax = 100, step = 1;
    std::string phi_out;
    auto* phi_table = app.add_subcommand("phi-table", "phi(l) table as CSV");
    phi_table->add_option("--lmin", lmin, "first l");
    phi_table->add_option("--lmax", plmax, "last l")->required();
    phi_table->add_option("--step", step, "step");
    phi_table->add_option("--out", phi_out, "CSV path")->required();

    std::string L_list = "100,1000,10000,100000", iota_out;
    double it_alpha0 = 0.1, it_v = 15.0;
    auto* iota_table = app.add_subcommand("iota-table", "iota(L) table as CSV");
    iota_table->add_option("--L-list", L_list, "comma separated L values");
    iota_table->add_option("--alpha0", it_alpha0, "section error rate threshold");
    iota_table->add_option("--v", it_v, "SNR");
    iota_table->add_option("--out", iota_out, "CSV path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (bounds->parsed())
            return run_bounds(v, rate_fraction, L, a, alpha0, dict, out);
        if (simulate->parsed())
            return run_simulate(config_path, trials, seed, threads, sim_out);
        if (verify->parsed()) return run_verify(suite, lmax, verify_out);
        if (phi_table->parsed()) {
            char* csv = nullptr;
            const ssc_status st = ssc_phi_table(lmin, plmax, step, &csv);
            if (st != SSC_OK) return fail(st);
            write_file(phi_out, csv);
            ssc_string_free(csv);
            std::cout << "wrote " << phi_out << "\n";
            return 0;
        }
        if (iota_table->parsed()) {
            char* csv = nullptr;
            const ssc_status st = ssc_iota_table(L_list.c_str(), it_alpha0, it_v, &csv);
            if (st != SSC_OK) return fail(st);
            write_file(iota_out, csv);
            ssc_string_free(csv);
            std::cout << "wrote " << iota_out << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
