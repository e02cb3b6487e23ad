#include "ssc/ssc.h"

#include <cstring>
#include <new>
#include <sstream>
#include <stdexcept>
#include <string>

#include "harness.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* p = new char[s.size() + 1];
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

void set_output(char** out, const std::string& s) {
    if (out) *out = dup_string(s);
}

template <typename Fn>
ssc_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const std::length_error& e) {
        g_last_error = e.what();
        return SSC_ERR_RESOURCE;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return SSC_ERR_CONFIG;
    } catch (const std::domain_error& e) {
        g_last_error = e.what();
        return SSC_ERR_DOMAIN;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SSC_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return SSC_ERR_INTERNAL;
    }
}

} // namespace

extern "C" {

const char* ssc_version(void) { return "1.0.0"; }

const char* ssc_last_error(void) { return g_last_error.c_str(); }

void ssc_string_free(char* s) { delete[] s; }

ssc_status ssc_capacity(double v, double* nats_out) {
    return guarded([&]() {
        if (!nats_out) throw std::invalid_argument("nats_out is null");
        *nats_out = ssc::capacity(v);
        return SSC_OK;
    });
}

ssc_status ssc_c_alpha(double alpha, double v, double* nats_out) {
    return guarded([&]() {
        if (!nats_out) throw std::invalid_argument("nats_out is null");
        *nats_out = ssc::c_alpha(alpha, v);
        return SSC_OK;
    });
}

ssc_status ssc_bounds_report(const char* config_json, char** json_out, char** csv_out) {
    return guarded([&]() {
        if (!config_json) throw std::invalid_argument("config_json is null");
        const auto config = ssc::ExperimentConfig::from_json(config_json);
        const ssc::BoundReport rep = ssc::compare_bounds(config);
        set_output(json_out, rep.to_json());
        set_output(csv_out, rep.per_l_csv());
        return SSC_OK;
    });
}

ssc_status ssc_simulate(const char* config_json, char** summary_json_out,
                        char** trials_csv_out, char** histogram_csv_out) {
    return guarded([&]() {
        if (!config_json) throw std::invalid_argument("config_json is null");
        const auto config = ssc::ExperimentConfig::from_json(config_json);
        const ssc::MonteCarloResult res = ssc::run_monte_carlo(config);
        set_output(summary_json_out, res.summary_json());
        set_output(trials_csv_out, res.trials_csv());
        set_output(histogram_csv_out, res.histogram_csv());
        return SSC_OK;
    });
}

ssc_status ssc_verify_lemmas(const char* suite, int64_t lmax, char** json_out,
                             int64_t* violations_out) {
    return guarded([&]() {
        const ssc::LemmaReport rep =
            ssc::verify_lemmas(suite ? suite : "all", lmax > 0 ? lmax : 2000);
        set_output(json_out, rep.to_json());
        if (violations_out) *violations_out = rep.violations;
        return SSC_OK;
    });
}

ssc_status ssc_phi_table(int64_t lmin, int64_t lmax, int64_t step, char** csv_out) {
    return guarded([&]() {
        set_output(csv_out, ssc::phi_table_csv(lmin, lmax, step));
        return SSC_OK;
    });
}

ssc_status ssc_iota_table(const char* L_list_csv, double alpha0, double v,
                          char** csv_out) {
    return guarded([&]() {
        if (!L_list_csv) throw std::invalid_argument("L_list_csv is null");
        std::vector<int64_t> Ls;
        std::stringstream ss(L_list_csv);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            Ls.push_back(std::stoll(item));
        }
        if (Ls.empty()) throw std::invalid_argument("empty L list");
        set_output(csv_out, ssc::iota_table_csv(Ls, alpha0, v));
        return SSC_OK;
    });
}

} // extern "C"
