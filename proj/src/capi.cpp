#include "fdsic/fdsic.h"

#include "fdsic/complexity.hpp"
#include "fdsic/lsq.hpp"
#include "fdsic/mf_sic.hpp"
#include "fdsic/sim.hpp"

#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

struct fdsic_config {
    fdsic::ExperimentConfig cfg;
};

namespace {

thread_local std::string g_last_error = "ok";

fdsic_status fail(fdsic_status code, const std::string& message) {
    g_last_error = message;
    return code;
}

char* dup_string(const std::string& s) {
    char* out = new (std::nothrow) char[s.size() + 1];
    if (out)
        std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
fdsic_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error = "ok";
        return FDSIC_OK;
    } catch (const fdsic::singular_system_error& e) {
        return fail(FDSIC_ERR_SINGULAR, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(FDSIC_ERR_PARAM, e.what());
    } catch (const std::ios_base::failure& e) {
        return fail(FDSIC_ERR_IO, e.what());
    } catch (const std::runtime_error& e) {
        return fail(FDSIC_ERR_NUMERIC, e.what());
    } catch (const std::bad_alloc&) {
        return fail(FDSIC_ERR_INTERNAL, "out of memory");
    } catch (...) {
        return fail(FDSIC_ERR_INTERNAL, "unknown error");
    }
}

fdsic_status set_key(fdsic::ExperimentConfig& c, const std::string& key, const std::string& value) {
    auto as_ll = [&] { return std::stoll(value); };
    auto as_double = [&] { return std::stod(value); };
    if (key == "n")
        c.n = static_cast<int>(as_ll());
    else if (key == "np")
        c.n_pilot = static_cast<int>(as_ll());
    else if (key == "m")
        c.m = static_cast<int>(as_ll());
    else if (key == "lg")
        c.l_g = static_cast<int>(as_ll());
    else if (key == "lq")
        c.l_q = static_cast<int>(as_ll());
    else if (key == "p")
        c.p = static_cast<int>(as_ll());
    else if (key == "packets")
        c.n_packets = static_cast<int>(as_ll());
    else if (key == "channel-span")
        c.channel_span_symbols = static_cast<int>(as_ll());
    else if (key == "jobs")
        c.jobs = static_cast<int>(as_ll());
    else if (key == "seed")
        c.master_seed = static_cast<std::uint64_t>(as_ll());
    else if (key == "rolloff")
        c.rolloff = as_double();
    else if (key == "snr-db")
        c.snr_db = as_double();
    else if (key == "ibo-db")
        c.ibo_db = as_double();
    else if (key == "smoothness")
        c.rapp_smoothness = as_double();
    else if (key == "method")
        c.method = fdsic::parse_method(value);
    else
        throw std::invalid_argument("unknown configuration key: " + key);
    return FDSIC_OK;
}

long long count_failures(const std::vector<fdsic::PacketResult>& results) {
    long long failed = 0;
    for (const auto& r : results)
        failed += (r.hammerstein_failed ? 1 : 0) + (r.learned_failed ? 1 : 0);
    return failed;
}

} // namespace

extern "C" {

fdsic_config* fdsic_config_create(void) { return new (std::nothrow) fdsic_config{}; }

void fdsic_config_destroy(fdsic_config* cfg) { delete cfg; }

fdsic_status fdsic_config_set_int(fdsic_config* cfg, const char* key, long long value) {
    if (!cfg || !key)
        return fail(FDSIC_ERR_PARAM, "null argument");
    return guarded([&] { set_key(cfg->cfg, key, std::to_string(value)); });
}

fdsic_status fdsic_config_set_real(fdsic_config* cfg, const char* key, double value) {
    if (!cfg || !key)
        return fail(FDSIC_ERR_PARAM, "null argument");
    return guarded([&] {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17g", value);
        set_key(cfg->cfg, key, buf);
    });
}

fdsic_status fdsic_config_set_string(fdsic_config* cfg, const char* key, const char* value) {
    if (!cfg || !key || !value)
        return fail(FDSIC_ERR_PARAM, "null argument");
    return guarded([&] { set_key(cfg->cfg, key, value); });
}

fdsic_status fdsic_config_load_file(fdsic_config* cfg, const char* path) {
    if (!cfg || !path)
        return fail(FDSIC_ERR_PARAM, "null argument");
    return guarded([&] {
        std::ifstream in(path);
        if (!in)
            throw std::ios_base::failure(std::string("cannot open config file: ") + path);
        std::string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#')
                continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("config file line " + std::to_string(line_no) +
                                            ": expected key=value");
            auto trim = [](std::string s) {
                const auto b = s.find_first_not_of(" \t\r");
                const auto e = s.find_last_not_of(" \t\r");
                return (b == std::string::npos) ? std::string() : s.substr(b, e - b + 1);
            };
            set_key(cfg->cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
        }
    });
}

fdsic_status fdsic_run_single(const fdsic_config* cfg, char** csv_out,
                              long long* packets_failed) {
    if (!cfg || !csv_out)
        return fail(FDSIC_ERR_PARAM, "null argument");
    return guarded([&] {
        const auto results = fdsic::run_packets(cfg->cfg);
        if (packets_failed)
            *packets_failed = count_failures(results);
        *csv_out = dup_string(fdsic::single_csv(cfg->cfg, results));
        if (!*csv_out)
            throw std::bad_alloc();
    });
}

fdsic_status fdsic_run_sweep(const fdsic_config* cfg, const char* param, const double* values,
                             size_t n_values, char** csv_out, long long* packets_failed) {
    if (!cfg || !param || !values || n_values == 0 || !csv_out)
        return fail(FDSIC_ERR_PARAM, "null argument");
    return guarded([&] {
        const std::vector<double> vals(values, values + n_values);
        const auto result = fdsic::sweep(cfg->cfg, param, vals);
        if (packets_failed) {
            long long failed = 0;
            for (const auto& p : result.points)
                failed += p.failed_hammerstein + p.failed_learned;
            *packets_failed = failed;
        }
        *csv_out = dup_string(fdsic::sweep_csv(result));
        if (!*csv_out)
            throw std::bad_alloc();
    });
}

fdsic_status fdsic_run_ber(const fdsic_config* cfg, const double* snr_grid, size_t n_points,
                           long long min_bits_per_point, char** csv_out) {
    if (!cfg || !snr_grid || n_points == 0 || !csv_out)
        return fail(FDSIC_ERR_PARAM, "null argument");
    return guarded([&] {
        const std::vector<double> grid(snr_grid, snr_grid + n_points);
        const auto result = fdsic::run_ber(cfg->cfg, grid, min_bits_per_point);
        *csv_out = dup_string(fdsic::ber_csv(result));
        if (!*csv_out)
            throw std::bad_alloc();
    });
}

fdsic_status fdsic_complexity_table(const fdsic_config* cfg, char** text_out) {
    if (!cfg || !text_out)
        return fail(FDSIC_ERR_PARAM, "null argument");
    return guarded([&] {
        fdsic::ComplexityInput in;
        in.n = cfg->cfg.n;
        in.m = cfg->cfg.m;
        in.l_g = cfg->cfg.l_g;
        in.l_q = cfg->cfg.l_q;
        in.p = cfg->cfg.p;
        std::ostringstream os;
        os << "real multiplications (analytical normal-equation counts; the\n"
              "shipped solver uses QR, so these describe the published method)\n";
        os << "method      runtime   training\n";
        os << "hammerstein " << fdsic::runtime_hammerstein(in) << "  "
           << fdsic::training_hammerstein(in) << "\n";
        os << "learned_mf  " << fdsic::runtime_proposed(in) << "  "
           << fdsic::training_proposed(in) << "\n";
        *text_out = dup_string(os.str());
        if (!*text_out)
            throw std::bad_alloc();
    });
}

fdsic_status fdsic_export_mf(const fdsic_config* cfg, const char* csv_path) {
    if (!cfg || !csv_path)
        return fail(FDSIC_ERR_PARAM, "null argument");
    return guarded([&] {
        const auto mf = fdsic::fit_packet_mf(cfg->cfg, 0);
        std::ofstream out(csv_path);
        if (!out)
            throw std::ios_base::failure(std::string("cannot open for writing: ") + csv_path);
        fdsic::save_mf_csv(mf, out);
        if (!out)
            throw std::ios_base::failure("write failed");
    });
}

void fdsic_string_free(char* s) { delete[] s; }

const char* fdsic_last_error(void) { return g_last_error.c_str(); }

const char* fdsic_version(void) { return "0.1.0"; }

} // extern "C"
