// Command-line front end. Talks to the library exclusively through the
// C API in fdsic/fdsic.h.

#include "fdsic/fdsic.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

struct ConfigDeleter {
    void operator()(fdsic_config* c) const { fdsic_config_destroy(c); }
};
using ConfigHandle = std::unique_ptr<fdsic_config, ConfigDeleter>;

struct StringDeleter {
    void operator()(char* s) const { fdsic_string_free(s); }
};
using LibString = std::unique_ptr<char, StringDeleter>;

[[noreturn]] void die(const std::string& context) {
    std::cerr << "fdsic: " << context << ": " << fdsic_last_error() << "\n";
    std::exit(1);
}

void check(fdsic_status status, const std::string& context) {
    if (status != FDSIC_OK)
        die(context);
}

// "0:3:21" (start:step:stop, inclusive) or "0,3,6" or a single number.
std::vector<double> parse_values(const std::string& text) {
    std::vector<double> out;
    if (text.find(':') != std::string::npos) {
        double start = 0.0, step = 0.0, stop = 0.0;
        if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &start, &step, &stop) != 3 || step <= 0.0)
            throw CLI::ValidationError("values", "expected start:step:stop with step > 0");
        for (double v = start; v <= stop + 1e-9; v += step)
            out.push_back(v);
        return out;
    }
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        out.push_back(std::stod(item));
    }
    if (out.empty())
        throw CLI::ValidationError("values", "no values given");
    return out;
}

void emit(const std::string& out_path, const char* text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        std::cerr << "fdsic: cannot open " << out_path << " for writing\n";
        std::exit(1);
    }
    f << text;
}

// Flag layering: defaults < --config file < explicit flags.
struct CommonFlags {
    long long n = 0, np = 0, m = 0, lg = 0, lq = 0, p = 0, packets = 0, channel_span = 0,
              jobs = 0, seed = 0;
    double rolloff = 0.0, snr_db = 0.0, ibo_db = 0.0, smoothness = 0.0;
    std::string method;
    std::string config_path;
    std::string out_path;

    std::vector<std::pair<std::string, CLI::Option*>> int_opts;
    std::vector<std::pair<std::string, CLI::Option*>> real_opts;
    CLI::Option* method_opt = nullptr;

    void attach(CLI::App* cmd) {
        int_opts = {
            {"n", cmd->add_option("--n", n, "data symbols per packet")},
            {"np", cmd->add_option("--np", np, "pilot symbols per packet")},
            {"m", cmd->add_option("--m", m, "oversampling factor")},
            {"lg", cmd->add_option("--lg", lg, "filter span in symbols")},
            {"lq", cmd->add_option("--lq", lq, "memory-polynomial FIR length")},
            {"p", cmd->add_option("--p", p, "memory-polynomial max degree (odd)")},
            {"packets", cmd->add_option("--packets", packets, "packets per point")},
            {"channel-span", cmd->add_option("--channel-span", channel_span,
                                             "multipath span in symbols")},
            {"jobs", cmd->add_option("--jobs", jobs, "worker threads (0 = all cores)")},
            {"seed", cmd->add_option("--seed", seed, "master seed")},
        };
        real_opts = {
            {"rolloff", cmd->add_option("--rolloff", rolloff, "RRC roll-off factor")},
            {"snr-db", cmd->add_option("--snr-db", snr_db, "interference-to-noise ratio, dB")},
            {"ibo-db", cmd->add_option("--ibo-db", ibo_db, "PA input back-off, dB")},
            {"smoothness", cmd->add_option("--smoothness", smoothness, "Rapp smoothness")},
        };
        method_opt = cmd->add_option("--method", method, "hammerstein | learned_mf | both");
        cmd->add_option("--config", config_path, "key=value configuration file");
        cmd->add_option("--out", out_path, "output path (default: stdout)");
    }

    ConfigHandle build() const {
        ConfigHandle cfg(fdsic_config_create());
        if (!cfg)
            die("config");
        if (!config_path.empty())
            check(fdsic_config_load_file(cfg.get(), config_path.c_str()), "config file");
        for (const auto& [key, opt] : int_opts) {
            if (opt->count() == 0)
                continue;
            long long v = 0;
            opt->results();
            v = std::stoll(opt->results().front());
            check(fdsic_config_set_int(cfg.get(), key.c_str(), v), "--" + key);
        }
        for (const auto& [key, opt] : real_opts) {
            if (opt->count() == 0)
                continue;
            check(fdsic_config_set_real(cfg.get(), key.c_str(), std::stod(opt->results().front())),
                  "--" + key);
        }
        if (method_opt->count() > 0)
            check(fdsic_config_set_string(cfg.get(), "method", method.c_str()), "--method");
        return cfg;
    }
};

int finish_run(long long failed, long long total_packets) {
    if (failed > 0)
        std::cerr << "fdsic: " << failed << " fit(s) failed across " << total_packets
                  << " packet runs\n";
    if (total_packets > 0 && static_cast<double>(failed) > 0.001 * static_cast<double>(total_packets))
        return 1;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Full-duplex digital self-interference cancellation simulator"};
    app.require_subcommand(1);

    auto* single = app.add_subcommand("single", "per-packet residuals at one operating point");
    CommonFlags single_flags;
    single_flags.attach(single);

    auto* sweep_cmd = app.add_subcommand("sweep", "mean residual versus a swept parameter");
    CommonFlags sweep_flags;
    sweep_flags.attach(sweep_cmd);
    std::string sweep_param;
    std::string sweep_values = "0:3:21";
    sweep_cmd->add_option("--param", sweep_param, "snr | lg | m | ibo")->required();
    sweep_cmd->add_option("--values", sweep_values, "start:step:stop or comma list");

    auto* ber = app.add_subcommand("ber", "two-node BPSK bit error rate versus SNR");
    CommonFlags ber_flags;
    ber_flags.attach(ber);
    std::string ber_grid = "0:2:12";
    long long ber_min_bits = 100000;
    ber->add_option("--snr-grid", ber_grid, "start:step:stop or comma list");
    ber->add_option("--min-bits", ber_min_bits, "minimum bits per grid point");

    auto* complexity = app.add_subcommand("complexity", "analytical multiplication counts");
    CommonFlags complexity_flags;
    complexity_flags.attach(complexity);

    auto* export_mf = app.add_subcommand("export-mf", "fit and export the learned filter as CSV");
    CommonFlags export_flags;
    export_flags.attach(export_mf);

    CLI11_PARSE(app, argc, argv);

    if (single->parsed()) {
        auto cfg = single_flags.build();
        char* csv = nullptr;
        long long failed = 0;
        check(fdsic_run_single(cfg.get(), &csv, &failed), "single");
        LibString guard(csv);
        emit(single_flags.out_path, csv);
        long long packets = single_flags.packets > 0 ? single_flags.packets : 500;
        return finish_run(failed, packets);
    }
    if (sweep_cmd->parsed()) {
        auto cfg = sweep_flags.build();
        const auto values = parse_values(sweep_values);
        char* csv = nullptr;
        long long failed = 0;
        check(fdsic_run_sweep(cfg.get(), sweep_param.c_str(), values.data(), values.size(), &csv,
                              &failed),
              "sweep");
        LibString guard(csv);
        emit(sweep_flags.out_path, csv);
        long long packets = (sweep_flags.packets > 0 ? sweep_flags.packets : 500) *
                            static_cast<long long>(values.size());
        return finish_run(failed, packets);
    }
    if (ber->parsed()) {
        auto cfg = ber_flags.build();
        const auto grid = parse_values(ber_grid);
        char* csv = nullptr;
        check(fdsic_run_ber(cfg.get(), grid.data(), grid.size(), ber_min_bits, &csv), "ber");
        LibString guard(csv);
        emit(ber_flags.out_path, csv);
        return 0;
    }
    if (complexity->parsed()) {
        auto cfg = complexity_flags.build();
        char* text = nullptr;
        check(fdsic_complexity_table(cfg.get(), &text), "complexity");
        LibString guard(text);
        emit(complexity_flags.out_path, text);
        return 0;
    }
    if (export_mf->parsed()) {
        auto cfg = export_flags.build();
        std::string path = export_flags.out_path.empty() ? "g1.csv" : export_flags.out_path;
        check(fdsic_export_mf(cfg.get(), path.c_str()), "export-mf");
        std::cerr << "fdsic: wrote " << path << "\n";
        return 0;
    }
    return 1;
}
