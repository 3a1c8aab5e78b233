#pragma once

#include "fdsic/frontend.hpp"
#include "fdsic/hammerstein.hpp"
#include "fdsic/mf_sic.hpp"
#include "fdsic/rng.hpp"

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace fdsic {

enum class Method { hammerstein, learned_mf, both };

std::string method_name(Method m);
Method parse_method(const std::string& name);

/// Packet-level Monte Carlo configuration. Defaults are the reference
/// working point: N = N_p = 128, M = 8, L_g = L_q = 4, P = 3, roll-off 0.35,
/// Rapp smoothness 2, IBO 5 dB, channel span 4 symbols.
struct ExperimentConfig {
    int n = 128;       ///< data symbols per packet (power of two)
    int n_pilot = 128; ///< pilot symbols per packet (power of two)
    int m = 8;         ///< oversampling factor
    int l_g = 4;       ///< pulse-shaping / receive filter span, symbols
    int l_q = 4;       ///< memory-polynomial FIR length, symbols
    int p = 3;         ///< memory-polynomial max degree (odd)
    double rolloff = 0.35;
    double snr_db = 0.0; ///< interference power over noise power, ahead of the receive filter
    double ibo_db = 5.0;
    double rapp_smoothness = 2.0;
    int channel_span_symbols = 4;
    int n_packets = 500;
    std::uint64_t master_seed = 1;
    Method method = Method::both;
    int jobs = 0; ///< worker threads; 0 = hardware concurrency

    /// Back-off at which the receiver noise floor is calibrated. NaN means
    /// "same as ibo_db" (noise tracks the actual interference power). The IBO
    /// sweep pins this to the base configuration's back-off so that backing
    /// the PA off lowers the interference against a fixed noise floor.
    double noise_ref_ibo_db = std::numeric_limits<double>::quiet_NaN();

    void validate() const;
    /// Symbols dropped from each block edge in every error metric.
    int edge_margin() const { return l_g + channel_span_symbols; }
};

struct PacketResult {
    /// Post/pre cancellation power ratios in dB; NaN when the method was not
    /// requested or its fit failed.
    double residual_hammerstein_db = std::numeric_limits<double>::quiet_NaN();
    double residual_learned_db = std::numeric_limits<double>::quiet_NaN();
    double pre_cancel_si_db = 0.0; ///< interference power at the conventional receiver output, dB
    bool hammerstein_failed = false;
    bool learned_failed = false;
    std::uint64_t packet_index = 0;
};

/// Unit-power OFDM-like block: inverse DFT of i.i.d. QPSK subcarriers.
cvec gen_ofdm_like_symbols(Rng& rng, int n);

/// One train-then-cancel packet: pilot block fits both cancellers against the
/// noisy received pilot stream, the data block measures out-of-sample
/// residuals against a noiseless replay of the same interference chain.
PacketResult run_packet(const ExperimentConfig& cfg, std::uint64_t packet_index);

std::vector<PacketResult> run_packets(const ExperimentConfig& cfg);

struct SweepPoint {
    double value = 0.0;
    double mean_hammerstein_db = 0.0;
    double mean_learned_db = 0.0;
    double std_hammerstein_db = 0.0;
    double std_learned_db = 0.0;
    double gain_db = 0.0; ///< mean_hammerstein_db - mean_learned_db
    long long failed_hammerstein = 0;
    long long failed_learned = 0;
    int n_packets = 0;
};

struct SweepResult {
    std::string param;
    std::vector<SweepPoint> points;
    ExperimentConfig base;
};

/// param is one of "snr", "lg", "m", "ibo". Per-packet linear residual ratios
/// are averaged in the linear domain and reported in dB.
SweepResult sweep(const ExperimentConfig& cfg, const std::string& param,
                  const std::vector<double>& values);

struct BerPoint {
    double snr_db = 0.0;
    double ber_hammerstein = 0.0;
    double ber_learned = 0.0;
    double ber_baseline = 0.0; ///< no interference, conventional filters
    long long bits_per_method = 0;
};

struct BerResult {
    std::vector<BerPoint> points;
    ExperimentConfig base;
};

/// Two-node experiment: a full-duplex node cancels its own interference while
/// detecting BPSK from the far node. snr_db is the detector-referred symbol
/// SNR of the ideal interference-free link, so the baseline follows the
/// textbook BPSK waterfall. Desired and interference powers are both 1 at the
/// receiver input.
BerResult run_ber(const ExperimentConfig& cfg, const std::vector<double>& snr_grid,
                  long long min_bits_per_point = 100000);

/// Fit the learned receive filter on the pilot phase of one packet.
LearnedMf fit_packet_mf(const ExperimentConfig& cfg, std::uint64_t packet_index);

std::string single_csv(const ExperimentConfig& cfg, const std::vector<PacketResult>& results);
std::string sweep_csv(const SweepResult& result);
std::string ber_csv(const BerResult& result);

} // namespace fdsic
