#include "fdsic/sim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace fdsic {

namespace {

// Substream salts; every random quantity in a packet has its own stream so
// that methods and phases never share draws implicitly.
enum : std::uint64_t {
    kSaltChannel = 1,
    kSaltPilotSymbols = 2,
    kSaltDataSymbols = 3,
    kSaltPilotNoise = 4,
    kSaltSoiBits = 5,
    kSaltDataNoiseHam = 6,
    kSaltDataNoiseMf = 7,
    kSaltDataNoiseBaseline = 8,
};

bool is_pow2(int v) { return v > 0 && (v & (v - 1)) == 0; }

// Unitary-up-to-scale inverse FFT, radix-2; block power is renormalized by
// the caller so the internal scale does not matter.
void ifft_inplace(cvec& a) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1)
            j ^= bit;
        j ^= bit;
        if (i < j)
            std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = 2.0 * 3.14159265358979323846 / static_cast<double>(len);
        const cplx w_len(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            cplx w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const cplx u = a[i + k];
                const cplx v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= w_len;
            }
        }
    }
}

// Everything fixed for one packet once the channel is drawn.
struct SiChain {
    FirTaps g_tx;
    FirTaps g_rx;
    RappPa pa;
    RappPa pa_noise_ref;
    MultipathChannel h;
    int rx_delay = 0;
};

SiChain make_chain(const ExperimentConfig& cfg, Rng& rng_channel) {
    SiChain c;
    // M = 1 carries no pulse shaping: symbols go out back to back.
    c.g_tx = (cfg.m == 1) ? delta_taps() : rrc_taps(cfg.rolloff, cfg.l_g, cfg.m);
    c.g_rx = time_reverse(c.g_tx);
    c.rx_delay = cascade_delay(c.g_tx, c.g_rx);
    c.h = draw_channel(rng_channel, cfg.channel_span_symbols, cfg.m);

    const double ref_input_power = 1.0 / cfg.m; // unit-power symbols, unit-energy taps
    RappPa pa;
    pa.smoothness = cfg.rapp_smoothness;
    pa.sat_amplitude = 1.0;
    c.pa = with_ibo(pa, cfg.ibo_db, ref_input_power);
    const double ref_ibo =
        std::isnan(cfg.noise_ref_ibo_db) ? cfg.ibo_db : cfg.noise_ref_ibo_db;
    c.pa_noise_ref = with_ibo(pa, ref_ibo, ref_input_power);
    return c;
}

// Interference chain: pulse shaping, PA, multipath. Causal full-length
// convolutions; the receive side compensates the filter cascade delay.
cvec si_stream(const SiChain& c, const cvec& symbols, bool noise_ref_gain = false) {
    const cvec x = pulse_shape(symbols, c.g_tx);
    const cvec amplified = rapp_amplify(x, noise_ref_gain ? c.pa_noise_ref : c.pa);
    return fir_convolve(amplified, c.h.taps, ConvMode::full);
}

double noise_variance_for(const ExperimentConfig& cfg, const SiChain& chain,
                          const cvec& pilot_symbols, const cvec& y_pilot) {
    if (std::isinf(cfg.snr_db) && cfg.snr_db > 0.0)
        return 0.0;
    const double gamma = std::pow(10.0, cfg.snr_db / 10.0);
    const double ref_ibo =
        std::isnan(cfg.noise_ref_ibo_db) ? cfg.ibo_db : cfg.noise_ref_ibo_db;
    if (ref_ibo == cfg.ibo_db)
        return measure_power(y_pilot) / gamma;
    return measure_power(si_stream(chain, pilot_symbols, true)) / gamma;
}

double sum_norm_interior(const cvec& v, int margin) {
    double acc = 0.0;
    for (std::size_t i = static_cast<std::size_t>(margin); i + margin < v.size(); ++i)
        acc += std::norm(v[i]);
    return acc;
}

double residual_ratio_db(const cvec& err, const cvec& ref, int margin) {
    const double e = sum_norm_interior(err, margin);
    const double r = sum_norm_interior(ref, margin);
    return 10.0 * std::log10(e / r);
}

template <typename Fn>
void parallel_run(int count, int jobs, Fn&& fn) {
    if (jobs <= 0)
        jobs = static_cast<int>(std::thread::hardware_concurrency());
    jobs = std::max(1, std::min(jobs, count));
    if (jobs == 1) {
        for (int i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr first_error;
    std::mutex err_mu;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                const int i = next.fetch_add(1);
                if (i >= count)
                    return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mu);
                    if (!first_error)
                        first_error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : pool)
        th.join();
    if (first_error)
        std::rethrow_exception(first_error);
}

std::string format_db(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

std::string format_g(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

std::string config_echo(const ExperimentConfig& c) {
    std::ostringstream os;
    os << "# config n=" << c.n << " np=" << c.n_pilot << " m=" << c.m << " lg=" << c.l_g
       << " lq=" << c.l_q << " p=" << c.p << " rolloff=" << format_g(c.rolloff)
       << " snr_db=" << format_g(c.snr_db) << " ibo_db=" << format_g(c.ibo_db)
       << " smoothness=" << format_g(c.rapp_smoothness)
       << " channel_span=" << c.channel_span_symbols << " packets=" << c.n_packets
       << " seed=" << c.master_seed << " method=" << method_name(c.method) << "\n";
    return os.str();
}

} // namespace

std::string method_name(Method m) {
    switch (m) {
    case Method::hammerstein:
        return "hammerstein";
    case Method::learned_mf:
        return "learned_mf";
    case Method::both:
        return "both";
    }
    return "both";
}

Method parse_method(const std::string& name) {
    if (name == "hammerstein")
        return Method::hammerstein;
    if (name == "learned_mf")
        return Method::learned_mf;
    if (name == "both")
        return Method::both;
    throw std::invalid_argument("unknown method: " + name);
}

void ExperimentConfig::validate() const {
    if (!is_pow2(n) || !is_pow2(n_pilot))
        throw std::invalid_argument("config: n and np must be powers of two");
    if (m < 1 || l_g < 1 || l_q < 1)
        throw std::invalid_argument("config: m, lg, lq must be >= 1");
    if (p < 1 || p % 2 == 0)
        throw std::invalid_argument("config: p must be odd and >= 1");
    if (!(rolloff > 0.0) || rolloff > 1.0)
        throw std::invalid_argument("config: rolloff must be in (0, 1]");
    if (!(rapp_smoothness > 0.0))
        throw std::invalid_argument("config: smoothness must be positive");
    if (channel_span_symbols < 1)
        throw std::invalid_argument("config: channel span must be >= 1");
    if (n_packets < 1)
        throw std::invalid_argument("config: packets must be >= 1");
    if (jobs < 0)
        throw std::invalid_argument("config: jobs must be >= 0");
    if (n_pilot < m * l_g)
        throw std::invalid_argument("config: np must be >= m * lg to fit the receive filter");
    if (n_pilot < l_q * (p + 1) / 2)
        throw std::invalid_argument("config: np too small for the memory-polynomial fit");
    if (n <= 2 * edge_margin())
        throw std::invalid_argument("config: n too small for the edge margin");
}

cvec gen_ofdm_like_symbols(Rng& rng, int n) {
    if (!is_pow2(n))
        throw std::invalid_argument("gen_ofdm_like_symbols: n must be a power of two");
    cvec block(static_cast<std::size_t>(n));
    const double inv_sqrt2 = 0.70710678118654752440;
    for (auto& subcarrier : block) {
        const double re = (rng.uniform() < 0.5) ? -inv_sqrt2 : inv_sqrt2;
        const double im = (rng.uniform() < 0.5) ? -inv_sqrt2 : inv_sqrt2;
        subcarrier = cplx(re, im);
    }
    ifft_inplace(block);
    const double scale = 1.0 / std::sqrt(measure_power(block));
    for (auto& v : block)
        v *= scale;
    return block;
}

PacketResult run_packet(const ExperimentConfig& cfg, std::uint64_t packet_index) {
    cfg.validate();
    PacketResult out;
    out.packet_index = packet_index;
    out.residual_hammerstein_db = std::numeric_limits<double>::quiet_NaN();
    out.residual_learned_db = std::numeric_limits<double>::quiet_NaN();

    Rng rng_channel = Rng::derive(cfg.master_seed, packet_index, kSaltChannel);
    Rng rng_pilot = Rng::derive(cfg.master_seed, packet_index, kSaltPilotSymbols);
    Rng rng_data = Rng::derive(cfg.master_seed, packet_index, kSaltDataSymbols);
    Rng rng_noise = Rng::derive(cfg.master_seed, packet_index, kSaltPilotNoise);

    const SiChain chain = make_chain(cfg, rng_channel);

    // Pilot phase: the far node is silent, fits run on the noisy received stream.
    const cvec s_pilot = gen_ofdm_like_symbols(rng_pilot, cfg.n_pilot);
    const cvec y_pilot = si_stream(chain, s_pilot);
    const double sigma2 = noise_variance_for(cfg, chain, s_pilot, y_pilot);
    const cvec eta_pilot = add_awgn_variance(y_pilot, sigma2, rng_noise);

    const bool want_ham = cfg.method != Method::learned_mf;
    const bool want_mf = cfg.method != Method::hammerstein;

    HammersteinModel ham;
    if (want_ham) {
        try {
            const cvec lambda_pilot =
                matched_filter(eta_pilot, chain.g_rx, chain.rx_delay, cfg.n_pilot);
            HammersteinConfig hc;
            hc.max_degree = cfg.p;
            hc.memory_symbols = cfg.l_q;
            ham = fit_hammerstein(s_pilot, lambda_pilot, hc);
        } catch (const singular_system_error&) {
            out.hammerstein_failed = true;
        }
    }
    LearnedMf mf;
    if (want_mf) {
        try {
            mf = fit_mf(eta_pilot, s_pilot, cfg.m, cfg.l_g);
        } catch (const singular_system_error&) {
            out.learned_failed = true;
        }
    }

    // Data phase: residuals are measured against a noiseless replay of the
    // interference chain, so only the fits carry the pilot noise.
    const cvec s_data = gen_ofdm_like_symbols(rng_data, cfg.n);
    const cvec y_data = si_stream(chain, s_data);
    const int margin = cfg.edge_margin();

    const cvec r_conventional = matched_filter(y_data, chain.g_rx, chain.rx_delay, cfg.n);
    out.pre_cancel_si_db = 10.0 * std::log10(sum_norm_interior(r_conventional, margin) /
                                             static_cast<double>(cfg.n - 2 * margin));

    if (want_ham && !out.hammerstein_failed) {
        const cvec eps = cancel(r_conventional, regenerate(ham, s_data));
        out.residual_hammerstein_db = residual_ratio_db(eps, r_conventional, margin);
    }
    if (want_mf && !out.learned_failed) {
        const cvec r_learned = apply_mf(y_data, mf, cfg.n);
        const cvec eps = cancel_known(r_learned, s_data);
        out.residual_learned_db = residual_ratio_db(eps, r_learned, margin);
    }
    return out;
}

std::vector<PacketResult> run_packets(const ExperimentConfig& cfg) {
    cfg.validate();
    std::vector<PacketResult> out(static_cast<std::size_t>(cfg.n_packets));
    parallel_run(cfg.n_packets, cfg.jobs, [&](int i) {
        out[static_cast<std::size_t>(i)] = run_packet(cfg, static_cast<std::uint64_t>(i));
    });
    return out;
}

LearnedMf fit_packet_mf(const ExperimentConfig& cfg, std::uint64_t packet_index) {
    cfg.validate();
    Rng rng_channel = Rng::derive(cfg.master_seed, packet_index, kSaltChannel);
    Rng rng_pilot = Rng::derive(cfg.master_seed, packet_index, kSaltPilotSymbols);
    Rng rng_noise = Rng::derive(cfg.master_seed, packet_index, kSaltPilotNoise);
    const SiChain chain = make_chain(cfg, rng_channel);
    const cvec s_pilot = gen_ofdm_like_symbols(rng_pilot, cfg.n_pilot);
    const cvec y_pilot = si_stream(chain, s_pilot);
    const double sigma2 = noise_variance_for(cfg, chain, s_pilot, y_pilot);
    const cvec eta_pilot = add_awgn_variance(y_pilot, sigma2, rng_noise);
    return fit_mf(eta_pilot, s_pilot, cfg.m, cfg.l_g);
}

namespace {

struct MethodStats {
    double linear_sum = 0.0;
    double db_sum = 0.0;
    double db_sq_sum = 0.0;
    long long count = 0;
    long long failed = 0;

    void add(double residual_db, bool fail) {
        if (fail || std::isnan(residual_db)) {
            ++failed;
            return;
        }
        linear_sum += std::pow(10.0, residual_db / 10.0);
        db_sum += residual_db;
        db_sq_sum += residual_db * residual_db;
        ++count;
    }
    double mean_db() const {
        return count > 0 ? 10.0 * std::log10(linear_sum / static_cast<double>(count))
                         : std::numeric_limits<double>::quiet_NaN();
    }
    double std_db() const {
        if (count < 2)
            return 0.0;
        const double mean = db_sum / static_cast<double>(count);
        const double var =
            (db_sq_sum - static_cast<double>(count) * mean * mean) / static_cast<double>(count - 1);
        return std::sqrt(std::max(0.0, var));
    }
};

SweepPoint aggregate_point(double value, const std::vector<PacketResult>& results) {
    MethodStats ham, mf;
    for (const auto& r : results) {
        ham.add(r.residual_hammerstein_db, r.hammerstein_failed);
        mf.add(r.residual_learned_db, r.learned_failed);
    }
    SweepPoint p;
    p.value = value;
    p.n_packets = static_cast<int>(results.size());
    p.mean_hammerstein_db = ham.mean_db();
    p.mean_learned_db = mf.mean_db();
    p.std_hammerstein_db = ham.std_db();
    p.std_learned_db = mf.std_db();
    p.failed_hammerstein = ham.failed;
    p.failed_learned = mf.failed;
    p.gain_db = p.mean_hammerstein_db - p.mean_learned_db;
    return p;
}

int int_sweep_value(double v, const char* what) {
    const int iv = static_cast<int>(std::llround(v));
    if (std::abs(v - iv) > 1e-9 || iv < 1)
        throw std::invalid_argument(std::string("sweep: ") + what +
                                    " values must be positive integers");
    return iv;
}

} // namespace

SweepResult sweep(const ExperimentConfig& cfg, const std::string& param,
                  const std::vector<double>& values) {
    if (values.empty())
        throw std::invalid_argument("sweep: no values given");
    SweepResult result;
    result.param = param;
    result.base = cfg;
    for (const double v : values) {
        ExperimentConfig c = cfg;
        if (param == "snr") {
            c.snr_db = v;
        } else if (param == "lg") {
            c.l_g = int_sweep_value(v, "lg");
        } else if (param == "m") {
            c.m = int_sweep_value(v, "m");
        } else if (param == "ibo") {
            // Fixed receiver noise floor across the sweep: calibrated once at
            // the base back-off, while the actual PA drive level moves.
            if (std::isnan(c.noise_ref_ibo_db))
                c.noise_ref_ibo_db = cfg.ibo_db;
            c.ibo_db = v;
        } else {
            throw std::invalid_argument("sweep: param must be one of snr, lg, m, ibo");
        }
        c.validate();
        result.points.push_back(aggregate_point(v, run_packets(c)));
    }
    return result;
}

namespace {

struct BerCounters {
    long long errors_ham = 0;
    long long errors_mf = 0;
    long long errors_base = 0;
    long long bits_ham = 0;
    long long bits_mf = 0;
    long long bits_base = 0;
};

cvec add_streams(const cvec& a, const cvec& b) {
    cvec out(std::max(a.size(), b.size()), cplx(0.0, 0.0));
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] += b[i];
    return out;
}

long long count_bpsk_errors(const cvec& decision, const cvec& bits, int margin) {
    long long errs = 0;
    for (std::size_t i = static_cast<std::size_t>(margin); i + margin < bits.size(); ++i) {
        const bool detected = decision[i].real() > 0.0;
        const bool sent = bits[i].real() > 0.0;
        if (detected != sent)
            ++errs;
    }
    return errs;
}

BerCounters ber_packet(const ExperimentConfig& cfg, std::uint64_t packet_index,
                       double detector_snr_db) {
    BerCounters counters;
    const double gamma = std::pow(10.0, detector_snr_db / 10.0);
    const double sigma2 = static_cast<double>(cfg.m) / gamma;
    const int margin = cfg.edge_margin();

    Rng rng_channel = Rng::derive(cfg.master_seed, packet_index, kSaltChannel);
    Rng rng_pilot = Rng::derive(cfg.master_seed, packet_index, kSaltPilotSymbols);
    Rng rng_data = Rng::derive(cfg.master_seed, packet_index, kSaltDataSymbols);
    Rng rng_pnoise = Rng::derive(cfg.master_seed, packet_index, kSaltPilotNoise);
    Rng rng_bits = Rng::derive(cfg.master_seed, packet_index, kSaltSoiBits);
    Rng rng_noise_ham = Rng::derive(cfg.master_seed, packet_index, kSaltDataNoiseHam);
    Rng rng_noise_mf = Rng::derive(cfg.master_seed, packet_index, kSaltDataNoiseMf);
    Rng rng_noise_base = Rng::derive(cfg.master_seed, packet_index, kSaltDataNoiseBaseline);

    const SiChain chain = make_chain(cfg, rng_channel);

    // Interference normalized to unit power at the receiver input, same as
    // the desired signal.
    const cvec s_pilot = gen_ofdm_like_symbols(rng_pilot, cfg.n_pilot);
    cvec y_pilot = si_stream(chain, s_pilot);
    const double si_scale = 1.0 / std::sqrt(measure_power(y_pilot));
    for (auto& v : y_pilot)
        v *= si_scale;
    const cvec eta_pilot = add_awgn_variance(y_pilot, sigma2, rng_pnoise);

    HammersteinModel ham;
    LearnedMf mf;
    bool ham_ok = true;
    bool mf_ok = true;
    try {
        const cvec lambda_pilot =
            matched_filter(eta_pilot, chain.g_rx, chain.rx_delay, cfg.n_pilot);
        HammersteinConfig hc;
        hc.max_degree = cfg.p;
        hc.memory_symbols = cfg.l_q;
        ham = fit_hammerstein(s_pilot, lambda_pilot, hc);
    } catch (const singular_system_error&) {
        ham_ok = false;
    }
    try {
        mf = fit_mf(eta_pilot, s_pilot, cfg.m, cfg.l_g);
    } catch (const singular_system_error&) {
        mf_ok = false;
    }

    const cvec s_data = gen_ofdm_like_symbols(rng_data, cfg.n);
    cvec y_data = si_stream(chain, s_data);
    for (auto& v : y_data)
        v *= si_scale;

    cvec bits(static_cast<std::size_t>(cfg.n));
    for (auto& b : bits)
        b = cplx((rng_bits.uniform() < 0.5) ? -1.0 : 1.0, 0.0);

    const long long bits_counted = cfg.n - 2 * margin;

    // Conventional mode: far node transmits with the standard pulse, the
    // receiver regenerates and subtracts the interference estimate.
    if (ham_ok) {
        cvec z = pulse_shape(bits, chain.g_tx);
        const double z_scale = 1.0 / std::sqrt(measure_power(z));
        for (auto& v : z)
            v *= z_scale;
        const cvec eta = add_awgn_variance(add_streams(y_data, z), sigma2, rng_noise_ham);
        const cvec lambda = matched_filter(eta, chain.g_rx, chain.rx_delay, cfg.n);
        const cvec detected = cancel(lambda, regenerate(ham, s_data));
        counters.errors_ham = count_bpsk_errors(detected, bits, margin);
        counters.bits_ham = bits_counted;
    }

    // Proposed mode: far node pulse-shapes with the conjugate of the learned
    // filter so the learned receive window is matched to it; the receiver
    // subtracts its own known symbols after the learned filter.
    if (mf_ok) {
        FirTaps far_pulse;
        far_pulse.oversampling = cfg.m;
        far_pulse.span_symbols = cfg.l_g;
        far_pulse.coeffs.resize(mf.g1.size());
        for (std::size_t i = 0; i < mf.g1.size(); ++i)
            far_pulse.coeffs[i] = std::conj(mf.g1[i]);
        cvec z = pulse_shape(bits, far_pulse);
        const double z_scale = 1.0 / std::sqrt(measure_power(z));
        for (auto& v : z)
            v *= z_scale;
        const cvec eta = add_awgn_variance(add_streams(y_data, z), sigma2, rng_noise_mf);
        const cvec lambda = apply_mf(eta, mf, cfg.n);
        const cvec detected = cancel_known(lambda, s_data);
        counters.errors_mf = count_bpsk_errors(detected, bits, margin);
        counters.bits_mf = bits_counted;
    }

    // Interference-free baseline over the conventional matched pair.
    {
        cvec z = pulse_shape(bits, chain.g_tx);
        const double z_scale = 1.0 / std::sqrt(measure_power(z));
        for (auto& v : z)
            v *= z_scale;
        const cvec eta = add_awgn_variance(z, sigma2, rng_noise_base);
        const cvec detected = matched_filter(eta, chain.g_rx, chain.rx_delay, cfg.n);
        counters.errors_base = count_bpsk_errors(detected, bits, margin);
        counters.bits_base = bits_counted;
    }
    return counters;
}

} // namespace

BerResult run_ber(const ExperimentConfig& cfg, const std::vector<double>& snr_grid,
                  long long min_bits_per_point) {
    cfg.validate();
    if (snr_grid.empty())
        throw std::invalid_argument("run_ber: empty SNR grid");
    const long long bits_per_packet = cfg.n - 2 * cfg.edge_margin();
    const int packets = static_cast<int>(
        std::max<long long>(1, (min_bits_per_point + bits_per_packet - 1) / bits_per_packet));

    BerResult result;
    result.base = cfg;
    for (const double snr : snr_grid) {
        std::vector<BerCounters> per_packet(static_cast<std::size_t>(packets));
        parallel_run(packets, cfg.jobs, [&](int i) {
            per_packet[static_cast<std::size_t>(i)] =
                ber_packet(cfg, static_cast<std::uint64_t>(i), snr);
        });
        BerCounters total;
        for (const auto& c : per_packet) {
            total.errors_ham += c.errors_ham;
            total.errors_mf += c.errors_mf;
            total.errors_base += c.errors_base;
            total.bits_ham += c.bits_ham;
            total.bits_mf += c.bits_mf;
            total.bits_base += c.bits_base;
        }
        BerPoint pt;
        pt.snr_db = snr;
        pt.bits_per_method = total.bits_base;
        pt.ber_hammerstein =
            total.bits_ham > 0 ? static_cast<double>(total.errors_ham) / total.bits_ham : 1.0;
        pt.ber_learned =
            total.bits_mf > 0 ? static_cast<double>(total.errors_mf) / total.bits_mf : 1.0;
        pt.ber_baseline =
            total.bits_base > 0 ? static_cast<double>(total.errors_base) / total.bits_base : 1.0;
        result.points.push_back(pt);
    }
    return result;
}

std::string single_csv(const ExperimentConfig& cfg, const std::vector<PacketResult>& results) {
    std::ostringstream os;
    os << "# fdsic single schema=1\n" << config_echo(cfg);
    os << "# residual_db is post/pre cancellation power over interior symbols, "
          "noiseless interference reference\n";
    os << "packet,method,residual_db,pre_cancel_si_db,seed\n";
    for (const auto& r : results) {
        if (cfg.method != Method::learned_mf)
            os << r.packet_index << ",hammerstein," << format_db(r.residual_hammerstein_db) << ","
               << format_db(r.pre_cancel_si_db) << "," << cfg.master_seed << "\n";
        if (cfg.method != Method::hammerstein)
            os << r.packet_index << ",learned_mf," << format_db(r.residual_learned_db) << ","
               << format_db(r.pre_cancel_si_db) << "," << cfg.master_seed << "\n";
    }
    return os.str();
}

std::string sweep_csv(const SweepResult& result) {
    std::ostringstream os;
    os << "# fdsic sweep schema=1\n" << config_echo(result.base);
    os << "# mean_residual_db = 10*log10(mean of per-packet linear residual ratios); "
          "std over per-packet dB values\n";
    os << "param,value,method,mean_residual_db,std_residual_db,gain_db,n_packets,n_failed,seed\n";
    const Method method = result.base.method;
    for (const auto& p : result.points) {
        if (method != Method::learned_mf)
            os << result.param << "," << format_g(p.value) << ",hammerstein,"
               << format_db(p.mean_hammerstein_db) << "," << format_db(p.std_hammerstein_db) << ","
               << format_db(p.gain_db) << "," << p.n_packets << "," << p.failed_hammerstein << ","
               << result.base.master_seed << "\n";
        if (method != Method::hammerstein)
            os << result.param << "," << format_g(p.value) << ",learned_mf,"
               << format_db(p.mean_learned_db) << "," << format_db(p.std_learned_db) << ","
               << format_db(p.gain_db) << "," << p.n_packets << "," << p.failed_learned << ","
               << result.base.master_seed << "\n";
    }
    return os.str();
}

std::string ber_csv(const BerResult& result) {
    std::ostringstream os;
    os << "# fdsic ber schema=1\n" << config_echo(result.base);
    os << "# snr_db is the detector-referred symbol SNR of the interference-free link\n";
    os << "snr_db,method,ber,bits_counted,seed\n";
    char buf[48];
    for (const auto& p : result.points) {
        const auto row = [&](const char* name, double ber, long long bits) {
            std::snprintf(buf, sizeof(buf), "%.6g", ber);
            os << format_g(p.snr_db) << "," << name << "," << buf << "," << bits << ","
               << result.base.master_seed << "\n";
        };
        if (result.base.method != Method::learned_mf)
            row("hammerstein", p.ber_hammerstein, p.bits_per_method);
        if (result.base.method != Method::hammerstein)
            row("learned_mf", p.ber_learned, p.bits_per_method);
        row("no_si_baseline", p.ber_baseline, p.bits_per_method);
    }
    return os.str();
}

} // namespace fdsic
