/*
 * C interface to the full-duplex self-interference cancellation simulator.
 *
 * All entry points are thread-compatible: distinct handles may be used from
 * distinct threads. Strings returned through out-parameters are owned by the
 * library and must be released with fdsic_string_free().
 */
#ifndef FDSIC_H
#define FDSIC_H

#include <stddef.h>

#if defined(_WIN32)
#define FDSIC_API __declspec(dllexport)
#else
#define FDSIC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fdsic_status {
    FDSIC_OK = 0,
    FDSIC_ERR_PARAM = 1,    /* invalid argument or configuration */
    FDSIC_ERR_SINGULAR = 2, /* rank-deficient least-squares system */
    FDSIC_ERR_NUMERIC = 3,  /* numerical failure */
    FDSIC_ERR_IO = 4,       /* file could not be read or written */
    FDSIC_ERR_INTERNAL = 5
} fdsic_status;

/* Opaque experiment configuration; created with the documented defaults
 * (N = Np = 128, M = 8, Lg = Lq = 4, P = 3, roll-off 0.35, SNR 0 dB,
 * IBO 5 dB, smoothness 2, channel span 4, 500 packets, seed 1). */
typedef struct fdsic_config fdsic_config;

FDSIC_API fdsic_config* fdsic_config_create(void);
FDSIC_API void fdsic_config_destroy(fdsic_config* cfg);

/* Keys: n, np, m, lg, lq, p, packets, channel-span, jobs, seed (integers);
 * rolloff, snr-db, ibo-db, smoothness (reals); method (string:
 * hammerstein | learned_mf | both). */
FDSIC_API fdsic_status fdsic_config_set_int(fdsic_config* cfg, const char* key, long long value);
FDSIC_API fdsic_status fdsic_config_set_real(fdsic_config* cfg, const char* key, double value);
FDSIC_API fdsic_status fdsic_config_set_string(fdsic_config* cfg, const char* key,
                                               const char* value);

/* Flat key=value file; '#' starts a comment line. */
FDSIC_API fdsic_status fdsic_config_load_file(fdsic_config* cfg, const char* path);

/* Per-packet residual experiment. *csv_out receives the complete CSV text. */
FDSIC_API fdsic_status fdsic_run_single(const fdsic_config* cfg, char** csv_out,
                                        long long* packets_failed);

/* Parameter sweep; param is one of "snr", "lg", "m", "ibo". */
FDSIC_API fdsic_status fdsic_run_sweep(const fdsic_config* cfg, const char* param,
                                       const double* values, size_t n_values, char** csv_out,
                                       long long* packets_failed);

/* Two-node BER experiment over the given detector-referred SNR grid. */
FDSIC_API fdsic_status fdsic_run_ber(const fdsic_config* cfg, const double* snr_grid,
                                     size_t n_points, long long min_bits_per_point,
                                     char** csv_out);

/* Analytical multiplication counts for both methods, runtime and training. */
FDSIC_API fdsic_status fdsic_complexity_table(const fdsic_config* cfg, char** text_out);

/* Fit the learned receive filter on one packet's pilots and write it as CSV. */
FDSIC_API fdsic_status fdsic_export_mf(const fdsic_config* cfg, const char* csv_path);

FDSIC_API void fdsic_string_free(char* s);

/* Message for the most recent failing call on this thread; never NULL. */
FDSIC_API const char* fdsic_last_error(void);

FDSIC_API const char* fdsic_version(void);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* FDSIC_H */
