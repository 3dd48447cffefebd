#ifndef LAGMULT_H
#define LAGMULT_H

#include <stddef.h>
#include <stdint.h>

#if defined(LAGMULT_BUILDING_LIBRARY)
#define LGM_API __attribute__((visibility("default")))
#else
#define LGM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct lgm_report lgm_report;
typedef struct lgm_quadrule lgm_quadrule;

typedef enum {
    LGM_OK = 0,
    LGM_EINVAL = 1,       /* bad parameter or unknown command */
    LGM_EDOMAIN = 2,      /* outside a function's domain, undeclarable convergence */
    LGM_ECONVERGENCE = 3, /* iteration budget exhausted */
    LGM_EIO = 4,
    LGM_EINTERNAL = 5
} lgm_status;

typedef enum { LGM_CONSISTENT = 0, LGM_VIOLATED = 1, LGM_INCONCLUSIVE = 2 } lgm_verdict;

/* Parameters for lgm_run. Fill with lgm_params_default first; each command
   reads only the fields it needs. Strings and arrays are borrowed. */
typedef struct {
    double alpha;
    double gamma;
    double p;
    double a;
    double delta;
    double epsilon;
    double tol;
    double rule_alpha;   /* coeffs: rule parameter; NaN means alpha */
    int n_max;
    int trials;
    int order;           /* quadrule */
    int threads;
    int random_degree;   /* thm11/thm32: random members only at this degree (0 = all) */
    int alternating;     /* remark3: 1 = (-1)^k (k+1)^-eps, 0 = constant sign */
    uint64_t seed;
    const char* family;  /* cesaro | spike | ones (multipliers), e0 | power (thm31) */
    const char* variant; /* a | b */
    const double* coeffs; /* coeffs: raw L^alpha coefficients */
    size_t n_coeffs;
    const double* xs;    /* fit: abscissae */
    const double* ys;    /* fit: values */
    size_t n_points;
} lgm_params;

LGM_API const char* lgm_version(void);

/* Message of the last failing call on this thread; "" if none. */
LGM_API const char* lgm_last_error(void);

LGM_API void lgm_params_default(lgm_params* params);

/* command: quadrule, coeffs, thm11, thm12, cor13, cor14, remark3, thm31, thm32,
   kernel-norms, mult-lower, fit. On success *out owns a new report. */
LGM_API lgm_status lgm_run(const char* command, const lgm_params* params, lgm_report** out);

LGM_API void lgm_report_destroy(lgm_report* report);
LGM_API lgm_verdict lgm_report_verdict(const lgm_report* report);
LGM_API const char* lgm_report_theorem(const lgm_report* report);
LGM_API const char* lgm_report_message(const lgm_report* report);
LGM_API int lgm_report_admissible(const lgm_report* report);
LGM_API double lgm_report_ratio_sup(const lgm_report* report);
LGM_API size_t lgm_report_rows(const lgm_report* report);
LGM_API size_t lgm_report_columns(const lgm_report* report);
LGM_API const char* lgm_report_column_name(const lgm_report* report, size_t col);
LGM_API lgm_status lgm_report_value(const lgm_report* report, size_t row, size_t col, double* out);
LGM_API size_t lgm_report_fit_count(const lgm_report* report);
LGM_API lgm_status lgm_report_fit(const lgm_report* report, size_t i, const char** name, double* slope,
                                  double* intercept, double* max_residual);
LGM_API lgm_status lgm_report_note(const lgm_report* report, const char* name, double* out);
/* format: "csv" or "json"; path "-" writes to stdout. */
LGM_API lgm_status lgm_report_write(const lgm_report* report, const char* format, const char* path);

LGM_API lgm_status lgm_quadrule_create(int order, double alpha, lgm_quadrule** out);
LGM_API void lgm_quadrule_destroy(lgm_quadrule* rule);
LGM_API size_t lgm_quadrule_size(const lgm_quadrule* rule);
LGM_API const double* lgm_quadrule_nodes(const lgm_quadrule* rule);
LGM_API const double* lgm_quadrule_weights(const lgm_quadrule* rule);
LGM_API const double* lgm_quadrule_log_weights(const lgm_quadrule* rule);

LGM_API lgm_status lgm_log_gamma(double x, double* out);
LGM_API double lgm_binom_A(int n, double a);
/* out receives n_max + 1 values L_0^alpha(x) .. L_{n_max}^alpha(x). */
LGM_API lgm_status lgm_laguerre(double alpha, int n_max, double x, double* out);
LGM_API lgm_status lgm_script_L(int k, double alpha, double t, double* out);

#ifdef __cplusplus
}
#endif

#endif
