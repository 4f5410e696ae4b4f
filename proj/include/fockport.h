/*
 * C interface to the fockport library: Fock-state beam-splitter resources,
 * teleportation statistics, joint phase analysis and the brute-force oracle.
 *
 * Objects are opaque handles created by fp_*_create style calls and released
 * with the matching fp_*_free. Every fallible call returns an fp_status; on
 * failure fp_last_error() describes the problem for the calling thread.
 */
#ifndef FOCKPORT_H
#define FOCKPORT_H

#include <stddef.h>

#if defined(FOCKPORT_BUILDING_LIBRARY)
#define FP_API __attribute__((visibility("default")))
#else
#define FP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fp_status {
  FP_OK = 0,
  FP_ERR_INVALID_ARGUMENT = 1,
  FP_ERR_RANGE = 2,
  FP_ERR_TRUNCATION = 3,
  FP_ERR_UNDEFINED_OUTCOME = 4,
  FP_ERR_SIZE = 5,
  FP_ERR_IO = 6,
  FP_ERR_INTERNAL = 7
} fp_status;

typedef enum fp_phase_frame {
  FP_FRAME_ROTATION = 0,
  FP_FRAME_RESOURCE = 1
} fp_phase_frame;

typedef struct fp_target fp_target;
typedef struct fp_resource fp_resource;
typedef struct fp_grid fp_grid;

typedef struct fp_resource_check {
  int n_in;
  int m_in;
  double beta;
  double overlap_abs;
  double max_deviation;
  double residual_phase;
  int pass;
} fp_resource_check;

FP_API const char* fp_version(void);
/* Message for the last failed call on this thread; never NULL. */
FP_API const char* fp_last_error(void);
FP_API const char* fp_status_name(fp_status status);

/* ---- targets -------------------------------------------------------- */

FP_API fp_status fp_target_cat(double alpha_re, double alpha_im, int cutoff,
                               fp_target** out);
FP_API fp_status fp_target_coherent(double alpha_re, double alpha_im,
                                    int cutoff, fp_target** out);
FP_API fp_status fp_target_fock(int k, int cutoff, fp_target** out);
/* Smallest cutoff whose discarded tail is below 1e-12. */
FP_API fp_status fp_minimal_cutoff(double abs_alpha, int even_cat,
                                   int* cutoff);
FP_API void fp_target_free(fp_target* target);
FP_API size_t fp_target_size(const fp_target* target);
FP_API fp_status fp_target_coeff(const fp_target* target, size_t index,
                                 double* re, double* im);
FP_API const char* fp_target_label(const fp_target* target);
FP_API fp_status fp_target_write_csv(const fp_target* target,
                                     const char* path);

/* ---- resources ------------------------------------------------------ */

FP_API fp_status fp_resource_create(int n_in, int m_in, double beta,
                                    fp_resource** out);
FP_API void fp_resource_free(fp_resource* resource);
FP_API size_t fp_resource_size(const fp_resource* resource);
FP_API fp_status fp_resource_coeff(const fp_resource* resource, size_t index,
                                   double* re, double* im);
FP_API fp_status fp_resource_write_csv(const fp_resource* resource,
                                       const char* path);

/* ---- protocol ------------------------------------------------------- */

FP_API fp_status fp_number_sum_prob(const fp_target* target,
                                    const fp_resource* resource, int q,
                                    double* p);
FP_API fp_status fp_fidelity_given_q(const fp_target* target,
                                     const fp_resource* resource, int q,
                                     double* f);
FP_API fp_status fp_average_fidelity(const fp_target* target,
                                     const fp_resource* resource,
                                     double* f);
FP_API fp_status fp_classical_baseline(const fp_target* target,
                                       const fp_resource* resource,
                                       double* f);
/*
 * P(q) and F(q) for q = 0..*count-1. Call with p = f = NULL to obtain the
 * support size in *count; then call again with arrays of that capacity.
 * Undefined F(q) are NaN.
 */
FP_API fp_status fp_outcome_distribution(const fp_target* target,
                                         const fp_resource* resource,
                                         double* p, double* f,
                                         size_t capacity, size_t* count);
/*
 * Bob's output state for outcome q as a row-major dim x dim complex matrix,
 * row i <-> Fock |q - i>. Two-call pattern as above; *dim receives the size.
 */
FP_API fp_status fp_output_state(const fp_target* target,
                                 const fp_resource* resource, int q,
                                 double phi_minus, double* re, double* im,
                                 size_t capacity, size_t* dim);

/* ---- phase ---------------------------------------------------------- */

FP_API fp_status fp_joint_phase_prob(const fp_resource* resource,
                                     double phi_minus, fp_phase_frame frame,
                                     double* p);
FP_API fp_status fp_phase_argmax(const fp_resource* resource, int grid_size,
                                 double* phi_star, double* p_max);

/* ---- grids ---------------------------------------------------------- */

/* threads = 0 selects the hardware concurrency. m values are given twice. */
FP_API fp_status fp_fidelity_sweep(const fp_target* target, int total,
                                   const double* beta_axis, size_t n_beta,
                                   const int* twice_m_axis, size_t n_m,
                                   unsigned threads, fp_grid** out);
FP_API fp_status fp_phase_argmax_map(int total, const double* beta_axis,
                                     size_t n_beta, const int* twice_m_axis,
                                     size_t n_m, int grid_size,
                                     unsigned threads, fp_grid** out);
FP_API void fp_grid_free(fp_grid* grid);
FP_API void fp_grid_shape(const fp_grid* grid, size_t* n_beta, size_t* n_m);
FP_API double fp_grid_value(const fp_grid* grid, size_t i_m, size_t i_beta);
FP_API size_t fp_grid_invalid_count(const fp_grid* grid);
FP_API fp_status fp_grid_write_csv(const fp_grid* grid, const char* path);
FP_API fp_status fp_grid_write_pgm(const fp_grid* grid, const char* path);

/* Writes `size` bytes through a temp file and rename. Relative paths are
 * resolved against $FOCKPORT_OUTPUT_DIR when set. */
FP_API fp_status fp_write_file_atomic(const char* path, const char* data,
                                      size_t size);

/* beta_k = pi (k+1)/(steps+1), k = 0..steps-1. */
FP_API fp_status fp_interior_beta_axis(int steps, double* out);

/* ---- oracle --------------------------------------------------------- */

FP_API fp_status fp_verify_resource(int n_in, int m_in, double beta,
                                    int max_total, fp_resource_check* out);

#ifdef __cplusplus
}
#endif

#endif /* FOCKPORT_H */
