/* Generated by cbindgen from crates/ffi. Do not edit. */

#ifndef MEVAC_H
#define MEVAC_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every call.
 */
typedef enum MevacStatus {
  MEVAC_STATUS_OK = 0,
  MEVAC_STATUS_NULL_POINTER = 1,
  MEVAC_STATUS_NON_FINITE = 2,
  MEVAC_STATUS_INVALID_MATERIAL = 3,
  MEVAC_STATUS_SUPERLUMINAL_BOOST = 4,
  MEVAC_STATUS_DEGENERATE_BOOST = 5,
  MEVAC_STATUS_DEGENERATE_GRID = 6,
  MEVAC_STATUS_DEGENERATE_PROBE = 7,
  MEVAC_STATUS_DIVISION_DEGENERATE = 8,
  MEVAC_STATUS_INVALID_MODE_SET = 9,
  MEVAC_STATUS_EMPTY_MODE_SET = 10,
  MEVAC_STATUS_PANIC = 11,
} MevacStatus;

/**
 * Opaque material handle.
 */
typedef struct MevacMaterial MevacMaterial;

/**
 * Opaque vacuum mode-set handle.
 */
typedef struct MevacModeSet MevacModeSet;

typedef struct MevacTransformed {
  double epsilon_prime;
  double mu_prime;
  double index_prime;
  double impedance_ratio;
} MevacTransformed;

typedef struct MevacVec3 {
  double x;
  double y;
  double z;
} MevacVec3;

typedef struct MevacFields {
  struct MevacVec3 e;
  struct MevacVec3 b;
} MevacFields;

typedef struct MevacBreakdown {
  double zeroth;
  double mixing_b;
  double mixing_e;
  double mixing;
  double mu_correction;
  double total_first_order;
} MevacBreakdown;

/**
 * Summary of an expansion check. `slope` is NaN when undefined.
 */
typedef struct MevacExpansionSummary {
  double slope;
  bool identically_zero;
  double derivative_numeric;
  double derivative_analytic;
  double derivative_relative;
  bool passed;
} MevacExpansionSummary;

typedef struct MevacVelocity {
  struct MevacVec3 rhs;
  double v_z;
  struct MevacVec3 abraham_minkowski;
  struct MevacVec3 chi_e;
  struct MevacVec3 chi_b;
  double shen_z;
  double transverse_residual;
} MevacVelocity;

/**
 * Weighted zero-point sums and their gross magnitudes.
 */
typedef struct MevacBilinears {
  struct MevacVec3 e_cross_b;
  struct MevacVec3 e_cross_chi_t_e;
  struct MevacVec3 b_cross_chi_b;
  double b_dot_chi_t_e;
  double e_cross_b_gross;
  double e_cross_chi_t_e_gross;
  double b_cross_chi_b_gross;
  double b_dot_chi_t_e_gross;
  size_t mode_count;
} MevacBilinears;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static description of a status code. Never null.
 */
const char *mevac_status_message(enum MevacStatus status);

/**
 * Library version, NUL-terminated.
 */
const char *mevac_version(void);

/**
 * Create a material. `chi` points to 9 row-major entries, or is null for
 * `χ = 0`.
 */
enum MevacStatus mevac_material_new(double epsilon,
                                    double mu,
                                    const double *chi,
                                    double rho0,
                                    struct MevacMaterial **out);

/**
 * Release a material. Null is ignored.
 */
void mevac_material_free(struct MevacMaterial *material);

/**
 * `n = √(εμ)`
 */
enum MevacStatus mevac_material_index(const struct MevacMaterial *material, double *out);

enum MevacStatus mevac_transform_constants(const struct MevacMaterial *material,
                                           double beta,
                                           struct MevacTransformed *out);

enum MevacStatus mevac_me_density_exact(const struct MevacMaterial *material,
                                        const struct MevacFields *f,
                                        double beta,
                                        double *out);

enum MevacStatus mevac_me_density_first_order(const struct MevacMaterial *material,
                                              const struct MevacFields *f,
                                              double beta,
                                              struct MevacBreakdown *out);

enum MevacStatus mevac_vector_form_density(const struct MevacMaterial *material,
                                           const struct MevacFields *f,
                                           double beta,
                                           double *out);

enum MevacStatus mevac_isolate_mu_term(const struct MevacMaterial *material,
                                       const struct MevacFields *f,
                                       double beta,
                                       double *out);

/**
 * Expansion check over `grid_len` boosts at `grid`.
 */
enum MevacStatus mevac_verify_expansion(const struct MevacMaterial *material,
                                        const struct MevacFields *f,
                                        const double *grid,
                                        size_t grid_len,
                                        struct MevacExpansionSummary *out);

enum MevacStatus mevac_medium_velocity(const struct MevacMaterial *material,
                                       const struct MevacFields *f,
                                       struct MevacVelocity *out);

enum MevacStatus mevac_consistency_check(const struct MevacMaterial *material,
                                         const struct MevacFields *f,
                                         double beta_probe,
                                         double *out);

/**
 * Build the zero-point mode set of `material` on a `grid_n³` grid.
 */
enum MevacStatus mevac_mode_set_new(const struct MevacMaterial *material,
                                    size_t grid_n,
                                    double cutoff,
                                    double volume,
                                    struct MevacModeSet **out);

/**
 * Number of modes (two per kept wavevector).
 */
enum MevacStatus mevac_mode_set_len(const struct MevacModeSet *modes, size_t *out);

/**
 * Release a mode set. Null is ignored.
 */
void mevac_mode_set_free(struct MevacModeSet *modes);

enum MevacStatus mevac_vacuum_bilinears(const struct MevacModeSet *modes,
                                        const struct MevacMaterial *material,
                                        struct MevacBilinears *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MEVAC_H */
