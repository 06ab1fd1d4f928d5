/* C interface to the Z3-orbifold affine sl2 fusion library.
 *
 * Objects are opaque handles released with the matching *_destroy call.
 * Every fallible function returns a z3orb_status; on failure a message is
 * available from z3orb_last_error() on the calling thread.
 *
 * String outputs follow one protocol: the text plus NUL is copied into
 * (buf, cap) when it fits, *needed (if non-NULL) receives the required size,
 * and Z3ORB_ERR_BUFFER_TOO_SMALL is returned otherwise. Pass buf = NULL,
 * cap = 0 to query the size.
 */
#ifndef Z3ORB_H
#define Z3ORB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(Z3ORB_BUILDING)
#    define Z3ORB_API __declspec(dllexport)
#  else
#    define Z3ORB_API __declspec(dllimport)
#  endif
#else
#  define Z3ORB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum z3orb_status {
    Z3ORB_OK = 0,
    Z3ORB_ERR_INVALID_LEVEL = 1,
    Z3ORB_ERR_INDEX_RANGE = 2,
    Z3ORB_ERR_SYNTAX = 3,
    Z3ORB_ERR_LEVEL_MISMATCH = 4,
    Z3ORB_ERR_PARITY = 5,
    Z3ORB_ERR_CAP_EXCEEDED = 6,
    Z3ORB_ERR_OVERFLOW = 7,
    Z3ORB_ERR_INVALID_ARGUMENT = 8,
    Z3ORB_ERR_BUFFER_TOO_SMALL = 9,
    Z3ORB_ERR_NULL_POINTER = 10,
    Z3ORB_ERR_INTERNAL = 11
} z3orb_status;

typedef enum z3orb_sector {
    Z3ORB_SECTOR_U = 0,
    Z3ORB_SECTOR_T1 = 1,
    Z3ORB_SECTOR_T2 = 2
} z3orb_sector;

/* L(k,index)^charge (sector U) or L(k,index)^{T_r,charge}. */
typedef struct z3orb_label {
    int32_t sector;
    int32_t index;
    int32_t charge;
} z3orb_label;

typedef struct z3orb_level z3orb_level;
typedef struct z3orb_fusion z3orb_fusion;
typedef struct z3orb_report z3orb_report;

typedef struct z3orb_verify_options {
    int32_t cubic_cap;
    int32_t quadratic_cap;
    uint64_t samples;
    uint64_t seed;
    uint32_t threads;
} z3orb_verify_options;

Z3ORB_API const char* z3orb_version(void);
Z3ORB_API const char* z3orb_status_string(z3orb_status status);
Z3ORB_API const char* z3orb_last_error(void);

/* level */
Z3ORB_API z3orb_status z3orb_level_create(int32_t k, z3orb_level** out);
Z3ORB_API void z3orb_level_destroy(z3orb_level* level);
Z3ORB_API int32_t z3orb_level_value(const z3orb_level* level);

/* labels */
Z3ORB_API size_t z3orb_label_count(const z3orb_level* level);
Z3ORB_API z3orb_status z3orb_label_at(const z3orb_level* level, size_t ordinal, z3orb_label* out);
Z3ORB_API z3orb_status z3orb_make_label(const z3orb_level* level, int32_t sector, int32_t index,
                                        int64_t charge, z3orb_label* out);
Z3ORB_API z3orb_status z3orb_parse_label(const z3orb_level* level, const char* text, z3orb_label* out);
Z3ORB_API z3orb_status z3orb_label_key(const z3orb_level* level, z3orb_label label, char* buf,
                                       size_t cap, size_t* needed);
Z3ORB_API z3orb_status z3orb_label_pretty(const z3orb_level* level, z3orb_label label, char* buf,
                                          size_t cap, size_t* needed);
Z3ORB_API int32_t z3orb_residue3(int64_t n);

/* weights */
Z3ORB_API z3orb_status z3orb_weight(const z3orb_level* level, z3orb_label label, int64_t* numerator,
                                    int64_t* denominator);
Z3ORB_API z3orb_status z3orb_base_twist_weight(const z3orb_level* level, int32_t index, int32_t twist,
                                               int64_t* numerator, int64_t* denominator);
Z3ORB_API z3orb_status z3orb_generator(const z3orb_level* level, z3orb_label label, char* buf,
                                       size_t cap, size_t* needed);

/* quantum dimensions; residues are coefficient lists, lowest degree first */
Z3ORB_API z3orb_status z3orb_qdim_numeric(const z3orb_level* level, z3orb_label label, int32_t digits,
                                          char* buf, size_t cap, size_t* needed);
Z3ORB_API z3orb_status z3orb_qdim_residue(const z3orb_level* level, z3orb_label label, int64_t* coeffs,
                                          size_t cap, size_t* count);
Z3ORB_API z3orb_status z3orb_has_unit_qdim(const z3orb_level* level, z3orb_label label, int* out);
Z3ORB_API z3orb_status z3orb_global_dimension_numeric(const z3orb_level* level, int32_t digits,
                                                      char* buf, size_t cap, size_t* needed);
Z3ORB_API z3orb_status z3orb_global_dimension_residue(const z3orb_level* level, int64_t* coeffs,
                                                      size_t cap, size_t* count);

/* fusion */
Z3ORB_API z3orb_status z3orb_sl2_fusion_range(const z3orb_level* level, int32_t i1, int32_t i2,
                                              int32_t* out, size_t cap, size_t* count);
Z3ORB_API z3orb_status z3orb_sign_value(int32_t i1, int32_t i2, int32_t i3, int64_t j1, int64_t j2,
                                        int64_t* out);
Z3ORB_API z3orb_status z3orb_dual(const z3orb_level* level, z3orb_label label, z3orb_label* out);
Z3ORB_API z3orb_status z3orb_coeff(const z3orb_level* level, z3orb_label a, z3orb_label b,
                                   z3orb_label c, uint64_t* out);

Z3ORB_API z3orb_status z3orb_fusion_create(const z3orb_level* level, z3orb_fusion** out);
Z3ORB_API z3orb_status z3orb_fuse(const z3orb_level* level, z3orb_label a, z3orb_label b,
                                  z3orb_fusion** out);
Z3ORB_API z3orb_status z3orb_fusion_add(z3orb_fusion* vec, z3orb_label label, uint64_t multiplicity);
Z3ORB_API z3orb_status z3orb_fusion_product(const z3orb_fusion* lhs, const z3orb_fusion* rhs,
                                            z3orb_fusion** out);
Z3ORB_API size_t z3orb_fusion_size(const z3orb_fusion* vec);
Z3ORB_API z3orb_status z3orb_fusion_term(const z3orb_fusion* vec, size_t position, z3orb_label* label,
                                         uint64_t* multiplicity);
Z3ORB_API void z3orb_fusion_destroy(z3orb_fusion* vec);

/* verification; suite is one of unit, comm, assoc, dual, qdim, oracle, catalog */
Z3ORB_API void z3orb_verify_options_default(z3orb_verify_options* opts);
Z3ORB_API z3orb_status z3orb_verify(const z3orb_level* level, const char* suite,
                                    const z3orb_verify_options* opts, z3orb_report** out);
Z3ORB_API int z3orb_report_passed(const z3orb_report* report);
Z3ORB_API const char* z3orb_report_suite(const z3orb_report* report);
Z3ORB_API int32_t z3orb_report_level(const z3orb_report* report);
Z3ORB_API uint64_t z3orb_report_checks(const z3orb_report* report);
Z3ORB_API uint64_t z3orb_report_failure_count(const z3orb_report* report);
Z3ORB_API size_t z3orb_report_recorded_failures(const z3orb_report* report);
/* Description of a recorded failure, counterexample labels included; NULL if out of range. */
Z3ORB_API const char* z3orb_report_failure(const z3orb_report* report, size_t position);
Z3ORB_API int z3orb_report_sampled(const z3orb_report* report);
Z3ORB_API double z3orb_report_elapsed_seconds(const z3orb_report* report);
Z3ORB_API void z3orb_report_destroy(z3orb_report* report);

#ifdef __cplusplus
}
#endif

#endif /* Z3ORB_H */
