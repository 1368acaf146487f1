/* C API of the piecewise-contraction laboratory.
 *
 * All functions return a status code (PCDYN_OK on success); on failure
 * pcdyn_last_error() holds a thread-local message and pcdyn_last_status()
 * the code. Strings returned through char** are heap-allocated and must be
 * released with pcdyn_string_free(). Structured results are JSON documents;
 * exact scalars are fraction strings ("149/243") on the rational backend
 * and decimal strings on the float backend.
 *
 * A pcdyn_map wraps one piecewise contraction (branches + cuts + boundary
 * assignment); the expanding left inverse is built lazily for operations
 * that need it and rejected for general-mode maps.
 */

#ifndef PCDYN_H
#define PCDYN_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef PCDYN_API
#if defined(_WIN32)
#define PCDYN_API __declspec(dllexport)
#else
#define PCDYN_API __attribute__((visibility("default")))
#endif
#endif

#define PCDYN_OK 0
#define PCDYN_ERR_INTERNAL 1
#define PCDYN_ERR_VALIDATION 2
#define PCDYN_ERR_DOMAIN 3
#define PCDYN_ERR_INVARIANT 4
#define PCDYN_ERR_NUMERIC 5
#define PCDYN_ERR_PARSE 6
#define PCDYN_ERR_IO 7

typedef struct pcdyn_map pcdyn_map;

PCDYN_API const char* pcdyn_version(void);
PCDYN_API const char* pcdyn_last_error(void);
PCDYN_API int pcdyn_last_status(void);
PCDYN_API void pcdyn_string_free(char* s);

/* ---- construction -------------------------------------------------- */

/* map spec JSON: see README (backend, branches, cuts, assignment, general_mode) */
PCDYN_API int pcdyn_map_from_json(const char* json, pcdyn_map** out);
PCDYN_API int pcdyn_map_from_file(const char* path, pcdyn_map** out);
/* eps: optional scalar literal for example-4.1-f2-eps, else NULL */
PCDYN_API int pcdyn_map_from_preset(const char* name, const char* eps, pcdyn_map** out);
PCDYN_API void pcdyn_map_free(pcdyn_map* map);

/* validates a system description without keeping a handle; emits a report
 * (branches, images, gaps, kappa) for class-C systems */
PCDYN_API int pcdyn_validate_system(const char* json, char** report_json);

/* ---- basic queries -------------------------------------------------- */

PCDYN_API int pcdyn_map_n(const pcdyn_map* map, int* n);
PCDYN_API int pcdyn_map_describe(const pcdyn_map* map, char** spec_json);
/* x and result are scalar literals of the map's backend */
PCDYN_API int pcdyn_map_eval(const pcdyn_map* map, const char* x, char** y);
PCDYN_API int pcdyn_map_branch(const pcdyn_map* map, const char* x, int* digit);
PCDYN_API int pcdyn_g_eval(pcdyn_map* map, const char* x, char** y);
/* {"image": [...], "gaps": [...]} with endpoint flags */
PCDYN_API int pcdyn_map_image_json(const pcdyn_map* map, char** json);
/* expanding-map report: pieces and the expansion constant */
PCDYN_API int pcdyn_g_info_json(pcdyn_map* map, char** json);

/* ---- orbits and symbolic dynamics ----------------------------------- */

/* use_g != 0 iterates the left inverse instead of f */
PCDYN_API int pcdyn_orbit_json(pcdyn_map* map, const char* x, long steps, int use_g, char** json);
/* digits plus heuristic classification over `horizon` (0: no classification) */
PCDYN_API int pcdyn_itinerary_json(pcdyn_map* map, const char* x, long steps, long horizon, double tol,
                                   char** json);
PCDYN_API int pcdyn_gconnection_json(pcdyn_map* map, long kmax, char** json);

/* ---- quasi-partition and attractors ---------------------------------- */

/* budget 0 = default formula; report includes hull, components, tau, eta,
 * q, trails and the verification report */
PCDYN_API int pcdyn_qpartition_json(pcdyn_map* map, int budget, char** json);
PCDYN_API int pcdyn_attractors_json(pcdyn_map* map, int basin_samples, long iter_cap, uint64_t seed,
                                    char** json);
PCDYN_API int pcdyn_oracle_json(pcdyn_map* map, const char* x, long burn_in, int probe_len, double tol,
                                char** json);

/* ---- ergodic lab ------------------------------------------------------ */

PCDYN_API int pcdyn_ulam_json(pcdyn_map* map, int bins, int include_density, char** json);
PCDYN_API int pcdyn_density_gap(pcdyn_map* map, const char* x, long steps, double* max_gap);

/* ---- campaigns --------------------------------------------------------- */

/* config JSON (see README); per-trial records/scatter files are written to
 * the paths named in the config; returns the summary */
PCDYN_API int pcdyn_campaign_run(const char* config_json, char** summary_json);
PCDYN_API int pcdyn_presets_json(char** json);

#ifdef __cplusplus
}
#endif

#endif /* PCDYN_H */
