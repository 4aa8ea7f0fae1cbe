#ifndef VNCORE_H
#define VNCORE_H

/* C interface to the engine. Handles are opaque; every function that can fail
 * returns a vnc_status and leaves a message for vnc_last_error(). Strings
 * returned through char** are owned by the caller and released with
 * vnc_string_free(). */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define VNC_API __declspec(dllexport)
#else
#define VNC_API __attribute__((visibility("default")))
#endif

typedef struct vnc_instance vnc_instance;
typedef struct vnc_core vnc_core;
typedef struct vnc_report vnc_report;

typedef enum vnc_status {
    VNC_OK = 0,
    VNC_CHECK_FAILED = 1,
    VNC_MALFORMED = 2,
    VNC_NOT_WELL_DEFINED = 3,
    VNC_INVALID_ARGUMENT = 4,
    VNC_IO_ERROR = 5,
    VNC_INTERNAL_ERROR = 6
} vnc_status;

enum {
    VNC_CHECK_ANTIPODAL = 1u << 0,
    VNC_CHECK_FUSION = 1u << 1,
    VNC_CHECK_PARTIAL_INVERSE = 1u << 2,
    VNC_CHECK_COMPLETE_UNIT = 1u << 3,
    VNC_CHECK_ALL = 0xFu
};

typedef enum vnc_mutation {
    VNC_MUTATION_BREAK_SPLIT = 0,
    VNC_MUTATION_BREAK_U_NATURALITY = 1,
    VNC_MUTATION_ZERO_S = 2,
    VNC_MUTATION_SCALE_COUPLING = 3,
    VNC_MUTATION_CORRUPT_COMPOSITION = 4
} vnc_mutation;

/* Message of the last failure on this thread; empty after success. */
VNC_API const char* vnc_last_error(void);
VNC_API void vnc_string_free(char* s);

VNC_API vnc_status vnc_instance_load(const char* path, vnc_instance** out);
VNC_API vnc_status vnc_instance_parse(const char* text, vnc_instance** out);
/* Names: "z2", "z3-f7", "s3", "promonoidal-toy". */
VNC_API vnc_status vnc_instance_example(const char* name, vnc_instance** out);
VNC_API vnc_status vnc_instance_serialize(const vnc_instance* inst, char** text);
VNC_API vnc_status vnc_instance_save(const vnc_instance* inst, const char* path);
VNC_API vnc_status vnc_instance_mutate(const vnc_instance* inst, vnc_mutation m, vnc_instance** out);
VNC_API void vnc_instance_free(vnc_instance* inst);

/* VNC_CHECK_FAILED when some validator fails; *report is set either way. */
VNC_API vnc_status vnc_validate(const vnc_instance* inst, vnc_report** report);
/* *core is NULL unless the build succeeds. force skips validation. */
VNC_API vnc_status vnc_build(const vnc_instance* inst, int force, vnc_core** core, vnc_report** report);

VNC_API vnc_status vnc_core_load(const char* path, vnc_core** out);
VNC_API vnc_status vnc_core_parse(const char* text, vnc_core** out);
/* report may be NULL; otherwise its lines go into CHECKS. */
VNC_API vnc_status vnc_core_serialize(const vnc_core* core, const vnc_report* report, char** text);
VNC_API vnc_status vnc_core_save(const vnc_core* core, const vnc_report* report, const char* path);
VNC_API size_t vnc_core_dim(const vnc_core* core);
VNC_API void vnc_core_free(vnc_core* core);

/* flags is a combination of VNC_CHECK_* bits. */
VNC_API vnc_status vnc_check(const vnc_core* core, unsigned flags, vnc_report** report);

VNC_API const char* vnc_report_text(const vnc_report* report);
VNC_API int vnc_report_passed(const vnc_report* report);
VNC_API void vnc_report_free(vnc_report* report);

#ifdef __cplusplus
}
#endif

#endif
