#pragma once

// The validate -> build -> check sequence behind the command-line tool and the
// C API. Reports never contain timings, so reruns are byte-identical.

#include "vncore/core.hpp"
#include "vncore/fincat.hpp"
#include "vncore/report.hpp"

#include <optional>

namespace vncore::pipeline {

/// Category, U, E1/E2, generator data, then density of every object.
/// A failing stage skips the stages that depend on it.
Report validate(const fincat::Instance& inst);

struct BuildResult {
    Report report;
    std::optional<vn::VNCoreData> core;
};

/// Validates (unless `force`), computes End^v U and builds mu, delta, S.
/// A META "mutation" of ZeroS is applied to the finished core.
BuildResult build(const fincat::Instance& inst, bool force = false);

struct CheckOptions {
    bool antipodal = false;
    bool fusion = false;
    bool partial_inverse = false;
    bool complete_unit = false;

    static CheckOptions all() { return {true, true, true, true}; }
};

/// Semibialgebra laws and the von Neumann axiom always; the rest on request.
/// With complete_unit the completed core is rechecked under "completed.".
Report check(const vn::VNCoreData& core, const CheckOptions& options);

inline int exit_code(const Report& r)
{
    return r.passed() ? 0 : 1;
}

} // namespace vncore::pipeline
