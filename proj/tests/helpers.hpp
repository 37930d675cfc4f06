#pragma once

// Shared shorthands for the unit suites.

#include "hautus/genericity.hpp"
#include "hautus/poly_text.hpp"
#include "hautus/polymatrix.hpp"
#include "hautus/rng.hpp"

#include <cstdio>
#include <memory>
#include <stdexcept>
#include <string>
#include <sys/wait.h>
#include <utility>

namespace testutil {

inline hautus::Poly pp(const std::string& text, int nvars) {
    return hautus::parse_poly(text, nvars);
}

inline hautus::PolyMatrix mat(const std::string& text) {
    return hautus::parse_matrix_text(text);
}

// Random polynomial with the experiment sampler; never returns zero.
inline hautus::Poly random_nonzero(hautus::SplitMix64& rng, int nvars, int degree,
                                   double density = 1.0) {
    hautus::SampleSpec spec;
    spec.nvars = nvars;
    spec.degree = degree;
    spec.density = density;
    for (int attempt = 0; attempt < 64; ++attempt) {
        hautus::Poly p = hautus::random_poly(spec, rng);
        if (!p.is_zero()) return p;
    }
    throw std::runtime_error("sampler kept returning zero");
}

struct CommandResult {
    int exit_code = -1;
    std::string output; // stdout and stderr interleaved
};

// Runs a shell command, capturing combined output.
inline CommandResult run_command(const std::string& command) {
    CommandResult result;
    const std::string wrapped = command + " 2>&1";
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(wrapped.c_str(), "r"), pclose);
    if (!pipe) throw std::runtime_error("popen failed for: " + command);
    char buffer[4096];
    while (std::size_t got = std::fread(buffer, 1, sizeof buffer, pipe.get()))
        result.output.append(buffer, got);
    const int status = pclose(pipe.release());
    result.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return result;
}

} // namespace testutil
