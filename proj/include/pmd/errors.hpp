#pragma once

#include <stdexcept>
#include <string>

namespace pmd {

/// Error codes for every failure mode the library reports.
enum class Errc {
    vertex_out_of_range,
    duplicate_vertex_in_edge,
    non_uniform,
    not_a_clutter,
    invalid_uniformity,
    invalid_parameters,
    anchor_not_in_host,
    fresh_vertex_collision,
    scope_missing_vertex,
    not_linear,
    root_not_matched,
    search_budget_exceeded,
    range_violation,
    no_admissible_t,
    certificate_unobtainable,
    budget_exceeded,
    not_a_good_forest,
    unknown_dialect,
    parse_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace pmd
