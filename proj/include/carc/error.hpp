#pragma once

#include <stdexcept>
#include <string>

namespace carc {

enum class Errc {
    malformed_input,
    part_out_of_range,
    intra_part_edge,
    host_edge_violation,
    duplicate_edge,
    invalid_vertex,
    invalid_ordering,
    invalid_position,
    unknown_example,
    invalid_argument,
    vertex_set_mismatch,
    duplicate_endpoint,
    normalization_failed,
    not_a_witness,
    unsupported_host,
    limit_exceeded,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace carc
