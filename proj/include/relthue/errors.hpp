#pragma once

#include <stdexcept>
#include <string>

namespace relthue {

enum class errc {
    not_monic,
    degree_too_small,
    not_all_real_distinct,
    reducible,
    intervals_too_wide,
    degree_unsupported,
    not_squarefree,
    out_of_range,
    parameter_out_of_range,
    empty_grid,
    box_too_large,
    input_error,
};

class solver_error : public std::runtime_error {
public:
    solver_error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

const char* errc_name(errc code);

}  // namespace relthue
