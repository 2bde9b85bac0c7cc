#include "relthue/errors.hpp"

namespace relthue {

const char* errc_name(errc code) {
    switch (code) {
        case errc::not_monic: return "NotMonic";
        case errc::degree_too_small: return "DegreeTooSmall";
        case errc::not_all_real_distinct: return "NotAllRealDistinct";
        case errc::reducible: return "Reducible";
        case errc::intervals_too_wide: return "IntervalsTooWide";
        case errc::degree_unsupported: return "DegreeUnsupported";
        case errc::not_squarefree: return "NotSquarefree";
        case errc::out_of_range: return "OutOfRange";
        case errc::parameter_out_of_range: return "ParameterOutOfRange";
        case errc::empty_grid: return "EmptyGrid";
        case errc::box_too_large: return "BoxTooLarge";
        case errc::input_error: return "InputError";
    }
    return "Unknown";
}

}  // namespace relthue
