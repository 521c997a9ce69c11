#include "bmq/error.hpp"

namespace bmq {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Composition: return "composition-error";
        case ErrorKind::Name: return "name-error";
        case ErrorKind::DegenerateDecomposition: return "degenerate-decomposition";
        case ErrorKind::UnresolvableLabel: return "unresolvable-label";
        case ErrorKind::Range: return "range-error";
        case ErrorKind::Construction: return "construction-error";
        case ErrorKind::IllDefinedComponent: return "ill-defined-component";
        case ErrorKind::Parse: return "parse-error";
        case ErrorKind::Validation: return "validation-error";
    }
    return "error";
}

} // namespace bmq
