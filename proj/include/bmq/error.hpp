#ifndef BMQ_ERROR_HPP
#define BMQ_ERROR_HPP

#include <stdexcept>
#include <string>

namespace bmq {

enum class ErrorKind {
    Composition,
    Name,
    DegenerateDecomposition,
    UnresolvableLabel,
    Range,
    Construction,
    IllDefinedComponent,
    Parse,
    Validation,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace bmq

#endif // BMQ_ERROR_HPP
