#pragma once

#include <stdexcept>
#include <string>

namespace sumsetlab {

/// Error taxonomy shared by all modules. The CLI maps kinds to exit codes,
/// so every throw site must pick the kind deliberately.
enum class ErrorKind {
    dimension,              // mismatched or unsupported point dimensions
    empty_input,            // operation requires a non-empty set
    argument,               // argument outside the documented domain
    unsupported_dimension,  // dimension above a hard per-op bound
    capacity,               // a configured cap would be exceeded
    no_cover,               // requested hull/cover does not exist
    generation,             // randomized construction failed after retries
    hypothesis,             // verifier preconditions violated
    infeasible,             // search constraint unsatisfiable
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

struct DimensionError : Error {
    explicit DimensionError(const std::string& w) : Error(ErrorKind::dimension, w) {}
};
struct EmptyInputError : Error {
    explicit EmptyInputError(const std::string& w) : Error(ErrorKind::empty_input, w) {}
};
struct ArgumentError : Error {
    explicit ArgumentError(const std::string& w) : Error(ErrorKind::argument, w) {}
};
struct UnsupportedDimensionError : Error {
    explicit UnsupportedDimensionError(const std::string& w) : Error(ErrorKind::unsupported_dimension, w) {}
};
struct CapacityError : Error {
    explicit CapacityError(const std::string& w) : Error(ErrorKind::capacity, w) {}
};
struct NoCoverError : Error {
    explicit NoCoverError(const std::string& w) : Error(ErrorKind::no_cover, w) {}
};
struct GenerationError : Error {
    explicit GenerationError(const std::string& w) : Error(ErrorKind::generation, w) {}
};
struct HypothesisError : Error {
    explicit HypothesisError(const std::string& w) : Error(ErrorKind::hypothesis, w) {}
};
struct InfeasibleError : Error {
    explicit InfeasibleError(const std::string& w) : Error(ErrorKind::infeasible, w) {}
};

}  // namespace sumsetlab
