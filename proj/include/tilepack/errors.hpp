#pragma once

#include <stdexcept>
#include <string>

namespace tilepack {

// Error classes map 1:1 onto CLI exit codes.
enum class ErrorCode : int {
    Generic = 1,
    Parse = 2,
    Dimension = 3,
    VolumeOrder = 4,
    SearchExhausted = 5,
    NontrivialIntersection = 6,
    Geometry = 7,
    Field = 8,
    Containment = 9,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }
    int exit_code() const noexcept { return static_cast<int>(code_); }

private:
    ErrorCode code_;
};

struct ParseError : Error {
    explicit ParseError(const std::string& w) : Error(ErrorCode::Parse, w) {}
};
struct DimensionError : Error {
    explicit DimensionError(const std::string& w) : Error(ErrorCode::Dimension, w) {}
};
struct VolumeOrderError : Error {
    explicit VolumeOrderError(const std::string& w) : Error(ErrorCode::VolumeOrder, w) {}
};
struct SearchExhaustedError : Error {
    explicit SearchExhaustedError(const std::string& w) : Error(ErrorCode::SearchExhausted, w) {}
};
struct NontrivialIntersectionError : Error {
    explicit NontrivialIntersectionError(const std::string& w)
        : Error(ErrorCode::NontrivialIntersection, w) {}
};
struct GeometryError : Error {
    explicit GeometryError(const std::string& w) : Error(ErrorCode::Geometry, w) {}
};
struct FieldError : Error {
    explicit FieldError(const std::string& w) : Error(ErrorCode::Field, w) {}
};
struct ContainmentError : Error {
    explicit ContainmentError(const std::string& w) : Error(ErrorCode::Containment, w) {}
};

} // namespace tilepack
