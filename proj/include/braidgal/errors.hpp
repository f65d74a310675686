#pragma once

#include <stdexcept>
#include <string>

namespace braidgal {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};
struct FieldMismatch : Error {
    using Error::Error;
};
struct NotInvertible : Error {
    using Error::Error;
};
struct NotFactorable : Error {
    using Error::Error;
};
struct NotWellDefined : Error {
    using Error::Error;
};
struct NotConvInvertible : Error {
    using Error::Error;
};
struct NotAGroup : Error {
    using Error::Error;
};
struct BadCharacteristic : Error {
    using Error::Error;
};
struct NotMorphism : Error {
    using Error::Error;
};
struct NotModuleComoduleIso : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};
struct UnknownTarget : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};

} // namespace braidgal
