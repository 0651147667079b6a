#pragma once

#include <stdexcept>
#include <string>

namespace howe {

// Base class for all contract violations raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct CompositeOrSmallPrime : Error {
    explicit CompositeOrSmallPrime(const std::string& w) : Error(w) {}
};
struct MixedContexts : Error {
    explicit MixedContexts(const std::string& w) : Error(w) {}
};
struct ZeroPolynomial : Error {
    explicit ZeroPolynomial(const std::string& w) : Error(w) {}
};
struct NotAnExtension : Error {
    explicit NotAnExtension(const std::string& w) : Error(w) {}
};
struct NotZeroDimensional : Error {
    explicit NotZeroDimensional(const std::string& w) : Error(w) {}
};
struct DegenerateParams : Error {
    explicit DegenerateParams(const std::string& w) : Error(w) {}
};
struct NotHoweType : Error {
    explicit NotHoweType(const std::string& w) : Error(w) {}
};
struct DegenerateGeometry : Error {
    explicit DegenerateGeometry(const std::string& w) : Error(w) {}
};
struct EmptyVH : Error {
    explicit EmptyVH(const std::string& w) : Error(w) {}
};
struct SchemaMismatch : Error {
    explicit SchemaMismatch(const std::string& w) : Error(w) {}
};

} // namespace howe
