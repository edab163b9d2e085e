#pragma once

#include <stdexcept>
#include <string>

namespace lcskt {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The input structure constants do not define a Lie algebra.
struct JacobiViolation : Error {
    int i, j, k;
    JacobiViolation(int i_, int j_, int k_)
        : Error("Jacobi identity fails on basis triple (" + std::to_string(i_) + "," +
                std::to_string(j_) + "," + std::to_string(k_) + ")"),
          i(i_), j(j_), k(k_) {}
};

struct AmbientMismatch : Error {
    AmbientMismatch() : Error("forms live over coframes of different dimension") {}
};

// Two independent computations of the same quantity disagree; indicates a
// sign-convention or integrability bug, never a property of the input.
struct RouteMismatch : Error {
    explicit RouteMismatch(const std::string& what_) : Error("route mismatch: " + what_) {}
};

struct InvalidParams : Error {
    explicit InvalidParams(const std::string& what_) : Error("invalid parameters: " + what_) {}
};

struct SingularMatrix : Error {
    SingularMatrix() : Error("matrix is singular") {}
};

struct IncompatibleJ1 : Error {
    explicit IncompatibleJ1(const std::string& what_)
        : Error("almost abelian data incompatible with J1: " + what_) {}
};

struct NotPositiveDefinite : Error {
    NotPositiveDefinite() : Error("metric is not positive definite") {}
};

struct NotCompatible : Error {
    explicit NotCompatible(const std::string& what_) : Error("metric not compatible: " + what_) {}
};

struct DegenerateA : Error {
    DegenerateA() : Error("det A = 0: nondegenerate decision procedure does not apply") {}
};

struct ParseError : Error {
    int line, col;
    std::string expected;
    ParseError(int line_, int col_, const std::string& expected_)
        : Error("parse error at " + std::to_string(line_) + ":" + std::to_string(col_) +
                ": expected " + expected_),
          line(line_), col(col_), expected(expected_) {}
};

struct UnboundParam : Error {
    std::string name;
    explicit UnboundParam(const std::string& name_)
        : Error("unbound parameter: " + name_), name(name_) {}
};

struct UnknownName : Error {
    explicit UnknownName(const std::string& name_) : Error("unknown catalog name: " + name_) {}
};

struct UnknownScenario : Error {
    explicit UnknownScenario(const std::string& id_) : Error("unknown scenario: " + id_) {}
};

struct NonIntegrable : Error {
    NonIntegrable() : Error("complex structure is not integrable (Nijenhuis tensor nonzero)") {}
};

}  // namespace lcskt
