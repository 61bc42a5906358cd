#pragma once

#include <stdexcept>
#include <string>

namespace latcoh {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A lattice's action matrices fail a group relation (order, commutativity, shape).
struct RelationViolation : Error {
    using Error::Error;
};

// Two lattices over different groups were combined.
struct GroupMismatch : Error {
    using Error::Error;
};

// An operation specific to the Klein 4-group was called on another group.
struct NotKlein : Error {
    using Error::Error;
};

// A rank-0 lattice reached an operation that needs generators.
struct ZeroModule : Error {
    using Error::Error;
};

// An intermediate lattice rank exceeded the configured bound.
struct SizeLimit : Error {
    using Error::Error;
};

// subquotient_group: a column of I is outside the integer span of K.
struct NotContained : Error {
    using Error::Error;
};

// subquotient_group: rank(I) < rank(K), the quotient has a free part.
struct InfiniteQuotient : Error {
    using Error::Error;
};

// Prediction parameters out of range.
struct BadParameters : Error {
    using Error::Error;
};

// Cross-validation failure: the two cohomology methods disagree at a degree.
struct MethodDisagreement : Error {
    int degree;
    std::string resolution_value, shift_value;

    MethodDisagreement(int n, std::string res, std::string shi)
        : Error("method disagreement at degree " + std::to_string(n) + ": resolution gives " +
                res + ", shift gives " + shi),
          degree(n), resolution_value(std::move(res)), shift_value(std::move(shi)) {}
};

} // namespace latcoh
