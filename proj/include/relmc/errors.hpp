#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace relmc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Formula text did not conform to the grammar.
struct SyntaxError : Error {
    int line;
    int column;
    std::vector<std::string> expected;

    SyntaxError(int line_, int column_, std::vector<std::string> expected_, const std::string& what_)
        : Error(what_), line(line_), column(column_), expected(std::move(expected_)) {}
};

// A structural invariant of a model is broken (star not total, triple out of range, ...).
struct MalformedModel : Error {
    using Error::Error;
};

struct UnknownWorld : Error {
    using Error::Error;
};

struct UnknownProp : Error {
    using Error::Error;
};

struct BoundTooSmall : Error {
    using Error::Error;
};

struct GenerationFailed : Error {
    using Error::Error;
};

struct BudgetExceeded : Error {
    using Error::Error;
};

struct NotBModel : Error {
    using Error::Error;
};

struct NotDistinguishable : Error {
    using Error::Error;
};

struct UnboundVariable : Error {
    using Error::Error;
};

}  // namespace relmc
