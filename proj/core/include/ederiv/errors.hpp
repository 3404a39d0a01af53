#ifndef EDERIV_ERRORS_HPP
#define EDERIV_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ederiv {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad user input: malformed file, arity mismatch, rejected parameter.
struct InputError : Error {
    using Error::Error;
};

/// Polynomial/scalar text that does not conform to the grammar.
struct SyntaxError : InputError {
    SyntaxError(const std::string& what, int line_, int column_)
        : InputError(what + " (line " + std::to_string(line_) + ", column " +
                     std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}
    int line;
    int column;
};

struct DivisionByZero : Error {
    using Error::Error;
};

/// A claim was invoked on parameters outside its hypotheses.
struct HypothesisError : InputError {
    using InputError::InputError;
};

/// Constant-shift elimination hit an eigenvalue 1 with a nonzero constant.
struct NormalizationImpossible : Error {
    NormalizationImpossible(const std::string& what, std::size_t index_)
        : Error(what), index(index_) {}
    std::size_t index;
};

/// A denominator a_k - sum l_i a_i vanished while solving for a conjugating
/// coefficient; carries the offending variable index and multi-index.
struct ResonantObstruction : Error {
    ResonantObstruction(const std::string& what, std::size_t var_index_,
                        std::vector<std::uint32_t> multi_index_)
        : Error(what), var_index(var_index_), multi_index(std::move(multi_index_)) {}
    std::size_t var_index;
    std::vector<std::uint32_t> multi_index;
};

/// An eigenvalue (or square root) lies outside the searchable subset of the
/// working field; the caller must supply a transform or enlarge the conductor.
struct UnsupportedField : Error {
    using Error::Error;
};

}  // namespace ederiv

#endif
