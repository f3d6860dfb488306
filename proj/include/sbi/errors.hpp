#ifndef SBI_ERRORS_HPP
#define SBI_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sbi {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ExactDivisionError : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct DegenerateInput : Error { using Error::Error; };
struct DimensionError : Error { using Error::Error; };
struct ZeroVector : Error { using Error::Error; };
struct NotABinomial : Error { using Error::Error; };
struct NotReflexivePrime : Error { using Error::Error; };

/* position is 1-based */
struct ParseError : Error {
    std::size_t line;
    std::size_t column;
    ParseError(std::string const & msg, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          line(line), column(column) {}
};

}

#endif
