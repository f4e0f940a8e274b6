#pragma once

#include <stdexcept>
#include <string>

namespace chordnet {

// Base class for every domain failure raised by the library. The CLI maps
// anything derived from Error to exit code 1.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)), detail_(what) {}
    const std::string& kind() const noexcept { return kind_; }
    const std::string& detail() const noexcept { return detail_; }
    // Throws a copy of the same dynamic type with extra leading context.
    [[noreturn]] virtual void rethrow_with(const std::string& context) const = 0;

private:
    std::string kind_;
    std::string detail_;
};

#define CHORDNET_ERROR(Name)                                                   \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what) : Error(#Name, what) {}         \
        [[noreturn]] void rethrow_with(const std::string& context) const override { \
            throw Name(context + ": " + detail());                             \
        }                                                                      \
    }

CHORDNET_ERROR(ConstantPolynomial);
CHORDNET_ERROR(BudgetExceeded);
CHORDNET_ERROR(InseparableDegree);
CHORDNET_ERROR(NotZeroDimensional);
CHORDNET_ERROR(NotBinomial);
CHORDNET_ERROR(UnsupportedPolynomial);
CHORDNET_ERROR(NotZeroDimensionalNetwork);
CHORDNET_ERROR(NonSplittingSpecialization);
CHORDNET_ERROR(FieldTooSmall);
CHORDNET_ERROR(NotTriangularNetwork);
CHORDNET_ERROR(PrimalityUnknown);
CHORDNET_ERROR(NonPrimeModulus);
CHORDNET_ERROR(RingMismatch);

#undef CHORDNET_ERROR

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error("ParseError", "line " + std::to_string(line) + ", column " +
                                  std::to_string(column) + ": " + what),
          line_(line), column_(column), message_(what) {}
    [[noreturn]] void rethrow_with(const std::string& context) const override {
        throw ParseError(context + ": " + message_, line_, column_);
    }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

} // namespace chordnet
