/**
 * Error hierarchy for the library. Mathematical negatives (a failed check,
 * an obstructed ladder) are report content, not exceptions; exceptions are
 * reserved for contract violations and malformed input.
 */

#ifndef FLATAFF_ERRORS_HPP
#define FLATAFF_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace flataff {

struct Error : std::runtime_error
{
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : Error
{
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

struct SingularLinearPart : Error
{
    SingularLinearPart() : Error("linear part is singular") {}
};

/// Thrown when a map does not preserve the base/fiber foliation.
struct NotBlockTriangular : Error
{
    std::vector<std::pair<long, long>> positions;  // offending (row, col) entries

    explicit NotBlockTriangular(std::vector<std::pair<long, long>> pos)
        : Error("map is not block-triangular for the given split"),
          positions(std::move(pos))
    {
    }
};

struct InvalidRepresentation : Error
{
    explicit InvalidRepresentation(const std::string& what) : Error(what) {}
};

struct InvalidFibration : Error
{
    explicit InvalidFibration(const std::string& what) : Error(what) {}
};

struct NotIntertwining : Error
{
    long generator;

    explicit NotIntertwining(long gen)
        : Error("gauge data fails the conjugation identity on generator "
                + std::to_string(gen)),
          generator(gen)
    {
    }
};

struct UnsupportedHolonomy : Error
{
    explicit UnsupportedHolonomy(const std::string& what) : Error(what) {}
};

struct NotACocycle : Error
{
    explicit NotACocycle(const std::string& what) : Error(what) {}
};

/// Some defect map has a nonidentity linear part; the gluing family is
/// incompatible with an abelian lien.
struct NotTranslational : Error
{
    std::vector<std::vector<int>> simplices;

    explicit NotTranslational(std::vector<std::vector<int>> s)
        : Error("defect has nonidentity linear part on some 2-simplex"),
          simplices(std::move(s))
    {
    }
};

struct UnknownExample : Error
{
    std::vector<std::string> known;

    UnknownExample(const std::string& name, std::vector<std::string> names)
        : Error("unknown example \"" + name + "\""), known(std::move(names))
    {
    }
};

struct ParseError : Error
{
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace flataff

#endif  // FLATAFF_ERRORS_HPP
