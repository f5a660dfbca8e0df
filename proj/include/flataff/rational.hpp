/**
 * Exact rational scalar and dense Eigen types used throughout the library.
 *
 * All arithmetic is over GMP-backed rationals; there is no floating point
 * anywhere in the core.
 */

#ifndef FLATAFF_RATIONAL_HPP
#define FLATAFF_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace flataff {

using Rational = boost::multiprecision::mpq_rational;
using MatrixQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VectorQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using Eigen::Index;

/** Parse "p/q" or "p". Throws std::invalid_argument on malformed input. */
inline Rational parse_rational(const std::string& s)
{
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    try
    {
        Rational r(s);
        return r;
    }
    catch (const std::exception&)
    {
        throw std::invalid_argument("malformed rational literal: " + s);
    }
}

/** Canonical "p/q" form; integers print without the denominator. */
inline std::string format_rational(const Rational& r)
{
    return r.str();
}

inline bool mat_eq(const MatrixQ& a, const MatrixQ& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return false;
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j))
                return false;
    return true;
}

inline bool vec_eq(const VectorQ& a, const VectorQ& b)
{
    if (a.size() != b.size())
        return false;
    for (Index i = 0; i < a.size(); ++i)
        if (a(i) != b(i))
            return false;
    return true;
}

inline bool is_zero(const MatrixQ& a)
{
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != 0)
                return false;
    return true;
}

inline bool is_zero(const VectorQ& a)
{
    for (Index i = 0; i < a.size(); ++i)
        if (a(i) != 0)
            return false;
    return true;
}

}  // namespace flataff

#endif  // FLATAFF_RATIONAL_HPP
