/**
 * Exact rational linear algebra: echelon forms, kernels, solves, and
 * quotient-space bases with deterministic lexicographic pivoting.
 */

#ifndef FLATAFF_LINALG_HPP
#define FLATAFF_LINALG_HPP

#include <optional>
#include <vector>

#include "flataff/rational.hpp"

namespace flataff {

/**
 * Reduce `a` to reduced row echelon form in place. Pivots are chosen in
 * lexicographic order: leftmost column first, then the first nonzero row
 * from the top. Returns the pivot column indices.
 */
std::vector<Index> rref_in_place(MatrixQ& a);

Index rank(MatrixQ a);

/** Basis of the null space as matrix columns (free-variable construction). */
MatrixQ kernel_basis(const MatrixQ& a);

/** The independent columns of `a`, in their original order. */
MatrixQ column_space_basis(const MatrixQ& a);

/** One particular solution of a x = b (free variables zero), if consistent. */
std::optional<VectorQ> solve_linear(const MatrixQ& a, const VectorQ& b);

Rational determinant(MatrixQ a);

/** Inverse of a square matrix; throws SingularLinearPart if singular. */
MatrixQ inverse(const MatrixQ& a);

/** Exact equality of column spans, by mutual rank checks. */
bool subspace_equal(const MatrixQ& a, const MatrixQ& b);

/** True iff every column of `v` lies in the column span of `space`. */
bool subspace_contains(const MatrixQ& space, const MatrixQ& v);

/**
 * Coordinates on the quotient span(z) / span(b), where the columns of `b`
 * span a subspace of the column span of `z`.
 *
 * The basis of span(b) is completed to a basis of span(z) by a deterministic
 * echelon sweep through the columns of `z`; `projector * x` gives the
 * quotient coordinates of any x in span(z), and `completion * c` lifts
 * quotient coordinates back to a representative.
 */
struct QuotientBasis
{
    MatrixQ z_basis;      // independent generators of the ambient subspace
    MatrixQ b_basis;      // independent generators of the divided-out subspace
    MatrixQ completion;   // columns completing b_basis to a basis of span(z)
    MatrixQ projector;    // quotient_dim x N, valid on span(z)
    Index quotient_dim = 0;
};

QuotientBasis build_quotient(const MatrixQ& z, const MatrixQ& b);

}  // namespace flataff

#endif  // FLATAFF_LINALG_HPP
