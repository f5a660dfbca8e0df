#include "flataff/linalg.hpp"

#include "flataff/errors.hpp"

namespace flataff {

std::vector<Index> rref_in_place(MatrixQ& a)
{
    std::vector<Index> pivots;
    Index row = 0;
    for (Index col = 0; col < a.cols() && row < a.rows(); ++col)
    {
        Index p = -1;
        for (Index r = row; r < a.rows(); ++r)
        {
            if (a(r, col) != 0)
            {
                p = r;
                break;
            }
        }
        if (p < 0)
            continue;
        if (p != row)
            a.row(p).swap(a.row(row));
        const Rational pivot = a(row, col);
        a.row(row) /= pivot;
        for (Index r = 0; r < a.rows(); ++r)
        {
            if (r != row && a(r, col) != 0)
            {
                const Rational factor = a(r, col);
                a.row(r) -= factor * a.row(row);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

Index rank(MatrixQ a)
{
    return static_cast<Index>(rref_in_place(a).size());
}

MatrixQ kernel_basis(const MatrixQ& a)
{
    MatrixQ r = a;
    std::vector<Index> pivots = rref_in_place(r);
    std::vector<bool> is_pivot(a.cols(), false);
    for (Index p : pivots)
        is_pivot[p] = true;

    const Index nullity = a.cols() - static_cast<Index>(pivots.size());
    MatrixQ basis = MatrixQ::Zero(a.cols(), nullity);
    Index k = 0;
    for (Index free = 0; free < a.cols(); ++free)
    {
        if (is_pivot[free])
            continue;
        basis(free, k) = 1;
        for (Index i = 0; i < static_cast<Index>(pivots.size()); ++i)
            basis(pivots[i], k) = -r(i, free);
        ++k;
    }
    return basis;
}

MatrixQ column_space_basis(const MatrixQ& a)
{
    MatrixQ r = a;
    std::vector<Index> pivots = rref_in_place(r);
    MatrixQ basis(a.rows(), static_cast<Index>(pivots.size()));
    for (Index i = 0; i < static_cast<Index>(pivots.size()); ++i)
        basis.col(i) = a.col(pivots[i]);
    return basis;
}

std::optional<VectorQ> solve_linear(const MatrixQ& a, const VectorQ& b)
{
    if (b.size() != a.rows())
        throw DimensionMismatch("solve_linear: rhs size does not match rows");
    MatrixQ aug(a.rows(), a.cols() + 1);
    aug.leftCols(a.cols()) = a;
    aug.col(a.cols()) = b;
    std::vector<Index> pivots = rref_in_place(aug);
    if (!pivots.empty() && pivots.back() == a.cols())
        return std::nullopt;  // inconsistent
    VectorQ x = VectorQ::Zero(a.cols());
    for (Index i = 0; i < static_cast<Index>(pivots.size()); ++i)
        x(pivots[i]) = aug(i, a.cols());
    return x;
}

Rational determinant(MatrixQ a)
{
    if (a.rows() != a.cols())
        throw DimensionMismatch("determinant of a non-square matrix");
    const Index n = a.rows();
    Rational det = 1;
    for (Index col = 0; col < n; ++col)
    {
        Index p = -1;
        for (Index r = col; r < n; ++r)
        {
            if (a(r, col) != 0)
            {
                p = r;
                break;
            }
        }
        if (p < 0)
            return Rational(0);
        if (p != col)
        {
            a.row(p).swap(a.row(col));
            det = -det;
        }
        det *= a(col, col);
        for (Index r = col + 1; r < n; ++r)
        {
            if (a(r, col) != 0)
            {
                // materialize the factor: a lazy quotient would re-read
                // a(r, col) while the row update is overwriting it
                const Rational factor = a(r, col) / a(col, col);
                a.row(r) -= factor * a.row(col);
            }
        }
    }
    return det;
}

MatrixQ inverse(const MatrixQ& a)
{
    if (a.rows() != a.cols())
        throw DimensionMismatch("inverse of a non-square matrix");
    const Index n = a.rows();
    MatrixQ aug(n, 2 * n);
    aug.leftCols(n) = a;
    aug.rightCols(n) = MatrixQ::Identity(n, n);
    std::vector<Index> pivots = rref_in_place(aug);
    if (static_cast<Index>(pivots.size()) < n || (n > 0 && pivots.back() >= n))
        throw SingularLinearPart();
    return aug.rightCols(n);
}

bool subspace_contains(const MatrixQ& space, const MatrixQ& v)
{
    if (space.rows() != v.rows())
        throw DimensionMismatch("subspace_contains: ambient dimensions differ");
    const Index r = rank(space);
    MatrixQ joined(space.rows(), space.cols() + v.cols());
    joined.leftCols(space.cols()) = space;
    joined.rightCols(v.cols()) = v;
    return rank(joined) == r;
}

bool subspace_equal(const MatrixQ& a, const MatrixQ& b)
{
    return subspace_contains(a, b) && subspace_contains(b, a);
}

QuotientBasis build_quotient(const MatrixQ& z, const MatrixQ& b)
{
    if (z.rows() != b.rows())
        throw DimensionMismatch("build_quotient: ambient dimensions differ");
    if (!subspace_contains(z, b))
        throw Error("build_quotient: divided-out space is not contained in the ambient one");

    QuotientBasis q;
    q.z_basis = column_space_basis(z);
    q.b_basis = column_space_basis(b);

    const Index zdim = q.z_basis.cols();
    const Index bdim = q.b_basis.cols();
    q.quotient_dim = zdim - bdim;

    // Complete b_basis to a basis of span(z) by sweeping z's columns in order.
    MatrixQ c(z.rows(), zdim);
    c.leftCols(bdim) = q.b_basis;
    Index have = bdim;
    Index cur_rank = rank(q.b_basis);
    for (Index j = 0; j < z.cols() && have < zdim; ++j)
    {
        c.col(have) = z.col(j);
        Index r = rank(c.leftCols(have + 1));
        if (r > cur_rank)
        {
            cur_rank = r;
            ++have;
        }
    }
    if (have != zdim)
        throw Error("build_quotient: completion failed");  // unreachable on valid input
    q.completion = c.rightCols(q.quotient_dim);

    // Left inverse of c from its pivot rows: L c = I, then keep the trailing
    // quotient block.
    MatrixQ ct = c.transpose();
    MatrixQ ctr = ct;
    std::vector<Index> row_pivots = rref_in_place(ctr);  // pivot cols of c^T = pivot rows of c
    MatrixQ cp(zdim, zdim);
    for (Index i = 0; i < zdim; ++i)
        cp.row(i) = c.row(row_pivots[i]);
    MatrixQ cp_inv = inverse(cp);
    MatrixQ left = MatrixQ::Zero(zdim, z.rows());
    for (Index i = 0; i < zdim; ++i)
        left.col(row_pivots[i]) = cp_inv.col(i);
    q.projector = left.bottomRows(q.quotient_dim);
    return q;
}

}  // namespace flataff
