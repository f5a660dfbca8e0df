/**
 * Exact rational affine-group arithmetic and block-triangular structure.
 *
 * An AffineMap is an invertible map p -> linear p + translation of Q^n.
 * A BlockAffineMap is the (A, B, C, a, d) normal form of a map preserving
 * the base-first / fiber-second coordinate split:
 *
 *   (x, y) -> (A x + a, B y + C x + d).
 */

#ifndef FLATAFF_AFFINE_HPP
#define FLATAFF_AFFINE_HPP

#include "flataff/errors.hpp"
#include "flataff/linalg.hpp"
#include "flataff/rational.hpp"

namespace flataff {

class AffineMap
{
  public:
    /** Validates invertibility of the linear part eagerly. */
    AffineMap(MatrixQ linear, VectorQ translation)
        : linear_(std::move(linear)), translation_(std::move(translation))
    {
        if (linear_.rows() != linear_.cols())
            throw DimensionMismatch("AffineMap: linear part must be square");
        if (translation_.size() != linear_.rows())
            throw DimensionMismatch("AffineMap: translation size does not match");
        if (determinant(linear_) == 0)
            throw SingularLinearPart();
    }

    static AffineMap identity(Index dim)
    {
        return AffineMap(MatrixQ::Identity(dim, dim), VectorQ::Zero(dim));
    }

    static AffineMap translation_by(const VectorQ& t)
    {
        return AffineMap(MatrixQ::Identity(t.size(), t.size()), t);
    }

    Index dim() const { return linear_.rows(); }
    const MatrixQ& linear() const { return linear_; }
    const VectorQ& translation() const { return translation_; }

    bool operator==(const AffineMap& other) const
    {
        return mat_eq(linear_, other.linear_) && vec_eq(translation_, other.translation_);
    }

    bool is_identity() const
    {
        return mat_eq(linear_, MatrixQ::Identity(dim(), dim())) && is_zero(translation_);
    }

    bool is_translation() const
    {
        return mat_eq(linear_, MatrixQ::Identity(dim(), dim()));
    }

  private:
    MatrixQ linear_;
    VectorQ translation_;
};

/** Applies g then f. */
AffineMap compose(const AffineMap& f, const AffineMap& g);

AffineMap invert(const AffineMap& f);

VectorQ apply(const AffineMap& f, const VectorQ& p);

struct BlockSplit
{
    Index base_dim = 0;   // m
    Index fiber_dim = 0;  // l

    BlockSplit(Index m, Index l) : base_dim(m), fiber_dim(l)
    {
        if (m < 1 || l < 1)
            throw DimensionMismatch("BlockSplit: both blocks must be nonempty");
    }

    Index total() const { return base_dim + fiber_dim; }
};

struct BlockAffineMap
{
    BlockSplit split;
    MatrixQ base_linear;        // A, m x m
    MatrixQ fiber_linear;       // B, l x l
    MatrixQ coupling;           // C, l x m
    VectorQ base_translation;   // a
    VectorQ fiber_translation;  // d
};

/**
 * Decompose f for the split (base coordinates first). Throws
 * NotBlockTriangular listing the nonzero forbidden entries when the map
 * does not preserve the fiber foliation.
 */
BlockAffineMap block_decompose(const AffineMap& f, const BlockSplit& s);

AffineMap assemble(const BlockAffineMap& b);

}  // namespace flataff

#endif  // FLATAFF_AFFINE_HPP
