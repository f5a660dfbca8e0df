#include "flataff/affine.hpp"

namespace flataff {

AffineMap compose(const AffineMap& f, const AffineMap& g)
{
    if (f.dim() != g.dim())
        throw DimensionMismatch("compose: dimensions differ");
    return AffineMap(f.linear() * g.linear(),
                     f.linear() * g.translation() + f.translation());
}

AffineMap invert(const AffineMap& f)
{
    MatrixQ inv = inverse(f.linear());
    return AffineMap(inv, -(inv * f.translation()));
}

VectorQ apply(const AffineMap& f, const VectorQ& p)
{
    if (p.size() != f.dim())
        throw DimensionMismatch("apply: point dimension differs");
    return f.linear() * p + f.translation();
}

BlockAffineMap block_decompose(const AffineMap& f, const BlockSplit& s)
{
    const Index m = s.base_dim;
    const Index l = s.fiber_dim;
    if (f.dim() != s.total())
        throw DimensionMismatch("block_decompose: split does not match map dimension");

    std::vector<std::pair<long, long>> bad;
    for (Index i = 0; i < m; ++i)
        for (Index j = 0; j < l; ++j)
            if (f.linear()(i, m + j) != 0)
                bad.emplace_back(static_cast<long>(i), static_cast<long>(m + j));
    if (!bad.empty())
        throw NotBlockTriangular(std::move(bad));

    BlockAffineMap b{s,
                     f.linear().topLeftCorner(m, m),
                     f.linear().bottomRightCorner(l, l),
                     f.linear().bottomLeftCorner(l, m),
                     f.translation().head(m),
                     f.translation().tail(l)};
    // A and B are invertible because f is and the upper-right block is zero.
    return b;
}

AffineMap assemble(const BlockAffineMap& b)
{
    const Index m = b.split.base_dim;
    const Index l = b.split.fiber_dim;
    MatrixQ linear = MatrixQ::Zero(m + l, m + l);
    linear.topLeftCorner(m, m) = b.base_linear;
    linear.bottomRightCorner(l, l) = b.fiber_linear;
    linear.bottomLeftCorner(l, m) = b.coupling;
    VectorQ t(m + l);
    t.head(m) = b.base_translation;
    t.tail(l) = b.fiber_translation;
    return AffineMap(std::move(linear), std::move(t));
}

}  // namespace flataff
