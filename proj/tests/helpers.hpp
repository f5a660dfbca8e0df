/**
 * Deterministic random generators shared by the property tests. Everything
 * is seeded explicitly so failures reproduce bit-for-bit.
 */

#ifndef FLATAFF_TEST_HELPERS_HPP
#define FLATAFF_TEST_HELPERS_HPP

#include <random>

#include "flataff/cech.hpp"
#include "flataff/group.hpp"

namespace testutil {

using flataff::Index;
using flataff::MatrixQ;
using flataff::Rational;
using flataff::VectorQ;

using Rng = std::mt19937;

/** Rational with numerator and denominator bounded by `bound`. */
inline Rational random_rational(Rng& rng, int bound = 5)
{
    std::uniform_int_distribution<int> num(-bound, bound);
    std::uniform_int_distribution<int> den(1, bound);
    return Rational(num(rng), den(rng));
}

inline VectorQ random_vector(Rng& rng, Index n, int bound = 5)
{
    VectorQ v(n);
    for (Index i = 0; i < n; ++i)
        v(i) = random_rational(rng, bound);
    return v;
}

inline MatrixQ random_matrix(Rng& rng, Index rows, Index cols, int bound = 5)
{
    MatrixQ m(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j)
            m(i, j) = random_rational(rng, bound);
    return m;
}

inline MatrixQ random_invertible(Rng& rng, Index n, int bound = 5)
{
    for (;;)
    {
        MatrixQ m = random_matrix(rng, n, n, bound);
        if (flataff::determinant(m) != 0)
            return m;
    }
}

inline flataff::Word random_word(Rng& rng, int generator_count, int max_length)
{
    std::uniform_int_distribution<int> len(0, max_length);
    std::uniform_int_distribution<int> gen(0, generator_count - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    flataff::Word w;
    const int n = len(rng);
    for (int i = 0; i < n; ++i)
        w.letters.push_back(flataff::Letter{gen(rng), sign(rng) ? 1 : -1});
    return w;
}

/** Random face-closed nerve on at most `max_vertices` vertices. */
inline flataff::Nerve random_nerve(Rng& rng, int max_vertices = 6)
{
    std::uniform_int_distribution<int> nv(2, max_vertices);
    std::uniform_int_distribution<int> coin(0, 1);
    flataff::Nerve n;
    n.vertex_count = nv(rng);
    for (int v = 0; v < n.vertex_count; ++v)
        n.simplices.push_back({v});
    for (int i = 0; i < n.vertex_count; ++i)
        for (int j = i + 1; j < n.vertex_count; ++j)
            if (coin(rng))
                n.simplices.push_back({i, j});
    for (int i = 0; i < n.vertex_count; ++i)
        for (int j = i + 1; j < n.vertex_count; ++j)
            for (int k = j + 1; k < n.vertex_count; ++k)
                if (n.has_simplex({i, j}) && n.has_simplex({i, k}) && n.has_simplex({j, k})
                    && coin(rng))
                    n.simplices.push_back({i, j, k});
    for (int i = 0; i < n.vertex_count; ++i)
        for (int j = i + 1; j < n.vertex_count; ++j)
            for (int k = j + 1; k < n.vertex_count; ++k)
                for (int l = k + 1; l < n.vertex_count; ++l)
                    if (n.has_simplex({i, j, k}) && n.has_simplex({i, j, l})
                        && n.has_simplex({i, k, l}) && n.has_simplex({j, k, l}) && coin(rng))
                        n.simplices.push_back({i, j, k, l});
    return n;
}

/**
 * Random flat local system: transitions T(i, j) = g_i g_j^{-1} from random
 * invertible vertex potentials, so flatness holds by construction.
 */
inline flataff::LocalSystem random_flat_system(Rng& rng, const flataff::Nerve& n, Index dim)
{
    std::vector<MatrixQ> potential;
    for (int v = 0; v < n.vertex_count; ++v)
        potential.push_back(random_invertible(rng, dim, 3));
    std::map<std::pair<int, int>, MatrixQ> t;
    for (const auto& e : n.simplices_of_dim(1))
        t[{e[0], e[1]}] =
            MatrixQ(potential[static_cast<std::size_t>(e[0])]
                    * flataff::inverse(potential[static_cast<std::size_t>(e[1])]));
    return flataff::LocalSystem(n, dim, std::move(t));
}

inline flataff::Cochain random_cochain(Rng& rng, const flataff::LocalSystem& s, int degree)
{
    flataff::Cochain c = flataff::zero_cochain(s, degree);
    for (auto& [simplex, v] : c.values)
        v = random_vector(rng, s.dim(), 3);
    return c;
}

}  // namespace testutil

#endif  // FLATAFF_TEST_HELPERS_HPP
