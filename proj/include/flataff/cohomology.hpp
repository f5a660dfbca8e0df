/**
 * H^0 and H^1 of a finitely presented group with rational linear
 * coefficients: cocycle spaces from the Fox constraint matrix, coboundaries,
 * radiance classes of affine representations, gauge actions on classes, and
 * the free-abelian completeness determinant test.
 */

#ifndef FLATAFF_COHOMOLOGY_HPP
#define FLATAFF_COHOMOLOGY_HPP

#include <vector>

#include "flataff/group.hpp"
#include "flataff/linalg.hpp"

namespace flataff {

struct CoefficientModule
{
    Presentation presentation;
    Index dim = 0;                // l
    std::vector<MatrixQ> action;  // one invertible l x l matrix per generator
};

/** Throws InvalidRepresentation if some relator does not act as identity. */
void validate_module(const CoefficientModule& m);

/** A crossed homomorphism, recorded by its generator values. */
struct Cocycle1
{
    std::vector<VectorQ> values;
};

VectorQ stack_values(const Cocycle1& c);
Cocycle1 unstack_values(const VectorQ& v, int generator_count, Index l);

/** True iff the stacked values lie in the kernel of the Fox matrix. */
bool is_cocycle(const CoefficientModule& m, const Cocycle1& c);

/**
 * Z^1, B^1 and quotient data. Quotient coordinates use the deterministic
 * echelon completion of B^1 inside Z^1.
 */
struct CohomologySpaces
{
    MatrixQ z1_basis;      // (k*l) x dim Z^1
    MatrixQ b1_basis;      // (k*l) x dim B^1
    Index h1_dim = 0;
    MatrixQ h1_projector;  // h1_dim x (k*l); valid on Z^1
    MatrixQ h1_lift;       // (k*l) x h1_dim; representative of each class
};

/** Basis of the invariants, the common kernel of action(g) - I. */
MatrixQ h0(const CoefficientModule& m);

CohomologySpaces h1(const CoefficientModule& m);

/** c extended to a word via c(uv) = c(u) + rho(u) c(v). */
VectorQ cocycle_extend(const CoefficientModule& m, const Cocycle1& c, const Word& w);

struct RadianceClass
{
    CohomologySpaces spaces;
    VectorQ coordinates;  // h1_dim entries
};

/**
 * The H^1 class of the translation-part cocycle of a representation, over
 * the module given by its linear parts. Throws InvalidRepresentation when
 * verify_representation fails.
 */
RadianceClass radiance_class(const AffineRepresentation& rep);

/** The linear-part module of a representation. */
CoefficientModule linear_module(const AffineRepresentation& rep);

/**
 * A gauge element: an automorphism of the module's group (with its inverse's
 * generator images supplied) and an intertwining matrix Bg.
 */
struct GaugeElement
{
    GroupHom automorphism;             // source = target = the module's presentation
    std::vector<Word> inverse_images;  // generator images of the inverse automorphism
    MatrixQ bg;
};

/**
 * (Bg^* c)(gamma) = Bg c(g^{-1}(gamma)), reduced to H^1 coordinates.
 * Throws NotIntertwining if action(g(gamma_i)) != Bg action(gamma_i) Bg^{-1}.
 */
RadianceClass gauge_act(const CoefficientModule& m, const GaugeElement& g,
                        const RadianceClass& cls);

struct GaugeVerdict
{
    bool equivalent = false;
    int candidate_index = -1;  // first candidate that works
};

GaugeVerdict gauge_equivalent(const CoefficientModule& m, const RadianceClass& cls1,
                              const RadianceClass& cls2,
                              const std::vector<GaugeElement>& candidates);

struct CompletenessVerdict
{
    Rational det;
    bool nonzero = false;
};

/**
 * Determinant of the generator translation matrix; only defined when the
 * linear holonomy is trivial and the presentation is free-abelian of rank
 * equal to the dimension. Throws UnsupportedHolonomy otherwise.
 */
CompletenessVerdict completeness_det_test(const AffineRepresentation& rep);

}  // namespace flataff

#endif  // FLATAFF_COHOMOLOGY_HPP
