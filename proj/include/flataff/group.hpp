/**
 * Finitely presented groups, words over signed generators, affine
 * representations given by generator images, and the Fox-derivative
 * constraint matrix whose kernel is the crossed-homomorphism space Z^1.
 */

#ifndef FLATAFF_GROUP_HPP
#define FLATAFF_GROUP_HPP

#include <string>
#include <vector>

#include "flataff/affine.hpp"
#include "flataff/rational.hpp"

namespace flataff {

struct Letter
{
    int generator = 0;  // 0-based index into the ambient presentation
    int sign = 1;       // +1 or -1

    bool operator==(const Letter&) const = default;
};

struct Word
{
    std::vector<Letter> letters;

    bool operator==(const Word&) const = default;

    bool empty() const { return letters.empty(); }
    std::size_t length() const { return letters.size(); }

    static Word single(int gen, int sign = 1) { return Word{{Letter{gen, sign}}}; }
};

Word concat(const Word& u, const Word& v);
Word inverse_word(const Word& w);

/** Freely reduced form: no adjacent g g^-1 pairs. Idempotent. */
Word free_reduce(const Word& w);

struct Presentation
{
    int generator_count = 0;
    std::vector<Word> relators;
};

/** Throws on out-of-range letters or zero signs. */
void validate_word(const Word& w, int generator_count);
void validate_presentation(const Presentation& p);

struct AffineRepresentation
{
    Presentation presentation;
    Index dim = 0;
    std::vector<AffineMap> images;  // one per generator
};

AffineMap evaluate_word(const AffineRepresentation& rep, const Word& w);

struct RelatorFailure
{
    int relator_index;
    AffineMap evaluated;
};

struct RepresentationReport
{
    bool pass = true;
    std::vector<RelatorFailure> failures;
};

RepresentationReport verify_representation(const AffineRepresentation& rep);

/**
 * A homomorphism between presented groups, given by images of the source
 * generators. Relator images are only checked up to free reduction; data
 * that fails that check is the caller's assumption to honor.
 */
struct GroupHom
{
    Presentation source;
    Presentation target;
    std::vector<Word> images;
};

Word map_word(const GroupHom& h, const Word& w);

/**
 * The stacked relator-constraint matrix for a linear action given by one
 * invertible l x l matrix per generator. Fox derivatives are evaluated with
 * left transport: d(uv)/dg = du/dg + rho(u) dv/dg. The kernel, read as
 * stacked generator values, is Z^1 for the crossed-homomorphism convention
 * c(uv) = c(u) + rho(u) c(v).
 */
MatrixQ fox_jacobian(const Presentation& p, const std::vector<MatrixQ>& action);

/** Product of the action matrices along a word. */
MatrixQ act_word(const std::vector<MatrixQ>& action, const Word& w);

}  // namespace flataff

#endif  // FLATAFF_GROUP_HPP
