/**
 * Cech cochain complexes over abstract nerves with flat rational local
 * systems: validation, the twisted coboundary, cohomology bases, coboundary
 * solving, and the nonabelian defect of a gluing family.
 *
 * Convention: cochain values on a simplex live at its leading vertex;
 * transition(i, j) transports values at j to values at i, and flatness on a
 * triangle i < j < k reads transition(i,k) = transition(i,j) transition(j,k).
 */

#ifndef FLATAFF_CECH_HPP
#define FLATAFF_CECH_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "flataff/affine.hpp"
#include "flataff/linalg.hpp"

namespace flataff {

struct Nerve
{
    int vertex_count = 0;
    std::vector<std::vector<int>> simplices;  // strictly increasing tuples

    /** The simplices with k+1 vertices, in sorted order. */
    std::vector<std::vector<int>> simplices_of_dim(int k) const;
    bool has_simplex(const std::vector<int>& s) const;
};

/** Throws on malformed tuples; face-closure violations are report content. */
struct NerveReport
{
    bool pass = true;
    std::vector<std::string> violations;
};

NerveReport validate_nerve(const Nerve& n);

class LocalSystem
{
  public:
    LocalSystem(Nerve nerve, Index dim,
                std::map<std::pair<int, int>, MatrixQ> transitions);

    const Nerve& nerve() const { return nerve_; }
    Index dim() const { return dim_; }

    /** transition(i, j) for any ordered pair on an edge of the nerve. */
    MatrixQ transition(int i, int j) const;

    const std::map<std::pair<int, int>, MatrixQ>& stored_transitions() const
    {
        return transitions_;
    }

  private:
    Nerve nerve_;
    Index dim_ = 0;
    std::map<std::pair<int, int>, MatrixQ> transitions_;  // keyed i < j
};

struct SystemReport
{
    bool pass = true;
    std::vector<std::string> violations;
    std::vector<std::vector<int>> offending_simplices;
};

SystemReport validate_system(const LocalSystem& s);

struct Cochain
{
    int degree = 0;
    Index dim = 0;
    std::map<std::vector<int>, VectorQ> values;  // keyed by k-simplices

    bool is_zero_cochain() const;
};

Cochain zero_cochain(const LocalSystem& s, int degree);

/** (delta c)(i0..ik+1) = T(i0,i1) c(i1..) + sum_{j>=1} (-1)^j c(..omit ij..). */
Cochain coboundary(const LocalSystem& s, const Cochain& c);

/** Matrix of the degree-k coboundary in the sorted simplex bases. */
MatrixQ delta_matrix(const LocalSystem& s, int k);

VectorQ cochain_to_vector(const LocalSystem& s, const Cochain& c);
Cochain vector_to_cochain(const LocalSystem& s, int degree, const VectorQ& v);

struct CechCohomology
{
    Index dim = 0;
    MatrixQ cocycle_basis;     // columns, in the sorted simplex coordinates
    MatrixQ coboundary_basis;  // columns
    QuotientBasis quotient;
};

CechCohomology cohomology(const LocalSystem& s, int k);

struct CoboundarySolution
{
    bool solved = false;
    Cochain primitive;    // when solved: a with delta a = z
    VectorQ certificate;  // when not: nonzero class coordinates
};

/** Throws NotACocycle when delta z != 0. Degree of z must be >= 1. */
CoboundarySolution solve_coboundary(const LocalSystem& s, const Cochain& z);

/** Gluing family: one affine map per edge i < j; the reversed edge is the
 *  inverse map. */
using GluingFamily = std::map<std::pair<int, int>, AffineMap>;

AffineMap gluing_at(const GluingFamily& u, int i, int j);

struct DefectResult
{
    LocalSystem induced;  // linear parts of the gluing as a local system
    Cochain defect;       // translation-valued 2-cochain
};

/**
 * Per 2-simplex i < j < k, the defect u_ij u_jk u_ik^{-1}. Throws
 * NotTranslational listing the simplices where the defect has a nonidentity
 * linear part; otherwise the defect is a 2-cocycle of the induced system.
 */
DefectResult nonabelian_defect(const Nerve& n, const GluingFamily& u, Index translation_dim);

}  // namespace flataff

#endif  // FLATAFF_CECH_HPP
