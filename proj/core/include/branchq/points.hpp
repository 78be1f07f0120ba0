#pragma once

/* Eventually periodic point data sequences over a quiver, their tail
 * equivalence (vertex labels equal and points projectively equal for all
 * large indices), and the associated graded one-dimensional modules.
 */

#include <vector>

#include "branchq/linalg.hpp"
#include "branchq/quiver.hpp"

namespace branchq {

struct ProjectivePoint {
    std::vector<Rational> coords;  // never the zero vector
};

// Equality up to a global nonzero scalar, decided by cross-multiplication;
// vectors of different lengths are never equal.
bool projectively_equal(const ProjectivePoint& a, const ProjectivePoint& b);

struct PointStep {
    Label vertex;
    ProjectivePoint point;  // coordinates along the arrows to the next vertex
};

struct PointDataSequence {
    Quiver quiver;
    std::vector<PointStep> preperiod;
    std::vector<PointStep> period;  // nonempty; index k reads preperiod first,
                                    // then cycles through period forever

    const PointStep& at(int k) const;  // the k-th step, k >= 0
};

// Throws std::invalid_argument unless every consecutive vertex pair
// (including the wrap of the period) has an arrow and every point has one
// coordinate per parallel arrow, none of the points zero.
void validate_point_data(const PointDataSequence& s);

// Tail equivalence: some K with equal vertices and projectively equal
// points at every index k >= K.  Decided exactly by comparing one aligned
// full period after both preperiods.  Throws when the quivers differ.
bool equivalent(const PointDataSequence& s, const PointDataSequence& t);

struct DegreeAction {
    Label vertex;                      // supporting vertex of this degree
    std::vector<Rational> coefficients;  // action scalars of the parallel
                                         // arrows toward the next vertex
};

struct PointRepresentation {
    Quiver quiver;
    int start_degree = 0;
    std::vector<DegreeAction> preperiod;
    std::vector<DegreeAction> period;

    const DegreeAction& at(int degree) const;  // degree >= start_degree
};

// The graded module with one basis vector per degree; arrows between
// consecutive vertices act by the point coordinates, all other arrows by 0.
PointRepresentation point_representation(const PointDataSequence& s);

// Check the defining properties degree by degree up to the horizon:
// consecutive vertices joined by arrows, one coefficient per arrow, and a
// nonzero step (cyclicity) at every checked degree.
bool is_point_representation(const PointRepresentation& m, int check_degrees);

// The periodic sequence through the given points on the one-vertex quiver
// with n loops.
PointDataSequence wild_family(int n, const std::vector<ProjectivePoint>& points);

} // namespace branchq
