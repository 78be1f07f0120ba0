/* Point data sequences and point representations. */

#include "branchq/points.hpp"

#include <numeric>
#include <stdexcept>

#include "branchq/branching.hpp"

namespace branchq {

bool projectively_equal(const ProjectivePoint& a, const ProjectivePoint& b) {
    if (a.coords.size() != b.coords.size()) return false;
    const std::size_t n = a.coords.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (a.coords[i] * b.coords[j] != a.coords[j] * b.coords[i]) return false;
    return true;
}

const PointStep& PointDataSequence::at(int k) const {
    const int pre = static_cast<int>(preperiod.size());
    if (k < pre) return preperiod[k];
    return period[(k - pre) % period.size()];
}

namespace {

bool has_nonzero_coord(const ProjectivePoint& p) {
    for (const Rational& c : p.coords)
        if (c != 0) return true;
    return false;
}

int vertex_index(const Quiver& q, const Label& l) {
    for (int i = 0; i < q.vertex_count(); ++i)
        if (q.vertices[i] == l) return i;
    throw std::invalid_argument("point data: vertex label not in the quiver");
}

void check_step(const Quiver& q, const PointStep& from, const PointStep& to) {
    const int i = vertex_index(q, from.vertex);
    const int j = vertex_index(q, to.vertex);
    const Int& arrows = q.arrow_counts[i][j];
    if (arrows < 1)
        throw std::invalid_argument("point data: consecutive vertices have no arrow");
    if (Int(from.point.coords.size()) != arrows)
        throw std::invalid_argument("point data: point dimension differs from arrow count");
    if (!has_nonzero_coord(from.point))
        throw std::invalid_argument("point data: zero point");
}

bool same_quiver(const Quiver& a, const Quiver& b) {
    return a.vertices == b.vertices && a.arrow_counts == b.arrow_counts;
}

} // namespace

void validate_point_data(const PointDataSequence& s) {
    if (s.period.empty())
        throw std::invalid_argument("point data: period must be nonempty");
    // walk every consecutive pair once, wrapping the period back onto itself
    const int pre = static_cast<int>(s.preperiod.size());
    const int per = static_cast<int>(s.period.size());
    for (int k = 0; k + 1 < pre; ++k) check_step(s.quiver, s.preperiod[k], s.preperiod[k + 1]);
    if (pre > 0) check_step(s.quiver, s.preperiod[pre - 1], s.period[0]);
    for (int k = 0; k < per; ++k) check_step(s.quiver, s.period[k], s.period[(k + 1) % per]);
}

bool equivalent(const PointDataSequence& s, const PointDataSequence& t) {
    if (!same_quiver(s.quiver, t.quiver))
        throw std::invalid_argument("equivalent: sequences live on different quivers");
    validate_point_data(s);
    validate_point_data(t);

    // beyond both preperiods each sequence is periodic, so agreement on one
    // lcm-length window pins down the whole tail
    const int start = static_cast<int>(std::max(s.preperiod.size(), t.preperiod.size()));
    const long long window =
        std::lcm<long long>(s.period.size(), t.period.size());
    for (long long k = start; k < start + window; ++k) {
        const PointStep& a = s.at(static_cast<int>(k));
        const PointStep& b = t.at(static_cast<int>(k));
        if (!(a.vertex == b.vertex)) return false;
        if (!projectively_equal(a.point, b.point)) return false;
    }
    return true;
}

const DegreeAction& PointRepresentation::at(int degree) const {
    const int k = degree - start_degree;
    if (k < 0) throw std::out_of_range("point representation: degree below start");
    const int pre = static_cast<int>(preperiod.size());
    if (k < pre) return preperiod[k];
    return period[(k - pre) % period.size()];
}

PointRepresentation point_representation(const PointDataSequence& s) {
    validate_point_data(s);
    PointRepresentation m;
    m.quiver = s.quiver;
    m.start_degree = 0;
    for (const PointStep& st : s.preperiod)
        m.preperiod.push_back(DegreeAction{st.vertex, st.point.coords});
    for (const PointStep& st : s.period)
        m.period.push_back(DegreeAction{st.vertex, st.point.coords});
    return m;
}

bool is_point_representation(const PointRepresentation& m, int check_degrees) {
    if (check_degrees < 1)
        throw std::invalid_argument("is_point_representation: horizon must be >= 1");
    if (m.period.empty()) return false;
    for (int k = 0; k < check_degrees; ++k) {
        const DegreeAction& cur = m.at(m.start_degree + k);
        const DegreeAction& nxt = m.at(m.start_degree + k + 1);
        int i, j;
        try {
            i = vertex_index(m.quiver, cur.vertex);
            j = vertex_index(m.quiver, nxt.vertex);
        } catch (const std::invalid_argument&) {
            return false;
        }
        if (m.quiver.arrow_counts[i][j] < 1) return false;
        if (Int(cur.coefficients.size()) != m.quiver.arrow_counts[i][j]) return false;
        bool nonzero = false;
        for (const Rational& c : cur.coefficients) nonzero = nonzero || c != 0;
        if (!nonzero) return false;  // the generator cannot reach degree k+1
    }
    return true;
}

PointDataSequence wild_family(int n, const std::vector<ProjectivePoint>& points) {
    if (n < 2) throw std::invalid_argument("wild_family: n must be >= 2");
    if (points.empty()) throw std::invalid_argument("wild_family: points must be nonempty");
    for (const ProjectivePoint& p : points)
        if (static_cast<int>(p.coords.size()) != n)
            throw std::invalid_argument("wild_family: points must have n coordinates");

    PointDataSequence s;
    s.quiver = quiver_of(type1(n, 1));
    const Label vertex = s.quiver.vertices.at(0);
    for (const ProjectivePoint& p : points) s.period.push_back(PointStep{vertex, p});
    validate_point_data(s);
    return s;
}

} // namespace branchq
