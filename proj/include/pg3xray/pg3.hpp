#ifndef PG3XRAY_PG3_HPP
#define PG3XRAY_PG3_HPP

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "pg3xray/gf.hpp"

namespace pg3xray {

/// Homogeneous coordinates over GF(q), normalized so the first nonzero
/// coordinate (in order x0, x1, x2, x3) is 1.
struct ProjectivePoint {
    std::array<int, 4> coords;
    int index;
};

/// Pluecker 6-vector (p01, p02, p03, p12, p13, p23), first nonzero entry 1.
/// Satisfies p01*p23 - p02*p13 + p03*p12 = 0.
struct ProjectiveLine {
    std::array<int, 6> pluecker;
    int index;
};

enum class Relation : uint8_t { Equal = 0, Meet = 1, Skew = 2 };

/// Counts of third lines by their relations to a fixed pair (l1, l2):
/// counts[r1][r2] is the number of lines l3 (excluding l1 and l2) in
/// relation r1 to l1 and r2 to l2. The Equal row and column are always
/// zero because l1 and l2 themselves are excluded.
struct RelationCensus {
    Relation base;
    std::array<std::array<int64_t, 3>, 3> counts{};

    int64_t at(Relation r1, Relation r2) const {
        return counts[(int)r1][(int)r2];
    }
    int64_t total() const {
        int64_t t = 0;
        for (auto& row : counts)
            for (auto c : row) t += c;
        return t;
    }
};

struct IncidenceCounts {
    int64_t per_point;     // lines through every point: q^2+q+1
    int64_t per_line;      // points on every line: q+1
    int64_t skew_per_line; // lines disjoint from every line: q^4
};

/// The full point/line model of PG(3,q): canonical enumerations, the
/// incidence relation in both directions, and line-line relations.
/// Immutable after build; all queries are read-only.
class Geometry {
public:
    static Geometry build(const Field& field, int budget_q = 9);

    const Field& field() const { return field_; }
    int q() const { return field_.q(); }
    int num_points() const { return (int)points_.size(); }
    int num_lines() const { return (int)lines_.size(); }

    const std::vector<ProjectivePoint>& points() const { return points_; }
    const std::vector<ProjectiveLine>& lines() const { return lines_; }

    const std::vector<int>& points_on_line(int line) const {
        return line_points_[line];
    }
    const std::vector<int>& lines_through_point(int pt) const {
        return point_lines_[pt];
    }
    bool incident(int pt, int line) const;

    Relation relation(int l1, int l2) const;

    /// Index of the (normalized) point with the given coordinate codes;
    /// -1 if all zero.
    int point_index(std::array<int, 4> coords) const;
    /// The unique line through two distinct points.
    int line_through(int p1, int p2) const;
    /// Index of the line with the given (not necessarily normalized)
    /// Pluecker codes; -1 if no such line exists.
    int line_index(std::array<int, 6> pluecker) const;

    /// Asserts the uniform incidence counts exhaustively and returns them.
    IncidenceCounts incidence_counts() const;

    /// Exhaustive scan of all third lines against the pair (l1, l2).
    /// l1 == l2 computes the "equal" base row.
    RelationCensus third_line_census(int l1, int l2) const;

private:
    Geometry(Field f) : field_(std::move(f)) {}

    std::array<int, 4> normalize_point(std::array<int, 4> v) const;
    std::array<int, 6> normalize_line(std::array<int, 6> v) const;

    Field field_;
    std::vector<ProjectivePoint> points_;
    std::vector<ProjectiveLine> lines_;
    std::vector<std::vector<int>> line_points_; // per line, sorted
    std::vector<std::vector<int>> point_lines_; // per point, sorted
    std::unordered_map<uint64_t, int> point_by_key_;
    std::unordered_map<uint64_t, int> line_by_key_;
    std::vector<uint8_t> relation_; // dense num_lines^2 table
    std::vector<uint64_t> incidence_bits_; // per line, bitset over points
    size_t point_words_ = 0;
};

} // namespace pg3xray

#endif
