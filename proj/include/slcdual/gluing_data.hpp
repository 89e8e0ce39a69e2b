#ifndef SLCDUAL_GLUING_DATA_HPP
#define SLCDUAL_GLUING_DATA_HPP

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace slcdual {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnknownCenter : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Irreducible conductor curve C_j inside a normalization component.
struct Curve {
    std::string id;
    std::string component;
};

/// Marked point Q_k with its two (distinct) curve incidences.
struct MarkedPoint {
    std::string id;
    std::string component;
    std::array<std::string, 2> curves;  // normalized lexicographically
};

/// A (point, curve) incidence Q_k in C_j.
struct Incidence {
    std::string point;
    std::string curve;
    auto operator<=>(const Incidence&) const = default;
    std::string key() const { return point + "|" + curve; }
};

/// Combinatorial normalization data (D, B, iota) of a semi-log-canonical
/// surface: components, conductor curves, marked points, and the gluing
/// involution on curves and incidences. Immutable after construction.
struct SlcGluingData {
    std::vector<std::string> components;
    std::vector<Curve> curves;
    std::vector<MarkedPoint> points;
    // total matching on curve ids; self-pairs {c,c} allowed
    std::vector<std::array<std::string, 2>> curve_matching;
    // action of iota on incidences; fixed incidences stored as self-pairs
    std::map<Incidence, Incidence> incidence_map;

    const Curve* find_curve(const std::string& id) const;
    const MarkedPoint* find_point(const std::string& id) const;
    /// Partner of a curve under the matching, if the curve is matched.
    std::optional<std::string> matched_curve(const std::string& id) const;
    std::vector<Incidence> incidences() const;  // sorted, 2 per point
};

enum class OneCenterCase { TwoComponents, LoopSameComponent, FoldedDoubleCover };

std::string to_string(OneCenterCase c);

/// iota-orbit of marked points: a 0-dimensional lc center Z.
struct ZeroCenter {
    std::string id;  // lexicographically minimal member
    std::vector<std::string> points;
};

/// Matching class of curves: a 1-dimensional lc center Gamma.
struct OneCenter {
    std::string id;  // lexicographically minimal member
    std::vector<std::string> curves;
    OneCenterCase kind;
};

/// iota-orbit of incidences; size 1 exactly for a fixed incidence on a
/// self-matched curve.
struct IncidenceOrbit {
    std::string id;  // key() of the minimal member
    std::vector<Incidence> members;
};

struct Violation {
    std::string rule;
    std::string message;
    std::vector<std::string> ids;
};

struct ValidationReport {
    std::vector<Violation> violations;
    std::vector<Violation> warnings;
    bool ok() const { return violations.empty(); }
};

SlcGluingData parse_gluing_data(const std::string& text);

ValidationReport validate(const SlcGluingData& data);

std::vector<ZeroCenter> point_orbits(const SlcGluingData& data);
std::vector<OneCenter> curve_orbits(const SlcGluingData& data);
std::vector<IncidenceOrbit> incidence_orbits(const SlcGluingData& data);

OneCenterCase classify_one_center(const SlcGluingData& data, const OneCenter& center);

}  // namespace slcdual

#endif
