#ifndef ABABFREE_SCENE_HPP
#define ABABFREE_SCENE_HPP

#include "ababfree/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace abab {

/**
 * A loose bag of geometric payloads as exchanged on the CLI streams. Every
 * field is optional; operations pick what they need and error on missing
 * parts. Rationals travel as "p/q" strings, points as ["x","y"] pairs.
 */
struct Scene {
    std::optional<std::vector<Pt>> points;
    std::optional<CurveFamily> curves;
    std::optional<std::vector<Disk>> disks;
    std::optional<std::vector<PseudoDiskPolygon>> polygons;
    std::optional<Pt> stab;
    std::optional<std::vector<int>> colors;
};

Scene parse_scene(const std::string& json_text);

/**
 * Serialize with fields in fixed order (points, curves, disks, polygons,
 * stab, colors), omitting absent ones; byte-stable.
 */
std::string serialize_scene(const Scene& scene);

/** Render to SVG; see svg.cpp for the deterministic drawing rules. */
std::string render_svg(const Scene& scene);

} // namespace abab

#endif
