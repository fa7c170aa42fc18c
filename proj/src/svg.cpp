#include "ababfree/scene.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

namespace abab {

namespace {

// Rendering is the one place approximate arithmetic is acceptable: nothing
// combinatorial is decided here, and fixed two-decimal formatting keeps the
// output byte-stable for identical input.

const char* kPalette[3] = {"#e41a1c", "#377eb8", "#4daf4a"};

double approx(const Rat& r) { return r.convert_to<double>(); }

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    std::string s(buf);
    if (s == "-0.00") s = "0.00";
    return s;
}

struct Bounds {
    bool has_x = false, has_y = false;
    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;

    void add_x(double x) {
        if (!has_x) {
            min_x = max_x = x;
            has_x = true;
        } else {
            min_x = std::min(min_x, x);
            max_x = std::max(max_x, x);
        }
    }
    void add_y(double y) {
        if (!has_y) {
            min_y = max_y = y;
            has_y = true;
        } else {
            min_y = std::min(min_y, y);
            max_y = std::max(max_y, y);
        }
    }
    void add(double x, double y) {
        add_x(x);
        add_y(y);
    }
};

} // namespace

std::string render_svg(const Scene& scene) {
    Bounds b;
    if (scene.points) {
        for (const auto& p : *scene.points) b.add(approx(p.x), approx(p.y));
    }
    if (scene.curves) {
        for (const auto& curve : scene.curves->curves) {
            b.add_y(approx(curve.left_y));
            b.add_y(approx(curve.right_y));
            for (const auto& p : curve.pts) b.add(approx(p.x), approx(p.y));
        }
    }
    if (scene.disks) {
        for (const auto& d : *scene.disks) {
            const double r = std::sqrt(std::max(0.0, approx(d.r2)));
            b.add(approx(d.center.x) - r, approx(d.center.y) - r);
            b.add(approx(d.center.x) + r, approx(d.center.y) + r);
        }
    }
    if (scene.polygons) {
        for (const auto& polygon : *scene.polygons) {
            for (const auto& p : polygon.ring) b.add(approx(p.x), approx(p.y));
        }
    }
    if (scene.stab) b.add(approx(scene.stab->x), approx(scene.stab->y));

    if (!b.has_x) {
        b.min_x = 0;
        b.max_x = 1;
    }
    if (!b.has_y) {
        b.min_y = 0;
        b.max_y = 1;
    }
    const double pad_x = b.max_x > b.min_x ? 0.1 * (b.max_x - b.min_x) : 1.0;
    const double pad_y = b.max_y > b.min_y ? 0.1 * (b.max_y - b.min_y) : 1.0;
    const double lo_x = b.min_x - pad_x, hi_x = b.max_x + pad_x;
    const double lo_y = b.min_y - pad_y, hi_y = b.max_y + pad_y;
    const double scale = 800.0 / (hi_x - lo_x);
    const double height = (hi_y - lo_y) * scale;
    auto px = [&](double x) { return (x - lo_x) * scale; };
    auto py = [&](double y) { return (hi_y - y) * scale; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"" << fmt(height)
        << "\" viewBox=\"0 0 800 " << fmt(height) << "\">\n";

    if (scene.polygons) {
        int i = 0;
        for (const auto& polygon : *scene.polygons) {
            out << "<polygon points=\"";
            for (std::size_t k = 0; k < polygon.ring.size(); ++k) {
                if (k) out << " ";
                out << fmt(px(approx(polygon.ring[k].x))) << ","
                    << fmt(py(approx(polygon.ring[k].y)));
            }
            out << "\" fill=\"" << kPalette[i % 3]
                << "\" fill-opacity=\"0.3\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
            ++i;
        }
    }
    if (scene.disks) {
        int i = 0;
        for (const auto& d : *scene.disks) {
            const double r = std::sqrt(std::max(0.0, approx(d.r2)));
            out << "<circle cx=\"" << fmt(px(approx(d.center.x))) << "\" cy=\""
                << fmt(py(approx(d.center.y))) << "\" r=\"" << fmt(r * scale) << "\" fill=\""
                << kPalette[i % 3]
                << "\" fill-opacity=\"0.3\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
            ++i;
        }
    }
    if (scene.curves) {
        for (const auto& curve : scene.curves->curves) {
            out << "<polyline points=\"";
            out << fmt(0.0) << "," << fmt(py(approx(curve.left_y)));
            for (const auto& p : curve.pts) {
                out << " " << fmt(px(approx(p.x))) << "," << fmt(py(approx(p.y)));
            }
            out << " " << fmt(800.0) << "," << fmt(py(approx(curve.right_y)));
            out << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
        }
    }
    if (scene.points) {
        for (std::size_t i = 0; i < scene.points->size(); ++i) {
            const auto& p = (*scene.points)[i];
            const char* color = "#000000";
            if (scene.colors && i < scene.colors->size()) {
                color = kPalette[(*scene.colors)[i] % 3];
            }
            out << "<circle cx=\"" << fmt(px(approx(p.x))) << "\" cy=\"" << fmt(py(approx(p.y)))
                << "\" r=\"3\" fill=\"" << color << "\"/>\n";
        }
    }
    if (scene.stab) {
        out << "<circle cx=\"" << fmt(px(approx(scene.stab->x))) << "\" cy=\""
            << fmt(py(approx(scene.stab->y)))
            << "\" r=\"3\" fill=\"#ffffff\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace abab
