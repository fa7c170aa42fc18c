#include "ababfree/scene.hpp"

#include "ababfree/errors.hpp"
#include "ababfree/rational.hpp"

#include <nlohmann/json.hpp>

#include <utility>

namespace abab {

using json = nlohmann::ordered_json;

namespace {

Rat rat_from_json(const json& j, const std::string& where) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long long>());
    fail(ErrorKind::Parse,
         where + " must be a rational (\"p/q\" string or integer), got " + j.dump());
}

Pt point_from_json(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) {
        fail(ErrorKind::Parse, where + " must be a two-entry [\"x\",\"y\"] array, got " + j.dump());
    }
    return Pt{rat_from_json(j[0], where + " x"), rat_from_json(j[1], where + " y")};
}

json point_to_json(const Pt& p) {
    return json::array({format_rational(p.x), format_rational(p.y)});
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> known,
                         const std::string& what) {
    for (const auto& item : obj.items()) {
        bool ok = false;
        for (const char* k : known) ok = ok || item.key() == k;
        if (!ok) fail(ErrorKind::Parse, what + " has unknown field \"" + item.key() + "\"");
    }
}

} // namespace

Scene parse_scene(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        fail(ErrorKind::Parse, std::string("scene JSON: ") + e.what());
    }
    if (!doc.is_object()) fail(ErrorKind::Parse, "scene JSON must be an object");
    reject_unknown_keys(doc, {"points", "curves", "t_bound", "disks", "polygons", "stab", "colors"},
                        "scene");

    Scene scene;
    if (doc.contains("points")) {
        const json& arr = doc["points"];
        if (!arr.is_array()) fail(ErrorKind::Parse, "\"points\" must be an array");
        std::vector<Pt> pts;
        for (std::size_t i = 0; i < arr.size(); ++i) {
            pts.push_back(point_from_json(arr[i], "point " + std::to_string(i)));
        }
        scene.points = std::move(pts);
    }
    if (doc.contains("curves")) {
        const json& arr = doc["curves"];
        if (!arr.is_array()) fail(ErrorKind::Parse, "\"curves\" must be an array");
        CurveFamily family;
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const json& c = arr[i];
            const std::string where = "curve " + std::to_string(i);
            if (!c.is_object() || !c.contains("left_y") || !c.contains("pts") ||
                !c.contains("right_y")) {
                fail(ErrorKind::Parse,
                     where + " must be {\"left_y\":...,\"pts\":[...],\"right_y\":...}");
            }
            reject_unknown_keys(c, {"left_y", "pts", "right_y"}, where);
            if (!c["pts"].is_array()) fail(ErrorKind::Parse, where + " \"pts\" must be an array");
            std::vector<Pt> bps;
            for (std::size_t k = 0; k < c["pts"].size(); ++k) {
                bps.push_back(
                    point_from_json(c["pts"][k], where + " breakpoint " + std::to_string(k)));
            }
            family.curves.push_back(make_curve(rat_from_json(c["left_y"], where + " left_y"),
                                               std::move(bps),
                                               rat_from_json(c["right_y"], where + " right_y")));
        }
        if (doc.contains("t_bound")) {
            const json& t = doc["t_bound"];
            if (!t.is_number_integer() || t.get<long long>() < 0) {
                fail(ErrorKind::Parse, "\"t_bound\" must be a non-negative integer");
            }
            family.t_bound = t.get<int>();
        }
        scene.curves = std::move(family);
    } else if (doc.contains("t_bound")) {
        fail(ErrorKind::Parse, "\"t_bound\" without \"curves\" makes no sense");
    }
    if (doc.contains("disks")) {
        const json& arr = doc["disks"];
        if (!arr.is_array()) fail(ErrorKind::Parse, "\"disks\" must be an array");
        std::vector<Disk> disks;
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const json& d = arr[i];
            const std::string where = "disk " + std::to_string(i);
            if (!d.is_object() || !d.contains("cx") || !d.contains("cy") || !d.contains("r2")) {
                fail(ErrorKind::Parse, where + " must be {\"cx\":...,\"cy\":...,\"r2\":...}");
            }
            reject_unknown_keys(d, {"cx", "cy", "r2"}, where);
            disks.push_back(Disk{Pt{rat_from_json(d["cx"], where + " cx"),
                                    rat_from_json(d["cy"], where + " cy")},
                                 rat_from_json(d["r2"], where + " r2")});
        }
        scene.disks = std::move(disks);
    }
    if (doc.contains("polygons")) {
        const json& arr = doc["polygons"];
        if (!arr.is_array()) fail(ErrorKind::Parse, "\"polygons\" must be an array");
        std::vector<PseudoDiskPolygon> polygons;
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const json& ring = arr[i];
            const std::string where = "polygon " + std::to_string(i);
            if (!ring.is_array() || ring.size() < 3) {
                fail(ErrorKind::Parse, where + " must be an array of at least 3 points");
            }
            PseudoDiskPolygon polygon;
            for (std::size_t k = 0; k < ring.size(); ++k) {
                polygon.ring.push_back(
                    point_from_json(ring[k], where + " vertex " + std::to_string(k)));
            }
            polygons.push_back(std::move(polygon));
        }
        scene.polygons = std::move(polygons);
    }
    if (doc.contains("stab")) {
        scene.stab = point_from_json(doc["stab"], "stab");
    }
    if (doc.contains("colors")) {
        const json& arr = doc["colors"];
        if (!arr.is_array()) fail(ErrorKind::Parse, "\"colors\" must be an array");
        std::vector<int> colors;
        for (const auto& c : arr) {
            if (!c.is_number_integer() || c.get<long long>() < 0) {
                fail(ErrorKind::Parse, "\"colors\" entries must be non-negative integers");
            }
            colors.push_back(c.get<int>());
        }
        scene.colors = std::move(colors);
    }
    return scene;
}

std::string serialize_scene(const Scene& scene) {
    json doc = json::object();
    if (scene.points) {
        json arr = json::array();
        for (const auto& p : *scene.points) arr.push_back(point_to_json(p));
        doc["points"] = std::move(arr);
    }
    if (scene.curves) {
        json arr = json::array();
        for (const auto& curve : scene.curves->curves) {
            json c = json::object();
            c["left_y"] = format_rational(curve.left_y);
            json bps = json::array();
            for (const auto& p : curve.pts) bps.push_back(point_to_json(p));
            c["pts"] = std::move(bps);
            c["right_y"] = format_rational(curve.right_y);
            arr.push_back(std::move(c));
        }
        doc["curves"] = std::move(arr);
        if (scene.curves->t_bound) doc["t_bound"] = *scene.curves->t_bound;
    }
    if (scene.disks) {
        json arr = json::array();
        for (const auto& d : *scene.disks) {
            json obj = json::object();
            obj["cx"] = format_rational(d.center.x);
            obj["cy"] = format_rational(d.center.y);
            obj["r2"] = format_rational(d.r2);
            arr.push_back(std::move(obj));
        }
        doc["disks"] = std::move(arr);
    }
    if (scene.polygons) {
        json arr = json::array();
        for (const auto& polygon : *scene.polygons) {
            json ring = json::array();
            for (const auto& p : polygon.ring) ring.push_back(point_to_json(p));
            arr.push_back(std::move(ring));
        }
        doc["polygons"] = std::move(arr);
    }
    if (scene.stab) doc["stab"] = point_to_json(*scene.stab);
    if (scene.colors) doc["colors"] = *scene.colors;
    return doc.dump();
}

} // namespace abab
