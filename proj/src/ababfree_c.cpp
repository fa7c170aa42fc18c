#include "ababfree/ababfree.h"

#include "ababfree/coloring.hpp"
#include "ababfree/constructions.hpp"
#include "ababfree/errors.hpp"
#include "ababfree/geometry.hpp"
#include "ababfree/hypergraph.hpp"
#include "ababfree/pattern.hpp"
#include "ababfree/scene.hpp"

#include <nlohmann/json.hpp>

#include <cstring>
#include <exception>
#include <string>
#include <utility>

struct abf_hypergraph {
    abab::OrderedHypergraph hg;
};

struct abf_scene {
    abab::Scene scene;
};

namespace {

using json = nlohmann::ordered_json;

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename F>
abf_status guarded(F&& f) {
    g_last_error.clear();
    try {
        return f();
    } catch (const abab::Error& e) {
        g_last_error = e.what();
        switch (e.kind()) {
            case abab::ErrorKind::Parse: return ABF_ERR_PARSE;
            case abab::ErrorKind::Invalid: return ABF_ERR_INVALID;
            case abab::ErrorKind::Guard: return ABF_ERR_GUARD;
            case abab::ErrorKind::Degenerate: return ABF_ERR_DEGENERATE;
            // The queried freeness property simply does not hold.
            case abab::ErrorKind::NotFree: return ABF_FALSIFIED;
        }
        return ABF_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = std::string("internal: ") + e.what();
        return ABF_ERR_INTERNAL;
    }
}

abf_status require(bool ok, const char* message) {
    if (!ok) {
        g_last_error = message;
        return ABF_ERR_INVALID;
    }
    return ABF_OK;
}

} // namespace

extern "C" {

void abf_string_free(char* s) { delete[] s; }
void abf_hypergraph_free(abf_hypergraph* hg) { delete hg; }
void abf_scene_free(abf_scene* scene) { delete scene; }

const char* abf_last_error(void) { return g_last_error.c_str(); }

abf_status abf_hypergraph_parse(const char* text, abf_hypergraph** out) {
    if (abf_status s = require(text && out, "null argument"); s != ABF_OK) return s;
    return guarded([&] {
        *out = new abf_hypergraph{abab::parse_hypergraph(text)};
        return ABF_OK;
    });
}

abf_status abf_hypergraph_serialize(const abf_hypergraph* hg, char** out_json) {
    if (abf_status s = require(hg && out_json, "null argument"); s != ABF_OK) return s;
    return guarded([&] {
        *out_json = dup_string(abab::serialize_hypergraph(hg->hg));
        return ABF_OK;
    });
}

int abf_hypergraph_vertex_count(const abf_hypergraph* hg) {
    return hg ? hg->hg.vertex_count() : 0;
}

int abf_hypergraph_edge_count(const abf_hypergraph* hg) {
    return hg ? hg->hg.edge_count() : 0;
}

abf_status abf_check_free(const abf_hypergraph* hg, const char* l, char** out_json) {
    if (abf_status s = require(hg && l && out_json, "null argument"); s != ABF_OK) return s;
    return guarded([&] {
        abab::HalfIntegerL parsed = abab::parse_half_integer_l(l);
        if (auto violation = abab::find_abl_violation(hg->hg, parsed)) {
            *out_json = dup_string(abab::serialize_violation(*violation));
            return ABF_FALSIFIED;
        }
        *out_json = dup_string("{\"free\":true}");
        return ABF_OK;
    });
}

abf_status abf_find_free_order(const abf_hypergraph* hg, const char* l, char** out_json) {
    if (abf_status s = require(hg && l && out_json, "null argument"); s != ABF_OK) return s;
    return guarded([&] {
        abab::HalfIntegerL parsed = abab::parse_half_integer_l(l);
        json doc;
        if (auto order = abab::find_abl_free_order(hg->hg, parsed)) {
            doc["order"] = *order;
            *out_json = dup_string(doc.dump());
            return ABF_OK;
        }
        doc["order"] = nullptr;
        *out_json = dup_string(doc.dump());
        return ABF_FALSIFIED;
    });
}

abf_status abf_three_color(const abf_hypergraph* hg, int verify_input, char** out_json) {
    if (abf_status s = require(hg && out_json, "null argument"); s != ABF_OK) return s;
    return guarded([&] {
        if (verify_input) {
            if (auto violation = abab::find_abl_violation(hg->hg, abab::HalfIntegerL{4})) {
                *out_json = dup_string(abab::serialize_violation(*violation));
                return ABF_FALSIFIED;
            }
        }
        try {
            abab::Coloring coloring = abab::three_color(hg->hg);
            *out_json = dup_string(abab::serialize_coloring(coloring));
            return ABF_OK;
        } catch (const abab::Error& e) {
            if (e.kind() != abab::ErrorKind::NotFree) throw;
            // The pipeline's own certificates caught a non-ABAB-free input.
            g_last_error = e.what();
            json doc;
            doc["free"] = false;
            doc["reason"] = e.what();
            *out_json = dup_string(doc.dump());
            return ABF_FALSIFIED;
        }
    });
}

abf_status abf_oracle_color(const abf_hypergraph* hg, int num_colors, char** out_json) {
    if (abf_status s = require(hg && out_json, "null argument"); s != ABF_OK) return s;
    return guarded([&] {
        if (auto coloring = abab::colorability_oracle(hg->hg, num_colors)) {
            *out_json = dup_string(abab::serialize_coloring(*coloring));
            return ABF_OK;
        }
        *out_json = dup_string("\"none\"");
        return ABF_FALSIFIED;
    });
}

abf_status abf_check_coloring(const abf_hypergraph* hg, const char* coloring_json) {
    if (abf_status s = require(hg && coloring_json, "null argument"); s != ABF_OK) return s;
    return guarded([&] {
        abab::Coloring coloring = abab::parse_coloring(coloring_json);
        if (abab::is_proper_coloring(hg->hg, coloring)) return ABF_OK;
        g_last_error = "coloring leaves a hyperedge monochromatic";
        return ABF_FALSIFIED;
    });
}

abf_status abf_generate_tree(int arity, int levels, abf_hypergraph** out) {
    if (abf_status s = require(out != nullptr, "null argument"); s != ABF_OK) return s;
    return guarded([&] {
        *out = new abf_hypergraph{abab::build_tree_hypergraph(arity, levels)};
        return ABF_OK;
    });
}

abf_status abf_generate_hc(int c, int m, abf_hypergraph** out) {
    if (abf_status s = require(out != nullptr, "null argument"); s != ABF_OK) return s;
    return guarded([&] {
        *out = new abf_hypergraph{abab::build_hc(c, m)};
        return ABF_OK;
    });
}

abf_status abf_hc_vertex_count(int c, int m, char** out_decimal) {
    if (abf_status s = require(out_decimal != nullptr, "null argument"); s != ABF_OK) return s;
    return guarded([&] {
        *out_decimal = dup_string(abab::hc_vertex_count(c, m).str());
        return ABF_OK;
    });
}

abf_status abf_scene_parse(const char* text, abf_scene** out) {
    if (abf_status s = require(text && out, "null argument"); s != ABF_OK) return s;
    return guarded([&] {
        *out = new abf_scene{abab::parse_scene(text)};
        return ABF_OK;
    });
}

abf_status abf_scene_serialize(const abf_scene* scene, char** out_json) {
    if (abf_status s = require(scene && out_json, "null argument"); s != ABF_OK) return s;
    return guarded([&] {
        *out_json = dup_string(abab::serialize_scene(scene->scene));
        return ABF_OK;
    });
}

abf_status abf_hypergraph_from_curves(const abf_scene* scene, abf_hypergraph** out) {
    if (abf_status s = require(scene && out, "null argument"); s != ABF_OK) return s;
    return guarded([&] {
        if (!scene->scene.points || !scene->scene.curves) {
            abab::fail(abab::ErrorKind::Invalid, "scene needs \"points\" and \"curves\"");
        }
        abab::PointSet s{*scene->scene.points};
        *out = new abf_hypergraph{abab::hypergraph_from_curves(s, *scene->scene.curves)};
        return ABF_OK;
    });
}

abf_status abf_realize_curves(const abf_hypergraph* hg, const char* l, abf_scene** out) {
    if (abf_status s = require(hg && l && out, "null argument"); s != ABF_OK) return s;
    return guarded([&] {
        abab::HalfIntegerL parsed = abab::parse_half_integer_l(l);
        abab::CurveRealization realization = abab::realize_as_curves(hg->hg, parsed);
        abab::Scene scene;
        scene.points = std::move(realization.points.pts);
        scene.curves = std::move(realization.curves);
        *out = new abf_scene{std::move(scene)};
        return ABF_OK;
    });
}

abf_status abf_evenize(const abf_scene* scene, abf_scene** out) {
    if (abf_status s = require(scene && out, "null argument"); s != ABF_OK) return s;
    return guarded([&] {
        if (!scene->scene.curves) {
            abab::fail(abab::ErrorKind::Invalid, "scene needs \"curves\"");
        }
        abab::PointSet s;
        if (scene->scene.points) s.pts = *scene->scene.points;
        abab::Scene result;
        result.points = scene->scene.points;
        result.curves = abab::evenize(s, *scene->scene.curves);
        *out = new abf_scene{std::move(result)};
        return ABF_OK;
    });
}

abf_status abf_compactify(const abf_scene* scene, abf_scene** out) {
    if (abf_status s = require(scene && out, "null argument"); s != ABF_OK) return s;
    return guarded([&] {
        if (!scene->scene.curves) {
            abab::fail(abab::ErrorKind::Invalid, "scene needs \"curves\"");
        }
        abab::PointSet s;
        const abab::PointSet* s_ptr = nullptr;
        if (scene->scene.points) {
            s.pts = *scene->scene.points;
            s_ptr = &s;
        }
        abab::CompactifiedFamily compact = abab::compactify(*scene->scene.curves, s_ptr);
        abab::Scene result;
        result.points = scene->scene.points;
        result.polygons = std::move(compact.polygons);
        result.stab = compact.stab;
        *out = new abf_scene{std::move(result)};
        return ABF_OK;
    });
}

abf_status abf_hypergraph_from_disks(const abf_scene* scene, abf_hypergraph** out) {
    if (abf_status s = require(scene && out, "null argument"); s != ABF_OK) return s;
    return guarded([&] {
        if (!scene->scene.points || !scene->scene.disks || !scene->scene.stab) {
            abab::fail(abab::ErrorKind::Invalid, "scene needs \"points\", \"disks\", and \"stab\"");
        }
        abab::PointSet s{*scene->scene.points};
        abab::StabbedDiskFamily family{*scene->scene.disks, *scene->scene.stab};
        *out = new abf_hypergraph{abab::hypergraph_from_stabbed_disks(s, family)};
        return ABF_OK;
    });
}

abf_status abf_enumerate_disks(const abf_scene* scene, abf_hypergraph** out,
                               abf_scene** witnesses_out) {
    if (abf_status s = require(scene && out, "null argument"); s != ABF_OK) return s;
    return guarded([&] {
        if (!scene->scene.points || !scene->scene.stab) {
            abab::fail(abab::ErrorKind::Invalid, "scene needs \"points\" and \"stab\"");
        }
        abab::PointSet s{*scene->scene.points};
        abab::DiskEnumeration enumeration =
            abab::enumerate_stabbed_disk_hypergraph(s, *scene->scene.stab);
        if (witnesses_out) {
            abab::Scene witnesses;
            witnesses.points = scene->scene.points;
            witnesses.disks = std::move(enumeration.witnesses);
            witnesses.stab = scene->scene.stab;
            *witnesses_out = new abf_scene{std::move(witnesses)};
        }
        *out = new abf_hypergraph{std::move(enumeration.hypergraph)};
        return ABF_OK;
    });
}

abf_status abf_render_svg(const abf_scene* scene, const char* colors_json, char** out_svg) {
    if (abf_status s = require(scene && out_svg, "null argument"); s != ABF_OK) return s;
    return guarded([&] {
        abab::Scene copy = scene->scene;
        if (colors_json) copy.colors = abab::parse_coloring(colors_json).colors;
        *out_svg = dup_string(abab::render_svg(copy));
        return ABF_OK;
    });
}

} // extern "C"
