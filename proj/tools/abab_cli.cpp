// Command-line front end. Talks to the library exclusively through the
// extern-C API in ababfree/ababfree.h.
//
// Exit codes: 0 = success, 2 = the queried property is falsified (violation
// witness / "none" printed as JSON), 1 = error (one-line message on stderr).

#include <ababfree/ababfree.h>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace {

using json = nlohmann::ordered_json;

struct StrPtr {
    char* p = nullptr;
    ~StrPtr() { abf_string_free(p); }
    std::string str() const { return p ? std::string(p) : std::string(); }
};

struct HgPtr {
    abf_hypergraph* p = nullptr;
    ~HgPtr() { abf_hypergraph_free(p); }
};

struct ScenePtr {
    abf_scene* p = nullptr;
    ~ScenePtr() { abf_scene_free(p); }
};

struct Io {
    std::string in_path;
    std::string out_path;
};

std::string read_input(const Io& io) {
    if (io.in_path.empty() || io.in_path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(io.in_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot read " + io.in_path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

void write_output(const Io& io, const std::string& text) {
    if (io.out_path.empty() || io.out_path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream file(io.out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + io.out_path);
    file << text;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + path);
    file << text;
}

int report_error() {
    std::cerr << "error: " << abf_last_error() << "\n";
    return 1;
}

int parse_hypergraph_input(const Io& io, HgPtr& hg) {
    const std::string text = read_input(io);
    if (abf_hypergraph_parse(text.c_str(), &hg.p) != ABF_OK) return report_error();
    return 0;
}

int parse_scene_input(const Io& io, ScenePtr& scene) {
    const std::string text = read_input(io);
    if (abf_scene_parse(text.c_str(), &scene.p) != ABF_OK) return report_error();
    return 0;
}

int emit_hypergraph(const Io& io, const abf_hypergraph* hg) {
    StrPtr out;
    if (abf_hypergraph_serialize(hg, &out.p) != ABF_OK) return report_error();
    write_output(io, out.str() + "\n");
    return 0;
}

int emit_scene(const Io& io, const abf_scene* scene) {
    StrPtr out;
    if (abf_scene_serialize(scene, &out.p) != ABF_OK) return report_error();
    write_output(io, out.str() + "\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"(AB)^l-free hypergraphs: detection, 3-coloring, and geometric "
                 "realization by curves and stabbed disks"};
    app.require_subcommand(1);

    std::vector<std::pair<CLI::App*, std::function<int()>>> actions;
    std::uint64_t seed = 0;

    auto add_common = [&](CLI::App* sub, Io* io) {
        sub->add_option("--in", io->in_path, "input file (default: stdin)");
        sub->add_option("--out", io->out_path, "output file (default: stdout)");
        // Reserved: all current subcommands are deterministic; the flag is
        // accepted so pipelines can pass one seed everywhere.
        sub->add_option("--seed", seed, "random seed (reserved)");
    };

    // ---------------------------------------------------------------- check-free
    {
        auto io = std::make_shared<Io>();
        auto l = std::make_shared<std::string>("2");
        CLI::App* sub = app.add_subcommand(
            "check-free", "check a hypergraph for (AB)^l alternations under its vertex order");
        add_common(sub, io.get());
        sub->add_option("--l", *l, "alternation parameter, integer or half-integer (default 2)");
        actions.emplace_back(sub, [io, l]() {
            HgPtr hg;
            if (int rc = parse_hypergraph_input(*io, hg)) return rc;
            StrPtr out;
            abf_status s = abf_check_free(hg.p, l->c_str(), &out.p);
            if (s != ABF_OK && s != ABF_FALSIFIED) return report_error();
            write_output(*io, out.str() + "\n");
            return s == ABF_OK ? 0 : 2;
        });
    }

    // ---------------------------------------------------------------- find-order
    {
        auto io = std::make_shared<Io>();
        auto l = std::make_shared<std::string>("2");
        CLI::App* sub = app.add_subcommand(
            "find-order", "search all vertex orders (<= 10 vertices) for an (AB)^l-free one");
        add_common(sub, io.get());
        sub->add_option("--l", *l, "alternation parameter (default 2)");
        actions.emplace_back(sub, [io, l]() {
            HgPtr hg;
            if (int rc = parse_hypergraph_input(*io, hg)) return rc;
            StrPtr out;
            abf_status s = abf_find_free_order(hg.p, l->c_str(), &out.p);
            if (s != ABF_OK && s != ABF_FALSIFIED) return report_error();
            write_output(*io, out.str() + "\n");
            return s == ABF_OK ? 0 : 2;
        });
    }

    // ---------------------------------------------------------------- color3
    {
        auto io = std::make_shared<Io>();
        auto verify_input = std::make_shared<bool>(false);
        auto combined = std::make_shared<bool>(false);
        CLI::App* sub = app.add_subcommand(
            "color3", "proper 3-coloring of an ABAB-free hypergraph");
        add_common(sub, io.get());
        sub->add_flag("--verify-input", *verify_input,
                      "check ABAB-freeness first and report the violation");
        sub->add_flag("--combined", *combined,
                      "emit {vertices,edges,colors,palette} (pipe into `verify`)");
        actions.emplace_back(sub, [io, verify_input, combined]() {
            HgPtr hg;
            if (int rc = parse_hypergraph_input(*io, hg)) return rc;
            StrPtr out;
            abf_status s = abf_three_color(hg.p, *verify_input ? 1 : 0, &out.p);
            if (s == ABF_FALSIFIED) {
                write_output(*io, out.str() + "\n");
                return 2;
            }
            if (s != ABF_OK) return report_error();
            if (!*combined) {
                write_output(*io, out.str() + "\n");
                return 0;
            }
            StrPtr hg_json;
            if (abf_hypergraph_serialize(hg.p, &hg_json.p) != ABF_OK) return report_error();
            json merged = json::parse(hg_json.str());
            json coloring = json::parse(out.str());
            merged["colors"] = coloring["colors"];
            merged["palette"] = coloring["palette"];
            write_output(*io, merged.dump() + "\n");
            return 0;
        });
    }

    // ---------------------------------------------------------------- verify
    {
        auto io = std::make_shared<Io>();
        CLI::App* sub = app.add_subcommand(
            "verify", "check a combined {vertices,edges,colors} document for properness");
        add_common(sub, io.get());
        actions.emplace_back(sub, [io]() {
            json doc;
            try {
                doc = json::parse(read_input(*io));
            } catch (const json::exception& e) {
                std::cerr << "error: combined JSON: " << e.what() << "\n";
                return 1;
            }
            if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges") ||
                !doc.contains("colors")) {
                std::cerr << "error: verify needs {\"vertices\":...,\"edges\":...,"
                             "\"colors\":...}\n";
                return 1;
            }
            json hg_doc = json::object();
            hg_doc["vertices"] = doc["vertices"];
            hg_doc["edges"] = doc["edges"];
            json coloring_doc = json::object();
            coloring_doc["colors"] = doc["colors"];
            HgPtr hg;
            if (abf_hypergraph_parse(hg_doc.dump().c_str(), &hg.p) != ABF_OK) {
                return report_error();
            }
            abf_status s = abf_check_coloring(hg.p, coloring_doc.dump().c_str());
            if (s == ABF_OK) {
                write_output(*io, "{\"proper\":true}\n");
                return 0;
            }
            if (s == ABF_FALSIFIED) {
                write_output(*io, "{\"proper\":false}\n");
                return 2;
            }
            return report_error();
        });
    }

    // ---------------------------------------------------------------- gen-hc
    {
        auto io = std::make_shared<Io>();
        auto c = std::make_shared<int>(0);
        auto m = std::make_shared<int>(0);
        CLI::App* sub = app.add_subcommand(
            "gen-hc", "recursive non-c-colorable ABAB-free hypergraph H_c(m)");
        add_common(sub, io.get());
        sub->add_option("--c", *c, "colors defeated (>= 2)")->required();
        sub->add_option("--m", *m, "tree branching/levels parameter (>= 2)")->required();
        actions.emplace_back(sub, [io, c, m]() {
            HgPtr hg;
            if (abf_generate_hc(*c, *m, &hg.p) != ABF_OK) return report_error();
            return emit_hypergraph(*io, hg.p);
        });
    }

    // ---------------------------------------------------------------- gen-tree
    {
        auto io = std::make_shared<Io>();
        auto a = std::make_shared<int>(0);
        auto b = std::make_shared<int>(0);
        CLI::App* sub = app.add_subcommand(
            "gen-tree", "children + root-to-leaf-path hypergraph of the full a-ary tree");
        add_common(sub, io.get());
        sub->add_option("--a", *a, "arity (children per internal node)")->required();
        sub->add_option("--b", *b, "levels (root depth 0 .. b-1)")->required();
        actions.emplace_back(sub, [io, a, b]() {
            HgPtr hg;
            if (abf_generate_tree(*a, *b, &hg.p) != ABF_OK) return report_error();
            return emit_hypergraph(*io, hg.p);
        });
    }

    // ---------------------------------------------------------------- from-curves
    {
        auto io = std::make_shared<Io>();
        CLI::App* sub = app.add_subcommand(
            "from-curves", "hypergraph of on-or-above incidences of a scene's points x curves");
        add_common(sub, io.get());
        actions.emplace_back(sub, [io]() {
            ScenePtr scene;
            if (int rc = parse_scene_input(*io, scene)) return rc;
            HgPtr hg;
            if (abf_hypergraph_from_curves(scene.p, &hg.p) != ABF_OK) return report_error();
            return emit_hypergraph(*io, hg.p);
        });
    }

    // ---------------------------------------------------------------- realize
    {
        auto io = std::make_shared<Io>();
        auto l = std::make_shared<std::string>("2");
        CLI::App* sub = app.add_subcommand(
            "realize", "realize an (AB)^l-free hypergraph as points + curves (<= 2l-2 crossings)");
        add_common(sub, io.get());
        sub->add_option("--l", *l, "alternation parameter (default 2)");
        actions.emplace_back(sub, [io, l]() {
            HgPtr hg;
            if (int rc = parse_hypergraph_input(*io, hg)) return rc;
            StrPtr check;
            abf_status s = abf_check_free(hg.p, l->c_str(), &check.p);
            if (s == ABF_FALSIFIED) {
                write_output(*io, check.str() + "\n");
                return 2;
            }
            if (s != ABF_OK) return report_error();
            ScenePtr scene;
            if (abf_realize_curves(hg.p, l->c_str(), &scene.p) != ABF_OK) return report_error();
            return emit_scene(*io, scene.p);
        });
    }

    // ---------------------------------------------------------------- evenize
    {
        auto io = std::make_shared<Io>();
        CLI::App* sub = app.add_subcommand(
            "evenize", "reroute right tails so both infinities share one vertical order");
        add_common(sub, io.get());
        actions.emplace_back(sub, [io]() {
            ScenePtr scene;
            if (int rc = parse_scene_input(*io, scene)) return rc;
            ScenePtr out;
            if (abf_evenize(scene.p, &out.p) != ABF_OK) return report_error();
            return emit_scene(*io, out.p);
        });
    }

    // ---------------------------------------------------------------- compactify
    {
        auto io = std::make_shared<Io>();
        CLI::App* sub = app.add_subcommand(
            "compactify", "close an even pseudo-parabola family into stabbed polygons");
        add_common(sub, io.get());
        actions.emplace_back(sub, [io]() {
            ScenePtr scene;
            if (int rc = parse_scene_input(*io, scene)) return rc;
            ScenePtr out;
            if (abf_compactify(scene.p, &out.p) != ABF_OK) return report_error();
            return emit_scene(*io, out.p);
        });
    }

    // ---------------------------------------------------------------- from-disks
    {
        auto io = std::make_shared<Io>();
        CLI::App* sub = app.add_subcommand(
            "from-disks", "trace hypergraph of disks through a stab point, in angular order");
        add_common(sub, io.get());
        actions.emplace_back(sub, [io]() {
            ScenePtr scene;
            if (int rc = parse_scene_input(*io, scene)) return rc;
            HgPtr hg;
            if (abf_hypergraph_from_disks(scene.p, &hg.p) != ABF_OK) return report_error();
            return emit_hypergraph(*io, hg.p);
        });
    }

    // ---------------------------------------------------------------- enum-disks
    {
        auto io = std::make_shared<Io>();
        auto disks_out = std::make_shared<std::string>();
        CLI::App* sub = app.add_subcommand(
            "enum-disks", "every trace realizable by a disk containing the stab (<= 25 points)");
        add_common(sub, io.get());
        sub->add_option("--disks-out", *disks_out, "also write the witness disks as a scene");
        actions.emplace_back(sub, [io, disks_out]() {
            ScenePtr scene;
            if (int rc = parse_scene_input(*io, scene)) return rc;
            HgPtr hg;
            ScenePtr witnesses;
            abf_scene** warg = disks_out->empty() ? nullptr : &witnesses.p;
            if (abf_enumerate_disks(scene.p, &hg.p, warg) != ABF_OK) return report_error();
            if (!disks_out->empty()) {
                StrPtr wjson;
                if (abf_scene_serialize(witnesses.p, &wjson.p) != ABF_OK) return report_error();
                write_file(*disks_out, wjson.str() + "\n");
            }
            return emit_hypergraph(*io, hg.p);
        });
    }

    // ---------------------------------------------------------------- oracle-color
    {
        auto io = std::make_shared<Io>();
        auto c = std::make_shared<int>(0);
        CLI::App* sub = app.add_subcommand(
            "oracle-color", "exhaustive c-colorability oracle (c^n <= 1e8)");
        add_common(sub, io.get());
        sub->add_option("--c", *c, "number of colors")->required();
        actions.emplace_back(sub, [io, c]() {
            HgPtr hg;
            if (int rc = parse_hypergraph_input(*io, hg)) return rc;
            StrPtr out;
            abf_status s = abf_oracle_color(hg.p, *c, &out.p);
            if (s != ABF_OK && s != ABF_FALSIFIED) return report_error();
            write_output(*io, out.str() + "\n");
            return s == ABF_OK ? 0 : 2;
        });
    }

    // ---------------------------------------------------------------- render
    {
        auto io = std::make_shared<Io>();
        CLI::App* sub = app.add_subcommand(
            "render", "deterministic SVG of a scene (dots colored by the scene's colors)");
        add_common(sub, io.get());
        actions.emplace_back(sub, [io]() {
            ScenePtr scene;
            if (int rc = parse_scene_input(*io, scene)) return rc;
            StrPtr svg;
            if (abf_render_svg(scene.p, nullptr, &svg.p) != ABF_OK) return report_error();
            write_output(*io, svg.str());
            return 0;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        for (auto& [sub, action] : actions) {
            if (sub->parsed()) return action();
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cerr << "error: no subcommand\n";
    return 1;
}
