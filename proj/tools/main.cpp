#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>

#include "tilepack/io_json.hpp"
#include "tilepack/svg.hpp"

using namespace tilepack;

namespace {

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot write '" + out_path + "'");
    out << text << "\n";
}

void emit_json(const Json& j, const std::string& out_path) { emit(j.dump(2), out_path); }

// off-boundary sample points over the body's neighbourhood: a rational grid
// nudged by 1/p for a large prime p
std::vector<FVec> sample_points(const BodyF& f, long count) {
    Box bb = f.bounding_box();
    const long d = f.dim;
    const Rational nudge(1, 100003);
    long per_axis = 1;
    while (true) {
        long total = 1;
        for (long i = 0; i < d; ++i) total *= per_axis;
        if (total >= count) break;
        ++per_axis;
    }
    std::vector<FVec> pts;
    std::vector<long> idx(d, 0);
    while (static_cast<long>(pts.size()) < count) {
        FVec p(d);
        for (long i = 0; i < d; ++i) {
            FieldElement span = bb.hi[i] - bb.lo[i];
            Rational frac(2 * idx[i] + 1, 2 * per_axis);
            frac.canonicalize();
            p[i] = bb.lo[i] + span * FieldElement(frac) + FieldElement(nudge);
        }
        pts.push_back(std::move(p));
        long i = d - 1;
        while (i >= 0 && ++idx[i] == per_axis) idx[i--] = 0;
    }
    return pts;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lattice tile/pack construction and verification"};
    app.require_subcommand(1);

    std::string scene_path, body_path, lattice_path, out_path, property = "tiling", r_text = "1";
    long cap = 64;
    long samples = 200;

    auto* analyze = app.add_subcommand("analyze", "classify a scene and print its canonical coordinates");
    analyze->add_option("scene", scene_path)->required();
    analyze->add_option("--out", out_path);

    auto* cons = app.add_subcommand("construct", "build and certify the body F for a scene");
    cons->add_option("scene", scene_path)->required();
    cons->add_option("--cap", cap, "shell radius cap for density searches");
    cons->add_option("--out", out_path);

    auto* verify = app.add_subcommand("verify", "check a body against a lattice");
    verify->add_option("body", body_path)->required();
    verify->add_option("lattice", lattice_path)->required();
    verify->add_option("--property", property)->check(CLI::IsMember({"tiling", "packing"}));
    verify->add_option("--out", out_path);

    auto* sample = app.add_subcommand("sample-check", "multiplicity histogram at random off-boundary points");
    sample->add_option("body", body_path)->required();
    sample->add_option("lattice", lattice_path)->required();
    sample->add_option("--samples", samples);
    sample->add_option("--out", out_path);

    auto* nofd = app.add_subcommand("no-bounded-fd", "counting witness that no bounded common domain exists");
    nofd->add_option("scene", scene_path)->required();
    nofd->add_option("--r", r_text, "hypothesized bound radius, as p/q");
    nofd->add_option("--out", out_path);

    auto* svg = app.add_subcommand("export-svg", "construct and draw a 2-d scene");
    svg->add_option("scene", scene_path)->required();
    svg->add_option("--cap", cap);
    svg->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            Scene s = load_scene(scene_path);
            emit_json(decomposition_to_json(closure_decomposition(s.lattice_l, s.lattice_m)), out_path);
        } else if (cons->parsed()) {
            Scene s = load_scene(scene_path);
            long use_cap = cons->count("--cap") ? cap : s.search_cap;
            ConstructionResult res = construct(s.lattice_l, s.lattice_m, use_cap);
            emit_json(construction_to_json(res, s.sqrt_d), out_path);
        } else if (verify->parsed()) {
            Json bj = load_json(body_path);
            Lattice lat = lattice_from_file(lattice_path);
            BodyF f = body_from_json(bj, lat.field_d());
            PackingReport rep = property == "tiling" ? verify_tiling(f, lat) : verify_packing(f, lat);
            emit_json(report_to_json(rep), out_path);
            bool ok = property == "tiling" ? rep.is_tiling : rep.is_packing;
            return ok ? 0 : 1;
        } else if (sample->parsed()) {
            Json bj = load_json(body_path);
            Lattice lat = lattice_from_file(lattice_path);
            BodyF f = body_from_json(bj, lat.field_d());
            auto pts = sample_points(f, samples);
            auto mults = sample_multiplicity(f, lat, pts);
            std::map<long, long> hist;
            for (long m : mults) ++hist[m];
            Json j;
            j["samples"] = samples;
            long maxm = 0;
            for (auto& [k, v] : hist) {
                j["histogram"][std::to_string(k)] = v;
                maxm = std::max(maxm, k);
            }
            j["max_multiplicity"] = maxm;
            emit_json(j, out_path);
        } else if (nofd->parsed()) {
            Scene s = load_scene(scene_path);
            UnitNormalization un = normalize_to_unit_lattice(s.lattice_l, s.lattice_m);
            Rational r = rational_from_string(r_text);
            emit_json(witness_to_json(witness_unbounded(un.l_image, un.m_image, r)), out_path);
        } else if (svg->parsed()) {
            Scene s = load_scene(scene_path);
            if (s.d != 2) throw DimensionError("export-svg requires d = 2");
            long use_cap = svg->count("--cap") ? cap : s.search_cap;
            ConstructionResult res = construct(s.lattice_l, s.lattice_m, use_cap);
            emit(construction_svg(res), out_path);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const Json::exception& e) {
        std::cerr << "error: malformed input: " << e.what() << "\n";
        return static_cast<int>(ErrorCode::Parse);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
