#pragma once

#include <json.hpp>

#include "tilepack/construct.hpp"
#include "tilepack/nofd.hpp"

namespace tilepack {

using Json = nlohmann::json;

// Scene file: {"d": int, "D": int|null, "L": {"basis": [[...]]},
//              "M": {"basis": [[...]]}, "cap": int (optional)}
// Bases are column-major lists of field elements; D is declared once and
// applies to every irrational entry in the file.
struct Scene {
    long d = 0;
    long sqrt_d = 0; // 0 = pure rational scene
    Lattice lattice_l;
    Lattice lattice_m;
    long search_cap = 64;
};

// Field elements travel as {"r": "p/q"} with optional "s" for the sqrt(D)
// coefficient; a bare "p/q" string is accepted on input.
Json field_to_json(const FieldElement& x);
FieldElement field_from_json(const Json& j, long d);

Json matrix_to_json(const Matrix& m); // column-major
Matrix matrix_from_json(const Json& j, long d);

Json lattice_to_json(const Lattice& lat);
Lattice lattice_from_json(const Json& j, long d);

Json box_to_json(const Box& b);
Box box_from_json(const Json& j, long d);

Json body_to_json(const BodyF& f);
BodyF body_from_json(const Json& j, long d);

Json report_to_json(const PackingReport& rep);
Json decomposition_to_json(const ClosureDecomposition& dec);
Json witness_to_json(const UnboundednessWitness& w);
Json construction_to_json(const ConstructionResult& res, long scene_d_tag);

Scene scene_from_json(const Json& j);
Scene load_scene(const std::string& path);
Json load_json(const std::string& path);

// Standalone lattice file: {"dim": int, "D": int|null, "basis": [[...]]}
Lattice lattice_from_file(const std::string& path);

} // namespace tilepack
