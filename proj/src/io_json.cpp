#include "tilepack/io_json.hpp"

#include <fstream>

#include "tilepack/errors.hpp"

namespace tilepack {

Json field_to_json(const FieldElement& x) {
    Json j;
    j["r"] = rational_to_string(x.rat());
    if (sgn(x.coeff()) != 0) j["s"] = rational_to_string(x.coeff());
    return j;
}

FieldElement field_from_json(const Json& j, long d) {
    if (j.is_string()) return FieldElement(rational_from_string(j.get<std::string>()));
    if (!j.is_object() || !j.contains("r")) throw ParseError("field element must be {\"r\": \"p/q\"}");
    Rational r = rational_from_string(j.at("r").get<std::string>());
    Rational s(0);
    if (j.contains("s")) s = rational_from_string(j.at("s").get<std::string>());
    if (sgn(s) != 0 && d == 0) throw ParseError("irrational entry in a scene without D");
    return FieldElement(r, s, sgn(s) == 0 ? 0 : d);
}

Json matrix_to_json(const Matrix& m) {
    Json cols = Json::array();
    for (long j = 0; j < m.cols(); ++j) {
        Json col = Json::array();
        for (long i = 0; i < m.rows(); ++i) col.push_back(field_to_json(m.at(i, j)));
        cols.push_back(std::move(col));
    }
    return cols;
}

Matrix matrix_from_json(const Json& j, long d) {
    if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty list of columns");
    const long cols = static_cast<long>(j.size());
    const long rows = static_cast<long>(j.at(0).size());
    Matrix m(rows, cols);
    for (long c = 0; c < cols; ++c) {
        const Json& col = j.at(c);
        if (static_cast<long>(col.size()) != rows) throw ParseError("matrix columns have uneven lengths");
        for (long r = 0; r < rows; ++r) m.at(r, c) = field_from_json(col.at(r), d);
    }
    return m;
}

static long declared_d(const Json& j, long fallback) {
    if (!j.is_object() || !j.contains("D") || j.at("D").is_null()) return fallback;
    long d = j.at("D").get<long>();
    if (d < 2 || !is_squarefree(d)) throw ParseError("D must be a squarefree integer >= 2");
    return d;
}

Json lattice_to_json(const Lattice& lat) {
    Json j;
    j["dim"] = lat.dim();
    j["D"] = lat.field_d() == 0 ? Json(nullptr) : Json(lat.field_d());
    j["basis"] = matrix_to_json(lat.basis());
    return j;
}

Lattice lattice_from_json(const Json& j, long d) {
    if (!j.is_object() || !j.contains("basis")) throw ParseError("lattice must carry a \"basis\"");
    d = declared_d(j, d);
    Matrix basis = matrix_from_json(j.at("basis"), d);
    if (j.contains("dim") && j.at("dim").get<long>() != basis.rows())
        throw ParseError("lattice \"dim\" disagrees with the basis shape");
    try {
        return Lattice(std::move(basis), d);
    } catch (const GeometryError& e) {
        throw ParseError(std::string("invalid lattice: ") + e.what());
    }
}

Json box_to_json(const Box& b) {
    Json j;
    j["lo"] = Json::array();
    j["hi"] = Json::array();
    for (long i = 0; i < b.dim(); ++i) {
        j["lo"].push_back(field_to_json(b.lo[i]));
        j["hi"].push_back(field_to_json(b.hi[i]));
    }
    return j;
}

Box box_from_json(const Json& j, long d) {
    if (!j.is_object() || !j.contains("lo") || !j.contains("hi"))
        throw ParseError("box must carry \"lo\" and \"hi\"");
    Box b;
    for (const auto& e : j.at("lo")) b.lo.push_back(field_from_json(e, d));
    for (const auto& e : j.at("hi")) b.hi.push_back(field_from_json(e, d));
    if (b.lo.size() != b.hi.size()) throw ParseError("box lo/hi lengths differ");
    return b;
}

static long body_field_d(const BodyF& f) {
    long d = 0;
    auto absorb = [&d](const FieldElement& x) {
        if (x.d() != 0) d = x.d();
    };
    for (const auto& b : f.boxes) {
        for (const auto& x : b.lo) absorb(x);
        for (const auto& x : b.hi) absorb(x);
    }
    for (long i = 0; i < f.transform_to_original.rows(); ++i)
        for (long k = 0; k < f.transform_to_original.cols(); ++k) absorb(f.transform_to_original.at(i, k));
    return d;
}

Json body_to_json(const BodyF& f) {
    Json j;
    j["frame"] = f.frame == Frame::Canonical ? "canonical" : "original";
    j["dim"] = f.dim;
    long d = body_field_d(f);
    j["D"] = d == 0 ? Json(nullptr) : Json(d);
    j["boxes"] = Json::array();
    for (const auto& b : f.boxes) j["boxes"].push_back(box_to_json(b));
    j["transform_to_original"] = matrix_to_json(f.transform_to_original);
    return j;
}

BodyF body_from_json(const Json& j, long d) {
    if (!j.is_object() || !j.contains("boxes")) throw ParseError("body must carry \"boxes\"");
    d = declared_d(j, d);
    BodyF f;
    f.dim = j.at("dim").get<long>();
    std::string frame = j.value("frame", "canonical");
    if (frame == "canonical")
        f.frame = Frame::Canonical;
    else if (frame == "original")
        f.frame = Frame::Original;
    else
        throw ParseError("unknown frame '" + frame + "'");
    for (const auto& bj : j.at("boxes")) {
        Box b = box_from_json(bj, d);
        if (b.dim() != f.dim) throw ParseError("box dimension disagrees with body");
        f.boxes.push_back(std::move(b));
    }
    if (j.contains("transform_to_original"))
        f.transform_to_original = matrix_from_json(j.at("transform_to_original"), d);
    else
        f.transform_to_original = Matrix::identity(f.dim);
    try {
        f.validate();
    } catch (const GeometryError& e) {
        throw ParseError(std::string("invalid body: ") + e.what());
    }
    return f;
}

Json report_to_json(const PackingReport& rep) {
    Json j;
    j["is_packing"] = rep.is_packing;
    j["is_tiling"] = rep.is_tiling;
    j["body_volume"] = field_to_json(rep.body_volume);
    j["lattice_covolume"] = field_to_json(rep.lattice_covolume);
    j["violations"] = Json::array();
    for (const auto& v : rep.violations) {
        Json vj;
        vj["box_a"] = v.box_a;
        vj["box_b"] = v.box_b;
        vj["coeffs"] = Json::array();
        for (const auto& c : v.coeffs) vj["coeffs"].push_back(c.get_str());
        j["violations"].push_back(std::move(vj));
    }
    return j;
}

Json decomposition_to_json(const ClosureDecomposition& dec) {
    Json j;
    j["case"] = case_name(dec.case_tag);
    j["m"] = dec.m;
    j["n"] = dec.n;
    j["T"] = matrix_to_json(dec.t);
    j["T_inverse"] = matrix_to_json(dec.t_inverse);
    j["W"] = matrix_to_json(dec.w_basis);
    return j;
}

Json witness_to_json(const UnboundednessWitness& w) {
    Json j;
    j["r"] = rational_to_string(w.r);
    j["R"] = rational_to_string(w.big_r);
    j["count_n"] = w.count_n.get_str();
    j["count_m"] = w.count_m.get_str();
    return j;
}

static Json int_vectors_to_json(const std::vector<std::vector<Integer>>& vs) {
    Json out = Json::array();
    for (const auto& v : vs) {
        Json row = Json::array();
        for (const auto& x : v) row.push_back(x.get_str());
        out.push_back(std::move(row));
    }
    return out;
}

static Json fvecs_to_json(const std::vector<FVec>& vs) {
    Json out = Json::array();
    for (const auto& v : vs) {
        Json row = Json::array();
        for (const auto& x : v) row.push_back(field_to_json(x));
        out.push_back(std::move(row));
    }
    return out;
}

static Json trace_to_json(const ConstructionResult& res) {
    Json t;
    if (const auto* dt = std::get_if<DenseTrace>(&res.trace)) {
        t["N"] = dt->n_grid;
        t["side"] = rational_to_string(dt->side);
        t["margin"] = field_to_json(dt->margin);
        t["small_cells"] = Json::array();
        for (const auto& b : dt->small_cells) t["small_cells"].push_back(box_to_json(b));
        t["large_cells"] = Json::array();
        for (const auto& b : dt->large_cells) t["large_cells"].push_back(box_to_json(b));
        t["shifts_l"] = int_vectors_to_json(dt->shifts_l);
        t["shifts_m"] = int_vectors_to_json(dt->shifts_m);
    } else if (const auto* ct = std::get_if<CommensurableTrace>(&res.trace)) {
        t["H"] = lattice_to_json(ct->h);
        t["group_order"] = ct->group_order.get_str();
        t["g_reps"] = int_vectors_to_json(ct->g_reps);
        t["h_reps"] = int_vectors_to_json(ct->h_reps);
        t["e_points"] = int_vectors_to_json(ct->e_points);
    } else if (const auto* it = std::get_if<IntermediateTrace>(&res.trace)) {
        t["L1"] = lattice_to_json(it->l1);
        t["L2"] = lattice_to_json(it->l2);
        t["M1"] = lattice_to_json(it->m1);
        t["M2"] = lattice_to_json(it->m2);
        t["L2_prime"] = lattice_to_json(it->l2_prime);
        t["M2_prime"] = lattice_to_json(it->m2_prime);
        t["J1"] = fvecs_to_json(it->j1);
        t["K1"] = fvecs_to_json(it->k1);
        t["J2"] = fvecs_to_json(it->j2);
        t["K2"] = fvecs_to_json(it->k2);
        t["pairing_l"] = it->pairing_l;
        t["pairing_m"] = it->pairing_m;
        t["E"] = body_to_json(it->e_body);
    }
    return t;
}

Json construction_to_json(const ConstructionResult& res, long scene_d_tag) {
    Json j;
    j["case"] = case_name(res.case_tag);
    j["m"] = res.m;
    j["n"] = res.n;
    j["D"] = scene_d_tag == 0 ? Json(nullptr) : Json(scene_d_tag);
    j["F"] = body_to_json(res.body);
    j["canonical"]["L"] = lattice_to_json(res.l_canonical);
    j["canonical"]["M"] = lattice_to_json(res.m_canonical);
    j["canonical"]["to_canonical"] = matrix_to_json(res.to_canonical);
    j["trace"] = trace_to_json(res);

    FieldElement vol = res.body.volume();
    FieldElement det_to_orig = res.body.transform_to_original.determinant().abs();
    j["volumes"]["body"] = field_to_json(vol);
    j["volumes"]["body_original"] = field_to_json(vol * det_to_orig);
    j["volumes"]["covolume_L"] = field_to_json(res.l_canonical.covolume());
    j["volumes"]["covolume_M"] = field_to_json(res.m_canonical.covolume());
    j["certified"]["tiles_by_L"] = res.report_l.is_tiling;
    j["certified"]["packs_by_M"] = res.report_m.is_packing;
    return j;
}

Scene scene_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("scene must be a JSON object");
    Scene s;
    if (!j.contains("d")) throw ParseError("scene needs \"d\"");
    s.d = j.at("d").get<long>();
    if (s.d < 1) throw ParseError("scene dimension must be positive");
    if (j.contains("D") && !j.at("D").is_null()) {
        s.sqrt_d = j.at("D").get<long>();
        if (s.sqrt_d < 2 || !is_squarefree(s.sqrt_d))
            throw ParseError("D must be a squarefree integer >= 2");
    }
    if (j.contains("cap")) s.search_cap = j.at("cap").get<long>();
    if (!j.contains("L") || !j.contains("M")) throw ParseError("scene needs \"L\" and \"M\"");
    s.lattice_l = lattice_from_json(j.at("L"), s.sqrt_d);
    s.lattice_m = lattice_from_json(j.at("M"), s.sqrt_d);
    if (s.lattice_l.dim() != s.d || s.lattice_m.dim() != s.d)
        throw DimensionError("scene lattices do not match the declared dimension");
    if (!s.lattice_l.full_rank() || !s.lattice_m.full_rank())
        throw ParseError("scene lattices must be full rank");
    return s;
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("JSON parse failure: ") + e.what());
    }
    return j;
}

Scene load_scene(const std::string& path) { return scene_from_json(load_json(path)); }

Lattice lattice_from_file(const std::string& path) { return lattice_from_json(load_json(path), 0); }

} // namespace tilepack
