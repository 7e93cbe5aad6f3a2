#include "dw/report.hpp"

#include <fstream>
#include <sstream>

namespace dw {

Json complex_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

Json report_json(const InvariantReport& r) {
    Json values = Json::object();
    auto put = [&](const char* key, const std::optional<std::complex<double>>& v) {
        values[key] = v ? complex_json(*v) : Json(nullptr);
    };
    put("direct", r.direct);
    put("labeling_oracle", r.labeling_oracle);
    put("statesum_route", r.statesum);
    put("verlinde", r.verlinde);

    Json j;
    j["surface"] = r.surface.descriptor();
    j["euler_characteristic"] = r.surface.euler_characteristic();
    j["group"] = r.group;
    j["cocycle"] = r.cocycle;
    const auto& primary = r.direct ? r.direct : r.statesum ? r.statesum : r.verlinde ? r.verlinde : r.labeling_oracle;
    j["value"] = primary ? complex_json(*primary) : Json(nullptr);
    j["values"] = values;
    j["agreement"] = {{"max_deviation", r.max_deviation}, {"tolerance", r.tolerance}};
    if (r.integrality_checked)
        j["integrality"] = {{"nearest_integer", r.nearest_integer}, {"residual", r.integer_residual}, {"ok", r.integrality_ok}};
    else
        j["integrality"] = nullptr;
    j["wedderburn"] = {{"block_count", r.block_count},
                       {"sum_dim_squares", r.sum_dim_squares},
                       {"regular_classes", r.regular_classes},
                       {"ok", r.wedderburn_ok}};
    j["notes"] = r.notes;
    j["passed"] = r.passed();
    return j;
}

std::string report_csv_header() {
    return "group,cocycle,surface,chi,direct_re,direct_im,labeling_re,labeling_im,statesum_re,statesum_im,"
           "verlinde_re,verlinde_im,max_deviation,nearest_integer,residual,passed";
}

std::string report_csv_row(const InvariantReport& r) {
    std::ostringstream out;
    out.precision(17);
    auto cell = [&](const std::optional<std::complex<double>>& v) {
        if (v) out << ',' << v->real() << ',' << v->imag();
        else out << ",,";
    };
    out << '"' << r.group << "\"," << r.cocycle << ',' << r.surface.descriptor() << ',' << r.surface.euler_characteristic();
    cell(r.direct);
    cell(r.labeling_oracle);
    cell(r.statesum);
    cell(r.verlinde);
    out << ',' << r.max_deviation << ',';
    if (r.integrality_checked) out << r.nearest_integer << ',' << r.integer_residual;
    else out << ',';
    out << ',' << (r.passed() ? "true" : "false");
    return out.str();
}

Json decomposition_json(const WedderburnDecomposition& dec) {
    Json blocks = Json::array();
    for (const auto& b : dec.blocks) {
        Json chi = Json::array();
        for (const auto& z : b.character) chi.push_back(complex_json(z));
        blocks.push_back({{"dim", b.dim}, {"fs", fs_name(b.fs)}, {"character", chi}});
    }
    const auto& d = dec.diagnostics;
    return {{"block_count", dec.block_count()},
            {"sum_dim_squares", dec.sum_dim_squares()},
            {"blocks", blocks},
            {"diagnostics",
             {{"dim_residual", d.dim_residual},
              {"idempotent_error", d.idempotent_error},
              {"orthogonality_error", d.orthogonality_error},
              {"centrality_error", d.centrality_error},
              {"unit_error", d.unit_error},
              {"character_residual", d.character_residual},
              {"attempts", d.attempts}}}};
}

Json plan_json(const ContractionPlan& plan, int group_order) {
    Json order = Json::array(), factors = Json::array();
    for (const auto& s : plan.steps) {
        order.push_back(s.edge);
        factors.push_back(s.branched ? group_order : 1);
    }
    return {{"edge_order", order},
            {"branch_factor", factors},
            {"branch_edges", plan.branch_count()},
            {"estimated_states", plan.estimated_states(group_order)}};
}

Json state_sum_json(const StateSumResult& r, int group_order) {
    return {{"value", complex_json(r.value)}, {"states_visited", r.states_visited}, {"plan", plan_json(r.plan, group_order)}};
}

Json triangulation_json(const GluedTriangulation& tri) {
    return {{"triangles", tri.triangle_count()}, {"pairing", tri.pairing()}, {"reversal", tri.reversals()}};
}

GluedTriangulation triangulation_from_json(const Json& j) {
    try {
        auto pairing = j.at("pairing").get<std::vector<int>>();
        auto reversal = j.at("reversal").get<std::vector<bool>>();
        if (j.contains("triangles") && j["triangles"].get<int>() * 3 != static_cast<int>(pairing.size()))
            throw SurfaceError("triangle count does not match the pairing length");
        return GluedTriangulation(std::move(pairing), std::move(reversal));
    } catch (const Json::exception& e) {
        throw SurfaceError(std::string("malformed triangulation JSON: ") + e.what());
    }
}

GluedTriangulation read_triangulation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SurfaceError("cannot open triangulation file " + path);
    try {
        return triangulation_from_json(Json::parse(in));
    } catch (const Json::parse_error& e) {
        throw SurfaceError(std::string("malformed triangulation JSON: ") + e.what());
    }
}

}  // namespace dw
