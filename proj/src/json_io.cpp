#include "zbrace/json_io.hpp"

#include <stdexcept>
#include <string>

namespace zbrace::json {

Json to_json(const Mat2& m) {
    return Json::array({Json::array({m.a11, m.a12}), Json::array({m.a21, m.a22})});
}

Json to_json(const Vec2& v) { return Json::array({v.x1, v.x2}); }

Json to_json(const BraceSpec& spec) {
    Json j = Json::object();
    j["phi"] = to_json(spec.phi());
    j["psi"] = to_json(spec.psi());
    return j;
}

Json to_json(const Verdict& v) {
    Json j = Json::object();
    j["valid"] = v.valid;
    j["commuting"] = v.commuting;
    j["eq4_results"] = v.eq4_results;
    j["kernel_results"] = v.kernel_results;
    return j;
}

Json to_json(const RowParams& params) {
    Json j = Json::object();
    if (params.m) j["m"] = *params.m;
    if (params.p) j["p"] = *params.p;
    if (params.q) j["q"] = *params.q;
    if (params.n) j["n"] = *params.n;
    if (params.sign1) j["sign1"] = *params.sign1;
    if (params.sign2) j["sign2"] = *params.sign2;
    return j;
}

Json to_json(const std::vector<RowLabel>& rows) {
    Json j = Json::array();
    for (RowLabel r : rows) j.push_back(std::string(row_name(r)));
    return j;
}

namespace {

template <typename Range>
Json specs(const Range& range) {
    Json j = Json::array();
    for (const BraceSpec& s : range) j.push_back(to_json(s));
    return j;
}

Json instances(const std::vector<RowInstance>& range) {
    Json j = Json::array();
    for (const RowInstance& r : range) {
        Json e = Json::object();
        e["row"] = std::string(row_name(r.label));
        e["phi"] = to_json(r.spec.phi());
        e["psi"] = to_json(r.spec.psi());
        j.push_back(std::move(e));
    }
    return j;
}

}  // namespace

Json to_json(const SearchReport& report) {
    Json j = Json::object();
    j["bound"] = report.bound;
    j["candidates"] = report.candidates;
    j["valid_pairs"] = report.valid_pairs;
    Json hist = Json::object();
    for (const auto& [label, count] : report.row_histogram) hist[std::string(row_name(label))] = count;
    j["row_histogram"] = hist;
    j["unmatched_valid"] = specs(report.unmatched_valid);
    j["invalid_row_instances"] = instances(report.invalid_row_instances);
    j["classification_holds"] = report.classification_holds();
    j["generator_instances"] = report.generator_instances;
    j["generator_uncovered"] = instances(report.generator_uncovered);
    j["commuting_pairs"] = report.commuting_pairs;
    j["kernel_form_mismatches"] = specs(report.kernel_form_mismatches);
    j["overflow_pairs"] = specs(report.overflow_pairs);
    return j;
}

Json to_json(const OrdersReport& report) {
    Json j = Json::object();
    j["bound"] = report.bound;
    j["examined"] = report.examined;
    Json hist = Json::object();
    for (const char* key : {"1", "2", "3", "4", "6", "inf"}) {
        const auto it = report.histogram.find(key);
        hist[key] = it == report.histogram.end() ? 0 : it->second;
    }
    j["order_histogram"] = hist;
    Json dis = Json::array();
    for (const auto& d : report.disagreements) {
        Json e = Json::object();
        e["matrix"] = to_json(d.matrix);
        e["by_predicate"] = d.by_predicate;
        e["by_iteration"] = d.by_iteration;
        dis.push_back(std::move(e));
    }
    j["disagreements"] = dis;
    return j;
}

Json to_json(const YbeReport& report) {
    auto pairs = [](const std::vector<PairZ2>& v) {
        Json j = Json::array();
        for (const auto& p : v) j.push_back(Json::array({to_json(p.first), to_json(p.second)}));
        return j;
    };
    Json j = Json::object();
    j["spec"] = to_json(report.spec);
    j["seed"] = report.seed;
    j["box"] = report.box;
    j["samples"] = report.samples;
    Json ybe = Json::array();
    for (const Triple& t : report.ybe_failures) {
        ybe.push_back(Json::array({to_json(t[0]), to_json(t[1]), to_json(t[2])}));
    }
    j["ybe_failures"] = ybe;
    j["involutivity_failures"] = pairs(report.involutivity_failures);
    j["nondegeneracy_failures"] = pairs(report.nondegeneracy_failures);
    return j;
}

Mat2 mat_from_json(const Json& j) {
    auto bad = [](const std::string& why) { return std::invalid_argument("matrix JSON: " + why); };
    if (!j.is_array() || j.size() != 2) throw bad("expected [[a11,a12],[a21,a22]]");
    std::int64_t e[4];
    for (std::size_t r = 0; r < 2; ++r) {
        const Json& row = j[r];
        if (!row.is_array() || row.size() != 2) throw bad("each row must hold two integers");
        for (std::size_t c = 0; c < 2; ++c) {
            const Json& v = row[c];
            if (!v.is_number_integer()) throw bad("entries must be exact integers");
            if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
                throw bad("entry out of 64-bit range");
            }
            e[2 * r + c] = v.get<std::int64_t>();
        }
    }
    return {e[0], e[1], e[2], e[3]};
}

BraceSpec spec_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("phi") || !j.contains("psi")) {
        throw std::invalid_argument("spec JSON: expected {\"phi\": [[..]], \"psi\": [[..]]}");
    }
    return BraceSpec{mat_from_json(j.at("phi")), mat_from_json(j.at("psi"))};
}

}  // namespace zbrace::json
