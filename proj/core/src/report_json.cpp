#include "parthom/report_json.hpp"

#include "parthom/specht.hpp"

namespace parthom {

nlohmann::json json_integer(const Integer& v) {
    if (fits_int64(v)) return static_cast<std::int64_t>(v);
    return v.str();
}

nlohmann::json report_to_json(const DecompositionReport& report,
                              const std::string& filter_spec,
                              std::optional<bool> oracle_ok,
                              std::optional<bool> lefschetz_ok,
                              bool with_shapes) {
    nlohmann::json j;
    j["schema"] = 1;
    j["n"] = report.n;
    j["filter"] = filter_spec;

    nlohmann::json betti = nlohmann::json::object();
    for (const auto& [deg, val] : report.betti.entries())
        betti[std::to_string(deg)] = json_integer(val);
    j["betti"] = betti;

    nlohmann::json decomp = nlohmann::json::array();
    for (const auto& e : report.entries) {
        nlohmann::json entry;
        entry["degree"] = e.degree;
        entry["composition"] = e.composition.parts();
        if (e.upper) entry["upper"] = e.upper->parts();
        entry["multiplicity"] = json_integer(e.multiplicity);
        entry["specht_dim"] = json_integer(e.specht_dim);
        if (with_shapes) {
            SkewShapeSpec shape = e.upper ? shape_b_star_interval(e.composition, *e.upper)
                                          : shape_b_star(e.composition);
            entry["shape"] = shape.ascii();
        }
        decomp.push_back(std::move(entry));
    }
    j["decomposition"] = decomp;

    j["euler"] = json_integer(report.euler);
    j["verified"]["oracle"] = oracle_ok ? nlohmann::json(*oracle_ok) : nlohmann::json(nullptr);
    j["verified"]["lefschetz"] =
        lefschetz_ok ? nlohmann::json(*lefschetz_ok) : nlohmann::json(nullptr);
    return j;
}

}  // namespace parthom
