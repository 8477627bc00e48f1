#include "eqc/io.hpp"

#include <fstream>
#include <sstream>

#include "eqc/errors.hpp"

namespace eqc::io {

ordered_json rational(const Rational& r) { return eqc::to_string(r); }

ordered_json integer(const Integer& a) { return eqc::to_string(a); }

ordered_json count(const Integer& a) {
    if (fits_int64(a)) return to_int64(a);
    return eqc::to_string(a);
}

ordered_json laurent(const LaurentPoly& p) {
    ordered_json out = ordered_json::array();
    for (const auto& [e, c] : p.terms()) out.push_back(ordered_json::array({e, count(c)}));
    return out;
}

ordered_json flags(const std::set<HypothesisFlag>& f) {
    ordered_json out = ordered_json::array();
    for (HypothesisFlag x : f) out.push_back(flag_name(x));
    return out;
}

ordered_json curve(const PillowcaseCurve& c) {
    ordered_json arcs = ordered_json::array();
    for (const PCArc& a : c.arcs)
        arcs.push_back({{"slope", a.slope},
                        {"offset", rational(a.offset)},
                        {"interval", ordered_json::array({rational(a.lo), rational(a.hi)})},
                        {"orientation", a.orientation}});
    return {{"knot", c.knot_tag}, {"arcs", arcs}};
}

ordered_json seifert(const SeifertMatrix& v) { return {{"matrix", v.rows()}}; }

ordered_json equivariant(const EquivariantReport& r) {
    ordered_json out;
    out["lambda_tau"] = rational(r.lambda_tau);
    if (r.lambda1)
        out["lambda_w"] = ordered_json::array({rational(r.lambda0), rational(*r.lambda1)});
    else
        out["lambda_w"] = ordered_json::array({rational(r.lambda0)});
    out["rho"] = r.rho ? ordered_json(*r.rho) : ordered_json(nullptr);
    out["mu_bar"] = r.mu_bar ? rational(Rational(*r.mu_bar)) : ordered_json(nullptr);
    out["lefschetz"] = rational(r.lefschetz);
    out["hypothesis_flags"] = flags(r.flags);
    return out;
}

SeifertMatrix parse_seifert(const ordered_json& doc) {
    if (!doc.is_object() || !doc.contains("matrix") || !doc["matrix"].is_array())
        throw DomainError(ErrorCode::InvalidInput, "expected {\"matrix\": [[...]]}");
    std::vector<std::vector<long>> rows;
    for (const auto& row : doc["matrix"]) {
        if (!row.is_array()) throw DomainError(ErrorCode::InvalidInput, "matrix rows must be arrays");
        std::vector<long> r;
        for (const auto& x : row) {
            if (!x.is_number_integer()) throw DomainError(ErrorCode::InvalidInput, "matrix entries must be integers");
            r.push_back(x.get<long>());
        }
        rows.push_back(std::move(r));
    }
    return SeifertMatrix::from_rows(rows);
}

SeifertMatrix read_seifert_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError(ErrorCode::InvalidInput, "cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    ordered_json doc = ordered_json::parse(buf.str(), nullptr, false);
    if (doc.is_discarded()) throw DomainError(ErrorCode::InvalidInput, path + " is not valid JSON");
    return parse_seifert(doc);
}

}  // namespace eqc::io
