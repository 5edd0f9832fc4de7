#include "unckit/spec_io.hpp"

#include <cstdio>

#include "json.hpp"

namespace unckit {

GaussPoly parse_function_spec(const std::string& document) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(document);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("function spec: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("terms") || !doc["terms"].is_array()) {
        throw ValidationError("function spec: expected object with a \"terms\" list");
    }
    std::vector<GaussPolyTerm> terms;
    for (const auto& jt : doc["terms"]) {
        if (!jt.is_object() || !jt.contains("coeffs") || !jt.contains("width")) {
            throw ValidationError(
                "function spec: each term needs \"coeffs\" and \"width\"");
        }
        if (!jt["coeffs"].is_array() || jt["coeffs"].empty()) {
            throw ValidationError("function spec: \"coeffs\" must be a nonempty list");
        }
        std::vector<double> coeffs;
        for (const auto& c : jt["coeffs"]) {
            if (!c.is_number()) {
                throw ValidationError("function spec: coefficients must be numbers");
            }
            coeffs.push_back(c.get<double>());
        }
        if (!jt["width"].is_number()) {
            throw ValidationError("function spec: \"width\" must be a number");
        }
        const double width = jt["width"].get<double>();
        if (!(width > 0.0)) {
            throw ValidationError("function spec: \"width\" must be positive");
        }
        terms.emplace_back(std::move(coeffs), width);
    }
    if (terms.empty()) {
        throw ValidationError("function spec: at least one term required");
    }
    return GaussPoly(std::move(terms));
}

std::string function_spec_to_json(const GaussPoly& f) {
    nlohmann::json doc;
    doc["terms"] = nlohmann::json::array();
    for (const auto& t : f.terms()) {
        nlohmann::json jt;
        jt["width"] = t.width;
        jt["coeffs"] = nlohmann::json::array();
        for (const Complex& c : t.coeffs) {
            jt["coeffs"].push_back(c.real());
        }
        doc["terms"].push_back(jt);
    }
    return doc.dump();
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace unckit
