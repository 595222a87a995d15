#include "sphtet/io.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "json.hpp"

namespace sphtet::io {

using ordered_json = nlohmann::ordered_json;

const char* to_string(DocKind kind) {
    return kind == DocKind::Lengths ? "lengths" : "angles";
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::array<double, 6> degrees_of(const std::array<double, 6>& radians) {
    std::array<double, 6> out{};
    for (int k = 0; k < 6; ++k) out[k] = radians[k] * 180.0 / std::numbers::pi;
    return out;
}

TetDocument document_from_parsed(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("document must be a JSON object");
    if (j.contains("schema_version")) {
        const auto& sv = j.at("schema_version");
        if (!sv.is_number_integer() || sv.get<int>() != kSchemaVersion) {
            throw ParseError("unsupported schema_version");
        }
    }
    TetDocument doc;
    const auto kind_it = j.find("kind");
    if (kind_it == j.end() || !kind_it->is_string()) {
        throw ParseError("missing or non-string \"kind\"");
    }
    const std::string kind = kind_it->get<std::string>();
    if (kind == "lengths") {
        doc.kind = DocKind::Lengths;
    } else if (kind == "angles") {
        doc.kind = DocKind::Angles;
    } else {
        throw ParseError("unrecognized kind \"" + kind + "\"");
    }
    const auto values_it = j.find("values");
    if (values_it == j.end() || !values_it->is_array() || values_it->size() != 6) {
        throw ParseError("\"values\" must be an array of six numbers");
    }
    for (int k = 0; k < 6; ++k) {
        const auto& v = (*values_it)[k];
        if (!v.is_number()) throw ParseError("\"values\" must be numeric");
        doc.values[k] = v.get<double>();
        if (!std::isfinite(doc.values[k])) throw ParseError("values must be finite");
    }
    if (j.contains("label")) {
        const auto& label = j.at("label");
        if (!label.is_string()) throw ParseError("\"label\" must be a string");
        doc.label = label.get<std::string>();
    }
    return doc;
}

}  // namespace

TetDocument document_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return document_from_parsed(j);
}

std::string document_to_json(const TetDocument& doc, bool degrees,
                             double round_trip_residual) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = to_string(doc.kind);
    j["values"] = doc.values;
    if (!doc.label.empty()) j["label"] = doc.label;
    if (degrees) j["degrees"] = degrees_of(doc.values);
    if (round_trip_residual >= 0.0) {
        j["meta"] = ordered_json{{"round_trip_residual", round_trip_residual}};
    }
    return j.dump();
}

std::string csv_header(DocKind kind) {
    return kind == DocKind::Lengths
               ? "l01,l02,l03,l12,l13,l23"
               : "theta01,theta02,theta03,theta12,theta13,theta23";
}

std::string document_to_csv_row(const TetDocument& doc) {
    std::string out;
    for (int k = 0; k < 6; ++k) {
        if (k > 0) out += ',';
        out += format_double(doc.values[k]);
    }
    return out;
}

std::vector<TetDocument> documents_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    DocKind kind = DocKind::Lengths;
    bool header_seen = false;
    std::vector<TetDocument> out;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!header_seen) {
            if (line == csv_header(DocKind::Lengths)) {
                kind = DocKind::Lengths;
            } else if (line == csv_header(DocKind::Angles)) {
                kind = DocKind::Angles;
            } else {
                throw ParseError("unrecognized CSV header \"" + line + "\"");
            }
            header_seen = true;
            continue;
        }
        TetDocument doc;
        doc.kind = kind;
        std::istringstream row(line);
        std::string field;
        int k = 0;
        while (std::getline(row, field, ',')) {
            if (k >= 6) throw ParseError("CSV row has more than six fields");
            std::size_t consumed = 0;
            double v = 0.0;
            try {
                v = std::stod(field, &consumed);
            } catch (const std::exception&) {
                throw ParseError("CSV field \"" + field + "\" is not a number");
            }
            if (consumed != field.size() || !std::isfinite(v)) {
                throw ParseError("CSV field \"" + field + "\" is not a finite number");
            }
            doc.values[k++] = v;
        }
        if (k != 6) throw ParseError("CSV row has fewer than six fields");
        out.push_back(doc);
    }
    if (!header_seen) throw ParseError("empty CSV input");
    return out;
}

std::vector<TetDocument> parse_documents(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ParseError("empty input");
    if (text[first] == '{') {
        // Whole input as one JSON value, else one document per line.
        try {
            return {document_from_json(text)};
        } catch (const ParseError&) {
        }
        std::vector<TetDocument> out;
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            out.push_back(document_from_json(line));
        }
        return out;
    }
    return documents_from_csv(text);
}

std::string report_to_json(const DerivativeReport& report, double via_links_wigner,
                           double via_links_inverse, const TetDocument& input,
                           bool degrees) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "derivative_report";
    j["edge"] = report.edge.name();
    j["opposite"] = report.opposite.name();
    j["analytic_wigner"] = report.analytic_wigner;
    j["analytic_inverse"] = report.analytic_inverse;
    j["fd_wigner"] = report.fd_wigner;
    j["fd_inverse"] = report.fd_inverse;
    j["fd_step"] = report.fd_step;
    j["gram_det"] = report.gram_det;
    j["remark_reciprocal"] = report.remark_reciprocal;
    j["residual_wigner"] = report.residual_wigner;
    j["residual_inverse"] = report.residual_inverse;
    j["wigner_via_links"] = via_links_wigner;
    j["inverse_via_links"] = via_links_inverse;
    ordered_json in;
    in["kind"] = to_string(input.kind);
    in["values"] = input.values;
    if (!input.label.empty()) in["label"] = input.label;
    if (degrees) in["degrees"] = degrees_of(input.values);
    j["input"] = in;
    return j.dump();
}

std::string error_to_json(const std::string& code, const std::string& message) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "error";
    j["error"] = ordered_json{{"code", code}, {"message", message}};
    return j.dump();
}

}  // namespace sphtet::io
