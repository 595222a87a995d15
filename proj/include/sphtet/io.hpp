#pragma once

#include <string>
#include <vector>

#include "sphtet/tetra.hpp"
#include "sphtet/wigner.hpp"

namespace sphtet {

// Malformed document text (JSON/CSV) or unrecognized fields.
class ParseError : public Error {
public:
    using Error::Error;
};

namespace io {

// Frozen format version; see docs/schema.md.
inline constexpr int kSchemaVersion = 1;

enum class DocKind { Lengths, Angles };

const char* to_string(DocKind kind);

// One tetrahedron, as six radians in canonical edge order
// [01, 02, 03, 12, 13, 23], tagged as lengths or dihedral angles.
struct TetDocument {
    DocKind kind = DocKind::Lengths;
    std::array<double, 6> values{};
    std::string label;  // optional
};

TetDocument document_from_json(const std::string& text);

// One JSON object per line. `round_trip_residual`, when nonnegative, lands in
// a "meta" object; with `degrees` set a display-only "degrees" array is added
// ("values" stays radians).
std::string document_to_json(const TetDocument& doc, bool degrees = false,
                             double round_trip_residual = -1.0);

// CSV headers are fixed per kind; see docs/schema.md.
std::string csv_header(DocKind kind);
std::string document_to_csv_row(const TetDocument& doc);
std::vector<TetDocument> documents_from_csv(const std::string& text);

// Accepts a single JSON document, JSON lines, or CSV with a known header.
std::vector<TetDocument> parse_documents(const std::string& text);

// Full derivative report plus the two link-route values, one JSON line.
std::string report_to_json(const DerivativeReport& report, double via_links_wigner,
                           double via_links_inverse, const TetDocument& input,
                           bool degrees = false);

std::string error_to_json(const std::string& code, const std::string& message);

// 17 significant digits; round-trips exactly in binary64.
std::string format_double(double v);

}  // namespace io
}  // namespace sphtet
