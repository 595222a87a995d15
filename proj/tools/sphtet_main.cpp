// sphtet: spherical-tetrahedron trigonometry from the command line.
//
// Subcommands: convert, wigner, verify, sample. Exit codes: 0 success,
// 1 invalid input (or failed verification), 2 numerical degeneracy.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sphtet/io.hpp"
#include "sphtet/sampling.hpp"
#include "sphtet/wigner.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitDegenerate = 2;

using nlohmann::ordered_json;
using namespace sphtet;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path);
    if (!file) throw ParseError("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

int fail_invalid(const std::string& code, const std::string& message) {
    std::cout << io::error_to_json(code, message) << "\n";
    return kExitInvalid;
}

int fail_degenerate(const std::string& code, const std::string& message) {
    std::cout << io::error_to_json(code, message) << "\n";
    return kExitDegenerate;
}

// Maps a validity verdict to an exit: OutOfRange is an input error, the
// degenerate/unrealizable verdicts are numerical failures.
int fail_validity(const Validity& validity, const std::string& what) {
    const std::string message = what + " classified as " + to_string(validity.code) +
                                " (detail " + io::format_double(validity.detail) + ")";
    if (validity.code == ValidityCode::OutOfRange) {
        return fail_invalid("out_of_range", message);
    }
    return fail_degenerate(to_string(validity.code), message);
}

struct ConvertedDoc {
    io::TetDocument doc;
    double round_trip_residual = 0.0;
};

ConvertedDoc convert_document(const io::TetDocument& input) {
    ConvertedDoc out;
    out.doc.label = input.label;
    if (input.kind == io::DocKind::Lengths) {
        const TetLengths lengths{input.values};
        const TetAngles angles = dihedrals_from_lengths(lengths);
        const TetLengths back = lengths_from_dihedrals(angles);
        out.doc.kind = io::DocKind::Angles;
        out.doc.values = angles.values;
        for (int k = 0; k < 6; ++k) {
            out.round_trip_residual = std::max(
                out.round_trip_residual, std::abs(back.values[k] - lengths.values[k]));
        }
    } else {
        const TetAngles angles{input.values};
        const TetLengths lengths = lengths_from_dihedrals(angles);
        const TetAngles back = dihedrals_from_lengths(lengths);
        out.doc.kind = io::DocKind::Lengths;
        out.doc.values = lengths.values;
        for (int k = 0; k < 6; ++k) {
            out.round_trip_residual = std::max(
                out.round_trip_residual, std::abs(back.values[k] - angles.values[k]));
        }
    }
    return out;
}

int validate_document(const io::TetDocument& doc) {
    if (doc.kind == io::DocKind::Lengths) {
        const Validity v = validate_lengths(TetLengths{doc.values});
        if (!v.ok()) return fail_validity(v, "lengths");
    } else {
        const Validity v = validate_angles(TetAngles{doc.values});
        if (!v.ok()) return fail_validity(v, "angles");
    }
    return kExitOk;
}

int cmd_convert(const std::string& input_path, const std::string& format, bool degrees) {
    const std::vector<io::TetDocument> docs = io::parse_documents(read_input(input_path));
    if (format == "csv") {
        std::vector<ConvertedDoc> converted;
        for (const auto& doc : docs) {
            if (int rc = validate_document(doc); rc != kExitOk) return rc;
            converted.push_back(convert_document(doc));
        }
        for (std::size_t k = 1; k < converted.size(); ++k) {
            if (converted[k].doc.kind != converted[0].doc.kind) {
                return fail_invalid("mixed_kinds", "CSV output needs a homogeneous batch");
            }
        }
        std::cout << io::csv_header(converted[0].doc.kind) << "\n";
        for (const auto& c : converted) {
            std::cout << io::document_to_csv_row(c.doc) << "\n";
        }
        return kExitOk;
    }
    for (const auto& doc : docs) {
        if (int rc = validate_document(doc); rc != kExitOk) return rc;
        const ConvertedDoc c = convert_document(doc);
        std::cout << io::document_to_json(c.doc, degrees, c.round_trip_residual) << "\n";
    }
    return kExitOk;
}

int cmd_wigner(const std::string& input_path, const std::string& pair_text,
               double fd_step, bool degrees) {
    const auto pair = EdgeId::parse(pair_text);
    if (!pair) {
        return fail_invalid("unknown_edge", "no edge named \"" + pair_text + "\"");
    }
    const std::vector<io::TetDocument> docs = io::parse_documents(read_input(input_path));
    if (docs.size() != 1) {
        return fail_invalid("single_document_expected",
                            "wigner takes exactly one document");
    }
    const io::TetDocument& doc = docs[0];
    if (int rc = validate_document(doc); rc != kExitOk) return rc;

    TetLengths lengths;
    if (doc.kind == io::DocKind::Lengths) {
        lengths = TetLengths{doc.values};
    } else {
        lengths = lengths_from_dihedrals(TetAngles{doc.values});
    }
    const DerivativeReport report = reciprocity_report(lengths, *pair, fd_step);
    const double via_w = wigner_via_links(lengths, *pair);
    const double via_iw = inverse_via_links(dihedrals_from_lengths(lengths), *pair);
    std::cout << io::report_to_json(report, via_w, via_iw, doc, degrees) << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify: batch invariant battery over a seeded population.

struct ResidualClass {
    const char* name;
    const char* metric;  // "relative" or "max_abs"
    double max = 0.0;

    void record(double r) { max = std::max(max, r); }
};

double rel_diff(double a, double b) {
    const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) / scale;
}

// Gram determinant floor for the verification population: central differences
// at the default step need det well clear of degeneracy to stay inside the
// documented oracle tolerances (error grows ~ step^2/det^2).
constexpr double kVerifyMinMargin = 1e-2;

int cmd_verify(std::uint64_t seed, std::uint64_t count, double tol, double fd_step) {
    if (count < 1) return fail_invalid("bad_count", "count must be at least 1");
    if (!(tol >= 0.0)) return fail_invalid("bad_tol", "tol must be nonnegative");
    if (!(fd_step > 0.0)) return fail_invalid("bad_step", "fd-step must be positive");

    SampleConfig config;
    config.seed = seed;
    config.count = count;
    config.min_margin = kVerifyMinMargin;

    ResidualClass classes[] = {
        {"wigner_vs_fd", "relative"},
        {"inverse_wigner_vs_fd", "relative"},
        {"face_gram_identity", "relative"},
        {"gram_sine_factorization", "relative"},
        {"dihedral_route_agreement", "relative"},
        {"length_round_trip", "max_abs"},
        {"jacobian_product", "max_abs"},
        {"sine_law", "relative"},
        {"endpoint_symmetry", "relative"},
        {"derivative_route_agreement", "relative"},
        {"reciprocal_lengths_fixed", "relative"},
    };
    auto& [eq1, eq2, face_gram, factorization, route, round_trip, jac_product,
           sine_law, endpoint, deriv_route, reciprocal] = classes;

    std::uint64_t skipped = 0;
    std::uint64_t checked = 0;

    for (std::uint64_t idx = 0; idx < count; ++idx) {
        const TetLengths lengths = sample_one(config, idx);
        const TetAngles angles = dihedrals_from_lengths(lengths);
        const double det = gram_det(lengths);
        const double sqrt_det = std::sqrt(det);

        for (const EdgeId edge : all_edges()) {
            // FD reports; one retry at step/10, then record a skip.
            bool have_report = false;
            DerivativeReport report{edge, edge.opposite()};
            for (double step : {fd_step, fd_step / 10.0}) {
                try {
                    report = reciprocity_report(lengths, edge, step);
                    have_report = true;
                    break;
                } catch (const StepTooLargeError&) {
                }
            }
            if (!have_report) {
                ++skipped;
            } else {
                ++checked;
                eq1.record(report.residual_wigner / std::abs(report.analytic_wigner));
                eq2.record(report.residual_inverse / std::abs(report.analytic_inverse));
                try {
                    reciprocal.record(rel_diff(
                        fd_inverse_lengths_fixed(lengths, edge, report.fd_step),
                        report.remark_reciprocal));
                } catch (const StepTooLargeError&) {
                    ++skipped;
                }
            }
            deriv_route.record(rel_diff(wigner_via_links(lengths, edge),
                                        wigner_derivative(lengths, edge)));
            deriv_route.record(rel_diff(inverse_via_links(angles, edge),
                                        inverse_wigner_derivative(angles, edge)));
            endpoint.record(rel_diff(
                dihedral_from_link(lengths, edge.first(), edge.second()),
                dihedral_from_link(lengths, edge.second(), edge.first())));
        }

        // Face-level determinant identity and sine law.
        for (int omit = 0; omit < 4; ++omit) {
            std::array<int, 3> f{};
            int n = 0;
            for (int v = 0; v < 4; ++v) {
                if (v != omit) f[n++] = v;
            }
            const TriangleSides sides{lengths.between(f[1], f[2]),
                                      lengths.between(f[0], f[2]),
                                      lengths.between(f[0], f[1])};
            const TriangleAngles tri = triangle_angles_from_sides(sides);
            const double d3 = triangle_gram_det(sides);
            const double prod = std::sin(tri.A) * std::sin(sides.b) * std::sin(sides.c);
            face_gram.record(std::abs(d3 - prod * prod) / std::max(1.0, d3));
            const double r0 = std::sin(sides.a) / std::sin(tri.A);
            const double r1 = std::sin(sides.b) / std::sin(tri.B);
            const double r2 = std::sin(sides.c) / std::sin(tri.C);
            sine_law.record(rel_diff(r0, r1));
            sine_law.record(rel_diff(r0, r2));
        }

        // Per-vertex link identities: sine law in the link and the
        // determinant factorization through every (vertex, incident edge).
        for (int v = 0; v < 4; ++v) {
            const LinkTriangle link = link_triangle(lengths, v);
            for (int k = 0; k < 3; ++k) {
                const int other = link.others[k];
                const double dihedral = link_interior_angle(link, other);
                sine_law.record(rel_diff(
                    std::sin(link.sides[k]) / std::sin(dihedral),
                    std::sin(link.sides[(k + 1) % 3]) /
                        std::sin(link_interior_angle(link, link.others[(k + 1) % 3]))));
                const int p = link.others[(k + 1) % 3];
                const int q = link.others[(k + 2) % 3];
                const double product = std::sin(lengths.between(v, other)) *
                                       std::sin(lengths.between(v, p)) *
                                       std::sin(lengths.between(v, q)) *
                                       std::sin(link.side_for_pair(other, p)) *
                                       std::sin(link.side_for_pair(other, q)) *
                                       std::sin(dihedral);
                factorization.record(rel_diff(product, sqrt_det));
            }
        }

        // Two dihedral routes and the length round trip.
        const TetAngles via_normals = dihedrals_from_vertices(vertices_from_lengths(lengths));
        const TetLengths back = lengths_from_dihedrals(angles);
        for (int k = 0; k < 6; ++k) {
            route.record(rel_diff(angles.values[k], via_normals.values[k]));
            round_trip.record(std::abs(back.values[k] - lengths.values[k]));
        }

        // Jacobian product against the identity.
        const Jacobian6 fwd = jacobian_theta_of_l(lengths, fd_step);
        const Jacobian6 inv = jacobian_l_of_theta(angles, fd_step);
        for (int r = 0; r < 6; ++r) {
            for (int c = 0; c < 6; ++c) {
                double acc = 0.0;
                for (int m = 0; m < 6; ++m) acc += fwd.entries[r][m] * inv.entries[m][c];
                jac_product.record(std::abs(acc - (r == c ? 1.0 : 0.0)));
            }
        }
    }

    bool pass = true;
    ordered_json residuals;
    for (const auto& c : classes) {
        residuals[c.name] = ordered_json{{"max", c.max}, {"metric", c.metric}};
        if (!(c.max <= tol)) pass = false;
    }
    ordered_json summary;
    summary["schema_version"] = io::kSchemaVersion;
    summary["kind"] = "verify_summary";
    summary["seed"] = seed;
    summary["count"] = count;
    summary["tol"] = tol;
    summary["fd_step"] = fd_step;
    summary["min_margin"] = kVerifyMinMargin;
    summary["pairs_checked"] = checked;
    summary["pairs_skipped"] = skipped;
    summary["max_residuals"] = residuals;
    summary["pass"] = pass;
    std::cout << summary.dump() << "\n";
    return pass ? kExitOk : kExitInvalid;
}

int cmd_sample(std::uint64_t seed, std::uint64_t count, const std::string& format,
               bool degrees) {
    if (count < 1) return fail_invalid("bad_count", "count must be at least 1");
    SampleConfig config;
    config.seed = seed;
    config.count = count;
    if (format == "csv") std::cout << io::csv_header(io::DocKind::Lengths) << "\n";
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        io::TetDocument doc;
        doc.kind = io::DocKind::Lengths;
        doc.values = sample_one(config, idx).values;
        if (format == "csv") {
            std::cout << io::document_to_csv_row(doc) << "\n";
        } else {
            std::cout << io::document_to_json(doc, degrees) << "\n";
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spherical tetrahedron trigonometry: conversions, derivative "
                 "reports, batch verification, sampling"};
    app.require_subcommand(1);

    std::string input_path = "-";
    std::string format = "json";
    std::string pair_text;
    double fd_step = kDefaultFdStep;
    double tol = 1e-4;
    std::uint64_t seed = 0;
    std::uint64_t count = 1;
    bool degrees = false;

    auto* convert = app.add_subcommand("convert", "convert lengths <-> dihedral angles");
    convert->add_option("--input", input_path, "input file or - for stdin");
    convert->add_option("--format", format, "output format: json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    convert->add_flag("--degrees", degrees, "add a display-only degrees array");

    auto* wigner = app.add_subcommand("wigner", "derivative report for one edge pair");
    wigner->add_option("--input", input_path, "input file or - for stdin");
    wigner->add_option("--pair", pair_text, "edge, e.g. 01")->required();
    wigner->add_option("--fd-step", fd_step, "central-difference step");
    wigner->add_flag("--degrees", degrees, "add a display-only degrees array");

    auto* verify = app.add_subcommand("verify", "run the invariant battery on sampled tetrahedra");
    verify->add_option("--seed", seed, "population seed");
    verify->add_option("--count", count, "number of tetrahedra");
    verify->add_option("--tol", tol, "residual tolerance");
    verify->add_option("--fd-step", fd_step, "central-difference step");

    auto* sample = app.add_subcommand("sample", "emit reproducible random tetrahedra");
    sample->add_option("--seed", seed, "population seed");
    sample->add_option("--count", count, "number of tetrahedra");
    sample->add_option("--format", format, "output format: json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sample->add_flag("--degrees", degrees, "add a display-only degrees array");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        if (convert->parsed()) return cmd_convert(input_path, format, degrees);
        if (wigner->parsed()) {
            if (!(fd_step > 0.0)) return fail_invalid("bad_step", "fd-step must be positive");
            return cmd_wigner(input_path, pair_text, fd_step, degrees);
        }
        if (verify->parsed()) return cmd_verify(seed, count, tol, fd_step);
        if (sample->parsed()) return cmd_sample(seed, count, format, degrees);
    } catch (const ParseError& e) {
        return fail_invalid("parse_error", e.what());
    } catch (const DegenerateError& e) {
        return fail_degenerate("degenerate", e.what());
    } catch (const NotRealizableError& e) {
        return fail_degenerate("not_realizable", e.what());
    } catch (const Error& e) {
        return fail_degenerate("numerical_error", e.what());
    }
    return kExitInvalid;
}
