/*
   Copyright 2026 The radrep authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "radrep/pipeline.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "radrep/expression.hpp"

namespace radrep {

namespace {

std::string fmt12(double x) {
    if (x == 0.0) x = 0.0; // normalize negative zero
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", x);
    return buffer;
}

/// "a*z + b" with the sign folded in; drops a vanishing constant term.
std::string linear_str(double a, double b) {
    char buffer[96];
    if (b == 0.0) {
        std::snprintf(buffer, sizeof(buffer), "%.6g*z", a);
    } else {
        std::snprintf(buffer, sizeof(buffer), "%.6g*z %c %.6g", a, b < 0 ? '-' : '+', std::abs(b));
    }
    return buffer;
}

void append_array(std::string& out, const std::vector<double>& values) {
    out += "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ", ";
        out += fmt12(values[i]);
    }
    out += "]";
}

void append_array(std::string& out, const std::vector<int>& values) {
    out += "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ", ";
        out += std::to_string(values[i]);
    }
    out += "]";
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

/// Inner Moebius part of a composed piece as the normalized rational
/// st(z) = (a z + b)/(c z + d) in [0, 1]; the radical/affine outer part is
/// applied to st.
struct InnerCoefficients {
    double a, b, c, d;
};

InnerCoefficients inner_coefficients(const MoebiusPiece& m) {
    const double alpha = m.alpha;
    // st = (1-alpha)(z - z_lo) / [(1-2alpha) z + alpha z_hi - (1-alpha) z_lo];
    // the 1/dz factors of zt cancel between numerator and denominator.
    return InnerCoefficients{
        1.0 - alpha,
        -(1.0 - alpha) * m.z_lo,
        1.0 - 2.0 * alpha,
        alpha * m.z_hi - (1.0 - alpha) * m.z_lo,
    };
}

std::string radical_display(const RadicalPiece& piece, const std::string& inner) {
    char buffer[256];
    const double dt = piece.t_hi - piece.t_lo;
    char offset[32] = "";
    if (piece.t_lo != 0.0) std::snprintf(offset, sizeof(offset), "%.6g + ", piece.t_lo);
    switch (piece.kind) {
        case PieceKind::left_zero:
            std::snprintf(buffer, sizeof(buffer), "%s%.6g*(%s)^(1/%d)", offset, dt, inner.c_str(),
                          piece.radical_index);
            break;
        case PieceKind::right_zero:
            std::snprintf(buffer, sizeof(buffer), "%s%.6g*(1 - (1 - (%s))^(1/%d))", offset, dt,
                          inner.c_str(), piece.radical_index);
            break;
        case PieceKind::plain:
            std::snprintf(buffer, sizeof(buffer), "%s%.6g*(%s)", offset, dt, inner.c_str());
            break;
    }
    return buffer;
}

std::string piece_json(const TransformPiece& piece) {
    std::string out = "{";
    out += "\"domain\": [" + fmt12(piece_domain_lo(piece)) + ", " + fmt12(piece_domain_hi(piece)) + "]";

    if (const auto* radical = std::get_if<RadicalPiece>(&piece)) {
        const bool plain = radical->kind == PieceKind::plain;
        out += std::string(", \"kind\": ") + (plain ? "\"affine\"" : "\"radical\"");
        out += ", \"radical_index\": " + std::to_string(radical->radical_index);
        out += std::string(", \"side\": \"") +
               (radical->kind == PieceKind::left_zero    ? "left"
                : radical->kind == PieceKind::right_zero ? "right"
                                                         : "none") +
               "\"";
        out += ", \"coefficients\": {\"t_lo\": " + fmt12(radical->t_lo) +
               ", \"t_hi\": " + fmt12(radical->t_hi) + ", \"s_lo\": " + fmt12(radical->s_lo) +
               ", \"s_hi\": " + fmt12(radical->s_hi) + "}";
        char inner[128];
        if (radical->s_lo == 0.0) {
            std::snprintf(inner, sizeof(inner), "s/%.6g", radical->s_hi);
        } else {
            std::snprintf(inner, sizeof(inner), "(s - %.6g)/%.6g", radical->s_lo,
                          radical->s_hi - radical->s_lo);
        }
        out += ", \"display\": \"" + json_escape(radical_display(*radical, inner)) + "\"";
    } else if (const auto* moebius = std::get_if<MoebiusPiece>(&piece)) {
        out += ", \"kind\": \"moebius\"";
        out += ", \"radical_index\": 1";
        out += ", \"coefficients\": {\"z_lo\": " + fmt12(moebius->z_lo) +
               ", \"z_hi\": " + fmt12(moebius->z_hi) + ", \"s_lo\": " + fmt12(moebius->s_lo) +
               ", \"s_hi\": " + fmt12(moebius->s_hi) + ", \"alpha\": " + fmt12(moebius->alpha) + "}";
        char display[256];
        std::snprintf(display, sizeof(display),
                      "%.6g + %.6g*(1-%.6g)*zt/((1-%.6g)*zt + %.6g*(1-zt)), zt=(z - %.6g)/%.6g",
                      moebius->s_lo, moebius->s_hi - moebius->s_lo, moebius->alpha, moebius->alpha,
                      moebius->alpha, moebius->z_lo, moebius->z_hi - moebius->z_lo);
        out += ", \"display\": \"" + json_escape(display) + "\"";
    } else {
        const auto& composed = std::get<ComposedPiece>(piece);
        const bool plain = composed.outer.kind == PieceKind::plain;
        out += std::string(", \"kind\": ") + (plain ? "\"moebius-affine\"" : "\"radical-moebius\"");
        out += ", \"radical_index\": " + std::to_string(composed.outer.radical_index);
        out += std::string(", \"side\": \"") +
               (composed.outer.kind == PieceKind::left_zero    ? "left"
                : composed.outer.kind == PieceKind::right_zero ? "right"
                                                               : "none") +
               "\"";
        const InnerCoefficients ic = inner_coefficients(composed.inner);
        out += ", \"coefficients\": {\"t_lo\": " + fmt12(composed.outer.t_lo) +
               ", \"t_hi\": " + fmt12(composed.outer.t_hi) +
               ", \"alpha\": " + fmt12(composed.inner.alpha) +
               ", \"inner_num\": [" + fmt12(ic.a) + ", " + fmt12(ic.b) + "]" +
               ", \"inner_den\": [" + fmt12(ic.c) + ", " + fmt12(ic.d) + "]}";
        const std::string inner =
            "(" + linear_str(ic.a, ic.b) + ")/(" + linear_str(ic.c, ic.d) + ")";
        out += ", \"display\": \"" + json_escape(radical_display(composed.outer, inner)) + "\"";
    }
    out += "}";
    return out;
}

} // namespace

JobConfig load_job_config(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw Error("ParseError", "cannot open input file " + file.string());
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw Error("ParseError", std::string("bad JSON input: ") + e.what());
    }

    JobConfig cfg;
    try {
        if (!doc.contains("coordinates") || !doc["coordinates"].is_array()) {
            throw Error("ParseError", "input needs a \"coordinates\" array");
        }
        for (const auto& entry : doc["coordinates"]) {
            cfg.coordinates.push_back(entry.get<std::string>());
        }
        if (doc.contains("tolerance")) cfg.tolerance = doc["tolerance"].get<double>();
        if (doc.contains("root_tolerance")) cfg.root_tolerance = doc["root_tolerance"].get<double>();
        if (doc.contains("samples")) cfg.samples = doc["samples"].get<int>();
        if (doc.contains("extra_breakpoints")) {
            cfg.extra_breakpoints = doc["extra_breakpoints"].get<int>();
        }
        if (doc.contains("emit")) {
            cfg.emit.clear();
            for (const auto& entry : doc["emit"]) cfg.emit.insert(entry.get<std::string>());
        }
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw Error("ParseError", std::string("bad config value: ") + e.what());
    }
    if (cfg.samples < 2) throw Error("ParseError", "samples must be at least 2");
    if (!(cfg.tolerance > 0.0)) throw Error("ParseError", "tolerance must be positive");
    return cfg;
}

ParametricCurve parse_curve(const std::vector<std::string>& coordinates, double root_tolerance) {
    if (coordinates.size() < 2) {
        throw Error("ParseError", "a curve needs at least two coordinate expressions");
    }
    std::vector<RationalFunction> coords;
    coords.reserve(coordinates.size());
    for (const auto& text : coordinates) {
        coords.push_back(parse_rational_expression(text));
    }
    CurveOptions options;
    options.roots.refine_tolerance = rational_from_double(root_tolerance);
    return ParametricCurve(std::move(coords), options);
}

PipelineOutput run_pipeline(const ParametricCurve& p, const JobConfig& cfg) {
    PipelineOutput out;
    out.base = uniformity(p, cfg.tolerance);

    if (p.omega_is_zero()) {
        out.degenerate_line = true;
        out.partition.t_points = {0.0, 1.0};
        out.partition.exact_points = {Rational(0), Rational(1)};
        out.partition.multiplicities = {0, 0};
        out.partition.piece_kinds = {PieceKind::plain};
        out.S = {0.0, 1.0};
        out.Z = {0.0, 1.0};
        out.alpha = {0.5};
        out.u_phi_star = 1.0;
        out.u_final = 1.0;
        return out;
    }

    PartitionOptions partition_options;
    partition_options.extra_breakpoints = cfg.extra_breakpoints;
    partition_options.roots.refine_tolerance = rational_from_double(cfg.root_tolerance);
    out.partition = build_partition(p, partition_options);

    out.S = optimal_S(p, out.partition, cfg.tolerance);
    out.phi = build_radical(out.partition, out.S);

    out.integrals = compute_piece_integrals(p, out.partition, out.S, cfg.tolerance);
    const OptimizationResult optimum = optimal_alpha_Z(out.integrals, out.S, out.base.mu);
    out.Z = optimum.Z_star;
    out.alpha = optimum.alpha_star;
    out.u_phi_star = optimum.u_after_phi;
    out.u_final = optimum.u_after_m;
    out.eta_phi = optimum.eta_phi;
    out.eta_m = optimum.eta_m;

    out.moebius = build_moebius(out.S, out.Z, out.alpha);
    out.transform = compose(out.phi, out.moebius);

    const ReparameterizedSpeed speed(p, out.transform);
    const auto& breakpoints = out.transform.breakpoints();
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        out.omega_piece_start.push_back(speed.value(breakpoints[i], Side::right));
        out.omega_piece_end.push_back(speed.value(breakpoints[i + 1], Side::left));
    }
    return out;
}

std::vector<SampleRow> emit_samples(const ParametricCurve& p, const PiecewiseTransform& r,
                                    int count) {
    if (count < 2) throw Error("ParseError", "sample count must be at least 2");
    std::vector<SampleRow> rows;
    rows.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        SampleRow row;
        row.z = static_cast<double>(i) / (count - 1);
        row.t = r(row.z);
        row.point = p.evaluate(row.t);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string report_json(const PipelineOutput& out) {
    std::string json = "{\n";
    json += "  \"u_p\": " + fmt12(out.base.uniformity) + ",\n";
    json += "  \"u_phi_star\": " + fmt12(out.u_phi_star) + ",\n";
    json += "  \"u_final\": " + fmt12(out.u_final) + ",\n";
    json += "  \"mu_p\": " + fmt12(out.base.mu) + ",\n";
    json += "  \"sigma2_p\": " + fmt12(out.base.sigma2) + ",\n";
    json += "  \"T\": ";
    append_array(json, out.partition.t_points);
    json += ",\n  \"multiplicities\": ";
    append_array(json, out.partition.multiplicities);
    json += ",\n  \"S\": ";
    append_array(json, out.S);
    json += ",\n  \"Z\": ";
    append_array(json, out.Z);
    json += ",\n  \"alpha\": ";
    append_array(json, out.alpha);
    json += ",\n  \"eta_phi\": " + fmt12(out.eta_phi);
    json += ",\n  \"eta_m\": " + fmt12(out.eta_m);
    json += ",\n  \"omega_piece_start\": ";
    append_array(json, out.omega_piece_start);
    json += ",\n  \"omega_piece_end\": ";
    append_array(json, out.omega_piece_end);
    json += ",\n  \"quadrature_error\": " + fmt12(out.base.quad_error_bound);
    json += ",\n  \"degenerate_line\": ";
    json += out.degenerate_line ? "true" : "false";
    json += "\n}\n";
    return json;
}

std::string transform_json(const PipelineOutput& out) {
    std::string json = "[\n";
    const auto& pieces = out.transform.pieces();
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        json += "  " + piece_json(pieces[i]);
        if (i + 1 < pieces.size()) json += ",";
        json += "\n";
    }
    json += "]\n";
    return json;
}

std::string samples_csv(const ParametricCurve& p, const PiecewiseTransform& r, int count) {
    std::string csv = "z,t";
    for (int i = 1; i <= p.dimension(); ++i) csv += ",x" + std::to_string(i);
    csv += "\n";
    for (const auto& row : emit_samples(p, r, count)) {
        csv += fmt12(row.z);
        csv += ",";
        csv += fmt12(row.t);
        for (double x : row.point) {
            csv += ",";
            csv += fmt12(x);
        }
        csv += "\n";
    }
    return csv;
}

std::string omega_profile_csv(const ParametricCurve& p, const PipelineOutput& out, int count) {
    std::string csv = "param,omega_original,omega_reparam\n";
    ReparameterizedSpeed speed(p, out.transform);
    for (int i = 0; i < count; ++i) {
        const double x = static_cast<double>(i) / (count - 1);
        csv += fmt12(x);
        csv += ",";
        csv += fmt12(evaluate_omega(p, x));
        csv += ",";
        csv += fmt12(speed(x));
        csv += "\n";
    }
    return csv;
}

void write_outputs(const ParametricCurve& p, const PipelineOutput& out, const JobConfig& cfg,
                   const std::filesystem::path& directory) {
    std::filesystem::create_directories(directory);
    auto write = [&directory](const std::string& name, const std::string& content) {
        std::ofstream file(directory / name, std::ios::binary);
        if (!file) throw Error("IoError", "cannot write " + (directory / name).string());
        file << content;
    };
    if (cfg.emit.count("report") != 0) write("report.json", report_json(out));
    if (cfg.emit.count("transform") != 0) write("transform.json", transform_json(out));
    if (cfg.emit.count("samples") != 0) {
        write("samples_reparam.csv", samples_csv(p, out.transform, cfg.samples));
        write("samples_original.csv", samples_csv(p, PiecewiseTransform::identity(), cfg.samples));
    }
    if (cfg.emit.count("omega_profile") != 0) {
        write("omega_profile.csv", omega_profile_csv(p, out, cfg.samples));
    }
}

} // namespace radrep
