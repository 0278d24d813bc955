#pragma once

#include "pachner/dual.hpp"
#include "pachner/homology.hpp"
#include "pachner/moves.hpp"
#include "pachner/parse.hpp"
#include "pachner/pentagon.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pachner {

/// Outcome of one CLI invocation: the report stream (stdout), the error
/// stream (stderr), and the process exit status (0 ok, 1 check failed,
/// 2 parse/usage/model error).
struct CliResult {
    int exit_code = 0;
    std::string report;
    std::string error;
};

namespace cli_detail {

struct Options {
    std::string command;
    std::string file;
    CoefficientGroup coeff = CoefficientGroup::integers();
    SignConvention convention = SignConvention::Standard;
    int probe = 2;
};

inline std::string basename_of(const std::string& path) {
    auto pos = path.find_last_of('/');
    return pos == std::string::npos ? path : path.substr(pos + 1);
}

inline const char* usage() {
    return "usage: pachner <command> <file.cplx> [--coeff z|zN] "
           "[--convention standard|paper] [--probe n1|n2|n3|n4]\n"
           "commands: homology dual move22 move13 cylinder pentagon ainf boundary\n";
}

inline Options parse_options(const std::vector<std::string>& args) {
    if (args.size() < 2)
        throw std::invalid_argument(std::string("missing command or file\n") + usage());
    Options opt;
    opt.command = args[0];
    opt.file = args[1];
    for (size_t i = 2; i < args.size(); ++i) {
        const std::string& flag = args[i];
        auto value = [&]() -> const std::string& {
            if (i + 1 >= args.size())
                throw std::invalid_argument("flag " + flag + " needs a value\n" + usage());
            return args[++i];
        };
        if (flag == "--coeff") {
            const std::string& v = value();
            if (v == "z" || v == "Z") {
                opt.coeff = CoefficientGroup::integers();
            } else if ((v.size() > 1) && (v[0] == 'z' || v[0] == 'Z') &&
                       std::all_of(v.begin() + 1, v.end(), [](char c) {
                           return std::isdigit(static_cast<unsigned char>(c));
                       })) {
                long m = std::stol(v.substr(1));
                if (m < 2)
                    throw std::invalid_argument("--coeff modulus must be at least 2");
                opt.coeff = CoefficientGroup::modular(m);
            } else {
                throw std::invalid_argument("--coeff expects z or z<m>, got " + v);
            }
        } else if (flag == "--convention") {
            const std::string& v = value();
            if (v == "standard")
                opt.convention = SignConvention::Standard;
            else if (v == "paper")
                opt.convention = SignConvention::Paper;
            else
                throw std::invalid_argument("--convention expects standard or paper, got " + v);
        } else if (flag == "--probe") {
            const std::string& v = value();
            if (v.size() == 2 && v[0] == 'n' && v[1] >= '1' && v[1] <= '4')
                opt.probe = v[1] - '0';
            else
                throw std::invalid_argument("--probe expects n1..n4, got " + v);
        } else {
            throw std::invalid_argument("unknown flag " + flag + "\n" + usage());
        }
    }
    return opt;
}

/// All surfaces of a document merged into one (shared labels become the
/// interior edges); used by the whole-document commands.
inline LabeledSurface union_surface(const ComplexDocument& doc) {
    LabeledSurface u;
    u.name = doc.name.empty() ? "union" : doc.name;
    for (const auto& s : doc.surfaces) {
        u.triangles.insert(u.triangles.end(), s.triangles.begin(), s.triangles.end());
        u.vertex_glues.insert(u.vertex_glues.end(), s.vertex_glues.begin(),
                              s.vertex_glues.end());
        u.declared_vertices.insert(u.declared_vertices.end(), s.declared_vertices.begin(),
                                   s.declared_vertices.end());
    }
    return u;
}

inline PentagonLabels pentagon_labels_from_document(const ComplexDocument& doc) {
    if (doc.pentagons.empty())
        throw std::invalid_argument("pentagon command needs a pentagon declaration");
    const PentagonCell& pc = doc.pentagons[0];
    auto edges = detail::document_edge_map(doc.surfaces);
    auto side = [&](int i, int j) {
        auto p = std::minmax(pc.corners[i], pc.corners[j]);
        auto it = edges.find({p.first, p.second});
        if (it == edges.end())
            throw std::invalid_argument("pentagon side [" + std::to_string(p.first) + "," +
                                        std::to_string(p.second) +
                                        "] is not labeled by any triangle");
        return it->second;
    };
    PentagonLabels L;
    L.corners = pc.corners;
    L.d = side(0, 1);
    L.c = side(1, 2);
    L.b = side(2, 3);
    L.a = side(3, 4);
    L.e = side(0, 4);
    L.t = pc.diagonals[0];
    L.s = pc.diagonals[1];
    L.p = pc.diagonals[2];
    L.r = pc.diagonals[3];
    L.q = pc.diagonals[4];
    return L;
}

inline std::string path_names(const PentagonResult& r, const std::vector<int>& path) {
    std::string out;
    for (int i : path)
        out += (out.empty() ? "" : ">") + r.states[i].name;
    return out;
}

}  // namespace cli_detail

/// Runs one CLI invocation given argv[1..]; never throws.
inline CliResult run_cli(const std::vector<std::string>& args) {
    CliResult result;
    cli_detail::Options opt;
    try {
        opt = cli_detail::parse_options(args);
    } catch (const std::exception& e) {
        result.exit_code = 2;
        result.error = std::string("error: ") + e.what() + "\n";
        return result;
    }

    std::ostringstream out;
    out << "COMMAND=" << opt.command << ' ' << cli_detail::basename_of(opt.file);
    for (size_t i = 2; i < args.size(); ++i)
        out << ' ' << args[i];
    out << "\n";

    try {
        std::ifstream in(opt.file);
        if (!in)
            throw std::invalid_argument("cannot open file '" + opt.file + "'");
        std::ostringstream buf;
        buf << in.rdbuf();

        ComplexDocument doc;
        try {
            doc = parse_document(buf.str());
        } catch (const ParseError& e) {
            throw std::invalid_argument(cli_detail::basename_of(opt.file) + ": " + e.what());
        }

        bool ok = true;

        if (opt.command == "homology") {
            GluedComplex glued = build_glued_complex(doc.surfaces);
            ChainComplexData data = complex_data(glued);
            out << "H0=" << format_group(homology_group(data, 0, opt.coeff))
                << " H1=" << format_group(homology_group(data, 1, opt.coeff))
                << " H2=" << format_group(homology_group(data, 2, opt.coeff)) << "\n";
        } else if (opt.command == "boundary") {
            SymbolChain total(opt.coeff, 1);
            for (const auto& s : doc.surfaces) {
                SymbolChain b = formal_total_boundary(opt.coeff, s);
                out << "BOUNDARY[" << s.name << "]=" << format_chain(b) << "\n";
                total = chain_add(total, b);
            }
            out << "TOTAL=" << format_chain(total) << "\n";
        } else if (opt.command == "dual") {
            LabeledSurface u = cli_detail::union_surface(doc);
            DualComplex d = poincare_dual(u);
            auto cell = [&](int vertex) { return u.triangles[d.vertices[vertex].triangle].cell_name(); };
            out << "VERTICES=" << d.vertices.size() << "\n";
            out << "EDGES=" << d.edges.size() << "\n";
            out << "INTERIOR_EDGES=" << d.interior_edge_count() << "\n";
            out << "OPEN_EDGES=" << d.half_edge_count() << "\n";
            for (int v = 0; v < static_cast<int>(d.vertices.size()); ++v)
                out << "DUAL_VERTEX=" << cell(v) << "->" << d.vertices[v].state_space << "\n";
            for (const auto& e : d.edges) {
                out << "DUAL_EDGE=" << e.label << ":" << cell(e.vertex_a) << "~";
                if (e.interior)
                    out << cell(e.vertex_b);
                else
                    out << "open";
                out << "\n";
            }
            out << "TRIVALENT=true\n";
        } else if (opt.command == "move22") {
            if (doc.surfaces.size() < 2)
                throw std::invalid_argument("move22 needs two surfaces (left and right)");
            MoveCertificate cert = check_move_22(doc.surfaces[0], doc.surfaces[1], opt.coeff);
            out << serialize_certificate(cert);
            ok = cert.valid;
        } else if (opt.command == "move13") {
            const LabeledSurface* unsplit = nullptr;
            const LabeledSurface* split = nullptr;
            for (const auto& s : doc.surfaces) {
                if (s.triangles.size() == 1 && !unsplit)
                    unsplit = &s;
                else if (s.triangles.size() == 3 && !split)
                    split = &s;
            }
            if (!unsplit || !split)
                throw std::invalid_argument(
                    "move13 needs a one-triangle surface and a three-triangle surface");
            MoveCertificate cert =
                check_move_13(unsplit->triangles[0], *split, opt.coeff);
            out << serialize_certificate(cert);
            ok = cert.valid;
        } else if (opt.command == "cylinder") {
            if (doc.surfaces.empty())
                throw std::invalid_argument("cylinder needs a surface");
            MoveCertificate cert = check_cylinder(doc.surfaces[0], opt.coeff);
            out << serialize_certificate(cert);
            ok = cert.valid;
        } else if (opt.command == "pentagon") {
            PentagonLabels L = cli_detail::pentagon_labels_from_document(doc);
            PentagonResult r = check_pentagon(L, opt.coeff);
            out << "MOVE=" << to_string(r.certificate.kind) << "\n";
            std::string states;
            for (const auto& st : r.states)
                states += (states.empty() ? "" : "|") + st.name;
            out << "STATES=" << states << "\n";
            out << "LEFT_PATH=" << cli_detail::path_names(r, r.left_path) << "\n";
            out << "RIGHT_PATH=" << cli_detail::path_names(r, r.right_path) << "\n";
            out << "LEFT_STEPS=" << r.left_steps.size() << "\n";
            out << "RIGHT_STEPS=" << r.right_steps.size() << "\n";
            out << "LEFT=" << r.left_composition << "\n";
            out << "RIGHT=" << r.right_composition << "\n";
            out << "DUAL_BOUNDARY=" << format_chain(r.certificate.total_dual_boundary, true)
                << "\n";
            out << "COEFF_INDEX=" << r.certificate.coefficient_index_count << "\n";
            if (!r.certificate.note.empty())
                out << "NOTE=" << r.certificate.note << "\n";
            out << "VALID=" << (r.certificate.valid ? "true" : "false") << "\n";
            ok = r.certificate.valid;
        } else if (opt.command == "ainf") {
            AInfinityData data = build_from_surface(doc.surfaces, doc.squares, doc.pentagons,
                                                    opt.coeff, opt.convention);
            apply_mtable(data, doc.mtable);
            ProbeSpec probe =
                resolve_probe(data, doc.surfaces, doc.squares, doc.pentagons, opt.probe);
            auto [left, right] = relation_sides(data, probe.n, probe.input, probe.test_chain);
            Int residual = data.group.reduce(left - right);
            bool m1m1 = m1_squared_is_zero(data);
            out << "CONVENTION=" << to_string(opt.convention) << "\n";
            out << "PROBE=n" << probe.n << "\n";
            out << "INPUT=" << probe.description << "\n";
            out << "LEFT=" << left.str() << " RIGHT=" << right.str()
                << " RESIDUAL=" << residual.str() << "\n";
            out << "M1M1=" << (m1m1 ? "0" : "nonzero") << "\n";
            out << "DEGREE_WARNINGS=" << degree_audit(data).size() << "\n";
            ok = (residual == 0) && m1m1;
        } else {
            throw std::invalid_argument("unknown command '" + opt.command + "'\n" +
                                        cli_detail::usage());
        }

        result.report = out.str();
        result.exit_code = ok ? 0 : 1;
    } catch (const std::exception& e) {
        result.report = out.str();
        result.exit_code = 2;
        result.error = std::string("error: ") + e.what() + "\n";
    }
    return result;
}

}  // namespace pachner
