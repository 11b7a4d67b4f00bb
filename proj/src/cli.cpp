#include "trideg/cli.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>

#include "trideg/json_io.hpp"

namespace trideg {

namespace {

constexpr const char* kVersion = "0.1.0";

ProjPoint parse_point_csv(const std::string& csv) {
    QVector coords;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) coords.push_back(rational_from_string(item));
    if (coords.empty()) throw ParseError("empty point");
    return ProjPoint(std::move(coords));
}

// "--hint z:0,1,1,0" -> (Axis::Z, (0,1,1,0))
Hint parse_hint(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError("hint must look like axis:c1,c2,... ; got '" + text + "'");
    return {axis_from_name(text.substr(0, colon)), parse_point_csv(text.substr(colon + 1))};
}

void print_text_report(const AnalysisReport& rep, std::ostream& out) {
    out << "format: (" << rep.p << "," << rep.q << "," << rep.r << ")  [axis order ";
    for (Axis a : rep.axis_order) out << axis_name(a);
    out << "]\n";
    if (rep.det_zero) out << "hyperdeterminant: " << (*rep.det_zero ? "zero" : "nonzero") << "\n";
    out << "degenerate: " << to_string(rep.degenerate.status) << " (" << rep.degenerate.reason << ")\n";
    if (rep.degenerate.certificate) {
        out << "kernel triple: x=" << rep.degenerate.certificate->p.str()
            << " y=" << rep.degenerate.certificate->q.str()
            << " z=" << rep.degenerate.certificate->t.str() << "\n";
    }
    out << "concise: " << (rep.concise ? "yes" : "no") << "\n";
    out << "essential format: (" << rep.fess.p << "," << rep.fess.q << "," << rep.fess.r << ")\n";
    if (rep.tensor_rank) out << "tensor rank: " << *rep.tensor_rank << "\n";
    if (rep.canonical_type) out << "canonical type: " << *rep.canonical_type << "\n";
    for (const std::string& line : rep.branch_trace) out << "  " << line << "\n";
}

int cmd_analyze(const std::string& path, const std::vector<std::string>& hint_args, bool text,
                std::ostream& out) {
    const TensorDocument doc = load_tensor_document(path);
    std::vector<Hint> hints = doc.hints; // file-embedded hints first, then flags
    for (const std::string& h : hint_args) hints.push_back(parse_hint(h));
    const AnalysisReport rep = classify(doc.tensor, hints);
    if (text) {
        print_text_report(rep, out);
    } else {
        Json j = report_to_json(rep);
        Json full;
        full["tool"] = "trideg";
        full["version"] = kVersion;
        for (auto& [k, v] : j.items()) full[k] = v;
        out << full.dump(2) << "\n";
    }
    return 0;
}

int cmd_scheme(const std::string& path, const std::string& axis_arg, const std::string& point_arg,
               std::ostream& out) {
    const TensorDocument doc = load_tensor_document(path);
    const Axis axis = axis_from_name(axis_arg);
    const ProjPoint pt = parse_point_csv(point_arg);
    const DetScheme s = scheme_of(doc.tensor, axis);
    const PointDiagnosis d = diagnose_point(s, pt);
    out << diagnosis_to_json(s, pt, axis, d).dump(2) << "\n";
    return 0;
}

int cmd_hyperdet(const std::string& path, std::ostream& out) {
    const TensorDocument doc = load_tensor_document(path);
    const Tensor3& a = doc.tensor;
    if (a.is_zero()) throw ZeroTensorError();
    if (a.p() == 2 && a.q() == 2 && a.r() == 2) {
        out << to_string(hyperdet_222(a)) << "\n";
        return 0;
    }
    if (a.p() == 2 && a.q() == a.r() && a.q() >= 2) {
        out << to_string(schlafli_binary(a).value) << "\n";
        return 0;
    }
    std::ostringstream os;
    os << "no hyperdeterminant route for format (" << a.p() << "," << a.q() << "," << a.r()
       << "): the hyperdeterminant is defined only when the sorted format satisfies r <= p+q-1, "
          "and this tool evaluates it only for (2,2,2) and (2,q,q)";
    throw FormatError(os.str());
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact analysis of (p,q,r) hypermatrices over the rationals"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string path, axis_arg, point_arg;
    std::vector<std::string> hint_args;
    bool text = false, json_flag = false;

    CLI::App* analyze = app.add_subcommand(
        "analyze", "degeneracy, conciseness, essential format and tensor rank of a tensor");
    analyze->add_option("path", path, "tensor document (JSON)")->required();
    analyze->add_option("--hint", hint_args, "scheme point hint, axis:c1,c2,... (repeatable)");
    analyze->add_flag("--text", text, "human-readable output");
    analyze->add_flag("--json", json_flag, "JSON output (default)");

    CLI::App* scheme = app.add_subcommand(
        "scheme", "diagnose a point on the determinantal scheme along one axis");
    scheme->add_option("path", path, "tensor document (JSON)")->required();
    scheme->add_option("--axis", axis_arg, "x, y or z")->required();
    scheme->add_option("--point", point_arg, "comma-separated coordinates")->required();

    CLI::App* hyperdet = app.add_subcommand(
        "hyperdet", "hyperdeterminant of a (2,2,2) tensor, or the discriminant route for (2,q,q)");
    hyperdet->add_option("path", path, "tensor document (JSON)")->required();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help / --version
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(path, hint_args, text && !json_flag, out);
        if (scheme->parsed()) return cmd_scheme(path, axis_arg, point_arg, out);
        return cmd_hyperdet(path, out);
    } catch (const ZeroTensorError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const FormatError& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace trideg
