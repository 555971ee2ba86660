// torocob command line: validation, local groups, orbifold construction,
// cobordism certificates, relations, equivalence and certificate
// verification over the JSON schema. Exit codes: 0 success/valid, 1
// mathematically invalid input, 2 parse or schema error, 3 internal error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <torocob/torocob.hpp>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitSchema = 2;
constexpr int kExitInternal = 3;

struct Options {
    std::vector<std::string> inputs;
    std::string output;
    std::string bundle; // empty = use the file's flag
    bool emit_report = false;
    bool corpus_check = false;
    bool inject_fault = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw torocob::ParseError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const Options& opt, const torocob::Json& j) {
    std::string bytes = torocob::canonical_dump(j);
    if (!opt.output.empty()) {
        std::ofstream out(opt.output, std::ios::binary);
        if (!out) throw torocob::ParseError("cannot open output file: " + opt.output);
        out << bytes;
    } else {
        std::cout << bytes;
    }
}

torocob::Json load_input(const Options& opt, std::size_t idx) {
    if (idx >= opt.inputs.size()) throw torocob::SchemaError("missing input file");
    std::string bytes = read_file(opt.inputs[idx]);
    torocob::Json j = torocob::load_root(bytes);
    if (opt.corpus_check && torocob::canonical_dump(j) != bytes)
        throw torocob::SchemaError("input is not in canonical form: " + opt.inputs[idx]);
    return j;
}

torocob::BundleFlag bundle_override(const Options& opt, torocob::BundleFlag from_file) {
    if (opt.bundle.empty()) return from_file;
    if (opt.bundle == "trivial") return torocob::BundleFlag::Trivial;
    if (opt.bundle == "abstract") return torocob::BundleFlag::Abstract;
    throw torocob::SchemaError("--bundle must be trivial or abstract");
}

torocob::OrbifoldData load_orbifold_data(const Options& opt, std::size_t idx) {
    torocob::OrbifoldData d = torocob::odata_from_json(load_input(opt, idx));
    d.bundle = bundle_override(opt, d.bundle);
    return d;
}

int run_validate(const Options& opt) {
    using namespace torocob;
    Json j = load_input(opt, 0);
    std::string kind = root_kind(j);
    Json out;
    bool valid = false;
    if (kind == "complex") {
        CornersComplex c = complex_from_json(j);
        ValidityReport nice = validate_nice(c);
        out = report_to_json(nice);
        valid = nice.valid();
    } else if (kind == "orbifold-data") {
        OrbifoldData d = odata_from_json(j);
        ValidityReport rep = validate_nice(d.complex);
        Json characteristic;
        if (rep.valid()) {
            rep.merge(validate_r_characteristic(d.complex, d.charfn));
            characteristic = report_to_json(validate_characteristic(d.complex, d.charfn));
        }
        out = report_to_json(rep);
        if (!characteristic.is_null()) out["characteristic"] = characteristic;
        valid = rep.valid();
    } else {
        throw SchemaError("validate expects a complex or orbifold-data file");
    }
    out = with_schema(out);
    emit(opt, out);
    return valid ? kExitOk : kExitInvalid;
}

int run_local_groups(const Options& opt) {
    using namespace torocob;
    OrbifoldData d = load_orbifold_data(opt, 0);
    ValidityReport rep = validate_nice(d.complex);
    rep.merge(validate_r_characteristic(d.complex, d.charfn));
    if (!rep.valid()) throw InvalidCharFunctionError("local-groups", rep);
    StrataResult sr = singular_strata(d.complex, d.charfn);
    Json out;
    out["kind"] = "strata";
    out["smooth"] = sr.smooth;
    Json strata = Json::array();
    for (const auto& s : sr.strata) strata.push_back(stratum_to_json(s));
    out["strata"] = strata;
    emit(opt, with_schema(out));
    return kExitOk;
}

int run_construct(const Options& opt) {
    using namespace torocob;
    OrbifoldData d = load_orbifold_data(opt, 0);
    OrbifoldDescriptor desc = make_orbifold(d.complex, d.charfn, d.bundle);
    Json out = descriptor_to_json(desc);
    if (opt.emit_report) {
        ValidityReport rep = validate_nice(d.complex);
        rep.merge(validate_r_characteristic(d.complex, d.charfn));
        out["report"] = report_to_json(rep);
    }
    emit(opt, with_schema(out));
    return kExitOk;
}

int run_cobordism(const Options& opt, bool fixed_point_free) {
    using namespace torocob;
    OrbifoldData d = load_orbifold_data(opt, 0);
    CobordismCertificate cert = fixed_point_free
                                    ? null_cobordism(d.complex, d.charfn, d.bundle)
                                    : cobordism_to_projective_spaces(d.complex, d.charfn, d.bundle);
    Json out = certificate_to_json(cert);
    if (opt.emit_report) out["report"] = report_to_json(verify_certificate(cert));
    emit(opt, with_schema(out));
    return kExitOk;
}

int run_vertex_cut_relation(const Options& opt) {
    using namespace torocob;
    CornersComplex p = complex_from_json(load_input(opt, 0));
    CobordismCertificate cert = vertex_cut_relation_certificate(p);
    emit(opt, with_schema(certificate_to_json(cert)));
    return kExitOk;
}

int run_boundary(const Options& opt) {
    using namespace torocob;
    MarkedData d = marked_data_from_json(load_input(opt, 0));
    BundleFlag flag = bundle_override(opt, d.bundle);
    std::vector<OrbifoldDescriptor> pieces = boundary(d.marked, d.rs, flag);
    Json out;
    out["kind"] = "boundary";
    Json arr = Json::array();
    for (const auto& p : pieces) arr.push_back(descriptor_to_json(p));
    out["pieces"] = arr;
    emit(opt, with_schema(out));
    return kExitOk;
}

int run_equiv(const Options& opt) {
    using namespace torocob;
    OrbifoldData d1 = load_orbifold_data(opt, 0);
    OrbifoldData d2 = load_orbifold_data(opt, 1);
    auto refut = invariant_screen(d1, d2);
    if (refut) {
        emit(opt, with_schema(refutation_to_json(*refut)));
        return kExitInvalid;
    }
    auto witness = data_equivalent(d1, d2);
    if (!witness) {
        emit(opt, with_schema(refutation_to_json({"search-exhausted",
                                                  "no facet bijection admits a unimodular delta"})));
        return kExitInvalid;
    }
    emit(opt, with_schema(witness_to_json(*witness)));
    return kExitOk;
}

int run_decompose(const Options& opt) {
    using namespace torocob;
    OrbifoldData d = load_orbifold_data(opt, 0);
    OrbifoldDescriptor desc = make_orbifold(d.complex, d.charfn, d.bundle);
    ConnectedSumDecomposition dec = decompose_2d(desc);
    Json out;
    out["kind"] = "decomposition";
    Json arr = Json::array();
    for (const auto& s : dec.summands) {
        Json js;
        js["summand-kind"] = to_string(s.kind);
        js["descriptor"] = descriptor_to_json(s.descriptor);
        arr.push_back(js);
    }
    out["summands"] = arr;
    emit(opt, with_schema(out));
    return kExitOk;
}

int run_hirzebruch(const Options& opt) {
    using namespace torocob;
    Fan4 fan = fan4_from_json(load_input(opt, 0));
    HirzebruchResult r = hirzebruch_bounds(fan.v1, fan.v2, fan.v3, fan.v4);
    Json out;
    out["kind"] = "hirzebruch";
    out["verdict"] = r.verdict == HirzebruchVerdict::Bounds ? "bounds" : "unknown";
    Json conds = Json::array();
    for (const auto& c : r.conditions) conds.push_back(c);
    out["conditions"] = conds;
    out["smooth"] = r.smooth;
    out["route"] = r.route;
    emit(opt, with_schema(out));
    return kExitOk;
}

int run_lens(const Options& opt) {
    using namespace torocob;
    IntervalData iv = interval_from_json(load_input(opt, 0));
    LensDescriptor lens = lens_from_interval(iv.u, iv.v);
    Json out;
    out["kind"] = "lens";
    out["p"] = int_to_json(lens.p);
    out["q"] = int_to_json(lens.q);
    emit(opt, with_schema(out));
    return kExitOk;
}

int run_verify(const Options& opt) {
    using namespace torocob;
    CobordismCertificate cert = certificate_from_json(load_input(opt, 0));
    ValidityReport rep = verify_certificate(cert);
    emit(opt, with_schema(report_to_json(rep)));
    return rep.valid() ? kExitOk : kExitInvalid;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"torocob: torus-orbifold combinatorics and cobordism certificates"};
    app.require_subcommand(1);

    Options opt;
    std::string command;
    auto add_common = [&](CLI::App* sub, std::size_t ninputs) {
        sub->add_option("inputs", opt.inputs, "input JSON file(s)")->expected(0, (int)ninputs);
        sub->add_option("--input", opt.inputs, "input JSON file(s)");
        sub->add_option("--output", opt.output, "write the result here instead of stdout");
        sub->add_option("--bundle", opt.bundle, "override the bundle flag (trivial|abstract)");
        sub->add_flag("--emit-report", opt.emit_report, "include reports where applicable");
        sub->add_flag("--corpus-check", opt.corpus_check, "require inputs to be in canonical form");
        sub->add_flag("--inject-fault", opt.inject_fault,
                      "test instrumentation: fail internally after parsing");
        sub->callback([&, sub] { command = sub->get_name(); });
    };

    add_common(app.add_subcommand("validate", "validate a complex or orbifold data"), 1);
    add_common(app.add_subcommand("local-groups", "face strata and local groups"), 1);
    add_common(app.add_subcommand("construct", "derive the orbifold descriptor"), 1);
    add_common(app.add_subcommand("cobordism", "certificate bounding the input by simplex pieces"), 1);
    add_common(app.add_subcommand("null-cobordism", "certificate for a fixed-point-free input"), 1);
    add_common(app.add_subcommand("vertex-cut-relation", "relation from the vertex cut of a complex"), 1);
    add_common(app.add_subcommand("boundary", "boundary pieces of marked data"), 1);
    add_common(app.add_subcommand("equiv", "equivalence witness or refutation for two data sets"), 2);
    add_common(app.add_subcommand("decompose-2d", "connected-sum decomposition over a 2D base"), 1);
    add_common(app.add_subcommand("hirzebruch", "boundedness check for a 4-ray fan"), 1);
    add_common(app.add_subcommand("lens", "lens-space normal form of interval data"), 1);
    add_common(app.add_subcommand("verify", "re-check a cobordism certificate"), 1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitSchema : kExitOk;
    }

    try {
        if (opt.inject_fault) {
            // exercise the internal-failure path end to end
            if (!opt.inputs.empty()) (void)read_file(opt.inputs[0]);
            throw torocob::InternalError("injected fault (test instrumentation)");
        }
        if (command == "validate") return run_validate(opt);
        if (command == "local-groups") return run_local_groups(opt);
        if (command == "construct") return run_construct(opt);
        if (command == "cobordism") return run_cobordism(opt, false);
        if (command == "null-cobordism") return run_cobordism(opt, true);
        if (command == "vertex-cut-relation") return run_vertex_cut_relation(opt);
        if (command == "boundary") return run_boundary(opt);
        if (command == "equiv") return run_equiv(opt);
        if (command == "decompose-2d") return run_decompose(opt);
        if (command == "hirzebruch") return run_hirzebruch(opt);
        if (command == "lens") return run_lens(opt);
        if (command == "verify") return run_verify(opt);
        std::cerr << "unknown command\n";
        return kExitSchema;
    } catch (const torocob::InvalidCharFunctionError& e) {
        torocob::Json out = torocob::with_schema(torocob::report_to_json(e.report));
        out["error"] = e.what();
        try {
            emit(opt, out);
        } catch (...) {
            std::cerr << e.what() << "\n";
        }
        return kExitInvalid;
    } catch (const torocob::SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return kExitSchema;
    } catch (const torocob::DomainError& e) {
        torocob::Json out;
        out["kind"] = "error";
        out["error"] = e.what();
        try {
            emit(opt, torocob::with_schema(out));
        } catch (...) {
            std::cerr << e.what() << "\n";
        }
        return kExitInvalid;
    } catch (const torocob::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
