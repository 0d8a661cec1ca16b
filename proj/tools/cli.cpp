#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "zariski/arrangement.hpp"
#include "zariski/classify.hpp"
#include "zariski/error.hpp"
#include "zariski/tangency.hpp"
#include "zariski/text.hpp"
#include "zariski/verify.hpp"

namespace zariski::cli {

namespace {

using json = nlohmann::ordered_json;

// Error with an optional location inside an input document.
struct InputError : Error {
    InputError(ErrorCode code, const std::string& message, std::string field, std::optional<std::size_t> line = {},
               std::optional<std::size_t> column = {})
        : Error(code, message), field(std::move(field)), line(line), column(column) {}

    std::string field;
    std::optional<std::size_t> line;
    std::optional<std::size_t> column;
};

struct Options {
    std::string curve;
    std::string point;
    std::uint64_t n = 0;
    std::uint64_t seed = 1;
    std::uint64_t trials = 100;
    std::string input;
    std::string output;
};

std::string torsion_name(std::size_t index) { return "T" + std::to_string(index + 1); }

json line_json(const Line& l) { return json::array({l.u().value(), l.v().value(), l.w().value()}); }

json pair_json(IndexPair pair) { return json::array({pair.first(), pair.second()}); }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(ErrorCode::BadInput, "cannot open input file '" + path + "'", "input");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_document(const std::string& path) {
    const auto content = read_file(path);
    try {
        return json::parse(content);
    } catch (const json::parse_error& e) {
        // e.byte is 1-based and points just past the offending character.
        const std::size_t offset = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, content.size());
        std::size_t line = 1;
        std::size_t column = 1;
        for (std::size_t i = 0; i < offset; ++i) {
            if (content[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw InputError(ErrorCode::BadInput, "malformed JSON: " + std::string(e.what()), "", line, column);
    }
}

const json& require_field(const json& doc, const std::string& key, const std::string& path) {
    if (!doc.is_object() || !doc.contains(key)) {
        throw InputError(ErrorCode::BadInput, "missing field '" + key + "'", path.empty() ? key : path + "." + key);
    }
    return doc.at(key);
}

std::string require_string(const json& value, const std::string& field) {
    if (!value.is_string()) throw InputError(ErrorCode::BadInput, "expected a string", field);
    return value.get<std::string>();
}

template <typename Fn>
auto at_field(const std::string& field, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const InputError&) {
        throw;
    } catch (const Error& e) {
        throw InputError(e.code(), e.what(), field);
    }
}

struct ArrangementInput {
    Curve curve;
    std::vector<MemberSpec> members;
};

ArrangementInput parse_arrangement(const json& doc) {
    if (!doc.is_object()) throw InputError(ErrorCode::BadInput, "arrangement document must be an object", "");
    const auto curve_text = require_string(require_field(doc, "curve", ""), "curve");
    const auto curve = at_field("curve", [&] { return text::parse_curve(curve_text); });
    const auto& members = require_field(doc, "members", "");
    if (!members.is_array() || members.empty()) {
        throw InputError(ErrorCode::BadInput, "expected a non-empty array", "members");
    }
    std::vector<MemberSpec> specs;
    for (std::size_t i = 0; i < members.size(); ++i) {
        const std::string path = "members[" + std::to_string(i) + "]";
        const auto& m = members[i];
        if (!m.is_object()) throw InputError(ErrorCode::BadInput, "expected an object", path);
        const auto point_text = require_string(require_field(m, "P", path), path + ".P");
        const auto base = at_field(path + ".P", [&] { return text::parse_point(curve, point_text); });
        const auto& pair = require_field(m, "pair", path);
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer()) {
            throw InputError(ErrorCode::BadInput, "expected an array of two integers", path + ".pair");
        }
        const auto index_pair = at_field(path + ".pair", [&] {
            return IndexPair(pair[0].get<int>(), pair[1].get<int>());
        });
        specs.push_back(MemberSpec{base, index_pair});
    }
    return ArrangementInput{curve, specs};
}

std::vector<CurvePoint> parse_points(const Curve& curve, const json& doc) {
    const json* list = &doc;
    std::string prefix;
    if (doc.is_object()) {
        list = &require_field(doc, "points", "");
        prefix = "points";
    }
    if (!list->is_array()) throw InputError(ErrorCode::BadInput, "expected an array of points", prefix);
    std::vector<CurvePoint> points;
    for (std::size_t i = 0; i < list->size(); ++i) {
        const std::string path = prefix + "[" + std::to_string(i) + "]";
        const auto s = require_string((*list)[i], path);
        points.push_back(at_field(path, [&] { return text::parse_point(curve, s); }));
    }
    return points;
}

json arrangement_json(const Arrangement& arrangement) {
    json members = json::array();
    for (const auto& m : arrangement.members()) {
        members.push_back(json{{"P", text::format_point(m.fan.base)}, {"pair", pair_json(m.pair)}});
    }
    return members;
}

json partition_json(const Partition3& p) { return json::array({p.m1, p.m2, p.m3}); }

void cmd_torsion(const Options& opt, std::ostream& out) {
    const auto curve = text::parse_curve(opt.curve);
    const auto t = curve.two_torsion();
    json doc{{"command", "torsion"}, {"curve", text::format_curve(curve)}};
    for (std::size_t i = 0; i < 3; ++i) doc[torsion_name(i)] = text::format_point(t[i]);
    out << doc.dump() << "\n";
}

void cmd_tangents(const Options& opt, std::ostream& out) {
    const auto curve = text::parse_curve(opt.curve);
    const auto p = text::parse_point(curve, opt.point);
    const auto fan = tangent_fan(curve, p);
    json torsion = json::array();
    for (const auto& t : fan.torsion.points) torsion.push_back(text::format_point(t));
    json lines = json::array();
    for (int i = 1; i <= 4; ++i) {
        lines.push_back(json{{"index", i}, {"Q", text::format_point(fan.tangent_point(i))}, {"line", line_json(fan.line(i))}});
    }
    json pairs = json::array();
    for (const auto& pair : IndexPair::all()) {
        const auto idx = associated_torsion_index(fan, pair);
        pairs.push_back(json{{"pair", pair_json(pair)},
                             {"torsion", torsion_name(idx)},
                             {"point", text::format_point(fan.torsion[idx])}});
    }
    out << json{{"command", "tangents"},
                {"curve", text::format_curve(curve)},
                {"P", text::format_point(p)},
                {"torsion", torsion},
                {"fan", lines},
                {"pairs", pairs}}
               .dump()
        << "\n";
}

void cmd_partition(const Options& opt, std::ostream& out) {
    if (opt.input.empty()) throw InputError(ErrorCode::BadInput, "--input is required", "input");
    const auto parsed = parse_arrangement(parse_document(opt.input));
    const auto arrangement = build_arrangement(parsed.curve, parsed.members);
    const auto n = arrangement.size();
    json phis = json::array();
    for (std::size_t i = 0; i < n; ++i) phis.push_back(torsion_name(phi_index(arrangement, i)));
    json matrix = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                row.push_back(nullptr);
            } else {
                row.push_back(splitting_predicate(arrangement, i, j));
            }
        }
        matrix.push_back(row);
    }
    const auto fibers = torsion_fibers(arrangement);
    out << json{{"command", "partition"},
                {"curve", text::format_curve(arrangement.curve())},
                {"n", n},
                {"partition", partition_json(partition_invariant(arrangement))},
                {"fibers", json::array({fibers[0], fibers[1], fibers[2]})},
                {"phi", phis},
                {"splitting", matrix}}
               .dump()
        << "\n";
}

void cmd_yn(const Options& opt, std::ostream& out) {
    out << json{{"command", "yn"}, {"n", opt.n}, {"y", y(opt.n)}}.dump() << "\n";
}

void cmd_enumerate(const Options& opt, std::ostream& out) {
    for (const auto& p : enumerate_partitions(opt.n).partitions) {
        out << json{{"m1", p.m1}, {"m2", p.m2}, {"m3", p.m3}}.dump() << "\n";
    }
}

void cmd_realize(const Options& opt, std::ostream& out) {
    const auto curve = text::parse_curve(opt.curve);
    const auto points = opt.input.empty() ? generic_points(curve, opt.n)
                                          : parse_points(curve, parse_document(opt.input));
    const auto nple = zariski_nple(curve, points, opt.n);
    for (std::size_t k = 0; k < nple.size(); ++k) {
        for (std::size_t l = 0; l < k; ++l) {
            if (distinguish(nple[k], nple[l]) != Distinction::Distinguished) {
                throw Error(ErrorCode::DegenerateInput, "representatives " + std::to_string(l) + " and " +
                                                            std::to_string(k) + " share a partition");
            }
        }
    }
    for (std::size_t k = 0; k < nple.size(); ++k) {
        out << json{{"command", "realize"},
                    {"index", k},
                    {"curve", text::format_curve(curve)},
                    {"partition", partition_json(partition_invariant(nple[k]))},
                    {"members", arrangement_json(nple[k])}}
                   .dump()
            << "\n";
    }
}

bool cmd_verify(const Options& opt, std::ostream& out) {
    const auto report = verify::run(opt.seed, opt.trials);
    json props = json::array();
    for (const auto& p : report.properties) {
        json entry{{"name", p.name}, {"checks", p.checks}, {"failures", p.failures}};
        if (!p.first_failure.empty()) entry["first_failure"] = p.first_failure;
        props.push_back(entry);
    }
    out << json{{"command", "verify"},
                {"seed", report.seed},
                {"trials", report.trials},
                {"properties", props},
                {"status", report.passed() ? "all properties passed" : "property failures"}}
               .dump()
        << "\n";
    return report.passed();
}

void cmd_scan_points(const Options& opt, std::ostream& out) {
    const auto curve = text::parse_curve(opt.curve);
    json points = json::array();
    for (const auto& p : admissible_points(curve)) points.push_back(text::format_point(p));
    out << json{{"command", "scan-points"}, {"curve", text::format_curve(curve)}, {"count", points.size()}, {"points", points}}
               .dump()
        << "\n";
}

void emit_error(std::ostream& out, const Error& e) {
    json record{{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
    if (const auto* in = dynamic_cast<const InputError*>(&e)) {
        if (!in->field.empty()) record["field"] = in->field;
        if (in->line) record["line"] = *in->line;
        if (in->column) record["column"] = *in->column;
    }
    if (const auto* cl = dynamic_cast<const ConcurrentLinesError*>(&e)) {
        json lines = json::array();
        for (const auto& r : cl->lines()) lines.push_back(json{{"member", r.member}, {"line", r.line}});
        record["lines"] = lines;
    }
    out << record.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
    CLI::App app{"Two-torsion classification of tangent-line arrangements on smooth cubics"};
    app.require_subcommand(1);
    Options opt;

    auto* torsion = app.add_subcommand("torsion", "List the nontrivial 2-torsion points T1, T2, T3");
    torsion->add_option("--curve", opt.curve, "Curve as p:a:b")->required();

    auto* tangents = app.add_subcommand("tangents", "Labeled tangent fan through a base point");
    tangents->add_option("--curve", opt.curve, "Curve as p:a:b")->required();
    tangents->add_option("--point", opt.point, "Base point as x,y")->required();

    auto* partition = app.add_subcommand("partition", "3-partition and splitting matrix of an arrangement file");
    partition->add_option("--input", opt.input, "Arrangement JSON file")->required();

    auto* yn = app.add_subcommand("yn", "Number of 3-partitions of n (closed form)");
    yn->add_option("--n", opt.n, "n >= 0")->required();

    auto* enumerate = app.add_subcommand("enumerate", "List every 3-partition of n, one per line");
    enumerate->add_option("--n", opt.n, "n >= 0")->required();

    auto* realize = app.add_subcommand("realize", "One arrangement per 3-partition of n");
    realize->add_option("--curve", opt.curve, "Curve as p:a:b")->required();
    realize->add_option("--n", opt.n, "Number of base points")->required();
    realize->add_option("--input", opt.input, "JSON file with base points; searched for when omitted");

    auto* verify = app.add_subcommand("verify", "Run the randomized property suite");
    verify->add_option("--seed", opt.seed, "RNG seed");
    verify->add_option("--trials", opt.trials, "Trials per property");

    auto* scan = app.add_subcommand("scan-points", "All admissible base points on a curve");
    scan->add_option("--curve", opt.curve, "Curve as p:a:b")->required();

    for (auto* sub : app.get_subcommands({})) sub->add_option("--output", opt.output, "Write results to FILE");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        emit_error(out, Error(ErrorCode::BadInput, e.what()));
        return 2;
    }

    std::ostringstream result;
    bool ok = true;
    try {
        if (*torsion) cmd_torsion(opt, result);
        if (*tangents) cmd_tangents(opt, result);
        if (*partition) cmd_partition(opt, result);
        if (*yn) cmd_yn(opt, result);
        if (*enumerate) cmd_enumerate(opt, result);
        if (*realize) cmd_realize(opt, result);
        if (*verify) ok = cmd_verify(opt, result);
        if (*scan) cmd_scan_points(opt, result);
    } catch (const Error& e) {
        emit_error(out, e);
        return 1;
    }

    if (opt.output.empty()) {
        out << result.str();
    } else {
        std::ofstream file(opt.output, std::ios::binary);
        if (!file) {
            emit_error(out, Error(ErrorCode::BadInput, "cannot write output file '" + opt.output + "'"));
            return 1;
        }
        file << result.str();
    }
    return ok ? 0 : 1;
}

}  // namespace zariski::cli
