#include "cli.hpp"

#include "hzono/errors.hpp"
#include "hzono/io.hpp"
#include "hzono/oracle.hpp"
#include "hzono/relu_graph.hpp"
#include "hzono/rlt.hpp"
#include "hzono/set_ops.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace hzono::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 20240607;

struct CommonOptions {
    std::string output;
    std::uint64_t seed = kDefaultSeed;
    std::size_t cap = kDefaultMaxBinaryFactors;

    OracleOptions oracle() const
    {
        OracleOptions o;
        o.max_binary = cap;
        return o;
    }
};

// Raised when a command has to stop with a specific exit code.
struct Exit {
    int code;
    std::string message;
};

json parse_json_arg(const std::string& flag, const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(flag + ": " + e.what());
    }
}

Matrix matrix_arg(const std::string& flag, const std::string& text)
{
    return matrix_from_json(parse_json_arg(flag, text));
}

Vector vector_arg(const std::string& flag, const std::string& text)
{
    return vector_from_json(parse_json_arg(flag, text));
}

void emit_json(const std::string& path, const json& j, std::ostream& out)
{
    if (path.empty())
        out << j.dump(1) << "\n";
    else
        write_json_file(path, j);
}

void expect_inputs(const std::string& op, const std::vector<std::string>& inputs, std::size_t n)
{
    if (inputs.size() != n)
        throw Exit{kParseError, op + " expects " + std::to_string(n) + " input file(s)"};
}

FactorForm form_arg(const std::string& text)
{
    if (text == "pm1")
        return FactorForm::PM1;
    if (text == "01" || text == "zo")
        return FactorForm::ZO;
    throw ParseError("--to must be pm1 or 01");
}

std::string format_of(const std::string& path, const std::string& format)
{
    if (!format.empty())
        return format;
    return std::filesystem::path(path).extension() == ".csv" ? "csv" : "json";
}

void emit_polygons(const std::string& path, const std::string& format,
                   const std::vector<TaggedPolygon>& polygons, std::ostream& out)
{
    if (format == "csv") {
        if (path.empty()) {
            write_polygons_csv(out, polygons);
        } else {
            std::ofstream f(path);
            if (!f)
                throw Error("cannot write '" + path + "'");
            write_polygons_csv(f, polygons);
        }
        return;
    }
    json j = json::array();
    for (const auto& tp : polygons)
        j.push_back({{"tag", tp.tag}, {"vertices", to_json(tp.polygon)}});
    emit_json(path, j, out);
}

// -- op -----------------------------------------------------------------------

struct OpOptions {
    std::string name;
    std::vector<std::string> inputs;
    std::string R;
    std::string s;
    std::string a;
    std::optional<double> k;
    std::string point;
    std::string to;
};

int cmd_op(const OpOptions& o, const CommonOptions& common, std::ostream& out, std::ostream& err)
{
    std::vector<HybridZonotope> sets;
    for (const auto& path : o.inputs)
        sets.push_back(read_set_file(path));

    json result;
    ComplexityTuple t;
    auto keep = [&](const HybridZonotope& H) {
        result = to_json(H);
        t = complexity(H);
    };

    if (o.name == "minksum") {
        expect_inputs(o.name, o.inputs, 2);
        keep(minkowski_sum(sets[0], sets[1]));
    } else if (o.name == "map") {
        expect_inputs(o.name, o.inputs, 1);
        if (o.R.empty())
            throw Exit{kParseError, "map needs --R"};
        const Matrix R = matrix_arg("--R", o.R);
        keep(o.s.empty() ? affine_map(sets[0], R) : affine_map(sets[0], R, vector_arg("--s", o.s)));
    } else if (o.name == "cartprod") {
        expect_inputs(o.name, o.inputs, 2);
        keep(cartesian_product(sets[0], sets[1]));
    } else if (o.name == "intersect") {
        expect_inputs(o.name, o.inputs, 2);
        const Matrix R = o.R.empty() ? identity(sets[0].dim()) : matrix_arg("--R", o.R);
        keep(generalized_intersection(sets[0], sets[1], R));
    } else if (o.name == "halfspace") {
        expect_inputs(o.name, o.inputs, 1);
        if (o.a.empty() || !o.k)
            throw Exit{kParseError, "halfspace needs --a and --k"};
        keep(halfspace_intersection(sets[0], vector_arg("--a", o.a), *o.k));
    } else if (o.name == "union") {
        if (sets.empty())
            throw Exit{kParseError, "union expects at least one input file"};
        keep(union_of(sets));
    } else if (o.name == "union-point") {
        expect_inputs(o.name, o.inputs, 1);
        if (o.point.empty())
            throw Exit{kParseError, "union-point needs --point"};
        keep(union_with_point(convert_form(sets[0], FactorForm::ZO), vector_arg("--point", o.point)));
    } else if (o.name == "relax") {
        expect_inputs(o.name, o.inputs, 1);
        const ConstrainedZonotope Z = convex_relaxation(sets[0]);
        result = to_json(Z);
        t = complexity(Z);
    } else if (o.name == "convert-form") {
        expect_inputs(o.name, o.inputs, 1);
        if (o.to.empty())
            throw Exit{kParseError, "convert-form needs --to"};
        keep(convert_form(sets[0], form_arg(o.to)));
    }

    emit_json(common.output, result, out);
    err << "complexity " << to_string(t) << "\n";
    return kOk;
}

// -- rlt ----------------------------------------------------------------------

struct RltOptions {
    std::string input;
    std::optional<int> level;
    bool hull = false;
    std::string report;
};

int cmd_rlt(const RltOptions& o, const CommonOptions& common, std::ostream& out, std::ostream& err)
{
    const HybridZonotope H = read_set_file(o.input);
    if (o.hull == o.level.has_value())
        throw Exit{kParseError, "rlt needs exactly one of --level and --hull"};
    const int d = o.hull ? static_cast<int>(H.n_b()) : *o.level;
    if (!o.hull && (d < 1 || d > H.n_b()))
        throw Exit{kLevelOutOfRange, "level " + std::to_string(d) + " outside [1, " +
                                         std::to_string(H.n_b()) + "]"};

    const HybridZonotope sharpened = d == 0 ? H : rlt_sharpen(H, d);
    const RltComplexityReport report = rlt_report(H, sharpened, d);
    const json set_json =
        o.hull ? to_json(convex_relaxation(sharpened)) : to_json(sharpened);
    const json report_json = to_json(report);

    if (!o.report.empty())
        write_json_file(o.report, report_json);
    if (common.output.empty()) {
        out << json{{"set", set_json}, {"report", report_json}}.dump(1) << "\n";
    } else {
        write_json_file(common.output, set_json);
        if (o.report.empty())
            out << report_json.dump(1) << "\n";
    }
    err << "complexity " << to_string(report.actual) << " (nominal " << to_string(report.nominal)
        << ")\n";
    return kOk;
}

// -- check-sharp --------------------------------------------------------------

struct SharpOptions {
    std::string input;
    std::size_t dirs = 64;
    double tol = kSharpnessTol;
};

int cmd_check_sharp(const SharpOptions& o, const CommonOptions& common, std::ostream& out,
                    std::ostream& err)
{
    const HybridZonotope H = read_set_file(o.input);
    const SharpnessReport report = check_sharpness(H, o.dirs, o.tol, common.seed, common.oracle());
    emit_json(common.output, to_json(report), out);
    err << to_string(report.verdict) << " (max gap " << report.max_gap << ")\n";
    switch (report.verdict) {
    case SharpnessVerdict::Sharp:
        return kOk;
    case SharpnessVerdict::NotSharp:
        return kNotSharp;
    default:
        return kInconclusive;
    }
}

// -- plot2d -------------------------------------------------------------------

struct PlotOptions {
    std::string input;
    std::size_t angles = 360;
    std::string format;
};

std::vector<TaggedPolygon> plot_polygons(const HybridZonotope& H, std::size_t angles,
                                         const OracleOptions& oracle)
{
    std::vector<TaggedPolygon> polygons;
    if (H.n_b() == 0) {
        const ConstrainedZonotope Z = H.as_constrained_zonotope();
        if (!is_empty(Z))
            polygons.push_back({"set", boundary_2d(Z, angles)});
        return polygons;
    }
    const std::vector<Leaf> feasible = feasible_leaves(H, oracle);
    if (feasible.empty())
        return polygons;
    for (std::size_t i = 0; i < feasible.size(); ++i)
        polygons.push_back({"leaf_" + std::to_string(i), boundary_2d(feasible[i].set, angles)});
    polygons.push_back({"relax", boundary_2d(convex_relaxation(H), angles)});
    polygons.push_back({"hull", hull_boundary_2d(H, angles, oracle)});
    return polygons;
}

int cmd_plot2d(const PlotOptions& o, const CommonOptions& common, std::ostream& out,
               std::ostream& err)
{
    const HybridZonotope H = read_set_file(o.input);
    if (H.dim() != 2)
        throw Exit{kNotPlanar, "plot2d needs a set in R^2, got R^" + std::to_string(H.dim())};
    const auto polygons = plot_polygons(H, o.angles, common.oracle());
    if (polygons.empty())
        err << "warning: the set is empty, no polygons written\n";
    emit_polygons(common.output, format_of(common.output, o.format), polygons, out);
    return kOk;
}

// -- demo-levelset ------------------------------------------------------------

struct DemoOptions {
    std::string network;
    double threshold = 0.5;
    std::vector<int> levels;
    std::size_t angles = 720;
    std::size_t dirs = 64;
    double tol = kSharpnessTol;
    std::string plot_dir;
};

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

json sharpness_summary(const SharpnessReport& r)
{
    return {{"verdict", to_string(r.verdict)},
            {"max_gap", std::isfinite(r.max_gap) ? json(r.max_gap) : json(nullptr)}};
}

int cmd_demo_levelset(const DemoOptions& o, const CommonOptions& common, std::ostream& out,
                      std::ostream& err)
{
    const auto start = std::chrono::steady_clock::now();
    const OracleOptions oracle = common.oracle();
    const ReluNetwork net = read_network_file(o.network);
    if (net.input_dim() != 2)
        throw Exit{kNotPlanar, "demo-levelset needs a network with two inputs"};
    const HybridZonotope X = level_set_above(net, o.threshold);

    std::vector<int> levels = o.levels;
    if (levels.empty())
        for (int d = 1; d <= X.n_b(); ++d)
            levels.push_back(d);
    for (int d : levels)
        if (d < 1 || d > X.n_b())
            throw Exit{kLevelOutOfRange, "level " + std::to_string(d) + " outside [1, " +
                                             std::to_string(X.n_b()) + "]"};

    json report;
    report["threshold"] = o.threshold;
    report["angles"] = o.angles;
    report["directions"] = o.dirs;
    report["tol"] = o.tol;
    report["seed"] = common.seed;
    report["complexity"] = to_json(complexity(X));
    const SharpnessReport pre = check_sharpness(X, o.dirs, o.tol, common.seed, oracle);
    report["pre_rlt"] = sharpness_summary(pre);

    std::vector<TaggedPolygon> polygons;
    const bool empty = is_empty(X, oracle);
    report["empty"] = empty;
    report["levels"] = json::array();
    if (empty) {
        err << "warning: the level set is empty\n";
    } else {
        const Polygon hull = hull_boundary_2d(X, o.angles, oracle);
        const double hull_area = polygon_area(hull);
        const Polygon relax = boundary_2d(convex_relaxation(X), o.angles);
        report["hull_area"] = hull_area;
        report["relax_area"] = polygon_area(relax);
        report["relax_ratio"] = hull_area > 0.0 ? json(polygon_area(relax) / hull_area) : json(nullptr);
        polygons.push_back({"hull", hull});
        polygons.push_back({"relax", relax});
        std::size_t i = 0;
        for (const auto& leaf : feasible_leaves(X, oracle))
            polygons.push_back({"leaf_" + std::to_string(i++), boundary_2d(leaf.set, o.angles)});

        std::optional<double> previous;
        bool monotone = true;
        for (int d : levels) {
            const HybridZonotope Y = rlt_sharpen(X, d);
            const SharpnessReport sharp = check_sharpness(Y, o.dirs, o.tol, common.seed, oracle);
            const Polygon poly = boundary_2d(convex_relaxation(Y), o.angles);
            const double area = polygon_area(poly);
            json entry = sharpness_summary(sharp);
            entry["level"] = d;
            entry["rlt"] = to_json(rlt_report(X, Y, d));
            entry["relax_area"] = area;
            if (hull_area > 0.0) {
                const double ratio = area / hull_area;
                entry["area_ratio"] = ratio;
                if (previous && ratio > *previous + 1e-9)
                    monotone = false;
                previous = ratio;
            } else {
                entry["area_ratio"] = nullptr;
            }
            report["levels"].push_back(entry);
            polygons.push_back({"rlt_" + std::to_string(d), poly});
            err << "level " << d << ": " << to_string(sharp.verdict) << ", area ratio "
                << entry["area_ratio"].dump() << "\n";
        }
        report["ratios_monotone"] = monotone;
    }
    report["elapsed_seconds"] = seconds_since(start);

    if (!o.plot_dir.empty()) {
        std::filesystem::create_directories(o.plot_dir);
        const std::filesystem::path dir(o.plot_dir);
        emit_polygons((dir / "levelset_polygons.csv").string(), "csv", polygons, out);
        emit_polygons((dir / "levelset_polygons.json").string(), "json", polygons, out);
    }
    emit_json(common.output, report, out);
    return kOk;
}

void add_common(CLI::App* cmd, CommonOptions& common, bool seeded)
{
    cmd->add_option("-o,--output", common.output, "output file (stdout when absent)");
    cmd->add_option("--cap", common.cap, "maximum number of binary factors to enumerate");
    if (seeded)
        cmd->add_option("--seed", common.seed, "seed of the direction sampler");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Hybrid zonotope set operations, RLT sharpening and sharpness checks"};
    app.name("hzono");
    app.require_subcommand(1);
    CommonOptions common;

    OpOptions op;
    auto* op_cmd = app.add_subcommand("op", "apply a set operation to set files");
    op_cmd->add_option("operation", op.name)
        ->required()
        ->check(CLI::IsMember({"minksum", "map", "cartprod", "intersect", "halfspace", "union",
                               "union-point", "relax", "convert-form"}));
    op_cmd->add_option("inputs", op.inputs, "input set files")->required();
    op_cmd->add_option("--R", op.R, "matrix as JSON rows");
    op_cmd->add_option("--s", op.s, "offset vector as JSON");
    op_cmd->add_option("--a", op.a, "halfspace normal as JSON");
    op_cmd->add_option("--k", op.k, "halfspace offset, a^T x >= k");
    op_cmd->add_option("--point", op.point, "point as JSON");
    op_cmd->add_option("--to", op.to, "target factor form, pm1 or 01");
    add_common(op_cmd, common, false);

    RltOptions rlt;
    auto* rlt_cmd = app.add_subcommand("rlt", "RLT sharpening or convex hull");
    rlt_cmd->add_option("input", rlt.input)->required();
    rlt_cmd->add_option("--level", rlt.level, "RLT level d");
    rlt_cmd->add_flag("--hull", rlt.hull, "output the convex hull as a constrained zonotope");
    rlt_cmd->add_option("--report", rlt.report, "complexity report file");
    add_common(rlt_cmd, common, false);

    SharpOptions sharp;
    auto* sharp_cmd = app.add_subcommand("check-sharp", "compare relax(H) with conv(H)");
    sharp_cmd->add_option("input", sharp.input)->required();
    sharp_cmd->add_option("--dirs", sharp.dirs, "number of support directions");
    sharp_cmd->add_option("--tol", sharp.tol, "support gap tolerance");
    add_common(sharp_cmd, common, true);

    PlotOptions plot;
    auto* plot_cmd = app.add_subcommand("plot2d", "boundary polygons of a planar set");
    plot_cmd->add_option("input", plot.input)->required();
    plot_cmd->add_option("--angles", plot.angles, "number of boundary angles");
    plot_cmd->add_option("--format", plot.format, "json or csv (default from -o extension)")
        ->check(CLI::IsMember({"json", "csv"}));
    add_common(plot_cmd, common, false);

    DemoOptions demo;
    auto* demo_cmd = app.add_subcommand("demo-levelset", "level-set sharpening pipeline");
    demo_cmd->add_option("network", demo.network, "network JSON file")->required();
    demo_cmd->add_option("--threshold", demo.threshold, "level set {x | N(x) >= threshold}");
    demo_cmd->add_option("--rlt-levels", demo.levels, "RLT levels (default 1..n_b)")->delimiter(',');
    demo_cmd->add_option("--angles", demo.angles, "number of boundary angles");
    demo_cmd->add_option("--dirs", demo.dirs, "number of support directions");
    demo_cmd->add_option("--tol", demo.tol, "support gap tolerance");
    demo_cmd->add_option("--plot-dir", demo.plot_dir, "directory for polygon files");
    add_common(demo_cmd, common, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kParseError;
    }

    try {
        if (*op_cmd)
            return cmd_op(op, common, out, err);
        if (*rlt_cmd)
            return cmd_rlt(rlt, common, out, err);
        if (*sharp_cmd)
            return cmd_check_sharp(sharp, common, out, err);
        if (*plot_cmd)
            return cmd_plot2d(plot, common, out, err);
        return cmd_demo_levelset(demo, common, out, err);
    } catch (const Exit& e) {
        err << "error: " << e.message << "\n";
        return e.code;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const DimensionMismatch& e) {
        err << "error: " << e.what() << "\n";
        return kMismatch;
    } catch (const FormMismatch& e) {
        err << "error: " << e.what() << "\n";
        return kMismatch;
    } catch (const LevelOutOfRange& e) {
        err << "error: " << e.what() << "\n";
        return kLevelOutOfRange;
    } catch (const EnumerationCapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kInconclusive;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
    }
}

}  // namespace hzono::cli
