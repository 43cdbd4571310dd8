#include "hzono/io.hpp"

#include "hzono/errors.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

namespace hzono {

json matrix_to_json(const Matrix& M)
{
    json rows = json::array();
    for (Index i = 0; i < M.rows(); ++i) {
        json row = json::array();
        for (Index j = 0; j < M.cols(); ++j)
            row.push_back(M(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const json& j)
{
    if (!j.is_array())
        throw ParseError("matrix must be an array of rows");
    const auto rows = static_cast<Index>(j.size());
    Index cols = 0;
    if (rows > 0) {
        if (!j[0].is_array())
            throw ParseError("matrix rows must be arrays");
        cols = static_cast<Index>(j[0].size());
    }
    Matrix M(rows, cols);
    for (Index i = 0; i < rows; ++i) {
        const json& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Index>(row.size()) != cols)
            throw ParseError("matrix rows must have equal length");
        for (Index c = 0; c < cols; ++c) {
            const json& v = row[static_cast<std::size_t>(c)];
            if (!v.is_number())
                throw ParseError("matrix entries must be numbers");
            M(i, c) = v.get<double>();
        }
    }
    return M;
}

json vector_to_json(const Vector& v)
{
    json out = json::array();
    for (Index i = 0; i < v.size(); ++i)
        out.push_back(v(i));
    return out;
}

Vector vector_from_json(const json& j)
{
    if (!j.is_array())
        throw ParseError("vector must be an array");
    Vector v(static_cast<Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number())
            throw ParseError("vector entries must be numbers");
        v(static_cast<Index>(i)) = j[i].get<double>();
    }
    return v;
}

namespace {

void put_block(json& j, const char* key, const Matrix& M)
{
    if (M.rows() > 0 && M.cols() > 0)
        j[key] = matrix_to_json(M);
}

Matrix get_block(const json& j, const char* key, const char* alias = nullptr)
{
    if (j.contains(key))
        return matrix_from_json(j.at(key));
    if (alias && j.contains(alias))
        return matrix_from_json(j.at(alias));
    return Matrix(0, 0);
}

}  // namespace

json to_json(const HybridZonotope& H)
{
    json j;
    j["type"] = H.n_b() > 0 ? "hz" : (H.n_c() > 0 ? "cz" : "zono");
    j["form"] = to_string(H.form());
    put_block(j, "Gc", H.Gc());
    put_block(j, "Gb", H.Gb());
    j["c"] = vector_to_json(H.c());
    put_block(j, "Ac", H.Ac());
    put_block(j, "Ab", H.Ab());
    if (H.b().size() > 0)
        j["b"] = vector_to_json(H.b());
    return j;
}

json to_json(const ConstrainedZonotope& Z)
{
    return to_json(HybridZonotope(Z));
}

HybridZonotope set_from_json(const json& j)
{
    if (!j.is_object())
        throw ParseError("set file must hold a JSON object");
    const std::string type = j.value("type", "hz");
    if (type != "hz" && type != "cz" && type != "zono")
        throw ParseError("unknown set type '" + type + "'");
    const std::string form_name = j.value("form", "pm1");
    FactorForm form;
    if (form_name == "pm1")
        form = FactorForm::PM1;
    else if (form_name == "01" || form_name == "zo")
        form = FactorForm::ZO;
    else
        throw ParseError("unknown factor form '" + form_name + "'");
    if (!j.contains("c"))
        throw ParseError("set file is missing the center 'c'");

    const Matrix Gc = get_block(j, "Gc", "G");
    const Matrix Gb = get_block(j, "Gb");
    const Vector c = vector_from_json(j.at("c"));
    const Matrix Ac = get_block(j, "Ac", "A");
    const Matrix Ab = get_block(j, "Ab");
    const Vector b = j.contains("b") ? vector_from_json(j.at("b")) : Vector(0);
    if (type != "hz" && Gb.size() > 0)
        throw ParseError("type '" + type + "' cannot carry binary generators");
    if (type == "zono" && (Ac.size() > 0 || b.size() > 0))
        throw ParseError("type 'zono' cannot carry constraints");
    try {
        return HybridZonotope(Gc, Gb, c, Ac, Ab, b, form);
    } catch (const DimensionMismatch& e) {
        throw ParseError(std::string("inconsistent set matrices: ") + e.what());
    }
}

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError("'" + path + "': " + e.what());
    }
}

void write_json_file(const std::string& path, const json& j)
{
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write '" + path + "'");
    out << j.dump(1) << "\n";
}

HybridZonotope read_set_file(const std::string& path)
{
    const json j = read_json_file(path);
    try {
        return set_from_json(j);
    } catch (const json::exception& e) {
        throw ParseError("'" + path + "': " + e.what());
    }
}

void write_set_file(const std::string& path, const HybridZonotope& H)
{
    write_json_file(path, to_json(H));
}

void write_set_file(const std::string& path, const ConstrainedZonotope& Z)
{
    write_json_file(path, to_json(Z));
}

json to_json(const ReluNetwork& net)
{
    json j;
    j["layers"] = json::array();
    for (const auto& layer : net.layers)
        j["layers"].push_back({{"W", matrix_to_json(layer.W)}, {"b", vector_to_json(layer.b)}});
    j["input_box"] = json::array();
    for (const auto& [lo, hi] : net.input_box)
        j["input_box"].push_back({lo, hi});
    return j;
}

ReluNetwork network_from_json(const json& j)
{
    ReluNetwork net;
    try {
        for (const auto& layer : j.at("layers"))
            net.layers.push_back({matrix_from_json(layer.at("W")), vector_from_json(layer.at("b"))});
        for (const auto& range : j.at("input_box")) {
            if (!range.is_array() || range.size() != 2)
                throw ParseError("input_box entries must be [lo, hi]");
            net.input_box.emplace_back(range[0].get<double>(), range[1].get<double>());
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("network: ") + e.what());
    }
    net.validate();
    return net;
}

ReluNetwork read_network_file(const std::string& path)
{
    return network_from_json(read_json_file(path));
}

json to_json(const ComplexityTuple& t)
{
    return {{"n_g", t.n_g}, {"n_b", t.n_b}, {"n_c", t.n_c}};
}

json to_json(const RltComplexityReport& report)
{
    return {{"nominal", to_json(report.nominal)}, {"actual", to_json(report.actual)},
            {"level", report.level}};
}

namespace {

json optional_number(const std::optional<double>& v)
{
    return v ? json(*v) : json(nullptr);
}

}  // namespace

json to_json(const SharpnessReport& report)
{
    json j;
    j["verdict"] = to_string(report.verdict);
    j["tol"] = report.tol;
    j["max_gap"] = std::isfinite(report.max_gap) ? json(report.max_gap) : json(nullptr);
    j["directions"] = json::array();
    j["relax_support"] = json::array();
    j["hull_support"] = json::array();
    for (std::size_t i = 0; i < report.directions.size(); ++i) {
        j["directions"].push_back(vector_to_json(report.directions[i]));
        if (i < report.relax_support.size())
            j["relax_support"].push_back(optional_number(report.relax_support[i]));
        if (i < report.hull_support.size())
            j["hull_support"].push_back(optional_number(report.hull_support[i]));
    }
    if (report.hull_support.empty())
        j["hull_support"] = nullptr;
    return j;
}

json to_json(const Polygon& polygon)
{
    json out = json::array();
    for (const auto& p : polygon)
        out.push_back({p.x, p.y});
    return out;
}

void write_polygons_csv(std::ostream& os, const std::vector<TaggedPolygon>& polygons)
{
    os << "tag,x,y\n";
    os.precision(17);
    for (const auto& tp : polygons)
        for (const auto& p : tp.polygon)
            os << tp.tag << "," << p.x << "," << p.y << "\n";
}

}  // namespace hzono
