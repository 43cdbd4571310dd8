#ifndef HZONO_IO_HPP_
#define HZONO_IO_HPP_

#include "hzono/geometry2d.hpp"
#include "hzono/oracle.hpp"
#include "hzono/relu_graph.hpp"
#include "hzono/rlt.hpp"
#include "hzono/zonotope.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace hzono {

using json = nlohmann::json;

// Set files: {"type": "hz"|"cz"|"zono", "form": "pm1"|"01", "Gc", "Gb", "c",
// "Ac", "Ab", "b"}, row-major nested arrays, absent keys are empty blocks.
// Empty blocks are omitted on output.
json to_json(const HybridZonotope& H);
json to_json(const ConstrainedZonotope& Z);
HybridZonotope set_from_json(const json& j);

HybridZonotope read_set_file(const std::string& path);
void write_set_file(const std::string& path, const HybridZonotope& H);
void write_set_file(const std::string& path, const ConstrainedZonotope& Z);

json matrix_to_json(const Matrix& M);
Matrix matrix_from_json(const json& j);
json vector_to_json(const Vector& v);
Vector vector_from_json(const json& j);

// {"layers": [{"W": [[...]], "b": [...]}, ...], "input_box": [[lo, hi], ...]}
json to_json(const ReluNetwork& net);
ReluNetwork network_from_json(const json& j);
ReluNetwork read_network_file(const std::string& path);

json to_json(const ComplexityTuple& t);
json to_json(const RltComplexityReport& report);
json to_json(const SharpnessReport& report);
json to_json(const Polygon& polygon);

struct TaggedPolygon {
    std::string tag;
    Polygon polygon;
};

// "tag,x,y" header, one vertex per row.
void write_polygons_csv(std::ostream& os, const std::vector<TaggedPolygon>& polygons);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace hzono

#endif  // HZONO_IO_HPP_
