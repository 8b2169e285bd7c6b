#ifndef HOPFCHECK_IO_HPP
#define HOPFCHECK_IO_HPP

#include <string>

#include "json.hpp"

#include "hopfcheck/constructions.hpp"
#include "hopfcheck/hopf.hpp"

// JSON file formats. Scalars are written as "p/q" strings when rational and
// as {"order": n, "coeffs": [...]} (power-basis coordinates) otherwise; on
// input plain JSON integers are accepted too. Every SchemaError names the
// offending field.
namespace hopfcheck::io {

using nlohmann::json;

json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j, const std::string& field);

json vector_to_json(const Vector& v);
json matrix_to_json(const Matrix& m);  // list of rows
json subspace_to_json(const Subspace& s);

json algebra_to_json(const HopfStarAlgebra& h);
HopfStarAlgebra algebra_from_json(const json& j);

json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const json& j);

// {"group": <group>, "maps": [matrix per element]}
GroupAction action_from_json(const json& j);
json action_to_json(const GroupAction& a);

// {"ideal": [[scalars]...]} or, for function algebras, {"subgroup": [labels]}
// listing the group elements of the subgroup.
Subspace ideal_from_json(const json& j, const HopfStarAlgebra& h);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

HopfStarAlgebra load_algebra(const std::string& path);
void save_algebra(const HopfStarAlgebra& h, const std::string& path);

}  // namespace hopfcheck::io

#endif
