#include <filesystem>

#include "doctest.h"
#include "hopfcheck/errors.hpp"
#include "hopfcheck/io.hpp"

using namespace hopfcheck;
using io::json;

namespace {

std::string temp_path(const std::string& name)
{
    return (std::filesystem::temp_directory_path() / ("hopfcheck_test_" + name)).string();
}

std::string schema_message(const json& j)
{
    try {
        io::algebra_from_json(j);
    } catch (const SchemaError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("scalars")
{
    CHECK(io::scalar_to_json(Scalar(Rational(-3, 4))) == "-3/4");
    CHECK(io::scalar_from_json(json(5), "x") == Scalar(5));
    CHECK(io::scalar_from_json(json("2/6"), "x") == Scalar(Rational(1, 3)));
    Scalar z = Scalar::zeta(6) + Scalar(Rational(1, 2));
    CHECK(io::scalar_from_json(io::scalar_to_json(z), "x") == z);
    CHECK_THROWS_AS(io::scalar_from_json(json::array(), "x"), SchemaError);
    CHECK_THROWS_AS(io::scalar_from_json(json{{"order", 3}, {"coeffs", {1}}}, "x"), SchemaError);
}

TEST_CASE("algebra round trips")
{
    HopfStarAlgebra c2 = group_algebra(FiniteGroup::cyclic(2));
    const std::string path = temp_path("cz2.hopf.json");
    io::save_algebra(c2, path);
    HopfStarAlgebra back = io::load_algebra(path);
    CHECK(same_structure(back, c2));
    CHECK(back.labels() == c2.labels());
    CHECK(back.field_order() == c2.field_order());
    std::filesystem::remove(path);

    for (const auto& e : catalog()) {
        HopfStarAlgebra h = io::algebra_from_json(io::algebra_to_json(e.algebra));
        CHECK_MESSAGE(same_structure(h, e.algebra), e.name);
        CHECK(io::algebra_to_json(h).dump() == io::algebra_to_json(e.algebra).dump());
    }
    HopfStarAlgebra d = dual(function_algebra(FiniteGroup::cyclic(3)));
    CHECK(same_structure(io::algebra_from_json(io::algebra_to_json(d)), d));
}

TEST_CASE("schema errors name the field")
{
    json j = io::algebra_to_json(group_algebra(FiniteGroup::cyclic(2)));
    json missing = j;
    missing.erase("antipode");
    CHECK(schema_message(missing).find("antipode") != std::string::npos);

    json bad_unit = j;
    bad_unit["unit"] = {1};
    CHECK(schema_message(bad_unit).find("unit") != std::string::npos);

    json bad_mult = j;
    bad_mult["mult"] = "nonsense";
    CHECK(schema_message(bad_mult).find("mult") != std::string::npos);

    CHECK_THROWS_AS(io::read_json_file(temp_path("does_not_exist.json")), SchemaError);
}

TEST_CASE("a hand-written one-dimensional algebra")
{
    json j = json::parse(R"({
        "dim": 1, "field_order": 1, "basis_labels": ["1"],
        "mult": [[0, 0, 0, 1]], "unit": [1],
        "comult": [[0, 0, 0, 1]], "counit": [1],
        "antipode": [[1]], "star": [[1]]
    })");
    HopfStarAlgebra h = io::algebra_from_json(j);
    CHECK(h.dim() == 1);
    CHECK(check_axioms(h).all_passed());
}

TEST_CASE("groups, actions and ideals")
{
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    FiniteGroup back = io::group_from_json(io::group_to_json(s3));
    CHECK(back.table() == s3.table());
    CHECK(back.labels() == s3.labels());

    FiniteGroup z3 = FiniteGroup::cyclic(3), z2 = FiniteGroup::cyclic(2);
    GroupAction act = function_algebra_action(z3, z2, {{0, 1, 2}, {0, 2, 1}});
    GroupAction act2 = io::action_from_json(io::action_to_json(act));
    CHECK(act2.maps == act.maps);
    CHECK(act2.group.table() == act.group.table());

    HopfStarAlgebra f = function_algebra(s3);
    Subspace a3 = io::ideal_from_json(json{{"subgroup", {"e", "(123)", "(132)"}}}, f);
    CHECK(a3 == subgroup_ideal(s3, {s3.identity(), s3.index_of("(123)"), s3.index_of("(132)")}));
    Subspace same = io::ideal_from_json(json{{"subgroup", {"delta_e", "delta_(123)", "delta_(132)"}}}, f);
    CHECK(same == a3);
    json rows = json::array();
    for (const auto& v : a3.basis_vectors()) {
        json r = json::array();
        for (const auto& x : v) r.push_back(io::scalar_to_json(x));
        rows.push_back(r);
    }
    CHECK(io::ideal_from_json(json{{"ideal", rows}}, f) == a3);
    CHECK_THROWS_AS(io::ideal_from_json(json{{"subgroup", {"nope"}}}, f), SchemaError);
    CHECK_THROWS_AS(io::ideal_from_json(json{{"other", 1}}, f), SchemaError);
}
