#include <doctest.h>

#include <nlohmann/json.hpp>

#include "testutil.hpp"

#include "gdnov/digest.hpp"
#include "gdnov/json_io.hpp"

using namespace gdtest;
using namespace gdnov;
using nlohmann::json;

TEST_CASE("canonical round-trips are byte-identical") {
    for (const Field& f : {Q(), GF(7)}) {
        field_dispatch(f, [&]<Scalar K>() {
            const auto ex = sl2_example<K>(f);
            const std::string a = algebra_json(ex.algebra);
            CHECK(algebra_json(parse_algebra<K>(a)) == a);
            const std::string o = operator_json(ex.op);
            CHECK(operator_json(parse_operator<K>(o)) == o);
            const std::string p = product_json(ex.product);
            CHECK(product_json(parse_product<K>(p)) == p);
            const TensorElement<K> x(Matrix<K>::identity(f, 3));
            const std::string t = tensor_json(x);
            CHECK(tensor_json(parse_tensor<K>(t)) == t);
        });
    }
    // non-canonical but valid input (reducible fraction) still loads
    const auto sl2 = parse_algebra<Rational>(R"({
        "basis": ["h", "e+", "e-"],
        "brackets": [{"i": 0, "j": 1, "terms": [{"c": "4/2", "k": 1}]}],
        "dim": 3,
        "field": {"type": "Q"}
    })");
    CHECK(sl2.basis_bracket(0, 1) == vec_of<Rational>(Q(), {0, 2, 0}));
}

TEST_CASE("algebra schema: field discipline and index constraints") {
    const char* good = R"({
        "basis": ["x", "y"],
        "brackets": [{"i": 0, "j": 1, "terms": [{"c": "1", "k": 0}]}],
        "dim": 2,
        "field": {"type": "Q"}
    })";
    CHECK(parse_algebra<Rational>(good).dim() == 2);
    CHECK(parse_field_of(good) == Q());

    SUBCASE("empty brackets mean an abelian algebra") {
        const auto ab = parse_algebra<Rational>(R"({
            "basis": ["a", "b"], "brackets": [], "dim": 2, "field": {"type": "Q"}
        })");
        CHECK(ab.is_abelian());
    }
    SUBCASE("i >= j entries are rejected") {
        CHECK_THROWS_AS(parse_algebra<Rational>(R"({
            "basis": ["x", "y"],
            "brackets": [{"i": 1, "j": 0, "terms": [{"c": "1", "k": 0}]}],
            "dim": 2, "field": {"type": "Q"}
        })"),
                        SchemaError);
    }
    SUBCASE("out-of-range indices are rejected") {
        CHECK_THROWS_AS(parse_algebra<Rational>(R"({
            "basis": ["x", "y"],
            "brackets": [{"i": 0, "j": 1, "terms": [{"c": "1", "k": 7}]}],
            "dim": 2, "field": {"type": "Q"}
        })"),
                        SchemaError);
    }
    SUBCASE("scalars must parse in the declared field") {
        CHECK_THROWS_AS(parse_algebra<Mod>(R"({
            "basis": ["x", "y"],
            "brackets": [{"i": 0, "j": 1, "terms": [{"c": "1/2", "k": 0}]}],
            "dim": 2, "field": {"p": 5, "type": "GF"}
        })"),
                        SchemaError);
        CHECK_THROWS_AS(parse_field_of(R"({"field": {"p": 6, "type": "GF"}})"), SchemaError);
    }
    SUBCASE("duplicate pairs and terms are rejected") {
        CHECK_THROWS_AS(parse_algebra<Rational>(R"({
            "basis": ["x", "y"],
            "brackets": [{"i": 0, "j": 1, "terms": [{"c": "1", "k": 0}]},
                         {"i": 0, "j": 1, "terms": [{"c": "2", "k": 1}]}],
            "dim": 2, "field": {"type": "Q"}
        })"),
                        SchemaError);
    }
    SUBCASE("malformed JSON and missing keys") {
        CHECK_THROWS_AS(parse_algebra<Rational>("{"), SchemaError);
        CHECK_THROWS_AS(parse_algebra<Rational>(R"({"dim": 2})"), SchemaError);
    }
    SUBCASE("basis name count must match dim") {
        CHECK_THROWS_AS(parse_algebra<Rational>(R"({
            "basis": ["x"], "brackets": [], "dim": 2, "field": {"type": "Q"}
        })"),
                        SchemaError);
    }
}

TEST_CASE("operator files document and enforce the column convention") {
    const auto ex = sl2_example<Rational>(Q());
    const std::string text = operator_json(ex.op);
    const json j = json::parse(text);
    CHECK(j.at("convention") == "T(b_j)=sum_i M[i][j] b_i");
    // T(e-) = e+ means M[1][2] = 1
    CHECK(j.at("matrix")[1][2] == "1");

    json wrong = j;
    wrong["convention"] = "rows";
    CHECK_THROWS_AS(parse_operator<Rational>(wrong.dump()), SchemaError);
}

TEST_CASE("report serialization carries axiom identifiers") {
    const auto sl2 = catalog<Rational>("sl2", Q());
    const auto rep = check_rmatrix(sl2, LinearOperator<Rational>::identity(Q(), 3));
    const json j = json::parse(check_report_json(rep));
    CHECK(j.at("passed") == false);
    CHECK(j.at("witness_count") == 3);
    CHECK(j.at("witnesses")[0].at("axiom") == "rmatrix");
    CHECK(j.at("witnesses")[0].at("eq") == "eq:1.7");
    CHECK(j.at("witnesses")[0].at("indices").size() == 2);
}

TEST_CASE("certificate serialization is deterministic and embeds the models") {
    const auto sl2 = catalog<Rational>("sl2", Q());
    const auto cert = existence(sl2, 1, 1000);
    const std::string one = certificate_json(cert);
    const std::string two = certificate_json(existence(sl2, 1, 1000));
    CHECK(one == two);
    const json j = json::parse(one);
    CHECK(j.at("case") == "noncentral");
    CHECK(j.at("u0") == json::array({"0", "1", "0"}));
    CHECK(j.at("v0") == json::array({"0", "0", "1"}));
    CHECK(j.at("product").at("dim") == 3);
    CHECK(j.at("nontrivial").at("value") == json::array({"-1", "0", "0"}));
}

TEST_CASE("audit report JSON has the documented shape") {
    const Field f2 = GF(2);
    const auto so3 = catalog<Mod>("so3", f2);
    const auto audit = cybe_audit(so3, BilinearForm<Mod>::identity(f2, 3));
    const json j = json::parse(audit_report_json(audit));
    for (const char* key : {"p", "dim", "total", "cybe_solutions", "rmatrix_solutions", "both",
                            "only_cybe", "only_rmatrix", "consistency_failures"})
        CHECK(j.contains(key));
    CHECK(j.at("total") == 512);
    CHECK(j.at("consistency_failures").empty());
}

TEST_CASE("abelian spec files: defaults are the deterministic completions") {
    const auto heis = catalog<Rational>("heisenberg3", Q());
    // only K given: Kbar defaults to the canonical complement of K+[K,G]
    const auto spec = parse_abelian_spec<Rational>(R"({"k": [["0","1","0"],["0","0","1"]]})", heis);
    CHECK(spec.sub_k.dim() == 2);
    CHECK(spec.kbar.dim() == 1);
    CHECK(spec.kbar.contains(vec_of<Rational>(Q(), {1, 0, 0})));
    CHECK(spec.t0.at(0, 0) == Rational(1));
    CHECK(spec.t0.at(1, 0) == Rational(0));
    CHECK_NOTHROW(abelian_operator(heis, spec));
}

TEST_CASE("loop pair files parse into loop elements") {
    const auto sl2 = catalog<Rational>("sl2", Q());
    const auto [a, b] = parse_loop_pair<Rational>(R"({
        "a": [{"coeffs": ["0","0","1"], "deg": 1}],
        "b": [{"coeffs": ["1","0","0"], "deg": 0}]
    })",
                                                  sl2);
    CHECK(a.terms().size() == 1);
    CHECK(b.terms().size() == 1);
    const auto ex = sl2_example<Rational>(Q());
    const auto r = loop_bracket(ex.algebra, ex.product, a, b);
    CHECK(r.terms().at(0) == vec_of<Rational>(Q(), {0, 4, 0}));
}

TEST_CASE("digest is stable and order-sensitive") {
    CHECK(fnv1a64_hex("") == fnv1a64_hex(""));
    CHECK(fnv1a64_hex("a;b") != fnv1a64_hex("b;a"));
    const auto m = matrix_of<Rational>(Q(), {{1, 2}, {3, 4}});
    CHECK(matrix_key(m) == "1,2;3,4");
}
