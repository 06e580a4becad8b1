#include <doctest.h>

#include <random>

#include "nwe/families.hpp"
#include "nwe/states.hpp"
#include "support.hpp"

using namespace nwe;

TEST_CASE("ket_lin builds unnormalized superpositions") {
    CHECK(ket_lin(4, {{0, 1}, {1, -1}}).coeffs ==
          RVector{Rational(1), Rational(-1), Rational(0), Rational(0)});
    CHECK(ket_lin(3, {{2, 1}}).coeffs == RVector{Rational(0), Rational(0), Rational(1)});
    CHECK(ket_lin(5, {{0, 1}, {2, 1}, {3, -1}, {4, -1}}).coeffs ==
          RVector{Rational(1), Rational(0), Rational(1), Rational(-1), Rational(-1)});
    CHECK_THROWS_AS(ket_lin(3, {{3, 1}}), std::out_of_range);
    CHECK_THROWS_AS(ket_lin(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(ket_lin(2, {{0, 1}, {0, -1}}), std::invalid_argument);
}

TEST_CASE("inner products are exact") {
    CHECK(inner(ket_pm(2, 0, 1, -1), ket_pm(2, 0, 1, +1)) == Rational(0));
    CHECK(inner(ket_pm(3, 0, 1, -1), ket_pm(3, 0, 2, -1)) == Rational(1));
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(inner(ket_basis(3, i), ket_basis(3, i)) == Rational(1));
    CHECK_THROWS_AS(inner(ket_basis(2, 0), ket_basis(3, 0)), std::invalid_argument);
}

TEST_CASE("inner is symmetric and bilinear under rational scaling") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 100; ++t) {
        const Ket x = test::random_ket(rng, 3), y = test::random_ket(rng, 3);
        CHECK(inner(x, y) == inner(y, x));
        const Rational c(3, 2);
        Ket cx = x;
        for (auto& e : cx.coeffs) e *= c;
        CHECK(inner(cx, y) == c * inner(x, y));
    }
}

TEST_CASE("validate reports exactly the violating pairs") {
    CHECK(validate(eq4_fixture()).ok());

    StateSet dup;
    dup.m = dup.n = 2;
    dup.states.push_back(ProductState{"phi_1", ket_basis(2, 0), ket_basis(2, 0)});
    dup.states.push_back(ProductState{"phi_2", ket_basis(2, 0), ket_basis(2, 0)});
    const auto report = validate(dup);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].i == 0);
    CHECK(report.violations[0].j == 1);

    StateSet ortho;
    ortho.m = ortho.n = 2;
    ortho.states.push_back(ProductState{"phi_1", ket_basis(2, 0), ket_basis(2, 0)});
    ortho.states.push_back(ProductState{"phi_2", ket_basis(2, 1), ket_basis(2, 0)});
    CHECK(validate(ortho).ok());
}

TEST_CASE("validate is invariant under relabeling and scaling") {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 30; ++t) {
        StateSet set = test::random_valid_set(rng);
        // introduce one deliberate violation by duplicating the first state
        set.states.push_back(set.states.front());
        const auto before = validate(set).violations.size();
        StateSet scaled = set;
        std::shuffle(scaled.states.begin(), scaled.states.end(), rng);
        for (auto& s : scaled.states) {
            for (auto& c : s.a.coeffs) c *= Rational(-5, 3);
            s.label += "_x";
        }
        CHECK(validate(scaled).violations.size() == before);
        CHECK(before > 0);
    }
}

TEST_CASE("json round trip is structural identity and byte stable") {
    const StateSet fixture = eq4_fixture();
    const std::string doc = save_json(fixture);
    const StateSet back = load_json(doc);
    CHECK(back == fixture);
    CHECK(save_json(back) == doc);
}

TEST_CASE("json accepts rational coefficient strings") {
    const std::string doc = R"({
      "family": null, "m": 2, "n": 2,
      "states": [{"label": "s", "a": ["1/2", "0"], "b": ["1", "-2/3"]}]
    })";
    const StateSet set = load_json(doc);
    CHECK(set.states[0].a.coeffs[0] == Rational(1, 2));
    CHECK(set.states[0].b.coeffs[1] == Rational(-2, 3));
}

TEST_CASE("json rejects malformed documents") {
    CHECK_THROWS_AS(load_json("not json"), std::runtime_error);
    CHECK_THROWS_AS(load_json("{}"), std::runtime_error);
    // ket length disagrees with declared n
    CHECK_THROWS_AS(load_json(R"({"m":2,"n":3,"family":null,
        "states":[{"label":"s","a":["1","0"],"b":["1","0"]}]})"),
                    std::runtime_error);
    // floats are not part of the schema
    CHECK_THROWS_AS(load_json(R"({"m":2,"n":2,"family":null,
        "states":[{"label":"s","a":[0.5,"0"],"b":["1","0"]}]})"),
                    std::runtime_error);
    // zero ket violates the Ket invariant
    CHECK_THROWS_AS(load_json(R"({"m":2,"n":2,"family":null,
        "states":[{"label":"s","a":["0","0"],"b":["1","0"]}]})"),
                    std::runtime_error);
    CHECK_THROWS_AS(load_json(R"({"m":1,"n":2,"family":null,"states":[]})"),
                    std::runtime_error);
}

TEST_CASE("json round trip preserves random sets exactly") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 40; ++t) {
        StateSet set = test::random_valid_set(rng);
        set.family = (t % 2) ? std::optional<std::string>("rand") : std::nullopt;
        CHECK(load_json(save_json(set)) == set);
    }
}
