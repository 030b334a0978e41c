#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "qtutte/errors.hpp"
#include "qtutte/qmatroid.hpp"

using namespace qtutte;

TEST_CASE("uniform ranks are min(h, k)") {
    auto lat = SupportLattice::subspace(2, 4);
    for (int k = 0; k <= 4; ++k) {
        auto m = QMatroid::uniform(lat, k);
        for (Index x = 0; x < lat.size(); ++x) CHECK(m.rank(x) == std::min(lat.height(x), k));
        CHECK_NOTHROW(m.verify());
    }
    CHECK_THROWS_AS(QMatroid::uniform(lat, 5), DimensionError);
    CHECK_THROWS_AS(QMatroid::uniform(lat, -1), DimensionError);
}

TEST_CASE("P1 table, weights and rule agree") {
    auto p1 = fixtures::load("p1");
    auto pw = fixtures::load("p1_weights");
    CHECK(p1.ranks() == pw.ranks());
    const auto& lat = p1.lattice();
    for (Index x = 0; x < lat.size(); ++x) {
        auto rep = lat.representative(x);
        CHECK(p1.rank(x) == (rep == "0" || rep == "100" ? 0 : 1));
    }
    CHECK(p1.loops() == std::vector<Index>{lat.find("100")});
    CHECK(p1.closure(lat.bottom()) == lat.find("100"));
    CHECK(p1.coloops().empty());
}

TEST_CASE("P2 representable matches its rule") {
    auto p2 = fixtures::load("p2");
    const auto& lat = p2.lattice();
    Index c = lat.find("100,010");
    for (Index x = 0; x < lat.size(); ++x) CHECK(p2.rank(x) == (lat.leq(x, c) ? 0 : 1));
    CHECK(p2.closure(lat.bottom()) == c);
}

TEST_CASE("representable ranks match a brute-force image-dimension oracle") {
    struct Case {
        const char* name;
        unsigned modulus;
        int m;
        std::vector<std::vector<unsigned>> g;
    };
    for (const auto& c : {Case{"r1_f4", 0b111, 2, {{1, 0, 1, 2}, {0, 1, 2, 1}}},
                          Case{"r2_f8", 0b1011, 3, {{1, 2, 4, 1}, {0, 1, 2, 5}}},
                          Case{"p2", 0b10, 1, {{0, 0, 1}}}}) {
        auto mq = fixtures::load(c.name);
        const auto& lat = mq.lattice();
        oracle::Space sp(2, int(lat.ambient_dim()));
        auto r = oracle::representable_rank(sp, oracle::Gf2m{c.m, c.modulus}, c.g);
        for (Index x = 0; x < lat.size(); ++x) CHECK(mq.rank(x) == r(oracle::mask_of(lat, sp, x)));
    }
}

TEST_CASE("Boolean column matroid ranks") {
    // columns of [[1,0,1,0],[0,1,1,0]] as row bitmasks
    auto lat = SupportLattice::boolean(4);
    auto f2 = Field::of_order(2);
    auto m = QMatroid::from_representable(lat, FqMatrix(f2, 4, {{1, 0, 1, 0}, {0, 1, 1, 0}}));
    auto r = oracle::column_rank({0b01, 0b10, 0b11, 0b00});
    for (Index x = 0; x < lat.size(); ++x) CHECK(m.rank(x) == r(std::uint32_t(oracle::mask_of(lat, oracle::Space(2, 1), x))));
    CHECK(m.loops() == std::vector<Index>{lat.find("4")});
}

TEST_CASE("representable input over a mismatched field is rejected") {
    auto lat = SupportLattice::subspace(3, 2);
    CHECK_THROWS_AS(QMatroid::from_representable(lat, FqMatrix(Field::of_order(2), 2, {{1, 0}})), FieldError);
    auto lat2 = SupportLattice::subspace(2, 3);
    CHECK_THROWS_AS(QMatroid::from_representable(lat2, FqMatrix(Field::of_order(2), 2, {{1, 0}})), DimensionError);
}

TEST_CASE("rank axiom violations carry witnesses") {
    auto lat = SupportLattice::subspace(2, 2);
    std::vector<int> r(lat.size(), 1);
    r[lat.bottom()] = 0;
    r[lat.top()] = 2;
    CHECK_NOTHROW(QMatroid::from_ranks(lat, r));

    auto bad_r1 = r;
    bad_r1[lat.atoms()[0]] = 2;
    CHECK_THROWS_WITH(QMatroid::from_ranks(lat, bad_r1), Catch::Matchers::ContainsSubstring("(R1)"));

    auto bad_r2 = r;
    bad_r2[lat.top()] = 0;
    bad_r2[lat.atoms()[0]] = 1;
    CHECK_THROWS_AS(QMatroid::from_ranks(lat, bad_r2), AxiomError);

    // two loops spanning a rank-1 top break submodularity
    std::vector<int> bad_r3(lat.size(), 0);
    bad_r3[lat.top()] = 1;
    CHECK_THROWS_WITH(QMatroid::from_ranks(lat, bad_r3), Catch::Matchers::ContainsSubstring("(R3)"));
    CHECK_NOTHROW(QMatroid::from_ranks(lat, bad_r3, false));
}

TEST_CASE("table input errors") {
    auto lat = SupportLattice::subspace(2, 2);
    CHECK_THROWS_AS(QMatroid::from_table(lat, {{"0", 0}}), ParseError);
    CHECK_THROWS_AS(QMatroid::from_table(lat, {{"0", 0}, {"0", 1}}), ParseError);
    CHECK_THROWS_AS(QMatroid::from_table(lat, {{"7", 0}}), ParseError);
}

TEST_CASE("every diamond of every fixture is matroidal") {
    for (const auto& [name, m] : fixtures::all()) {
        INFO(name);
        auto w = m.weighting();
        for (const auto& d : m.lattice().diamonds()) CHECK(diamond_type(m.lattice(), w, d.bottom, d.top).has_value());
        CHECK_NOTHROW(check_matroidal(m.lattice(), w));
    }
}

TEST_CASE("diamond classes") {
    auto p1 = fixtures::load("p1");
    const auto& lat = p1.lattice();
    // [0, <100,010>]: lower covers 100 (weight 0) and 010, 110 (weight 1), upper all weight 0
    CHECK(p1.classify_diamond(lat.bottom(), lat.find("100,010")) == DiamondType::Mixed);
    CHECK(p1.classify_diamond(lat.bottom(), lat.find("010,001")) == DiamondType::Prime);
    CHECK(p1.classify_diamond(lat.find("100"), lat.top()) == DiamondType::Prime);
    CHECK(p1.classify_diamond(lat.find("001"), lat.top()) == DiamondType::Empty);
    auto free = QMatroid::uniform(lat, 3);
    CHECK(free.classify_diamond(lat.bottom(), lat.find("100,010")) == DiamondType::Full);
    CHECK_THROWS_AS(p1.classify_diamond(lat.bottom(), lat.find("100")), DimensionError);
}

TEST_CASE("non-matroidal weightings are rejected") {
    auto lat = SupportLattice::subspace(2, 2);
    CoverWeighting w(lat.covers().size(), 0);
    // exactly one lower cover of weight 1 and everything else 0 is no diamond type
    w[lat.cover_id(lat.bottom(), lat.atoms()[0])] = 1;
    CHECK_THROWS_AS(check_matroidal(lat, w), AxiomError);
    CHECK_THROWS_AS(QMatroid::from_weighting(lat, w), AxiomError);
}

TEST_CASE("rank and weighting round trip on every fixture") {
    auto all = fixtures::all();
    for (const auto& f : fixtures::random_weight_tables(20, 3)) all.push_back(f);
    for (const auto& [name, m] : all) {
        INFO(name);
        auto w = m.weighting();
        auto back = QMatroid::from_weighting(m.lattice(), w);
        CHECK(back.ranks() == m.ranks());
        CHECK(back.weighting() == w);
    }
}

TEST_CASE("weight entries must name covers") {
    auto lat = SupportLattice::subspace(2, 2);
    CHECK_THROWS_AS(weighting_from_entries(lat, {{"0", "100,010", 1}}), ParseError);
    CHECK_THROWS_AS(weighting_from_entries(lat, {{"0", "100", 2}}), ParseError);
    CHECK_THROWS_AS(weighting_from_entries(lat, {{"0", "100", 1}}), ParseError);
}

TEST_CASE("bases are independent spanning elements") {
    CHECK(fixtures::load("p1").bases().size() == 6);
    CHECK(fixtures::load("u36").bases().size() == 20);
    CHECK(fixtures::load("p2").bases().size() == 4);
    auto u23 = QMatroid::uniform(SupportLattice::subspace(2, 3), 2);
    CHECK(u23.bases().size() == 7);
}

TEST_CASE("minors shift ranks") {
    auto p1 = fixtures::load("p1");
    const auto& lat = p1.lattice();
    Index e = lat.find("101");
    auto [minor, map] = p1.minor_with_map(e, lat.top());
    CHECK(minor.lattice().size() == 5);
    for (Index x = 0; x < minor.lattice().size(); ++x) CHECK(minor.rank(x) == p1.rank(map[x]) - p1.rank(e));
    CHECK(minor.full_rank() == 0);
    CHECK(minor.lattice().length() == 2);
}

TEST_CASE("duality") {
    for (const auto& [name, m] : fixtures::all()) {
        INFO(name);
        auto d = m.dual();
        CHECK_NOTHROW(d.verify());
        CHECK(d.dual() == m);
        CHECK(d.full_rank() == int(m.lattice().length()) - m.full_rank());
    }
    auto lat = SupportLattice::subspace(2, 4);
    for (int k = 0; k <= 4; ++k) CHECK(QMatroid::uniform(lat, k).dual() == QMatroid::uniform(lat, 4 - k));
}

TEST_CASE("linear maps permute ranks") {
    auto p1 = fixtures::load("p1");
    const auto& lat = p1.lattice();
    auto f2 = Field::of_order(2);
    // swap the first two coordinates: the loop <100> moves to <010>
    auto img = p1.apply_linear_map(FqMatrix(f2, 3, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
    CHECK(img.loops() == std::vector<Index>{lat.find("010")});
    CHECK_THROWS_AS(p1.apply_linear_map(FqMatrix(f2, 3, {{1, 1, 0}, {1, 1, 0}, {0, 0, 1}})), DimensionError);
    auto b = QMatroid::uniform(SupportLattice::boolean(3), 2);
    CHECK_THROWS_AS(b.apply_linear_map(FqMatrix(f2, 3, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}})), DimensionError);
}
