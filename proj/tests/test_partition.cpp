#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "qtutte/errors.hpp"
#include "qtutte/matching.hpp"
#include "qtutte/partition.hpp"
#include "qtutte/poly.hpp"

using namespace qtutte;

namespace {

// independent re-check of a partition through oracle masks
bool oracle_accepts(const QMatroid& m, const IntervalPartition& p) {
    const auto& lat = m.lattice();
    oracle::Space sp(2, lat.kind() == LatticeKind::Boolean ? 1 : int(lat.ambient_dim()));
    std::vector<oracle::Mask> elems;
    std::vector<int> dims, ranks;
    for (Index x = 0; x < lat.size(); ++x) {
        elems.push_back(oracle::mask_of(lat, sp, x));
        dims.push_back(lat.height(x));
        ranks.push_back(m.rank(x));
    }
    std::vector<oracle::MaskInterval> parts;
    for (const auto& part : p.parts)
        parts.push_back({oracle::mask_of(lat, sp, part.interval.bottom), oracle::mask_of(lat, sp, part.interval.top)});
    return oracle::is_tutte_partition(elems, dims, ranks, parts);
}

std::set<std::string> reps(const SupportLattice& lat, const std::vector<Index>& xs) {
    std::set<std::string> out;
    for (Index x : xs) out.insert(lat.representative(x));
    return out;
}

}  // namespace

TEST_CASE("the greedy weight-0 chain always ends at the closure of zero") {
    // loops form a subspace, so every maximal weight-0 chain from the bottom
    // stops at cl(0); prime-freeness only decides whether it is totally clopen
    auto list = fixtures::all();
    for (auto& f : fixtures::random_weight_tables(30, 5)) list.push_back(std::move(f));
    for (const auto& [name, m] : list) {
        INFO(name);
        const auto& lat = m.lattice();
        const Index cl0 = m.closure(lat.bottom());
        if (auto z = totally_clopen(m)) CHECK(*z == cl0);
        CHECK(is_totally_clopen(m, cl0) == is_prime_free(m));
        for (Index x = 0; x < lat.size(); ++x)
            if (m.rank(x) == 0) CHECK(lat.leq(x, cl0));
    }
}

TEST_CASE("Hopcroft-Karp finds perfect matchings") {
    std::vector<std::vector<int>> adj{{0, 1}, {0}, {1, 2}};
    auto m = hopcroft_karp(3, 3, adj);
    CHECK(m == std::vector<int>{1, 0, 2});
    auto partial = hopcroft_karp(2, 1, {{0}, {0}});
    CHECK(std::count(partial.begin(), partial.end(), -1) == 1);
}

TEST_CASE("exact cover") {
    // Knuth's example
    std::vector<std::vector<std::size_t>> rows{{2, 4, 5}, {0, 3, 6}, {1, 2, 5}, {0, 3}, {1, 6}, {3, 4, 6}};
    auto sol = exact_cover(7, rows);
    REQUIRE(sol);
    CHECK(*sol == std::vector<std::size_t>{0, 3, 4});
    CHECK_FALSE(exact_cover(2, {{0}}).has_value());
    CHECK_THROWS_AS(exact_cover(2, {{3}}), DimensionError);
}

TEST_CASE("totally clopen element of P2 is the closure of zero") {
    auto p2 = fixtures::load("p2");
    const auto& lat = p2.lattice();
    auto z = totally_clopen(p2);
    REQUIRE(z);
    CHECK(*z == lat.find("100,010"));
    CHECK(is_totally_clopen(p2, *z));
    // its complements are exactly the bases
    auto comp = lat.complements(*z);
    auto bases = p2.bases();
    std::sort(comp.begin(), comp.end());
    CHECK(comp == bases);
}

TEST_CASE("P1 has a prime diamond and no totally clopen element") {
    auto p1 = fixtures::load("p1");
    CHECK_FALSE(totally_clopen(p1).has_value());
    CHECK(find_prime_diamond(p1).has_value());
    CHECK_FALSE(is_prime_free(p1));
    CHECK_FALSE(is_prime_free(p1, PrimeFreeMethod::DiamondScan));
}

TEST_CASE("prime-freeness methods agree") {
    auto all = fixtures::all();
    for (const auto& f : fixtures::random_weight_tables(50, 11)) all.push_back(f);
    int prime_free = 0;
    for (const auto& [name, m] : all) {
        INFO(name);
        bool a = is_prime_free(m, PrimeFreeMethod::Clopen);
        CHECK(a == is_prime_free(m, PrimeFreeMethod::DiamondScan));
        if (auto z = totally_clopen(m)) {
            auto comp = m.lattice().complements(*z);
            std::sort(comp.begin(), comp.end());
            CHECK(comp == m.bases());
        }
        prime_free += a;
    }
    CHECK(prime_free > 0);
    CHECK(prime_free < int(all.size()));
}

TEST_CASE("degenerate lattices are prime-free") {
    for (int n = 0; n <= 1; ++n) {
        auto m = QMatroid::uniform(fixtures::lattice(2, n), n);
        CHECK(is_prime_free(m));
        CHECK(tutte_partition(m).size() == 1);
    }
}

TEST_CASE("splitting pair") {
    auto p1 = fixtures::load("p1");
    const auto& lat = p1.lattice();
    auto sp = select_splitting_pair(p1);
    CHECK(is_valid_splitting_pair(p1, sp.e, sp.c));
    CHECK(is_valid_splitting_pair(p1, lat.find("101"), lat.find("100,010")));
    CHECK_FALSE(is_valid_splitting_pair(p1, lat.find("100"), lat.find("010,001")));  // a loop
    CHECK_FALSE(is_valid_splitting_pair(p1, lat.find("101"), lat.find("101,010")));  // e below c
    for (const auto& [name, m] : fixtures::core()) {
        if (is_prime_free(m)) continue;
        INFO(name);
        auto s = select_splitting_pair(m);
        CHECK(is_valid_splitting_pair(m, s.e, s.c));
    }
}

TEST_CASE("minimal q-partition of P1") {
    auto p1 = fixtures::load("p1");
    const auto& lat = p1.lattice();
    Index e = lat.find("101"), c = lat.find("100,010");
    for (std::uint64_t seed : {0, 1, 2, 3}) {
        auto s = minimal_q_partition(p1, e, c, seed);
        REQUIRE(s.size() == 5);
        CHECK(s.parts[0].interval == Interval{e, lat.top()});
        CHECK(s.parts[1].interval == Interval{lat.bottom(), c});
        std::vector<Interval> ivs;
        for (const auto& p : s.parts) ivs.push_back(p.interval);
        CHECK(verify_partition(lat, ivs).ok);
        for (std::size_t k = 2; k < s.size(); ++k) {
            CHECK(lat.height(s.parts[k].interval.bottom) == 1);
            CHECK(lat.height(s.parts[k].interval.top) == 2);
        }
    }
    CHECK_THROWS_AS(minimal_q_partition(p1, c, e), PreconditionError);
    CHECK_THROWS_AS(minimal_q_partition(p1, lat.find("100"), c), PreconditionError);
}

TEST_CASE("minimal q-partition sizes") {
    for (int n = 2; n <= 4; ++n) {
        auto lat = fixtures::lattice(2, n);
        auto m = QMatroid::uniform(lat, 1);
        Index e = lat.atoms().back(), c = lat.coatoms().front();
        if (lat.leq(e, c)) c = lat.complements(e).back();
        auto s = minimal_q_partition(m, e, c);
        CHECK(s.size() == std::size_t(2 + (1 << (n - 1)) - 1));
    }
    auto b = QMatroid::uniform(SupportLattice::boolean(4), 2);
    const auto& bl = b.lattice();
    auto s = minimal_q_partition(b, bl.find("1"), bl.find("234"));
    CHECK(s.size() == 2);
}

TEST_CASE("atom-to-coatom tilings do not exist for F_2^5") {
    // exhaustive search over masks agrees with the library's refusal
    oracle::Lattice ol(2, 5);
    oracle::Mask e = ol.sp.span(oracle::Mask(1) << 1), c = 0;
    for (std::size_t i = 0; i < ol.elems.size(); ++i)
        if (ol.dims[i] == 4 && !oracle::Lattice::leq(e, ol.elems[i])) {
            c = ol.elems[i];
            break;
        }
    CHECK_FALSE(oracle::has_atom_coatom_tiling(ol, e, c));
    oracle::Lattice small(2, 4);
    oracle::Mask e4 = small.sp.span(oracle::Mask(1) << 1), c4 = 0;
    for (std::size_t i = 0; i < small.elems.size(); ++i)
        if (small.dims[i] == 3 && !oracle::Lattice::leq(e4, small.elems[i])) {
            c4 = small.elems[i];
            break;
        }
    CHECK(oracle::has_atom_coatom_tiling(small, e4, c4));

    auto m = QMatroid::uniform(SupportLattice::subspace(2, 5), 3);
    const auto& lat = m.lattice();
    auto sp = select_splitting_pair(m);
    CHECK_THROWS_AS(minimal_q_partition(m, sp.e, sp.c), PartitionError);
    bool minimal = true;
    auto s = split_partition(m, sp.e, sp.c, 0, &minimal);
    CHECK_FALSE(minimal);
    std::vector<Interval> ivs;
    for (const auto& p : s.parts) ivs.push_back(p.interval);
    CHECK(verify_partition(lat, ivs).ok);
    for (std::size_t k = 2; k < s.size(); ++k) {
        CHECK(m.is_independent(s.parts[k].interval.bottom));
        CHECK(m.rank(s.parts[k].interval.top) == m.full_rank());
    }
}

TEST_CASE("constructed Tutte partitions verify, independently too") {
    for (const auto& [name, m] : fixtures::all()) {
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            INFO(name << " seed " << seed);
            auto p = tutte_partition(m, seed);
            auto v = verify_tutte_partition(m, p);
            INFO(v.message);
            CHECK(v.ok);
            CHECK(oracle_accepts(m, p));
        }
    }
}

TEST_CASE("Tutte partitions of n = 5 q-matroids verify") {
    auto lat = SupportLattice::subspace(2, 5);
    for (int k = 0; k <= 5; ++k) {
        INFO("k = " << k);
        auto m = QMatroid::uniform(lat, k);
        auto p = tutte_partition(m, 0);
        CHECK(verify_tutte_partition(m, p).ok);
        CHECK(oracle_accepts(m, p));
        CHECK(tutte_from_partition(m, p) == tutte_polynomial(m));
    }
    auto r5 = fixtures::load("r5_f8");
    auto p = tutte_partition(r5, 1);
    CHECK(verify_tutte_partition(r5, p).ok);
    CHECK(oracle_accepts(r5, p));
}

TEST_CASE("U(1,5) over F2 has no split through any splitting pair") {
    // the remainder would need an atom-to-coatom tiling: every coatom in it
    // must top its own part, and the only independent bottoms are atoms
    auto m = fixtures::load("u15");
    auto sp = select_splitting_pair(m);
    CHECK_THROWS_AS(split_partition(m, sp.e, sp.c), PartitionError);
    auto p = tutte_partition(m);
    CHECK(p.size() == 31);
    CHECK(verify_tutte_partition(m, p).ok);
    CHECK(oracle_accepts(m, p));
    CHECK(tutte_from_partition(m, p) == BivariatePoly::parse("y^4 + 16y^3 + 8y^2 + x + 4y + 1"));
}

TEST_CASE("direct covers are Tutte partitions") {
    for (const auto& [name, m] : fixtures::all()) {
        INFO(name);
        auto p = tutte_partition_by_cover(m);
        CHECK(verify_tutte_partition(m, p).ok);
        CHECK(oracle_accepts(m, p));
        CHECK(tutte_from_partition(m, p) == tutte_polynomial(m));
    }
}

TEST_CASE("P1 partition has 5 parts, U23 has 7") {
    CHECK(tutte_partition(fixtures::load("p1")).size() == 5);
    CHECK(tutte_partition(QMatroid::uniform(SupportLattice::subspace(2, 3), 2)).size() == 7);
    CHECK(tutte_partition(QMatroid::uniform(SupportLattice::subspace(2, 3), 3)).size() == 1);
}

TEST_CASE("verification names the failing clause") {
    auto p1 = fixtures::load("p1");
    const auto& lat = p1.lattice();
    auto good = tutte_partition(p1);
    REQUIRE(verify_tutte_partition(p1, good).ok);

    auto missing = good;
    missing.parts.pop_back();
    CHECK(verify_tutte_partition(p1, missing).clause == "covering");

    auto overlap = good;
    overlap.parts.push_back(good.parts.front());
    CHECK(verify_tutte_partition(p1, overlap).clause == "disjoint");

    // one part for everything: bottom and top are fine but P1 has prime diamonds
    auto whole = make_partition(p1, {{lat.bottom(), lat.top()}});
    CHECK(verify_tutte_partition(p1, whole).clause == "prime-free");

    // [100, top] has a dependent bottom
    std::vector<Interval> dep{{lat.find("100"), lat.top()}};
    for (Index x = 0; x < lat.size(); ++x)
        if (!lat.leq(lat.find("100"), x)) dep.push_back({x, x});
    CHECK(verify_tutte_partition(p1, make_partition(p1, dep)).clause == "independent-bottom");

    auto m = QMatroid::uniform(SupportLattice::subspace(2, 2), 1);
    const auto& l2 = m.lattice();
    auto prime = make_partition(m, {{l2.bottom(), l2.top()}});
    CHECK(verify_tutte_partition(m, prime).clause == "prime-free");

    // singletons: the top is not independent
    std::vector<Interval> singles;
    for (Index x = 0; x < l2.size(); ++x) singles.push_back({x, x});
    auto v2 = verify_tutte_partition(m, make_partition(m, singles));
    CHECK_FALSE(v2.ok);
    CHECK(v2.clause == "spanning-top");

    auto wrong = good;
    wrong.parts[0].rank += 1;
    CHECK(verify_tutte_partition(p1, wrong).clause == "profile");
    CHECK_THROWS_AS(make_partition(p1, {{lat.top(), lat.bottom()}}), PartitionError);
}

TEST_CASE("the worked partition of U36") {
    auto u36 = fixtures::load("u36");
    const auto& lat = u36.lattice();
    auto ivs = intervals_from_json(lat, read_json_file(fixtures::path("u36_example_partition")));
    REQUIRE(ivs.size() == 20);
    auto p = make_partition(u36, ivs);
    CHECK(verify_tutte_partition(u36, p).ok);
    CHECK(oracle_accepts(u36, p));
    auto co = crapo_orderability(u36, p);
    CHECK_FALSE(co.orderable);
    CHECK(reps(lat, co.cycle) == std::set<std::string>{"145", "156", "146"});
    CHECK(co.cycles.size() == 6);
    // any order is refuted
    auto bases = u36.bases();
    CHECK_FALSE(is_crapo_tutte(u36, p, bases));
    std::reverse(bases.begin(), bases.end());
    CHECK_FALSE(is_crapo_tutte(u36, p, bases));
}

TEST_CASE("a Crapo-orderable partition passes with its order") {
    // U_{1,2} as a matroid: {[1,12], [2,2]} is an activity-style partition
    auto m = QMatroid::uniform(SupportLattice::boolean(2), 1);
    const auto& lat = m.lattice();
    auto p = make_partition(m, {{lat.find("1"), lat.find("12")}, {lat.find("0"), lat.find("2")}});
    REQUIRE(verify_tutte_partition(m, p).ok);
    auto co = crapo_orderability(m, p);
    REQUIRE(co.orderable);
    CHECK(is_crapo_tutte(m, p, co.order));
    auto rev = co.order;
    std::reverse(rev.begin(), rev.end());
    CHECK_FALSE(is_crapo_tutte(m, p, rev));
    CHECK_THROWS_AS(crapo_orderability(fixtures::load("p1"), tutte_partition(fixtures::load("p1"))),
                    PreconditionError);
    CHECK_THROWS_AS(is_crapo_tutte(m, p, {lat.find("1")}), PreconditionError);
}
