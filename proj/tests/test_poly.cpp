#include <catch_amalgamated.hpp>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "qtutte/errors.hpp"
#include "qtutte/partition.hpp"
#include "qtutte/poly.hpp"

using namespace qtutte;

namespace {

BivariatePoly P(const std::string& s) { return BivariatePoly::parse(s); }

// f(x + s, y + s) by binomial expansion
oracle::Poly substitute(const BivariatePoly& f, int s) {
    oracle::Poly out;
    for (const auto& [ij, c] : f.terms())
        for (const auto& [ab, v] : oracle::shifted_monomial(ij.first, ij.second, s))
            oracle::add(out, ab.first, ab.second, v * c.convert_to<long long>());
    return out;
}

oracle::Poly oracle_rank_poly(const QMatroid& m) {
    std::vector<int> dims, ranks;
    for (Index x = 0; x < m.lattice().size(); ++x) {
        dims.push_back(m.lattice().height(x));
        ranks.push_back(m.rank(x));
    }
    return oracle::rank_poly(dims, ranks);
}

}  // namespace

TEST_CASE("parse and print") {
    CHECK(P("x^2 + 4x + y + 1").to_string() == "x^2 + 4x + y + 1");
    CHECK(P("1 + y + 4x + x^2").to_string() == "x^2 + 4x + y + 1");
    CHECK(P("x+xy+7y+y²+6").to_string() == "xy + y^2 + x + 7y + 6");
    CHECK(P("3*x*y - 2").to_string() == "3xy - 2");
    CHECK(P("-x^3 + x^3").to_string() == "0");
    CHECK(P("0").is_zero());
    CHECK(P("xy^2") == BivariatePoly::monomial(1, 2));
    CHECK(P("x^10") == BivariatePoly::monomial(10, 0));
    CHECK(P("-x - 1").to_string() == "-x - 1");
    CHECK_THROWS_AS(P("x +"), ParseError);
    CHECK_THROWS_AS(P("z"), ParseError);
    CHECK_THROWS_AS(P("x^"), ParseError);
}

TEST_CASE("arithmetic") {
    auto f = P("x + y"), g = P("x - y");
    CHECK(f * g == P("x^2 - y^2"));
    CHECK(f + g == P("2x"));
    CHECK(f - f == BivariatePoly());
    CHECK(BigInt(3) * f == P("3x + 3y"));
    CHECK(f.evaluate(2, 5) == 7);
    CHECK(P("xy^2").swapped() == P("x^2y"));
    CHECK(P("x^3 + y").deg_x() == 3);
    CHECK(P("x^3 + y").deg_y() == 1);
    auto big = P("x^2 + 1");
    for (int i = 0; i < 7; ++i) big = big * big;  // coefficients beyond 64 bits
    CHECK(big.coeff(256, 0) == 1);
    CHECK(big.coeff(128, 0) == BigInt("23951146041928082866135587776380551750"));  // C(128, 64)
}

TEST_CASE("q-binomials match the product formula") {
    for (int q = 1; q <= 5; ++q)
        for (int n = 0; n <= 10; ++n)
            for (int k = -1; k <= n + 1; ++k) CHECK(q_binomial(n, k, q) == oracle::gaussian(n, k, q));
    CHECK(q_binomial(4, 2, 2) == 35);
}

TEST_CASE("alpha and beta kernels at small arguments") {
    // alpha(n,m;i,j) = [n,i][m,j] q^{(n-i)(m-j)}
    CHECK(alpha_coeff(2, 1, 1, 0, 2) == 3 * 1 * 2);
    CHECK(alpha_coeff(3, 2, 1, 0, 2) == 7 * 1 * 16);
    CHECK(alpha_coeff(1, 1, 1, 1, 2) == 1);
    // beta with s = a-c, t = b-d: sign (-1)^{s+t}, q^{C(|s-t|,2)} (1 + q^{|s-t|} - q^{max(s,t)})
    CHECK(beta_coeff(1, 1, 0, 0, 2) == 1 * 1 * (1 + 1 - 2));
    CHECK(beta_coeff(1, 0, 0, 0, 2) == -1 * (1 + 2 - 2));
    CHECK(beta_coeff(2, 0, 0, 0, 2) == 1 * 2 * (1 + 4 - 4));
    CHECK(beta_coeff(3, 0, 0, 0, 2) == -1 * 8 * (1 + 8 - 8));
}

TEST_CASE("q = 1 kernels are the shifts by +1 and -1") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
        BivariatePoly f;
        for (int k = 0; k < 4; ++k) f.add_term(int(rng() % 4), int(rng() % 4), BigInt(int(rng() % 9) - 4));
        CHECK(transform(Kernel::Alpha, 1, f) == oracle::to_bivariate(substitute(f, 1)));
        CHECK(transform(Kernel::Beta, 1, f) == oracle::to_bivariate(substitute(f, -1)));
    }
}

TEST_CASE("kernels invert each other") {
    for (int q : {1, 2, 3}) {
        std::size_t checked = 0;
        CHECK(inversion_check(6, 6, q, &checked));
        CHECK(checked == 784);  // (sum_{a<=6} (a+1))^2
    }
    std::mt19937_64 rng(9);
    for (int q : {2, 3, 4}) {
        BivariatePoly f;
        for (int k = 0; k < 5; ++k) f.add_term(int(rng() % 5), int(rng() % 5), BigInt(int(rng() % 7) - 3));
        CHECK(transform(Kernel::Beta, q, transform(Kernel::Alpha, q, f)) == f);
        CHECK(transform(Kernel::Alpha, q, transform(Kernel::Beta, q, f)) == f);
    }
}

TEST_CASE("reference polynomials of P1, P2, U(2,3) and U36") {
    auto p1 = fixtures::load("p1");
    CHECK(rank_polynomial(p1) == P("x+xy+7y+y^2+6"));
    CHECK(tutte_polynomial(p1) == P("xy+y^2+3y"));
    auto p2 = fixtures::load("p2");
    CHECK(rank_polynomial(p2) == P("x+3xy+4+xy^2+6y+y^2"));
    CHECK(tutte_polynomial(p2) == P("xy^2"));
    auto u23 = QMatroid::uniform(SupportLattice::subspace(2, 3), 2);
    CHECK(rank_polynomial(u23) == P("x^2+7x+7+y"));
    CHECK(tutte_polynomial(u23) == P("x^2+4x+y+1"));
    CHECK(tutte_polynomial(fixtures::load("u36")) == P("x^3 + 3x^2 + 6x + 6y + 3y^2 + y^3"));
}

TEST_CASE("rank polynomials match brute force") {
    for (const auto& [name, m] : fixtures::all()) {
        INFO(name);
        CHECK(rank_polynomial(m) == oracle::to_bivariate(oracle_rank_poly(m)));
    }
}

TEST_CASE("empty lattice") {
    auto m = QMatroid::uniform(SupportLattice::subspace(2, 0), 0);
    CHECK(rank_polynomial(m) == P("1"));
    CHECK(tutte_polynomial(m) == P("1"));
}

TEST_CASE("Tutte polynomial via partitions equals beta * rho") {
    for (const auto& [name, m] : fixtures::all())
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
            INFO(name << " seed " << seed);
            auto p = tutte_partition(m, seed);
            CHECK(tutte_from_partition(m, p) == tutte_polynomial(m));
            CHECK(rank_polynomial(m) == transform(Kernel::Alpha, lattice_q(m), tutte_from_partition(m, p)));
        }
}

TEST_CASE("tutte_from_partition rejects non-Tutte partitions") {
    auto p1 = fixtures::load("p1");
    const auto& lat = p1.lattice();
    CHECK_THROWS_AS(tutte_from_partition(p1, make_partition(p1, {{lat.bottom(), lat.top()}})), PartitionError);
}

TEST_CASE("matroid Tutte polynomials match corank-nullity sums") {
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= n; ++k) {
            auto m = QMatroid::uniform(SupportLattice::boolean(std::size_t(n)), k);
            auto ref = oracle::corank_nullity_tutte(n, [k](std::uint32_t a) { return std::min(std::popcount(a), k); });
            INFO("U" << k << "," << n);
            CHECK(tutte_polynomial(m) == oracle::to_bivariate(ref));
        }
    std::mt19937_64 rng(21);
    auto f2 = Field::of_order(2);
    for (int t = 0; t < 20; ++t) {
        const int n = 2 + int(rng() % 5), r = 1 + int(rng() % 3);
        std::vector<std::vector<FqElem>> rows(static_cast<std::size_t>(r), std::vector<FqElem>(std::size_t(n)));
        std::vector<std::uint32_t> cols(std::size_t(n), 0);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < n; ++j) {
                rows[std::size_t(i)][std::size_t(j)] = FqElem(rng() % 2);
                if (rows[std::size_t(i)][std::size_t(j)]) cols[std::size_t(j)] |= 1u << i;
            }
        auto m = QMatroid::from_representable(SupportLattice::boolean(std::size_t(n)), FqMatrix(f2, std::size_t(n), rows));
        auto ref = oracle::corank_nullity_tutte(n, oracle::column_rank(cols));
        CHECK(tutte_polynomial(m) == oracle::to_bivariate(ref));
        CHECK(tutte_from_partition(m, tutte_partition(m, std::uint64_t(t))) == oracle::to_bivariate(ref));
    }
}

TEST_CASE("evaluations count elements, parts and bases") {
    for (const auto& [name, m] : fixtures::all()) {
        INFO(name);
        auto rho = rank_polynomial(m);
        auto tau = tutte_polynomial(m);
        CHECK(rho.evaluate(1, 1) == m.lattice().size());
        CHECK(tau.evaluate(1, 1) == tutte_partition(m).size());
        const auto bases = m.bases().size();
        CHECK(count_bases(m, BaseCountMethod::RankPoly) == bases);
        CHECK(count_bases(m, BaseCountMethod::Trace) == bases);
        // brute-force basis count
        std::size_t brute = 0;
        for (Index x = 0; x < m.lattice().size(); ++x)
            brute += m.rank(x) == m.lattice().height(x) && m.rank(x) == m.full_rank();
        CHECK(brute == bases);
    }
    CHECK(count_bases(fixtures::load("p1"), BaseCountMethod::Trace) == 6);
    CHECK(count_bases(fixtures::load("u36"), BaseCountMethod::Trace) == 20);
}

TEST_CASE("coefficient matrices and the trace pairing") {
    auto f = P("x^2 + 4x + y + 1");
    auto c = coeff_matrix(f);
    REQUIRE(c.size() == 3);
    REQUIRE(c[0].size() == 2);
    CHECK(c[2][0] == 1);
    CHECK(c[1][0] == 4);
    CHECK(c[0][1] == 1);
    CHECK(trace_pairing(c, c) == 1 + 16 + 1 + 1);
    CHECK_THROWS_AS(trace_pairing(c, coeff_matrix(f, 4, 2)), DimensionError);
    CHECK(coeff_matrix(f, 4, 3).size() == 4);
}

TEST_CASE("duality swaps both polynomials") {
    for (const auto& [name, m] : fixtures::all()) {
        INFO(name);
        CHECK(dual_polynomials_check(m));
        CHECK(tutte_polynomial(m.dual()) == tutte_polynomial(m).swapped());
    }
}
