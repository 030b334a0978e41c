#include "qtutte/invariance.hpp"

#include <random>

#include "qtutte/errors.hpp"

namespace qtutte {

using nlohmann::json;

namespace {

std::string rep(const SupportLattice& lat, Index x) { return lat.representative(x); }

json interval_json(const SupportLattice& lat, Index a, Index b) { return json::array({rep(lat, a), rep(lat, b)}); }

std::string big(const BigInt& v) { return v.str(); }

FqMatrix random_invertible(const SupportLattice& lat, std::uint64_t seed) {
    const std::size_t n = lat.ambient_dim();
    std::mt19937_64 rng(seed);
    if (lat.kind() == LatticeKind::Boolean) {
        std::vector<std::size_t> perm(n);
        for (std::size_t i = 0; i < n; ++i) perm[i] = i;
        for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[std::size_t(rng() % i)]);
        std::vector<std::vector<FqElem>> rows(n, std::vector<FqElem>(n, 0));
        for (std::size_t i = 0; i < n; ++i) rows[i][perm[i]] = 1;
        return FqMatrix(lat.field(), n, rows);
    }
    const auto q = lat.field()->order();
    while (true) {
        std::vector<std::vector<FqElem>> rows(n, std::vector<FqElem>(n));
        for (auto& r : rows)
            for (auto& v : r) v = FqElem(rng() % q);
        FqMatrix a(lat.field(), n, rows);
        if (matrix_rank(a) == n) return a;
    }
}

AxiomReport no_split(const char* axiom, const SupportLattice& lat, Index e, Index c, std::uint64_t seed,
                     const PartitionError& err) {
    AxiomReport r{axiom, false, json::object(), false};
    r.witness = {{"seed", seed}, {"atom", rep(lat, e)}, {"coatom", rep(lat, c)}, {"no_split", err.what()}};
    return r;
}

}  // namespace

AxiomReport check_qp1(const QMatroid& m, std::uint64_t seed) {
    const auto& lat = m.lattice();
    FqMatrix a = random_invertible(lat, seed);
    QMatroid img = m.apply_linear_map(a);
    auto t0 = tutte_polynomial(m), t1 = tutte_polynomial(img);
    auto r0 = rank_polynomial(m), r1 = rank_polynomial(img);
    AxiomReport rep{"q-P1", t0 == t1 && r0 == r1, {}};
    rep.witness = {{"seed", seed},
                   {"map", a.to_string()},
                   {"tutte", t0.to_string()},
                   {"tutte_image", t1.to_string()},
                   {"rank", r0.to_string()},
                   {"rank_image", r1.to_string()}};
    return rep;
}

AxiomReport check_qp2(const QMatroid& m, Index e) {
    const auto& lat = m.lattice();
    if (lat.height(e) != 1) throw PreconditionError(rep(lat, e) + " is not an atom");
    if (!is_prime_free(m)) throw PreconditionError("q-P2 applies to prime-free q-matroids only");
    auto t = tutte_polynomial(m);
    auto te = tutte_polynomial(m.minor(lat.bottom(), e));
    auto tc = tutte_polynomial(m.minor(e, lat.top()));
    auto prod = te * tc;
    AxiomReport r{"q-P2", t == prod, {}};
    r.witness = {{"atom", rep(lat, e)},
                 {"tutte", t.to_string()},
                 {"restriction", te.to_string()},
                 {"contraction", tc.to_string()},
                 {"product", prod.to_string()}};
    return r;
}

AxiomReport check_qp3(const QMatroid& m, std::uint64_t seed) {
    const auto& lat = m.lattice();
    if (is_prime_free(m)) throw PreconditionError("q-P3 applies to q-matroids with a prime diamond only");
    auto sp = select_splitting_pair(m);
    bool minimal = true;
    IntervalPartition s;
    try {
        s = split_partition(m, sp.e, sp.c, seed, &minimal);
    } catch (const PartitionError& err) {
        return no_split("q-P3", lat, sp.e, sp.c, seed, err);
    }
    auto t = tutte_polynomial(m);
    BivariatePoly sum;
    json parts = json::array();
    for (const auto& p : s.parts) {
        auto tp = tutte_polynomial(m.minor(p.interval.bottom, p.interval.top));
        sum += tp;
        parts.push_back({{"interval", interval_json(lat, p.interval.bottom, p.interval.top)},
                         {"tutte", tp.to_string()}});
    }
    AxiomReport r{"q-P3", t == sum, {}};
    r.witness = {{"seed", seed},
                 {"atom", rep(lat, sp.e)},
                 {"coatom", rep(lat, sp.c)},
                 {"minimal_split", minimal},
                 {"tutte", t.to_string()},
                 {"sum", sum.to_string()},
                 {"parts", parts}};
    return r;
}

AxiomReport check_rank_split(const QMatroid& m, Index e, Index c, std::uint64_t seed) {
    bool minimal = true;
    IntervalPartition s;
    try {
        s = split_partition(m, e, c, seed, &minimal);
    } catch (const PartitionError& err) {
        return no_split("split", m.lattice(), e, c, seed, err);
    }
    auto r = check_rank_split(m, s);
    r.witness["minimal_split"] = minimal;
    r.witness["seed"] = seed;
    r.witness["atom"] = rep(m.lattice(), e);
    r.witness["coatom"] = rep(m.lattice(), c);
    return r;
}

AxiomReport check_rank_split(const QMatroid& m, const IntervalPartition& s) {
    const auto& lat = m.lattice();
    AxiomReport r{"split", false, json::object()};
    std::vector<Interval> ivs;
    for (const auto& p : s.parts) ivs.push_back(p.interval);
    auto v = verify_partition(lat, ivs);
    if (!v.ok) {
        r.witness["error"] = v.message;
        return r;
    }
    auto rho = rank_polynomial(m);
    BivariatePoly sum;
    json parts = json::array();
    for (const auto& iv : ivs) {
        int px = m.full_rank() - m.rank(iv.top);
        int py = m.nullity(iv.bottom);
        auto rp = rank_polynomial(m.minor(iv.bottom, iv.top));
        auto term = BivariatePoly::monomial(px, py) * rp;
        sum += term;
        parts.push_back({{"interval", interval_json(lat, iv.bottom, iv.top)},
                         {"x_power", px},
                         {"y_power", py},
                         {"rank", rp.to_string()},
                         {"term", term.to_string()}});
    }
    r.pass = rho == sum;
    r.witness["rank"] = rho.to_string();
    r.witness["sum"] = sum.to_string();
    r.witness["parts"] = parts;
    return r;
}

AxiomReport check_rank_not_qtg(const QMatroid& m) {
    const auto& lat = m.lattice();
    if (!lat.is_full() || lat.length() < 2) throw PreconditionError("needs a whole lattice of dimension at least 2");
    if (!is_prime_free(m)) throw PreconditionError("the comparison is made on prime-free q-matroids");
    const int n = int(lat.length()), q = lattice_q(m);
    const Index e = lat.atoms().front();
    BigInt at = rank_polynomial(m).evaluate(1, 1);
    BigInt re = rank_polynomial(m.minor(lat.bottom(), e)).evaluate(1, 1);
    BigInt co = rank_polynomial(m.minor(e, lat.top())).evaluate(1, 1);
    BigInt full = 0, half = 0;
    for (int k = 0; k <= n; ++k) full += q_binomial(n, k, q);
    for (int k = 0; k < n; ++k) half += q_binomial(n - 1, k, q);
    const BigInt prod = re * co;
    AxiomReport r{"rank-not-qtg", at == full && prod == 2 * half && at != prod, {}};
    r.witness = {{"atom", rep(lat, e)},
                 {"rank_at_1_1", big(at)},
                 {"product_at_1_1", big(prod)},
                 {"gaussian_sum", big(full)},
                 {"twice_gaussian_sum", big(2 * half)}};
    return r;
}

AxiomReport check_matroid_tg(const QMatroid& m) {
    const auto& lat = m.lattice();
    if (lat.kind() != LatticeKind::Boolean || !lat.is_full())
        throw PreconditionError("deletion-contraction is checked on whole Boolean lattices only");
    auto t = tutte_polynomial(m);
    AxiomReport r{"matroid-TG", true, {}};
    json atoms = json::array();
    for (Index e : lat.atoms()) {
        Index ec = lat.complements(e).front();
        auto del = tutte_polynomial(m.minor(lat.bottom(), ec));
        bool loop = m.rank(e) == 0;
        bool isthmus = m.rank(ec) == m.full_rank() - 1;
        BivariatePoly other = (loop || isthmus) ? tutte_polynomial(m.minor(lat.bottom(), e))
                                                : tutte_polynomial(m.minor(e, lat.top()));
        BivariatePoly rhs = (loop || isthmus) ? other * del : del + other;
        bool ok = rhs == t;
        r.pass = r.pass && ok;
        atoms.push_back({{"atom", rep(lat, e)},
                         {"kind", loop ? "loop" : isthmus ? "isthmus" : "ordinary"},
                         {"deletion", del.to_string()},
                         {loop || isthmus ? "restriction" : "contraction", other.to_string()},
                         {"pass", ok}});
    }
    r.witness = {{"tutte", t.to_string()}, {"atoms", atoms}};
    return r;
}

AxiomReport check_duality(const QMatroid& m) {
    QMatroid d = m.dual();
    auto t = tutte_polynomial(m), td = tutte_polynomial(d);
    auto rho = rank_polynomial(m), rd = rank_polynomial(d);
    bool invol = d.dual() == m;
    AxiomReport r{"duality", td == t.swapped() && rd == rho.swapped() && invol, {}};
    r.witness = {{"tutte", t.to_string()},
                 {"tutte_dual", td.to_string()},
                 {"rank", rho.to_string()},
                 {"rank_dual", rd.to_string()},
                 {"involution", invol}};
    return r;
}

json to_json(const AxiomReport& r) {
    json j = {{"axiom", r.axiom}, {"pass", r.pass}, {"witness", r.witness}};
    if (!r.applicable) j["applicable"] = false;
    return j;
}

}  // namespace qtutte
