#pragma once

#include <random>
#include <string>
#include <vector>

#include "qtutte/io.hpp"
#include "qtutte/qmatroid.hpp"

namespace fixtures {

using qtutte::QMatroid;
using qtutte::SupportLattice;

struct Named {
    std::string name;
    QMatroid m;
};

inline std::string path(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name + ".json"; }

inline QMatroid load(const std::string& name) { return qtutte::qmatroid_from_json(qtutte::read_json_file(path(name))); }

inline SupportLattice lattice(int q, int n) {
    return q == 1 ? SupportLattice::boolean(std::size_t(n)) : SupportLattice::subspace(std::uint32_t(q), std::size_t(n));
}

inline std::string uniform_name(int q, int k, int n) {
    return "U" + std::to_string(k) + "," + std::to_string(n) + (q == 1 ? "" : "/F" + std::to_string(q));
}

/// Every U_{k,n} with n <= 4 over q in {1, 2}.
inline std::vector<Named> uniform_small() {
    std::vector<Named> out;
    for (int q : {1, 2})
        for (int n = 0; n <= 4; ++n)
            for (int k = 0; k <= n; ++k) out.push_back({uniform_name(q, k, n), QMatroid::uniform(lattice(q, n), k)});
    return out;
}

/// Uniform fixtures plus P1, P2 and the two representable ones.
inline std::vector<Named> core() {
    auto out = uniform_small();
    for (const char* f : {"p1", "p1_weights", "p2", "r1_f4", "r2_f8"}) out.push_back({f, load(f)});
    return out;
}

/// core() plus U_{3,6}.
inline std::vector<Named> all() {
    auto out = core();
    out.push_back({"u36", load("u36")});
    return out;
}

/// Random representable (q = 2) or column (q = 1) matroids, pushed through
/// the weight-table input path. They are matroidal by construction.
inline std::vector<Named> random_weight_tables(int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Named> out;
    for (int t = 0; t < count; ++t) {
        const bool boolean = t % 2 == 0;
        const int n = 2 + int(rng() % 3);
        const int k = 1 + int(rng() % std::uint64_t(n));
        const std::uint32_t m = boolean ? 1 : 1 + std::uint32_t(rng() % 3);
        auto field = qtutte::Field::make({2, m, qtutte::default_modulus(2, m)});
        std::vector<std::vector<qtutte::FqElem>> rows(static_cast<std::size_t>(k), std::vector<qtutte::FqElem>(std::size_t(n)));
        for (auto& r : rows)
            for (auto& v : r) v = qtutte::FqElem(rng() % field->order());
        SupportLattice lat = lattice(boolean ? 1 : 2, n);
        QMatroid src = QMatroid::from_representable(lat, qtutte::FqMatrix(field, std::size_t(n), rows));
        auto w = src.weighting();
        nlohmann::json entries = nlohmann::json::array();
        for (std::size_t c = 0; c < w.size(); ++c)
            entries.push_back({lat.representative(lat.covers()[c].lower), lat.representative(lat.covers()[c].upper),
                               int(w[c])});
        nlohmann::json doc = {{"lattice", {{"kind", boolean ? "boolean" : "subspace"}, {"q", boolean ? 1 : 2}, {"n", n}}},
                              {"rank", {{"type", "weights"}, {"entries", entries}}}};
        out.push_back({"random" + std::to_string(t), qtutte::qmatroid_from_json(doc)});
    }
    return out;
}

}  // namespace fixtures
