#pragma once

#include <cstddef>
#include <json.hpp>
#include <string>
#include <vector>

#include "qtutte/lattice.hpp"
#include "qtutte/partition.hpp"
#include "qtutte/poly.hpp"
#include "qtutte/qmatroid.hpp"

namespace qtutte {

struct LoadOptions {
    bool trusted = false;  ///< skip the rank axiom scan
    std::size_t max_elements = kDefaultMaxElements;
};

/// {"lattice": {"kind": "boolean"|"subspace", "q", "n"}, "rank": {...}} with
/// rank types uniform {k}, table {entries: [[rep, r]]}, representable
/// {field: {p, m, modulus}, matrix} and weights {entries: [[lo, up, w]]}.
/// Malformed documents raise ParseError.
QMatroid qmatroid_from_json(const nlohmann::json& doc, const LoadOptions& opt = {});
nlohmann::json read_json_file(const std::string& path);

/// Table form, readable by qmatroid_from_json.
nlohmann::json qmatroid_to_json(const QMatroid& m);

/// Accepts [[bottom, top], ...] or {"parts": [...]} whose entries are pairs
/// or objects with an "interval" pair.
std::vector<Interval> intervals_from_json(const SupportLattice& lat, const nlohmann::json& doc);
nlohmann::json partition_to_json(const SupportLattice& lat, const IntervalPartition& p);

/// {"text": "...", "terms": [[i, j, "c"], ...]} with terms by (i, j).
nlohmann::json poly_to_json(const BivariatePoly& f);

}  // namespace qtutte
