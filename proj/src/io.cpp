#include "qtutte/io.hpp"

#include <fstream>
#include <sstream>

#include "qtutte/errors.hpp"

namespace qtutte {

using nlohmann::json;

namespace {

const json& need(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing \"" + key + "\"");
    return j.at(key);
}

long long need_int(const json& j, const char* key, const std::string& where) {
    const json& v = need(j, key, where);
    if (!v.is_number_integer()) throw ParseError(where + ": \"" + key + "\" must be an integer");
    return v.get<long long>();
}

std::string as_rep(const json& v, const std::string& where) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw ParseError(where + ": element representatives must be strings");
}

SupportLattice lattice_from_json(const json& l, std::size_t cap) {
    const json& kind = need(l, "kind", "lattice");
    if (!kind.is_string()) throw ParseError("lattice: \"kind\" must be a string");
    long long n = need_int(l, "n", "lattice");
    if (n < 0) throw ParseError("lattice: \"n\" must be non-negative");
    std::string k = kind.get<std::string>();
    if (k == "boolean") {
        if (l.contains("q") && !(l["q"].is_number_integer() && l["q"].get<long long>() == 1))
            throw ParseError("lattice: a boolean lattice has q = 1");
        return SupportLattice::boolean(std::size_t(n), cap);
    }
    if (k == "subspace") {
        long long q = need_int(l, "q", "lattice");
        if (q < 2) throw ParseError("lattice: \"q\" must be a prime power");
        return SupportLattice::subspace(std::uint32_t(q), std::size_t(n), cap);
    }
    throw ParseError("lattice: unknown kind \"" + k + "\"");
}

FqMatrix matrix_from_json(const json& r) {
    const json& f = need(r, "field", "representable");
    FieldSpec spec;
    spec.p = std::uint32_t(need_int(f, "p", "field"));
    spec.m = f.contains("m") ? std::uint32_t(need_int(f, "m", "field")) : 1;
    if (f.contains("modulus")) {
        if (!f["modulus"].is_array()) throw ParseError("field: \"modulus\" must be a list of coefficients");
        for (const auto& c : f["modulus"]) {
            if (!c.is_number_integer()) throw ParseError("field: modulus coefficients must be integers");
            spec.modulus.push_back(std::uint32_t(c.get<long long>()));
        }
    } else {
        spec.modulus = default_modulus(spec.p, spec.m);
    }
    auto field = Field::make(spec);
    const json& mat = need(r, "matrix", "representable");
    if (!mat.is_array() || mat.empty()) throw ParseError("representable: \"matrix\" must be a non-empty list of rows");
    std::vector<std::vector<FqElem>> rows;
    for (const auto& row : mat) {
        if (!row.is_array()) throw ParseError("representable: matrix rows must be lists");
        std::vector<FqElem> v;
        for (const auto& e : row) {
            if (!e.is_number_integer() || e.get<long long>() < 0)
                throw ParseError("representable: matrix entries must be non-negative integers");
            v.push_back(FqElem(e.get<long long>()));
        }
        rows.push_back(std::move(v));
    }
    return FqMatrix(field, rows.front().size(), rows);
}

}  // namespace

QMatroid qmatroid_from_json(const json& doc, const LoadOptions& opt) {
    SupportLattice lat = lattice_from_json(need(doc, "lattice", "input"), opt.max_elements);
    const json& r = need(doc, "rank", "input");
    const json& type = need(r, "type", "rank");
    if (!type.is_string()) throw ParseError("rank: \"type\" must be a string");
    const std::string t = type.get<std::string>();
    const bool verify = !opt.trusted;
    if (t == "uniform") {
        long long k = need_int(r, "k", "rank");
        return QMatroid::uniform(lat, int(k));
    }
    if (t == "table") {
        const json& es = need(r, "entries", "rank");
        if (!es.is_array()) throw ParseError("rank: \"entries\" must be a list");
        std::vector<std::pair<std::string, int>> entries;
        for (const auto& e : es) {
            if (!e.is_array() || e.size() != 2 || !e[1].is_number_integer())
                throw ParseError("rank: table entries are [representative, rank]");
            entries.emplace_back(as_rep(e[0], "rank"), int(e[1].get<long long>()));
        }
        return QMatroid::from_table(lat, entries, verify);
    }
    if (t == "representable") return QMatroid::from_representable(lat, matrix_from_json(r), verify);
    if (t == "weights") {
        const json& es = need(r, "entries", "rank");
        if (!es.is_array()) throw ParseError("rank: \"entries\" must be a list");
        std::vector<std::tuple<std::string, std::string, int>> entries;
        for (const auto& e : es) {
            if (!e.is_array() || e.size() != 3 || !e[2].is_number_integer())
                throw ParseError("rank: weight entries are [lower, upper, 0|1]");
            entries.emplace_back(as_rep(e[0], "rank"), as_rep(e[1], "rank"), int(e[2].get<long long>()));
        }
        return QMatroid::from_weighting(lat, weighting_from_entries(lat, entries), verify);
    }
    throw ParseError("rank: unknown type \"" + t + "\"");
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return json::parse(ss.str());
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

json qmatroid_to_json(const QMatroid& m) {
    const auto& lat = m.lattice();
    json l = {{"kind", lat.kind() == LatticeKind::Boolean ? "boolean" : "subspace"},
              {"q", lat.q()},
              {"n", lat.ambient_dim()}};
    json entries = json::array();
    for (Index x = 0; x < lat.size(); ++x) entries.push_back({lat.representative(x), m.rank(x)});
    return {{"lattice", l}, {"rank", {{"type", "table"}, {"entries", entries}}}};
}

std::vector<Interval> intervals_from_json(const SupportLattice& lat, const json& doc) {
    const json* list = &doc;
    if (doc.is_object()) list = &need(doc, "parts", "partition");
    if (!list->is_array()) throw ParseError("partition: expected a list of parts");
    std::vector<Interval> out;
    for (const auto& p : *list) {
        const json* pair = &p;
        if (p.is_object()) pair = &need(p, "interval", "partition");
        if (!pair->is_array() || pair->size() != 2) throw ParseError("partition: parts are [bottom, top]");
        out.push_back({lat.find(as_rep((*pair)[0], "partition")), lat.find(as_rep((*pair)[1], "partition"))});
    }
    return out;
}

json partition_to_json(const SupportLattice& lat, const IntervalPartition& p) {
    json parts = json::array();
    for (const auto& part : p.parts)
        parts.push_back({{"interval", {lat.representative(part.interval.bottom), lat.representative(part.interval.top)}},
                         {"rank", part.rank},
                         {"nullity", part.nullity}});
    return {{"size", p.size()}, {"parts", parts}};
}

json poly_to_json(const BivariatePoly& f) {
    json terms = json::array();
    for (const auto& [ij, c] : f.terms()) terms.push_back({ij.first, ij.second, c.str()});
    return {{"text", f.to_string()}, {"terms", terms}};
}

}  // namespace qtutte
