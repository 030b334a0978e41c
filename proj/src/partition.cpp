#include "qtutte/partition.hpp"

#include <algorithm>
#include <queue>
#include <random>

#include "qtutte/errors.hpp"
#include "qtutte/matching.hpp"

namespace qtutte {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Fisher-Yates over mt19937_64 so the result does not depend on the
// standard library's shuffle.
template <class T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = std::size_t(rng() % i);
        std::swap(v[i - 1], v[j]);
    }
}

std::string iv(const SupportLattice& lat, Index a, Index b) {
    return "[" + lat.representative(a) + ", " + lat.representative(b) + "]";
}

PartitionVerdict fail(std::optional<std::size_t> part, std::string clause, std::string msg) {
    return {false, part, std::move(clause), std::move(msg)};
}

}  // namespace

IntervalPartition make_partition(const QMatroid& m, const std::vector<Interval>& intervals) {
    IntervalPartition p;
    const auto& lat = m.lattice();
    for (const auto& i : intervals) {
        if (!lat.leq(i.bottom, i.top))
            throw PartitionError(iv(lat, i.bottom, i.top) + " is not an interval");
        int r = m.rank(i.top) - m.rank(i.bottom);
        int len = lat.height(i.top) - lat.height(i.bottom);
        p.parts.push_back({i, r, len - r});
    }
    return p;
}

bool is_totally_clopen(const QMatroid& m, Index z) {
    const auto& lat = m.lattice();
    const auto& cs = lat.covers();
    for (std::size_t c = 0; c < cs.size(); ++c) {
        int w = m.weight(c);
        if (w != 1 && lat.leq(z, cs[c].lower)) return false;
        if (w != 0 && lat.leq(cs[c].upper, z)) return false;
    }
    return true;
}

std::optional<Index> totally_clopen(const QMatroid& m) {
    const auto& lat = m.lattice();
    Index x = lat.bottom();
    while (true) {
        const auto& ups = lat.up(x);
        const auto& cids = lat.up_cover_ids(x);
        bool moved = false;
        for (std::size_t i = 0; i < ups.size(); ++i) {
            if (m.weight(cids[i]) == 0) {
                x = ups[i];
                moved = true;
                break;
            }
        }
        if (!moved) break;
    }
    if (is_totally_clopen(m, x)) return x;
    return std::nullopt;
}

std::optional<Interval> find_prime_diamond(const QMatroid& m) {
    const auto& lat = m.lattice();
    auto w = m.weighting();
    for (const auto& d : lat.diamonds()) {
        auto t = diamond_type(lat, w, d.bottom, d.top);
        if (t && *t == DiamondType::Prime) return d;
    }
    return std::nullopt;
}

bool is_prime_free(const QMatroid& m, PrimeFreeMethod method) {
    if (method == PrimeFreeMethod::Clopen) return totally_clopen(m).has_value();
    return !find_prime_diamond(m).has_value();
}

bool is_valid_splitting_pair(const QMatroid& m, Index e, Index c) {
    const auto& lat = m.lattice();
    if (lat.height(e) != 1 || lat.height(c) != int(lat.length()) - 1) return false;
    if (m.rank(e) != 1 || lat.leq(e, c)) return false;
    for (Index k : m.coloops())
        if (!lat.leq(e, k)) return false;
    return lat.leq(m.closure(lat.bottom()), c);
}

SplittingPair select_splitting_pair(const QMatroid& m) {
    const auto& lat = m.lattice();
    const auto coloops = m.coloops();
    const Index cl0 = m.closure(lat.bottom());
    for (Index e : lat.atoms()) {
        if (m.rank(e) != 1) continue;
        bool below_all = std::all_of(coloops.begin(), coloops.end(), [&](Index k) { return lat.leq(e, k); });
        if (!below_all) continue;
        for (Index c : lat.coatoms()) {
            if (lat.leq(cl0, c) && !lat.leq(e, c)) return {e, c};
        }
    }
    throw PartitionError("no splitting atom/coatom pair exists");
}

IntervalPartition minimal_q_partition(const QMatroid& m, Index e, Index c, std::uint64_t seed, int retries) {
    const auto& lat = m.lattice();
    if (lat.height(e) != 1) throw PreconditionError(lat.representative(e) + " is not an atom");
    if (lat.height(c) != int(lat.length()) - 1) throw PreconditionError(lat.representative(c) + " is not a coatom");
    if (lat.leq(e, c)) throw PreconditionError("the atom lies below the coatom");

    const std::size_t N = lat.size();
    std::vector<char> in_s(N, 0);
    std::size_t s_size = 0;
    for (Index x = 0; x < N; ++x) {
        if (!lat.leq(x, c) && !lat.leq(e, x)) {
            in_s[x] = 1;
            ++s_size;
        }
    }
    std::vector<Index> A, B;
    for (Index a : lat.atoms())
        if (in_s[a]) A.push_back(a);
    for (Index b : lat.coatoms())
        if (in_s[b]) B.push_back(b);
    if (A.size() != B.size())
        throw PartitionError("remainder has " + std::to_string(A.size()) + " atoms but " + std::to_string(B.size()) +
                             " coatoms");
    std::vector<std::vector<int>> adj(A.size());
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = 0; j < B.size(); ++j)
            if (lat.leq(A[i], B[j])) adj[i].push_back(int(j));

    auto finish = [&](std::vector<std::pair<Index, Index>> pairs) {
        std::sort(pairs.begin(), pairs.end());
        std::vector<Interval> ivs{{e, lat.top()}, {lat.bottom(), c}};
        for (const auto& [a, b] : pairs) ivs.push_back({a, b});
        return make_partition(m, ivs);
    };

    // element-wise check that the matched intervals tile the remainder
    auto tiles = [&](const std::vector<std::pair<Index, Index>>& pairs) {
        std::vector<char> seen(N, 0);
        std::size_t covered = 0;
        for (const auto& [a, b] : pairs) {
            for (Index x : lat.interval_elements(a, b)) {
                if (!in_s[x] || seen[x]) return false;
                seen[x] = 1;
                ++covered;
            }
        }
        return covered == s_size;
    };

    for (int attempt = 0; attempt <= retries; ++attempt) {
        auto order = adj;
        if (attempt > 0 || seed != 0) {
            std::mt19937_64 rng(splitmix(seed ^ splitmix(std::uint64_t(attempt))));
            for (auto& row : order) shuffle(row, rng);
        }
        auto match = hopcroft_karp(A.size(), B.size(), order);
        if (std::find(match.begin(), match.end(), -1) != match.end()) continue;
        std::vector<std::pair<Index, Index>> pairs;
        for (std::size_t i = 0; i < A.size(); ++i) pairs.emplace_back(A[i], B[std::size_t(match[i])]);
        if (tiles(pairs)) return finish(std::move(pairs));
    }

    // exact cover of the remainder by atom-to-coatom intervals
    std::vector<Index> col_of(N, 0);
    std::size_t cols = 0;
    for (Index x = 0; x < N; ++x)
        if (in_s[x]) col_of[x] = Index(cols++);
    std::vector<std::pair<Index, Index>> cand;
    std::vector<std::vector<std::size_t>> rows;
    for (std::size_t i = 0; i < A.size(); ++i)
        for (int j : adj[i]) {
            std::vector<std::size_t> r;
            for (Index x : lat.interval_elements(A[i], B[std::size_t(j)])) r.push_back(col_of[x]);
            cand.emplace_back(A[i], B[std::size_t(j)]);
            rows.push_back(std::move(r));
        }
    auto sol = exact_cover(cols, rows);
    if (!sol) throw PartitionError("no atom-to-coatom tiling of the remainder exists");
    std::vector<std::pair<Index, Index>> pairs;
    for (auto r : *sol) pairs.push_back(cand[r]);
    return finish(std::move(pairs));
}

IntervalPartition split_partition(const QMatroid& m, Index e, Index c, std::uint64_t seed, bool* minimal) {
    try {
        auto p = minimal_q_partition(m, e, c, seed);
        if (minimal) *minimal = true;
        return p;
    } catch (const PartitionError&) {
        // no atom-to-coatom tiling; fall through to the general cover
    }
    if (minimal) *minimal = false;
    const auto& lat = m.lattice();
    const std::size_t N = lat.size();
    std::vector<Index> col_of(N, Index(-1));
    std::vector<Index> bottoms, tops;
    std::size_t cols = 0;
    for (Index x = 0; x < N; ++x) {
        if (lat.leq(x, c) || lat.leq(e, x)) continue;
        col_of[x] = Index(cols++);
        if (m.is_independent(x)) bottoms.push_back(x);
        if (m.rank(x) == m.full_rank()) tops.push_back(x);
    }
    std::vector<std::pair<Interval, std::vector<std::size_t>>> cand;
    for (Index a : bottoms)
        for (Index b : tops) {
            if (!lat.leq(a, b)) continue;
            std::vector<std::size_t> r;
            for (Index x : lat.interval_elements(a, b)) r.push_back(col_of[x]);
            cand.push_back({{a, b}, std::move(r)});
        }
    std::stable_sort(cand.begin(), cand.end(),
                     [](const auto& x, const auto& y) { return x.second.size() > y.second.size(); });
    std::vector<std::vector<std::size_t>> rows;
    for (const auto& [iv, r] : cand) rows.push_back(r);
    auto sol = exact_cover(cols, rows);
    if (!sol) throw PartitionError("the remainder has no cover by independent-to-spanning intervals");
    std::vector<Interval> ivs{{e, lat.top()}, {lat.bottom(), c}};
    std::vector<Interval> rest;
    for (auto r : *sol) rest.push_back(cand[r].first);
    std::sort(rest.begin(), rest.end());
    ivs.insert(ivs.end(), rest.begin(), rest.end());
    return make_partition(m, ivs);
}

namespace {

void tutte_rec(const QMatroid& m, std::uint64_t seed, const std::vector<Index>& to_root, std::vector<Interval>& out) {
    const auto& lat = m.lattice();
    if (is_prime_free(m)) {
        out.push_back({to_root[lat.bottom()], to_root[lat.top()]});
        return;
    }
    auto sp = select_splitting_pair(m);
    IntervalPartition s;
    try {
        s = split_partition(m, sp.e, sp.c, seed);
    } catch (const PartitionError&) {
        // no split through (e, c): tile this minor directly
        for (const auto& part : tutte_partition_by_cover(m).parts)
            out.push_back({to_root[part.interval.bottom], to_root[part.interval.top]});
        return;
    }
    for (std::size_t k = 0; k < s.parts.size(); ++k) {
        const auto& part = s.parts[k].interval;
        auto [minor, map] = m.minor_with_map(part.bottom, part.top);
        std::vector<Index> child_to_root(map.size());
        for (std::size_t i = 0; i < map.size(); ++i) child_to_root[i] = to_root[map[i]];
        tutte_rec(minor, splitmix(seed + 0x632be59bd9b4e019ULL * (k + 1)), child_to_root, out);
    }
}

}  // namespace

IntervalPartition tutte_partition_by_cover(const QMatroid& m) {
    const auto& lat = m.lattice();
    const auto w = m.weighting();
    std::vector<Interval> prime;
    for (const auto& d : lat.diamonds())
        if (diamond_type(lat, w, d.bottom, d.top) == DiamondType::Prime) prime.push_back({d.bottom, d.top});
    std::vector<Index> bottoms, tops;
    for (Index x = 0; x < lat.size(); ++x) {
        if (m.is_independent(x)) bottoms.push_back(x);
        if (m.rank(x) == m.full_rank()) tops.push_back(x);
    }
    // independent bottom and spanning top make the clopen chain non-extendable,
    // so the only per-part condition left is prime-freeness
    std::vector<std::pair<Interval, std::vector<std::size_t>>> cand;
    for (Index a : bottoms) {
        std::vector<Index> above;
        for (const auto& d : prime)
            if (lat.leq(a, d.bottom)) above.push_back(d.top);
        for (Index b : tops) {
            if (!lat.leq(a, b)) continue;
            if (std::any_of(above.begin(), above.end(), [&](Index t) { return lat.leq(t, b); })) continue;
            std::vector<std::size_t> r;
            for (Index x : lat.interval_elements(a, b)) r.push_back(x);
            cand.push_back({{a, b}, std::move(r)});
        }
    }
    std::stable_sort(cand.begin(), cand.end(),
                     [](const auto& x, const auto& y) { return x.second.size() > y.second.size(); });
    std::vector<std::vector<std::size_t>> rows;
    for (const auto& [iv, r] : cand) rows.push_back(r);
    auto sol = exact_cover(lat.size(), rows);
    if (!sol) throw PartitionError("no Tutte partition exists");
    std::vector<Interval> ivs;
    for (auto r : *sol) ivs.push_back(cand[r].first);
    std::sort(ivs.begin(), ivs.end());
    return make_partition(m, ivs);
}

IntervalPartition tutte_partition(const QMatroid& m, std::uint64_t seed) {
    std::vector<Index> id(m.lattice().size());
    for (Index i = 0; i < id.size(); ++i) id[i] = i;
    std::vector<Interval> out;
    tutte_rec(m, seed, id, out);
    std::sort(out.begin(), out.end());
    return make_partition(m, out);
}

PartitionVerdict verify_partition(const SupportLattice& lat, const std::vector<Interval>& intervals) {
    std::vector<int> owner(lat.size(), -1);
    for (std::size_t i = 0; i < intervals.size(); ++i) {
        const auto& [a, b] = intervals[i];
        if (a >= lat.size() || b >= lat.size()) return fail(i, "interval", "part refers to a missing element");
        if (!lat.leq(a, b)) return fail(i, "interval", iv(lat, a, b) + " is not an interval");
        for (Index x : lat.interval_elements(a, b)) {
            if (owner[x] != -1)
                return fail(i, "disjoint",
                            lat.representative(x) + " lies in parts " + std::to_string(owner[x]) + " and " +
                                std::to_string(i));
            owner[x] = int(i);
        }
    }
    for (Index x = 0; x < lat.size(); ++x)
        if (owner[x] == -1) return fail(std::nullopt, "covering", lat.representative(x) + " lies in no part");
    return {};
}

PartitionVerdict verify_tutte_partition(const QMatroid& m, const IntervalPartition& p) {
    const auto& lat = m.lattice();
    std::vector<Interval> ivs;
    for (const auto& part : p.parts) ivs.push_back(part.interval);
    auto base = verify_partition(lat, ivs);
    if (!base.ok) return base;
    const auto cs = m.weighting();
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        const auto& part = p.parts[i];
        const Index a = part.interval.bottom, b = part.interval.top;
        const std::string name = iv(lat, a, b);
        int r = m.rank(b) - m.rank(a);
        int nu = (lat.height(b) - lat.height(a)) - r;
        if (part.rank != r || part.nullity != nu)
            return fail(i, "profile", name + " is recorded with rank " + std::to_string(part.rank) + " and nullity " +
                                          std::to_string(part.nullity) + " but has " + std::to_string(r) + " and " +
                                          std::to_string(nu));
        if (m.rank(a) != lat.height(a)) return fail(i, "independent-bottom", name + ": bottom is dependent");
        if (m.rank(b) != m.full_rank()) return fail(i, "spanning-top", name + ": top is not spanning");
        QMatroid minor = m.minor(a, b);
        if (auto d = find_prime_diamond(minor))
            return fail(i, "prime-free",
                        name + " contains the prime diamond " + iv(minor.lattice(), d->bottom, d->top));
        if (!totally_clopen(minor)) return fail(i, "clopen-chain", name + " has no clopen chain");
        for (std::size_t k = 0; k < lat.up(b).size(); ++k)
            if (cs[lat.up_cover_ids(b)[k]] == 1)
                return fail(i, "non-extendable",
                            name + ": weight-1 cover " + iv(lat, b, lat.up(b)[k]) + " extends the clopen chain");
        for (std::size_t k = 0; k < lat.down(a).size(); ++k)
            if (cs[lat.down_cover_ids(a)[k]] == 0)
                return fail(i, "non-extendable",
                            name + ": weight-0 cover " + iv(lat, lat.down(a)[k], a) + " extends the clopen chain");
    }
    return {};
}

namespace {

std::vector<Index> sole_bases(const QMatroid& m, const IntervalPartition& p, const std::vector<Index>& bases,
                              bool strict) {
    const auto& lat = m.lattice();
    std::vector<Index> out;
    for (const auto& part : p.parts) {
        std::vector<Index> in;
        for (Index b : bases)
            if (lat.leq(part.interval.bottom, b) && lat.leq(b, part.interval.top)) in.push_back(b);
        if (in.size() != 1) {
            if (strict)
                throw PartitionError(iv(lat, part.interval.bottom, part.interval.top) + " contains " +
                                     std::to_string(in.size()) + " bases");
            return {};
        }
        out.push_back(in.front());
    }
    return out;
}

void require_boolean(const QMatroid& m) {
    if (m.lattice().kind() != LatticeKind::Boolean)
        throw PreconditionError("Crapo-Tutte conditions are defined for matroids (Boolean lattices) only");
}

}  // namespace

bool is_crapo_tutte(const QMatroid& m, const IntervalPartition& p, const std::vector<Index>& base_order) {
    require_boolean(m);
    const auto& lat = m.lattice();
    std::vector<Interval> ivs;
    for (const auto& part : p.parts) ivs.push_back(part.interval);
    auto v = verify_partition(lat, ivs);
    if (!v.ok) throw PartitionError(v.message);
    auto bases = m.bases();
    auto sorted = base_order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != bases) throw PreconditionError("base order must list every basis exactly once");
    std::vector<std::size_t> pos(lat.size(), 0);
    for (std::size_t i = 0; i < base_order.size(); ++i) pos[base_order[i]] = i;
    auto sole = sole_bases(m, p, bases, false);
    if (sole.size() != p.parts.size()) return false;
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        const Index x = p.parts[i].interval.bottom, y = p.parts[i].interval.top, b = sole[i];
        for (Index o : bases) {
            if (lat.leq(x, o) && pos[o] > pos[b]) return false;
            if (lat.leq(o, y) && pos[o] < pos[b]) return false;
        }
    }
    return true;
}

CrapoOrder crapo_orderability(const QMatroid& m, const IntervalPartition& p) {
    require_boolean(m);
    const auto& lat = m.lattice();
    auto bases = m.bases();
    auto sole = sole_bases(m, p, bases, true);
    const std::size_t B = bases.size();
    std::vector<std::size_t> slot(lat.size(), 0);
    for (std::size_t i = 0; i < B; ++i) slot[bases[i]] = i;
    // edge u -> v means u must come before v
    std::vector<std::vector<std::size_t>> out(B);
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        const Index x = p.parts[i].interval.bottom, y = p.parts[i].interval.top;
        const std::size_t b = slot[sole[i]];
        for (std::size_t o = 0; o < B; ++o) {
            if (o == b) continue;
            if (lat.leq(x, bases[o])) out[o].push_back(b);
            if (lat.leq(bases[o], y)) out[b].push_back(o);
        }
    }
    for (auto& v : out) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    std::vector<std::size_t> indeg(B, 0);
    for (const auto& v : out)
        for (auto t : v) ++indeg[t];
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t i = 0; i < B; ++i)
        if (indeg[i] == 0) ready.push(i);
    CrapoOrder res;
    std::vector<char> done(B, 0);
    while (!ready.empty()) {
        auto u = ready.top();
        ready.pop();
        done[u] = 1;
        res.order.push_back(bases[u]);
        for (auto t : out[u])
            if (--indeg[t] == 0) ready.push(t);
    }
    if (res.order.size() == B) {
        res.orderable = true;
        return res;
    }
    res.order.clear();
    // a shortest cycle through each unsorted basis
    std::vector<std::vector<std::size_t>> found;
    for (std::size_t s = 0; s < B; ++s) {
        if (done[s]) continue;
        std::vector<long> parent(B, -1);
        std::vector<char> seen(B, 0);
        std::queue<std::size_t> q;
        q.push(s);
        seen[s] = 1;
        long closing = -1;
        while (!q.empty() && closing < 0) {
            auto u = q.front();
            q.pop();
            for (auto t : out[u]) {
                if (done[t]) continue;
                if (t == s) {
                    closing = long(u);
                    break;
                }
                if (!seen[t]) {
                    seen[t] = 1;
                    parent[t] = long(u);
                    q.push(t);
                }
            }
        }
        if (closing < 0) continue;
        std::vector<std::size_t> cyc;
        for (long v = closing; v != -1; v = parent[std::size_t(v)]) cyc.push_back(std::size_t(v));
        std::reverse(cyc.begin(), cyc.end());
        std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
        found.push_back(std::move(cyc));
    }
    std::size_t shortest = B + 1;
    for (const auto& c : found) shortest = std::min(shortest, c.size());
    std::vector<int> bottom_height(B, 0);
    for (std::size_t i = 0; i < p.parts.size(); ++i) bottom_height[slot[sole[i]]] = lat.height(p.parts[i].interval.bottom);
    std::vector<std::pair<std::pair<int, std::vector<std::size_t>>, std::vector<std::size_t>>> keyed;
    for (auto& c : found) {
        if (c.size() != shortest) continue;
        auto key = c;
        std::sort(key.begin(), key.end());
        int h = 0;
        for (auto b : c) h += bottom_height[b];
        keyed.push_back({{h, key}, c});
    }
    std::sort(keyed.begin(), keyed.end());
    keyed.erase(std::unique(keyed.begin(), keyed.end(),
                            [](const auto& a, const auto& b) { return a.first.second == b.first.second; }),
                keyed.end());
    for (const auto& [key, c] : keyed) {
        std::vector<Index> v;
        for (auto i : c) v.push_back(bases[i]);
        res.cycles.push_back(std::move(v));
    }
    if (!res.cycles.empty()) res.cycle = res.cycles.front();
    return res;
}

}  // namespace qtutte
