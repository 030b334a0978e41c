#include "qtutte/lattice.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <map>
#include <sstream>
#include <unordered_map>

#include "qtutte/errors.hpp"

namespace qtutte {

namespace detail {

// Elements are identified by the set of atoms below them. Meet is set
// intersection; join is obtained through the anti-automorphism.
struct LatticeStore {
    LatticeKind kind = LatticeKind::Boolean;
    std::uint32_t q = 1;
    std::size_t n = 0;
    FieldPtr field;
    std::size_t num_atoms = 0;
    std::size_t words = 1;

    std::vector<std::uint64_t> masks;
    std::vector<int> height;
    std::vector<FqMatrix> spaces;
    std::map<std::vector<FqElem>, Index> key_index;
    std::vector<Index> phi;
    std::vector<std::vector<Index>> up, down;

    std::vector<Index> slots;
    std::uint64_t slot_mask = 0;

    std::shared_ptr<const LatticeView> full_view;

    std::size_t size() const { return height.size(); }
    const std::uint64_t* mask(Index i) const { return masks.data() + std::size_t(i) * words; }

    static std::uint64_t hash(const std::uint64_t* m, std::size_t w) {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (std::size_t i = 0; i < w; ++i) {
            std::uint64_t z = m[i] + h + 0x9e3779b97f4a7c15ULL * (i + 1);
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            h ^= z ^ (z >> 31);
        }
        return h;
    }

    void insert(Index id) {
        std::uint64_t s = hash(mask(id), words) & slot_mask;
        while (slots[s] != std::numeric_limits<Index>::max()) s = (s + 1) & slot_mask;
        slots[s] = id;
    }

    std::optional<Index> lookup(const std::uint64_t* m) const {
        std::uint64_t s = hash(m, words) & slot_mask;
        while (slots[s] != std::numeric_limits<Index>::max()) {
            if (std::memcmp(mask(slots[s]), m, words * sizeof(std::uint64_t)) == 0) return slots[s];
            s = (s + 1) & slot_mask;
        }
        return std::nullopt;
    }

    Index meet(Index a, Index b) const {
        if (a == b) return a;
        const std::uint64_t* x = mask(a);
        const std::uint64_t* y = mask(b);
        if (words <= 16) {
            std::uint64_t buf[16];
            for (std::size_t i = 0; i < words; ++i) buf[i] = x[i] & y[i];
            return *lookup(buf);
        }
        std::vector<std::uint64_t> buf(words);
        for (std::size_t i = 0; i < words; ++i) buf[i] = x[i] & y[i];
        return *lookup(buf.data());
    }

    Index join(Index a, Index b) const {
        if (a == b) return a;
        if (kind == LatticeKind::Boolean) {
            const std::uint64_t* x = mask(a);
            const std::uint64_t* y = mask(b);
            std::vector<std::uint64_t> buf(words);
            for (std::size_t i = 0; i < words; ++i) buf[i] = x[i] | y[i];
            return *lookup(buf.data());
        }
        return phi[meet(phi[a], phi[b])];
    }

    bool leq(Index a, Index b) const {
        if (a == b) return true;
        if (height[a] > height[b]) return false;
        const std::uint64_t* x = mask(a);
        const std::uint64_t* y = mask(b);
        for (std::size_t i = 0; i < words; ++i)
            if (x[i] & ~y[i]) return false;
        return true;
    }

    bool has_atom(Index x, std::size_t atom) const { return (mask(x)[atom / 64] >> (atom % 64)) & 1U; }

    void finish();
};

struct LatticeView {
    std::vector<Index> ids;
    bool full = false;
    int h0 = 0;
    std::vector<int> height;
    std::vector<std::vector<Index>> up, down;
    std::vector<std::vector<std::size_t>> up_cid, down_cid;
    std::vector<Cover> covers;
};

namespace {

std::shared_ptr<LatticeView> make_view(const LatticeStore& st, std::vector<Index> ids, bool full) {
    auto v = std::make_shared<LatticeView>();
    v->ids = std::move(ids);
    v->full = full;
    const std::size_t n = v->ids.size();
    v->h0 = st.height[v->ids.front()];
    v->height.resize(n);
    v->up.resize(n);
    v->down.resize(n);
    v->up_cid.resize(n);
    v->down_cid.resize(n);
    const Index top = v->ids.back();
    auto to_local = [&](Index s) -> std::optional<Index> {
        if (full) return s;
        auto it = std::lower_bound(v->ids.begin(), v->ids.end(), s);
        if (it == v->ids.end() || *it != s) return std::nullopt;
        return Index(it - v->ids.begin());
    };
    for (std::size_t i = 0; i < n; ++i) {
        v->height[i] = st.height[v->ids[i]] - v->h0;
        for (Index s : st.up[v->ids[i]]) {
            if (!full && !st.leq(s, top)) continue;
            auto l = to_local(s);
            if (!l) continue;
            std::size_t cid = v->covers.size();
            v->covers.push_back({Index(i), *l});
            v->up[i].push_back(*l);
            v->up_cid[i].push_back(cid);
        }
    }
    for (std::size_t cid = 0; cid < v->covers.size(); ++cid) {
        const Cover& c = v->covers[cid];
        v->down[c.upper].push_back(c.lower);
        v->down_cid[c.upper].push_back(cid);
    }
    return v;
}

}  // namespace

void LatticeStore::finish() {
    const std::size_t N = size();
    std::size_t cap = 1;
    while (cap < 2 * N + 2) cap <<= 1;
    slots.assign(cap, std::numeric_limits<Index>::max());
    slot_mask = cap - 1;
    for (Index i = 0; i < N; ++i) insert(i);
}

}  // namespace detail

using detail::LatticeStore;
using detail::LatticeView;

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

// Gaussian binomial by the q-Pascal rule, saturating.
std::uint64_t gauss_sat(std::size_t n, std::size_t k, std::uint64_t q) {
    if (k > n) return 0;
    std::vector<std::uint64_t> row(k + 1, 0);
    row[0] = 1;
    for (std::size_t m = 1; m <= n; ++m) {
        for (std::size_t j = std::min(m, k); j >= 1; --j) {
            std::uint64_t qj = 1;
            for (std::size_t t = 0; t < j; ++t) qj = sat_mul(qj, q);
            row[j] = sat_add(row[j - 1], sat_mul(qj, row[j]));
        }
    }
    return row[k];
}

constexpr std::size_t kMaxMaskWords = std::size_t(1) << 24;

void check_size(LatticeKind kind, std::uint32_t q, std::size_t n, std::size_t max_elements) {
    std::uint64_t count = lattice_element_count(kind, q, n);
    if (count > max_elements)
        throw ResourceError("lattice has " + std::to_string(count) + " elements, above the cap of " +
                            std::to_string(max_elements) + " (raise --max-elements to override)");
    std::uint64_t atoms = kind == LatticeKind::Boolean ? n : gauss_sat(n, 1, q);
    std::uint64_t words = (atoms + 63) / 64;
    if (sat_mul(words == 0 ? 1 : words, count) > kMaxMaskWords)
        throw ResourceError("lattice too large to index (" + std::to_string(count) + " elements, " +
                            std::to_string(atoms) + " atoms)");
}

std::string boolean_rep(const std::vector<std::size_t>& members, std::size_t n) {
    if (members.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (n > 9 && i) out += '.';
        out += std::to_string(members[i] + 1);
    }
    return out;
}

std::string strip(const std::string& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        // angle brackets U+27E8 / U+27E9 (3 bytes each in UTF-8)
        if (c == 0xE2 && i + 2 < s.size() && static_cast<unsigned char>(s[i + 1]) == 0x9F &&
            (static_cast<unsigned char>(s[i + 2]) == 0xA8 || static_cast<unsigned char>(s[i + 2]) == 0xA9)) {
            i += 2;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '<' || c == '>' || c == '{' || c == '}' || c == '[' || c == ']') continue;
        out += char(c);
    }
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

bool parse_uint(const std::string& s, std::uint64_t& out) {
    if (s.empty() || s.size() > 9) return false;
    out = 0;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
        out = out * 10 + std::uint64_t(c - '0');
    }
    return true;
}

}  // namespace

std::uint64_t lattice_element_count(LatticeKind kind, std::uint32_t q, std::size_t n) {
    if (kind == LatticeKind::Boolean) return n >= 64 ? std::numeric_limits<std::uint64_t>::max() : (1ULL << n);
    std::uint64_t total = 0;
    for (std::size_t k = 0; k <= n; ++k) total = sat_add(total, gauss_sat(n, k, q));
    return total;
}

SupportLattice SupportLattice::build(LatticeKind kind, std::uint32_t q, std::size_t n, std::size_t max_elements) {
    return kind == LatticeKind::Boolean ? boolean(n, max_elements) : subspace(q, n, max_elements);
}

SupportLattice SupportLattice::boolean(std::size_t n, std::size_t max_elements) {
    check_size(LatticeKind::Boolean, 1, n, max_elements);
    auto st = std::make_shared<LatticeStore>();
    st->kind = LatticeKind::Boolean;
    st->q = 1;
    st->n = n;
    st->field = Field::of_order(2);
    st->num_atoms = n;
    st->words = std::max<std::size_t>(1, (n + 63) / 64);
    const std::size_t W = st->words;
    // subsets by size, then lexicographically by sorted member list
    for (std::size_t k = 0; k <= n; ++k) {
        std::vector<std::size_t> c(k);
        for (std::size_t i = 0; i < k; ++i) c[i] = i;
        while (true) {
            std::vector<std::uint64_t> m(W, 0);
            for (auto i : c) m[i / 64] |= 1ULL << (i % 64);
            st->masks.insert(st->masks.end(), m.begin(), m.end());
            st->height.push_back(int(k));
            std::size_t i = k;
            while (i > 0 && c[i - 1] == n - k + i - 1) --i;
            if (i == 0) break;
            ++c[i - 1];
            for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
        }
    }
    st->finish();
    const std::size_t N = st->size();
    st->phi.resize(N);
    std::vector<std::uint64_t> buf(W);
    for (Index x = 0; x < N; ++x) {
        const std::uint64_t* m = st->mask(x);
        for (std::size_t w = 0; w < W; ++w) buf[w] = ~m[w];
        if (n % 64) buf[W - 1] &= (1ULL << (n % 64)) - 1;
        if (n == 0) buf[0] = 0;
        st->phi[x] = *st->lookup(buf.data());
    }
    st->up.resize(N);
    st->down.resize(N);
    for (Index x = 0; x < N; ++x) {
        const std::uint64_t* m = st->mask(x);
        for (std::size_t a = 0; a < n; ++a) {
            if ((m[a / 64] >> (a % 64)) & 1U) continue;
            std::copy(m, m + W, buf.begin());
            buf[a / 64] |= 1ULL << (a % 64);
            st->up[x].push_back(*st->lookup(buf.data()));
        }
        std::sort(st->up[x].begin(), st->up[x].end());
        for (Index y : st->up[x]) st->down[y].push_back(x);
    }
    std::vector<Index> ids(N);
    for (Index i = 0; i < N; ++i) ids[i] = i;
    st->full_view = detail::make_view(*st, std::move(ids), true);
    return SupportLattice(st, st->full_view);
}

SupportLattice SupportLattice::subspace(std::uint32_t q, std::size_t n, std::size_t max_elements) {
    auto field = Field::of_order(q);
    check_size(LatticeKind::Subspace, q, n, max_elements);
    auto st = std::make_shared<LatticeStore>();
    st->kind = LatticeKind::Subspace;
    st->q = q;
    st->n = n;
    st->field = field;
    for (std::size_t k = 0; k <= n; ++k) {
        for (auto& s : enumerate_subspaces(field, n, k)) {
            st->key_index.emplace(s.flattened(), Index(st->spaces.size()));
            st->spaces.push_back(std::move(s));
            st->height.push_back(int(k));
        }
    }
    const std::size_t N = st->size();
    // points are the atoms, ids 1..A; key a row by its base-q value
    std::unordered_map<std::uint64_t, std::size_t> point_of;
    auto row_key = [&](const std::vector<FqElem>& r) {
        std::uint64_t v = 0;
        for (auto e : r) v = v * q + e;
        return v;
    };
    for (Index i = 0; i < N && st->height[i] <= 1; ++i) {
        if (st->height[i] == 1) point_of.emplace(row_key(st->spaces[i].row(0)), point_of.size());
    }
    st->num_atoms = point_of.size();
    st->words = std::max<std::size_t>(1, (st->num_atoms + 63) / 64);
    const std::size_t W = st->words;
    st->masks.assign(N * W, 0);
    const Field& f = *field;
    for (Index i = 0; i < N; ++i) {
        const FqMatrix& y = st->spaces[i];
        const std::size_t k = y.num_rows();
        if (k == 0) continue;
        std::uint64_t* m = st->masks.data() + std::size_t(i) * W;
        // combinations whose first nonzero coefficient is 1 hit every point once
        for (std::size_t lead = 0; lead < k; ++lead) {
            std::size_t tail = k - lead - 1;
            std::vector<FqElem> coef(tail, 0);
            while (true) {
                std::vector<FqElem> v = y.row(lead);
                for (std::size_t t = 0; t < tail; ++t) {
                    FqElem c = coef[t];
                    if (c == 0) continue;
                    const auto& r = y.row(lead + 1 + t);
                    for (std::size_t j = 0; j < n; ++j)
                        if (r[j]) v[j] = f.add(v[j], f.mul(c, r[j]));
                }
                std::size_t p = point_of.at(row_key(v));
                m[p / 64] |= 1ULL << (p % 64);
                std::size_t t = 0;
                while (t < tail && ++coef[t] == q) coef[t++] = 0;
                if (t == tail) break;
            }
        }
    }
    st->finish();
    st->phi.resize(N);
    for (Index i = 0; i < N; ++i) st->phi[i] = st->key_index.at(orthogonal_complement(st->spaces[i]).flattened());
    st->up.resize(N);
    st->down.resize(N);
    for (Index x = 0; x < N; ++x) {
        std::vector<Index>& ups = st->up[x];
        for (std::size_t a = 0; a < st->num_atoms; ++a) {
            if (st->has_atom(x, a)) continue;
            ups.push_back(st->join(x, Index(a + 1)));
        }
        std::sort(ups.begin(), ups.end());
        ups.erase(std::unique(ups.begin(), ups.end()), ups.end());
        for (Index y : ups) st->down[y].push_back(x);
    }
    std::vector<Index> ids(N);
    for (Index i = 0; i < N; ++i) ids[i] = i;
    st->full_view = detail::make_view(*st, std::move(ids), true);
    return SupportLattice(st, st->full_view);
}

LatticeKind SupportLattice::kind() const { return store_->kind; }
std::uint32_t SupportLattice::q() const { return store_->q; }
std::size_t SupportLattice::ambient_dim() const { return store_->n; }
std::size_t SupportLattice::length() const { return std::size_t(view_->height.back()); }
std::size_t SupportLattice::size() const { return view_->ids.size(); }
bool SupportLattice::is_full() const { return view_->full; }
int SupportLattice::height(Index x) const { return view_->height[x]; }

Index SupportLattice::local(Index s) const {
    if (view_->full) return s;
    auto it = std::lower_bound(view_->ids.begin(), view_->ids.end(), s);
    return Index(it - view_->ids.begin());
}

bool SupportLattice::leq(Index x, Index y) const { return store_->leq(view_->ids[x], view_->ids[y]); }
Index SupportLattice::meet(Index x, Index y) const { return local(store_->meet(view_->ids[x], view_->ids[y])); }
Index SupportLattice::join(Index x, Index y) const { return local(store_->join(view_->ids[x], view_->ids[y])); }

const std::vector<Index>& SupportLattice::up(Index x) const { return view_->up[x]; }
const std::vector<Index>& SupportLattice::down(Index x) const { return view_->down[x]; }
const std::vector<std::size_t>& SupportLattice::up_cover_ids(Index x) const { return view_->up_cid[x]; }
const std::vector<std::size_t>& SupportLattice::down_cover_ids(Index x) const { return view_->down_cid[x]; }
const std::vector<Cover>& SupportLattice::covers() const { return view_->covers; }

std::optional<std::size_t> SupportLattice::find_cover(Index lower, Index upper) const {
    const auto& u = view_->up[lower];
    auto it = std::lower_bound(u.begin(), u.end(), upper);
    if (it == u.end() || *it != upper) return std::nullopt;
    return view_->up_cid[lower][std::size_t(it - u.begin())];
}

std::size_t SupportLattice::cover_id(Index lower, Index upper) const {
    auto c = find_cover(lower, upper);
    if (!c)
        throw PreconditionError("[" + representative(lower) + ", " + representative(upper) + "] is not a cover");
    return *c;
}

std::vector<Index> SupportLattice::elements_of_height(int h) const {
    std::vector<Index> out;
    for (Index i = 0; i < size(); ++i)
        if (view_->height[i] == h) out.push_back(i);
    return out;
}

std::vector<Index> SupportLattice::atoms() const { return up(bottom()); }
std::vector<Index> SupportLattice::coatoms() const { return down(top()); }

std::vector<Index> SupportLattice::complements(Index x) const {
    std::vector<Index> out;
    const int want = int(length()) - height(x);
    for (Index y = 0; y < size(); ++y) {
        if (height(y) != want) continue;
        if (meet(x, y) == bottom() && join(x, y) == top()) out.push_back(y);
    }
    return out;
}

std::vector<Index> SupportLattice::interval_elements(Index a, Index b) const {
    if (!leq(a, b))
        throw PreconditionError("[" + representative(a) + ", " + representative(b) + "] is not an interval");
    std::vector<Index> out{a};
    std::vector<char> seen(size(), 0);
    seen[a] = 1;
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (Index y : up(out[i])) {
            if (seen[y] || !leq(y, b)) continue;
            seen[y] = 1;
            out.push_back(y);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Index> SupportLattice::middle(Index a, Index b) const {
    auto all = interval_elements(a, b);
    std::vector<Index> out;
    for (Index x : all)
        if (x != a && x != b) out.push_back(x);
    return out;
}

std::vector<Interval> SupportLattice::diamonds() const {
    std::vector<Interval> out;
    for (Index x = 0; x < size(); ++x) {
        std::vector<Index> tops;
        for (Index y : up(x))
            for (Index z : up(y)) tops.push_back(z);
        std::sort(tops.begin(), tops.end());
        tops.erase(std::unique(tops.begin(), tops.end()), tops.end());
        for (Index z : tops) out.push_back({x, z});
    }
    return out;
}

Index SupportLattice::anti_automorphism(Index x) const {
    if (!view_->full) throw PreconditionError("the anti-automorphism is only defined on a whole lattice");
    return store_->phi[x];
}

SupportLattice::Sub SupportLattice::interval_sublattice(Index a, Index b) const {
    auto elems = interval_elements(a, b);
    if (a == bottom() && b == top()) return {*this, elems};
    std::vector<Index> ids;
    ids.reserve(elems.size());
    for (Index e : elems) ids.push_back(view_->ids[e]);
    bool full = ids.size() == store_->size();
    std::shared_ptr<const LatticeView> v =
        full ? store_->full_view : detail::make_view(*store_, std::move(ids), false);
    return {SupportLattice(store_, v), std::move(elems)};
}

std::vector<std::size_t> SupportLattice::members(Index x) const {
    std::vector<std::size_t> out;
    const Index s = view_->ids[x];
    for (std::size_t a = 0; a < store_->num_atoms; ++a)
        if (store_->has_atom(s, a)) out.push_back(a);
    return out;
}

FqMatrix SupportLattice::basis(Index x) const {
    if (store_->kind == LatticeKind::Subspace) return store_->spaces[view_->ids[x]];
    std::vector<std::vector<FqElem>> rows;
    for (auto m : members(x)) {
        std::vector<FqElem> r(store_->n, 0);
        r[m] = 1;
        rows.push_back(std::move(r));
    }
    return FqMatrix(store_->field, store_->n, std::move(rows));
}

const FieldPtr& SupportLattice::field() const { return store_->field; }

std::string SupportLattice::representative(Index x) const {
    if (store_->kind == LatticeKind::Boolean) return boolean_rep(members(x), store_->n);
    return store_->spaces[view_->ids[x]].to_string();
}

std::optional<Index> SupportLattice::try_find(const std::string& raw) const {
    std::string rep = strip(raw);
    if (rep == "bottom") return bottom();
    if (rep == "top") return top();
    const std::size_t n = store_->n;
    std::optional<Index> amb;
    if (store_->kind == LatticeKind::Boolean) {
        std::vector<std::uint64_t> m(store_->words, 0);
        if (rep != "0" && !rep.empty()) {
            std::vector<std::string> parts;
            // above 9 elements a bare number is one element: "10" is {10}, not {1, 0}
            if (n > 9 || rep.find('.') != std::string::npos || rep.find(',') != std::string::npos) {
                for (char& c : rep)
                    if (c == ',') c = '.';
                parts = split(rep, '.');
            } else {
                for (char c : rep) parts.emplace_back(1, c);
            }
            for (const auto& p : parts) {
                std::uint64_t v = 0;
                if (!parse_uint(p, v) || v < 1 || v > n) return std::nullopt;
                m[(v - 1) / 64] |= 1ULL << ((v - 1) % 64);
            }
        }
        amb = store_->lookup(m.data());
    } else {
        std::vector<std::vector<FqElem>> rows;
        if (rep != "0") {
            for (const auto& r : split(rep, ',')) {
                std::vector<FqElem> row;
                if (r.find('.') != std::string::npos) {
                    for (const auto& tok : split(r, '.')) {
                        std::uint64_t v = 0;
                        if (!parse_uint(tok, v) || v >= store_->q) return std::nullopt;
                        row.push_back(FqElem(v));
                    }
                } else {
                    if (store_->q > 10) return std::nullopt;
                    for (char c : r) {
                        if (c < '0' || c > '9' || FqElem(c - '0') >= store_->q) return std::nullopt;
                        row.push_back(FqElem(c - '0'));
                    }
                }
                if (row.size() != n) return std::nullopt;
                rows.push_back(std::move(row));
            }
        }
        auto key = rref(FqMatrix(store_->field, n, std::move(rows))).basis.flattened();
        auto it = store_->key_index.find(key);
        if (it != store_->key_index.end()) amb = it->second;
    }
    if (!amb) return std::nullopt;
    return from_ambient(*amb);
}

Index SupportLattice::find(const std::string& rep) const {
    auto r = try_find(rep);
    if (!r) throw ParseError("'" + rep + "' does not name an element of this lattice");
    return *r;
}

std::optional<Index> SupportLattice::find_span(const FqMatrix& m) const {
    if (m.cols() != store_->n) throw DimensionError("matrix has " + std::to_string(m.cols()) + " columns, lattice has dimension " + std::to_string(store_->n));
    std::optional<Index> amb;
    if (store_->kind == LatticeKind::Boolean) {
        std::vector<std::uint64_t> mask(store_->words, 0);
        for (const auto& r : m.rows()) {
            std::size_t nz = 0, pos = 0;
            for (std::size_t j = 0; j < r.size(); ++j)
                if (r[j]) {
                    ++nz;
                    pos = j;
                }
            if (nz == 0) continue;
            if (nz != 1) return std::nullopt;
            mask[pos / 64] |= 1ULL << (pos % 64);
        }
        amb = store_->lookup(mask.data());
    } else {
        auto it = store_->key_index.find(rref(embed(m, store_->field)).basis.flattened());
        if (it != store_->key_index.end()) amb = it->second;
    }
    if (!amb) return std::nullopt;
    return from_ambient(*amb);
}

Index SupportLattice::ambient_id(Index x) const { return view_->ids[x]; }

std::optional<Index> SupportLattice::from_ambient(Index s) const {
    if (view_->full) return s < size() ? std::optional<Index>(s) : std::nullopt;
    auto it = std::lower_bound(view_->ids.begin(), view_->ids.end(), s);
    if (it == view_->ids.end() || *it != s) return std::nullopt;
    return Index(it - view_->ids.begin());
}

bool SupportLattice::shares_ambient(const SupportLattice& o) const { return store_ == o.store_; }

std::string SupportLattice::to_dot(const std::vector<std::uint8_t>* weights) const {
    std::ostringstream os;
    os << "digraph lattice {\n  rankdir=BT;\n  node [shape=plaintext];\n";
    for (Index i = 0; i < size(); ++i) os << "  n" << i << " [label=\"" << representative(i) << "\"];\n";
    const auto& cs = covers();
    for (std::size_t c = 0; c < cs.size(); ++c) {
        os << "  n" << cs[c].lower << " -> n" << cs[c].upper;
        if (weights) {
            int w = (*weights)[c];
            os << " [label=\"" << w << "\", color=" << (w ? "red" : "green") << "]";
        }
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace qtutte
