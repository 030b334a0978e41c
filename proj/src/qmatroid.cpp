#include "qtutte/qmatroid.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qtutte/errors.hpp"

namespace qtutte {

const char* to_string(DiamondType t) {
    switch (t) {
        case DiamondType::Full: return "full";
        case DiamondType::Empty: return "empty";
        case DiamondType::Mixed: return "mixed";
        case DiamondType::Prime: return "prime";
    }
    return "?";
}

namespace {

std::string iv(const SupportLattice& lat, Index a, Index b) {
    return "[" + lat.representative(a) + ", " + lat.representative(b) + "]";
}

// Middle layer of [a, b] together with the lower and upper cover weights.
struct DiamondWeights {
    std::vector<Index> mid;
    std::vector<int> lo, hi;
};

DiamondWeights diamond_weights(const SupportLattice& lat, const CoverWeighting& w, Index a, Index b) {
    if (lat.height(b) - lat.height(a) != 2 || !lat.leq(a, b))
        throw DimensionError(iv(lat, a, b) + " is not a diamond");
    DiamondWeights d;
    const auto& ups = lat.up(a);
    const auto& cids = lat.up_cover_ids(a);
    for (std::size_t i = 0; i < ups.size(); ++i) {
        Index x = ups[i];
        if (!lat.leq(x, b)) continue;
        d.mid.push_back(x);
        d.lo.push_back(w[cids[i]]);
        d.hi.push_back(w[lat.cover_id(x, b)]);
    }
    return d;
}

}  // namespace

std::optional<DiamondType> diamond_type(const SupportLattice& lat, const CoverWeighting& w, Index a, Index b) {
    auto d = diamond_weights(lat, w, a, b);
    std::size_t n10 = 0, n01 = 0, n11 = 0, n00 = 0;
    for (std::size_t i = 0; i < d.mid.size(); ++i) {
        if (d.lo[i] == 1 && d.hi[i] == 1) ++n11;
        else if (d.lo[i] == 0 && d.hi[i] == 0) ++n00;
        else if (d.lo[i] == 1) ++n10;
        else ++n01;
    }
    const std::size_t m = d.mid.size();
    if (n11 == m) return DiamondType::Full;
    if (n00 == m) return DiamondType::Empty;
    if (n10 == m) return DiamondType::Prime;
    if (n01 == 1 && n10 == m - 1) return DiamondType::Mixed;
    return std::nullopt;
}

void check_matroidal(const SupportLattice& lat, const CoverWeighting& w) {
    if (w.size() != lat.covers().size())
        throw DimensionError("weighting has " + std::to_string(w.size()) + " entries, lattice has " +
                             std::to_string(lat.covers().size()) + " covers");
    for (auto v : w)
        if (v > 1) throw AxiomError("cover weights must be 0 or 1");
    for (const auto& d : lat.diamonds()) {
        if (!diamond_type(lat, w, d.bottom, d.top)) {
            auto dw = diamond_weights(lat, w, d.bottom, d.top);
            std::string detail;
            for (std::size_t i = 0; i < dw.mid.size(); ++i)
                detail += " " + lat.representative(dw.mid[i]) + ":" + std::to_string(dw.lo[i]) + "/" +
                          std::to_string(dw.hi[i]);
            throw AxiomError("weighting is not matroidal: diamond " + iv(lat, d.bottom, d.top) +
                             " is not full, empty, mixed or prime (middle lower/upper weights:" + detail + ")");
        }
    }
}

QMatroid QMatroid::from_ranks(SupportLattice lat, std::vector<int> rank, bool verify) {
    if (rank.size() != lat.size())
        throw DimensionError("rank vector has " + std::to_string(rank.size()) + " entries, lattice has " +
                             std::to_string(lat.size()));
    QMatroid m(std::move(lat), std::move(rank));
    if (verify) m.verify();
    return m;
}

QMatroid QMatroid::uniform(SupportLattice lat, int k) {
    if (k < 0 || std::size_t(k) > lat.length())
        throw DimensionError("uniform rank " + std::to_string(k) + " outside 0.." + std::to_string(lat.length()));
    std::vector<int> r(lat.size());
    for (Index i = 0; i < lat.size(); ++i) r[i] = std::min(k, lat.height(i));
    return QMatroid(std::move(lat), std::move(r));
}

QMatroid QMatroid::from_table(SupportLattice lat, const std::vector<std::pair<std::string, int>>& entries,
                              bool verify) {
    std::vector<int> r(lat.size(), -1);
    for (const auto& [rep, val] : entries) {
        Index x = lat.find(rep);
        if (r[x] != -1 && r[x] != val)
            throw ParseError("conflicting ranks given for " + lat.representative(x));
        r[x] = val;
    }
    for (Index x = 0; x < lat.size(); ++x)
        if (r[x] == -1) throw ParseError("no rank given for " + lat.representative(x));
    return from_ranks(std::move(lat), std::move(r), verify);
}

QMatroid QMatroid::from_representable(SupportLattice lat, const FqMatrix& g, bool verify) {
    if (g.cols() != lat.ambient_dim())
        throw DimensionError("matrix has " + std::to_string(g.cols()) + " columns, ambient dimension is " +
                             std::to_string(lat.ambient_dim()));
    const FieldPtr& gf = g.field();
    std::vector<int> r(lat.size());
    if (lat.kind() == LatticeKind::Subspace) {
        const Field& lf = *lat.field();
        if (lf.m() != 1 || lf.p() != gf->p())
            throw FieldError("matrix over " + gf->describe() + " cannot represent a q-matroid over " + lf.describe());
        for (Index x = 0; x < lat.size(); ++x) {
            FqMatrix y = embed(lat.basis(x), gf);
            r[x] = y.num_rows() == 0 ? 0 : int(matrix_rank(multiply(g, transpose(y))));
        }
    } else {
        for (Index x = 0; x < lat.size(); ++x) {
            std::vector<std::vector<FqElem>> cols;
            for (auto c : lat.members(x)) {
                std::vector<FqElem> col;
                for (const auto& row : g.rows()) col.push_back(row[c]);
                cols.push_back(std::move(col));
            }
            r[x] = cols.empty() ? 0 : int(matrix_rank(FqMatrix(gf, g.num_rows(), std::move(cols))));
        }
    }
    return from_ranks(std::move(lat), std::move(r), verify);
}

QMatroid QMatroid::from_weighting(SupportLattice lat, const CoverWeighting& w, bool verify) {
    check_matroidal(lat, w);
    std::vector<int> r(lat.size(), 0);
    // rank along the chain of first predecessors
    for (Index x = 1; x < lat.size(); ++x) {
        Index d = lat.down(x).front();
        r[x] = r[d] + w[lat.down_cover_ids(x).front()];
    }
    auto chain_to = [&](Index x) {
        std::vector<Index> c{x};
        while (x != lat.bottom()) {
            x = lat.down(x).front();
            c.push_back(x);
        }
        std::reverse(c.begin(), c.end());
        return c;
    };
    auto chain_text = [&](const std::vector<Index>& c) {
        std::string s;
        int sum = 0;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) {
                sum += w[lat.cover_id(c[i - 1], c[i])];
                s += " < ";
            }
            s += lat.representative(c[i]);
        }
        return s + " (weight " + std::to_string(sum) + ")";
    };
    const auto& cs = lat.covers();
    for (std::size_t c = 0; c < cs.size(); ++c) {
        if (r[cs[c].upper] - r[cs[c].lower] == w[c]) continue;
        auto first = chain_to(cs[c].upper);
        auto second = chain_to(cs[c].lower);
        second.push_back(cs[c].upper);
        throw AxiomError("weighting is chain-dependent: " + chain_text(first) + " versus " + chain_text(second));
    }
    return from_ranks(std::move(lat), std::move(r), verify);
}

void QMatroid::verify() const {
    const auto& lat = lat_;
    for (Index x = 0; x < lat.size(); ++x) {
        if (rank_[x] < 0 || rank_[x] > lat.height(x))
            throw AxiomError("(R1) violated at " + lat.representative(x) + ": r = " + std::to_string(rank_[x]) +
                             ", h = " + std::to_string(lat.height(x)));
    }
    for (const auto& c : lat.covers()) {
        int d = rank_[c.upper] - rank_[c.lower];
        if (d < 0)
            throw AxiomError("(R2) violated on " + iv(lat, c.lower, c.upper) + ": r drops from " +
                             std::to_string(rank_[c.lower]) + " to " + std::to_string(rank_[c.upper]));
        if (d > 1)
            throw AxiomError("cover " + iv(lat, c.lower, c.upper) + " has weight " + std::to_string(d));
    }
    for (Index x = 0; x < lat.size(); ++x) {
        for (Index y = x + 1; y < lat.size(); ++y) {
            if (lat.height(x) == lat.height(y) || !lat.leq(x, y)) {
                Index j = lat.join(x, y), m = lat.meet(x, y);
                if (rank_[j] + rank_[m] > rank_[x] + rank_[y])
                    throw AxiomError("(R3) violated for x = " + lat.representative(x) + ", y = " +
                                     lat.representative(y) + ": r(x v y) + r(x ^ y) = " +
                                     std::to_string(rank_[j] + rank_[m]) + " > r(x) + r(y) = " +
                                     std::to_string(rank_[x] + rank_[y]));
            }
        }
    }
}

int QMatroid::weight(std::size_t cover) const {
    const Cover& c = lat_.covers()[cover];
    return rank_[c.upper] - rank_[c.lower];
}

int QMatroid::weight(Index lower, Index upper) const { return weight(lat_.cover_id(lower, upper)); }

CoverWeighting QMatroid::weighting() const {
    const auto& cs = lat_.covers();
    CoverWeighting w(cs.size());
    for (std::size_t c = 0; c < cs.size(); ++c) w[c] = std::uint8_t(rank_[cs[c].upper] - rank_[cs[c].lower]);
    return w;
}

DiamondType QMatroid::classify_diamond(Index a, Index b) const {
    auto t = diamond_type(lat_, weighting(), a, b);
    if (!t) throw AxiomError("diamond " + iv(lat_, a, b) + " is not matroidal");
    return *t;
}

std::vector<Index> QMatroid::loops() const {
    std::vector<Index> out;
    for (Index a : lat_.atoms())
        if (rank_[a] == 0) out.push_back(a);
    return out;
}

std::vector<Index> QMatroid::coloops() const {
    std::vector<Index> out;
    for (Index c : lat_.coatoms())
        if (rank_[c] == full_rank() - 1) out.push_back(c);
    return out;
}

Index QMatroid::closure(Index v) const {
    Index acc = lat_.bottom();
    for (Index e : lat_.atoms())
        if (rank_[lat_.join(v, e)] == rank_[v]) acc = lat_.join(acc, e);
    return acc;
}

std::vector<Index> QMatroid::bases() const {
    std::vector<Index> out;
    for (Index x = 0; x < lat_.size(); ++x)
        if (rank_[x] == lat_.height(x) && rank_[x] == full_rank()) out.push_back(x);
    return out;
}

std::pair<QMatroid, std::vector<Index>> QMatroid::minor_with_map(Index a, Index b) const {
    auto sub = lat_.interval_sublattice(a, b);
    std::vector<int> r(sub.to_parent.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = rank_[sub.to_parent[i]] - rank_[a];
    return {QMatroid(std::move(sub.lattice), std::move(r)), std::move(sub.to_parent)};
}

QMatroid QMatroid::minor(Index a, Index b) const { return minor_with_map(a, b).first; }

QMatroid QMatroid::dual() const {
    const int h1 = int(lat_.length()), r1 = full_rank();
    std::vector<int> r(lat_.size());
    for (Index x = 0; x < lat_.size(); ++x) r[lat_.anti_automorphism(x)] = h1 - lat_.height(x) - (r1 - rank_[x]);
    return QMatroid(lat_, std::move(r));
}

QMatroid QMatroid::apply_linear_map(const FqMatrix& a) const {
    const std::size_t n = lat_.ambient_dim();
    if (!lat_.is_full()) throw PreconditionError("linear maps act on whole lattices only");
    if (a.cols() != n || a.num_rows() != n || matrix_rank(a) != n)
        throw DimensionError("linear map must be an invertible " + std::to_string(n) + "x" + std::to_string(n) +
                             " matrix");
    std::vector<int> r(lat_.size(), -1);
    for (Index x = 0; x < lat_.size(); ++x) {
        FqMatrix b = lat_.basis(x);
        std::optional<Index> y = b.num_rows() == 0 ? std::optional<Index>(lat_.bottom())
                                                   : lat_.find_span(multiply(b, a));
        if (!y) throw DimensionError("map does not preserve the lattice (not a permutation?)");
        r[*y] = rank_[x];
    }
    if (std::find(r.begin(), r.end(), -1) != r.end()) throw DimensionError("linear map is not a bijection");
    return QMatroid(lat_, std::move(r));
}

bool QMatroid::operator==(const QMatroid& o) const {
    if (!lat_.shares_ambient(o.lat_) || lat_.size() != o.lat_.size()) return false;
    for (Index x = 0; x < lat_.size(); ++x)
        if (lat_.ambient_id(x) != o.lat_.ambient_id(x)) return false;
    return rank_ == o.rank_;
}

CoverWeighting weighting_from_entries(const SupportLattice& lat,
                                      const std::vector<std::tuple<std::string, std::string, int>>& entries) {
    CoverWeighting w(lat.covers().size(), 2);
    for (const auto& [lo, up, val] : entries) {
        Index a = lat.find(lo), b = lat.find(up);
        auto c = lat.find_cover(a, b);
        if (!c) throw ParseError(iv(lat, a, b) + " is not a cover");
        if (val != 0 && val != 1) throw ParseError("weight of " + iv(lat, a, b) + " must be 0 or 1");
        if (w[*c] != 2 && w[*c] != val) throw ParseError("conflicting weights for " + iv(lat, a, b));
        w[*c] = std::uint8_t(val);
    }
    for (std::size_t c = 0; c < w.size(); ++c)
        if (w[c] == 2)
            throw ParseError("no weight given for cover " + iv(lat, lat.covers()[c].lower, lat.covers()[c].upper));
    return w;
}

}  // namespace qtutte
