#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qtutte/gf_linalg.hpp"

namespace qtutte {

enum class LatticeKind { Boolean, Subspace };

using Index = std::uint32_t;

inline constexpr std::size_t kDefaultMaxElements = 100000;

struct Cover {
    Index lower;
    Index upper;
    bool operator==(const Cover&) const = default;
};

struct Interval {
    Index bottom;
    Index top;
    bool operator==(const Interval&) const = default;
    bool operator<(const Interval& o) const {
        return bottom != o.bottom ? bottom < o.bottom : top < o.top;
    }
};

namespace detail {
struct LatticeStore;
struct LatticeView;
}  // namespace detail

/// Number of elements of the Boolean lattice (q == 1) or of L(F_q^n),
/// saturating at UINT64_MAX.
std::uint64_t lattice_element_count(LatticeKind kind, std::uint32_t q, std::size_t n);

/// An interval of the Boolean lattice 2^[n] or of the subspace lattice of F_q^n.
/// Elements are indexed 0..size()-1 in (height, canonical key) order, so the
/// bottom is 0 and the top is size()-1. Copies share the underlying store.
class SupportLattice {
public:
    static SupportLattice boolean(std::size_t n, std::size_t max_elements = kDefaultMaxElements);
    static SupportLattice subspace(std::uint32_t q, std::size_t n,
                                   std::size_t max_elements = kDefaultMaxElements);
    static SupportLattice build(LatticeKind kind, std::uint32_t q, std::size_t n,
                                std::size_t max_elements = kDefaultMaxElements);

    LatticeKind kind() const;
    /// 1 for Boolean lattices.
    std::uint32_t q() const;
    /// Dimension (or set size) of the ambient space, not of this interval.
    std::size_t ambient_dim() const;
    /// Height of the top element.
    std::size_t length() const;
    std::size_t size() const;
    Index bottom() const { return 0; }
    Index top() const { return Index(size() - 1); }
    /// True when this is the whole ambient lattice rather than a proper interval.
    bool is_full() const;

    int height(Index x) const;
    bool leq(Index x, Index y) const;
    Index meet(Index x, Index y) const;
    Index join(Index x, Index y) const;

    const std::vector<Index>& up(Index x) const;
    const std::vector<Index>& down(Index x) const;
    /// Cover ids parallel to up(x).
    const std::vector<std::size_t>& up_cover_ids(Index x) const;
    const std::vector<std::size_t>& down_cover_ids(Index x) const;
    const std::vector<Cover>& covers() const;
    std::size_t cover_id(Index lower, Index upper) const;
    std::optional<std::size_t> find_cover(Index lower, Index upper) const;

    std::vector<Index> atoms() const;
    std::vector<Index> coatoms() const;
    std::vector<Index> elements_of_height(int h) const;
    std::vector<Index> complements(Index x) const;
    /// Elements strictly between a and b (for a diamond, its middle layer).
    std::vector<Index> middle(Index a, Index b) const;
    /// Every interval of length 2, ordered by (bottom, top).
    std::vector<Interval> diamonds() const;
    /// Elements of [a, b] in increasing index order.
    std::vector<Index> interval_elements(Index a, Index b) const;

    /// Order-reversing involution: set complement or orthogonal complement.
    /// Only defined on the whole lattice.
    Index anti_automorphism(Index x) const;

    struct Sub;
    /// [a, b] as a standalone lattice plus the map from its indices to ours.
    Sub interval_sublattice(Index a, Index b) const;

    /// Canonical text: "145" (Boolean), "101,010" (subspace rows), "0" for zero.
    std::string representative(Index x) const;
    std::optional<Index> try_find(const std::string& rep) const;
    /// Throws ParseError for malformed or foreign representatives.
    Index find(const std::string& rep) const;
    /// Element spanned by the rows of m (Boolean: rows must be unit vectors).
    std::optional<Index> find_span(const FqMatrix& m) const;

    /// RREF basis of a subspace element; for a Boolean element, the indicator
    /// rows e_i (i in the set) over F_2.
    FqMatrix basis(Index x) const;
    /// Members (0-based) of a Boolean element.
    std::vector<std::size_t> members(Index x) const;
    const FieldPtr& field() const;

    /// Id in the ambient lattice; equal ids mean equal elements.
    Index ambient_id(Index x) const;
    std::optional<Index> from_ambient(Index id) const;
    bool shares_ambient(const SupportLattice& o) const;

    std::string to_dot(const std::vector<std::uint8_t>* weights = nullptr) const;

private:
    SupportLattice(std::shared_ptr<const detail::LatticeStore> store,
                   std::shared_ptr<const detail::LatticeView> view)
        : store_(std::move(store)), view_(std::move(view)) {}

    Index local(Index ambient) const;

    std::shared_ptr<const detail::LatticeStore> store_;
    std::shared_ptr<const detail::LatticeView> view_;
};

struct SupportLattice::Sub {
    SupportLattice lattice;
    std::vector<Index> to_parent;
};

}  // namespace qtutte
