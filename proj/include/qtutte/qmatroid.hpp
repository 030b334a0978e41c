#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qtutte/gf_linalg.hpp"
#include "qtutte/lattice.hpp"

namespace qtutte {

/// One weight in {0,1} per cover, indexed like SupportLattice::covers().
using CoverWeighting = std::vector<std::uint8_t>;

enum class DiamondType { Full, Empty, Mixed, Prime };

const char* to_string(DiamondType t);

/// Type of the diamond [a, b] under w, or nullopt when the pattern is not
/// one of the four matroidal ones.
std::optional<DiamondType> diamond_type(const SupportLattice& lat, const CoverWeighting& w, Index a, Index b);

/// Throws AxiomError naming the first diamond that is not matroidal.
void check_matroidal(const SupportLattice& lat, const CoverWeighting& w);

/// A (q-)matroid: a support lattice with a rank per element.
class QMatroid {
public:
    /// Checks (R1), (R2), (R3) unless verify is false.
    static QMatroid from_ranks(SupportLattice lat, std::vector<int> rank, bool verify = true);
    static QMatroid uniform(SupportLattice lat, int k);
    /// entries: (representative, rank); every element must appear.
    static QMatroid from_table(SupportLattice lat, const std::vector<std::pair<std::string, int>>& entries,
                               bool verify = true);
    /// r(U) = rank of G * Y^T over G's field, Y a basis of U. On a Boolean
    /// lattice this is the column matroid of G.
    static QMatroid from_representable(SupportLattice lat, const FqMatrix& g, bool verify = true);
    /// Rank from cover weights along chains from the bottom. Rejects
    /// non-matroidal weightings and chain-dependent sums.
    static QMatroid from_weighting(SupportLattice lat, const CoverWeighting& w, bool verify = true);

    const SupportLattice& lattice() const { return lat_; }
    const std::vector<int>& ranks() const { return rank_; }
    int rank(Index x) const { return rank_[x]; }
    int nullity(Index x) const { return lat_.height(x) - rank_[x]; }
    int full_rank() const { return rank_[lat_.top()]; }
    int full_nullity() const { return nullity(lat_.top()); }

    int weight(std::size_t cover) const;
    int weight(Index lower, Index upper) const;
    CoverWeighting weighting() const;

    /// Throws DimensionError unless [a, b] has length 2.
    DiamondType classify_diamond(Index a, Index b) const;

    std::vector<Index> loops() const;
    std::vector<Index> coloops() const;
    Index closure(Index v) const;
    bool is_independent(Index v) const { return rank_[v] == lat_.height(v); }
    std::vector<Index> bases() const;

    /// The minor on [a, b]: r'(x) = r(x) - r(a).
    QMatroid minor(Index a, Index b) const;
    /// Same as minor() but also returns the index map into this lattice.
    std::pair<QMatroid, std::vector<Index>> minor_with_map(Index a, Index b) const;
    /// Dual through the lattice anti-automorphism (whole lattices only).
    QMatroid dual() const;
    /// Image under an invertible linear map (a permutation on Boolean
    /// lattices): the element spanned by rows Y goes to the span of Y * a.
    QMatroid apply_linear_map(const FqMatrix& a) const;

    /// Throws AxiomError with a witness on the first violated axiom.
    void verify() const;

    bool operator==(const QMatroid& o) const;

private:
    QMatroid(SupportLattice lat, std::vector<int> rank) : lat_(std::move(lat)), rank_(std::move(rank)) {}

    SupportLattice lat_;
    std::vector<int> rank_;
};

/// Cover weights from [lower-rep, upper-rep, w] triples. Every cover must be
/// listed exactly once.
CoverWeighting weighting_from_entries(const SupportLattice& lat,
                                      const std::vector<std::tuple<std::string, std::string, int>>& entries);

}  // namespace qtutte
