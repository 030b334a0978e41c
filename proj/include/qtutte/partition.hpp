#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qtutte/lattice.hpp"
#include "qtutte/qmatroid.hpp"

namespace qtutte {

struct Part {
    Interval interval;
    /// r(top) - r(bottom) and the nullity of the top inside the part.
    int rank = 0;
    int nullity = 0;
};

struct IntervalPartition {
    std::vector<Part> parts;
    std::size_t size() const { return parts.size(); }
};

/// Attach per-part rank and nullity to bare intervals.
IntervalPartition make_partition(const QMatroid& m, const std::vector<Interval>& intervals);

bool is_totally_clopen(const QMatroid& m, Index z);
/// Endpoint of a greedy weight-0 chain from the bottom, if it is totally clopen.
std::optional<Index> totally_clopen(const QMatroid& m);

enum class PrimeFreeMethod { Clopen, DiamondScan };
bool is_prime_free(const QMatroid& m, PrimeFreeMethod method = PrimeFreeMethod::Clopen);
/// First prime diamond in (bottom, top) order.
std::optional<Interval> find_prime_diamond(const QMatroid& m);

struct SplittingPair {
    Index e;  ///< atom
    Index c;  ///< coatom not above e
};

/// e: independent atom below every coloop; c: coatom containing cl(0) but
/// not e. Smallest indices win.
SplittingPair select_splitting_pair(const QMatroid& m);
bool is_valid_splitting_pair(const QMatroid& m, Index e, Index c);

/// [e, 1], [0, c] and atom-to-coatom intervals covering the rest. The
/// matching is checked to give disjoint intervals; failing that, seeded
/// retries and finally an exact-cover search are used.
IntervalPartition minimal_q_partition(const QMatroid& m, Index e, Index c, std::uint64_t seed = 0,
                                      int retries = 32);

/// A minimal q-partition when one exists. Otherwise [e, 1], [0, c] and an
/// exact cover of the remainder by intervals with independent bottom and
/// spanning top, largest first. `minimal` reports which case applied.
IntervalPartition split_partition(const QMatroid& m, Index e, Index c, std::uint64_t seed = 0,
                                  bool* minimal = nullptr);

/// Recursive splitting; a minor with no split through its splitting pair is
/// tiled directly by tutte_partition_by_cover.
IntervalPartition tutte_partition(const QMatroid& m, std::uint64_t seed = 0);
/// Exact cover of the lattice by prime-free intervals with independent bottom
/// and spanning top. Throws PartitionError if there is none.
IntervalPartition tutte_partition_by_cover(const QMatroid& m);

struct PartitionVerdict {
    bool ok = true;
    std::optional<std::size_t> part;  ///< first offending part, if any
    std::string clause;
    std::string message;
};

/// Disjoint cover of the lattice by valid intervals.
PartitionVerdict verify_partition(const SupportLattice& lat, const std::vector<Interval>& intervals);
/// Partition, independent bottoms, spanning tops, prime-free parts, and a
/// non-extendable clopen chain in every part.
PartitionVerdict verify_tutte_partition(const QMatroid& m, const IntervalPartition& p);

/// Boolean lattices only. base_order lists every basis, smallest first.
bool is_crapo_tutte(const QMatroid& m, const IntervalPartition& p, const std::vector<Index>& base_order);

struct CrapoOrder {
    bool orderable = false;
    std::vector<Index> order;  ///< bases, smallest first, when orderable
    std::vector<Index> cycle;  ///< b0 < b1 < ... < b0 forced otherwise
    /// One shortest forced cycle through each basis lying on one, deduplicated.
    std::vector<std::vector<Index>> cycles;
};

/// Collects every "b' < b" forced by the Crapo-Tutte conditions and either
/// sorts the bases or reports shortest forced cycles. `cycle` is the one
/// whose parts have the lowest bottoms (sum of heights), ties broken by
/// the sorted basis indices.
CrapoOrder crapo_orderability(const QMatroid& m, const IntervalPartition& p);

}  // namespace qtutte
