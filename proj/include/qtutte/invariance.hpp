#pragma once

#include <cstdint>
#include <json.hpp>
#include <string>

#include "qtutte/partition.hpp"
#include "qtutte/poly.hpp"
#include "qtutte/qmatroid.hpp"

namespace qtutte {

/// axiom is one of q-P1, q-P2, q-P3, split, rank-not-qtg, matroid-TG, duality.
/// The witness holds the seed, the intervals and every polynomial compared.
/// applicable is false when the identity cannot be posed: q-P3 and split
/// need an S(e), and some q-matroids admit none. pass is then false too.
struct AxiomReport {
    std::string axiom;
    bool pass = false;
    nlohmann::json witness;
    bool applicable = true;
};

/// tau and rho agree with those of the image under a random invertible map.
AxiomReport check_qp1(const QMatroid& m, std::uint64_t seed);
/// tau(M) = tau(M(e)) tau(M/e). Throws PreconditionError unless M is
/// prime-free and e an atom.
AxiomReport check_qp2(const QMatroid& m, Index e);
/// tau(M) = sum of tau over the parts of the constructed S(e). Where no
/// minimal q-partition exists the general split is used (witness
/// "minimal_split": false); where that fails too the report is not applicable.
AxiomReport check_qp3(const QMatroid& m, std::uint64_t seed);
/// rho(M) = sum over parts [a,b] of S(e) of x^{r(1)-r(b)} y^{nu(a)} rho(M([a,b])).
AxiomReport check_rank_split(const QMatroid& m, Index e, Index c, std::uint64_t seed = 0);
/// Same identity over a given S(e); fails if it is not a partition.
AxiomReport check_rank_split(const QMatroid& m, const IntervalPartition& s);
/// Passes when rho(M;1,1) differs from rho(M(e);1,1) rho(M/e;1,1) = 2 sum_k [n-1,k]_q,
/// i.e. rho breaks multiplicativity. Never passes on Boolean lattices.
AxiomReport check_rank_not_qtg(const QMatroid& m);
/// Boolean only: deletion-contraction of tau at every atom.
AxiomReport check_matroid_tg(const QMatroid& m);
/// tau and rho swap under duality and the dual is an involution.
AxiomReport check_duality(const QMatroid& m);

nlohmann::json to_json(const AxiomReport& r);

}  // namespace qtutte
