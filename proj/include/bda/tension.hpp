#pragma once

#include "bda/attestation.hpp"
#include "bda/error.hpp"
#include "bda/ids.hpp"
#include "bda/ledger.hpp"
#include "bda/rational.hpp"
#include "bda/rng.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace bda {

// Vertices: A the individual, B their own tier's majority, C the higher
// tier's majority, D the exit. Edge distances encode disagreement.
enum class TensionEdge { AB, AC, AD };

enum class DaoStructure { Hierarchical, Flat };
enum class Tier { Lower, Higher };
enum class TensionClass { BestCase, WorstCase, Intermediate };

constexpr std::string_view to_string(TensionEdge e) {
    switch (e) {
        case TensionEdge::AB: return "AB";
        case TensionEdge::AC: return "AC";
        case TensionEdge::AD: return "AD";
    }
    return "?";
}
constexpr std::string_view to_string(DaoStructure s) {
    return s == DaoStructure::Hierarchical ? "Hierarchical" : "Flat";
}
constexpr std::string_view to_string(Tier t) { return t == Tier::Lower ? "Lower" : "Higher"; }
constexpr std::string_view to_string(TensionClass c) {
    switch (c) {
        case TensionClass::BestCase: return "BestCase";
        case TensionClass::WorstCase: return "WorstCase";
        case TensionClass::Intermediate: return "Intermediate";
    }
    return "?";
}

inline constexpr std::uint32_t kChoiceCount = 5;  // linear scale 0..4

// One of the standing stability proposals. A flat DAO collapses the
// quadrilateral into a triangle, so it admits no AC proposal.
struct StabilityProposal {
    std::uint32_t x{0};
    TensionEdge edge{TensionEdge::AB};
    Tier tier_scope{Tier::Lower};
    std::string question;
};

struct VoteProof {
    Attestation attestation;
};

struct TallyResult {
    std::array<std::uint64_t, kChoiceCount> counts{};
    std::uint64_t voters() const {
        std::uint64_t n = 0;
        for (auto c : counts) n += c;
        return n;
    }
};

struct WeightedTallyResult {
    std::array<Rational, kChoiceCount> weights{};
};

struct EdgeMean {
    TensionEdge edge{TensionEdge::AB};
    std::uint64_t voters{0};
    Rational mean;  // in [0,1]; meaningful only when voters > 0
};

struct TensionRow {
    AccountId stakeholder;
    TensionEdge edge{TensionEdge::AB};
    std::uint8_t choice{0};
    Rational distance;  // choice / 4
};

// Per-interval geometry report. `polygon_edges` lists the sides of the
// figure the DAO forms (quadrilateral or collapsed triangle); measured
// means exist for the edges voted on.
struct TensionReport {
    std::uint64_t interval{0};
    DaoStructure structure{DaoStructure::Hierarchical};
    std::vector<std::string> polygon_edges;
    std::vector<TensionRow> rows;
    std::vector<EdgeMean> means;
    TensionClass classification{TensionClass::Intermediate};
};

// Interval-boundary reveal: the preimage of the published commitment.
struct IntervalReveal {
    std::uint64_t nonce{0};
    std::uint64_t next_end{0};
};

// Always-on interval voting over the stability proposals, with re-votable
// ballots inside the current interval, frozen tallies behind it, and
// commit-reveal gated advancement so interval ends stay unpredictable.
class TensionMeter {
  public:
    Result<void> init(DaoStructure structure, std::uint64_t seed, std::uint64_t now);
    bool initialised() const { return initialised_; }
    DaoStructure structure() const { return structure_; }

    Result<void> register_stakeholder(const Ledger& ledger, AccountId account, Tier tier);
    const std::map<AccountId, Tier>& stakeholders() const { return stakeholders_; }

    VoteProof make_proof(const Attestor& attestor, AccountId voter, std::uint32_t x,
                         std::uint64_t interval, std::uint8_t choice) const;

    Result<void> vote_in_interval(const Attestor& attestor, std::uint32_t x,
                                  std::uint64_t interval, AccountId voter, std::int64_t choice,
                                  const VoteProof& proof);

    Result<TallyResult> tally_in_interval(std::uint32_t x, std::uint64_t interval) const;
    Result<WeightedTallyResult> weighted_tally_in_interval(
        std::uint32_t x, std::uint64_t interval,
        const std::map<AccountId, Rational>& weights) const;

    // scheduler-role access to the pending boundary secret
    IntervalReveal scheduler_reveal() const { return pending_; }
    std::string commitment() const { return commitment_; }
    std::uint64_t current_interval() const { return interval_; }

    Result<std::uint64_t> update_interval(std::uint64_t nxtint, const IntervalReveal& reveal,
                                          std::uint64_t now);

    Result<TensionReport> report(std::uint64_t interval) const;

    const std::map<std::uint32_t, StabilityProposal>& proposals() const { return proposals_; }
    // revealed boundaries, oldest first: (interval, nonce, next_end)
    const std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>>& revealed() const {
        return revealed_;
    }
    // raw storage view for recount oracles: vote[x][i][j]
    const std::map<std::uint32_t, std::map<std::uint64_t, std::map<AccountId, std::uint8_t>>>&
    vote_store() const {
        return votes_;
    }

    static std::string commitment_digest(std::uint64_t interval, const IntervalReveal& reveal);
    static std::string vote_message(std::uint32_t x, std::uint64_t interval, AccountId voter,
                                    std::uint8_t choice);

  private:
    void roll_boundary(std::uint64_t now);

    bool initialised_{false};
    DaoStructure structure_{DaoStructure::Hierarchical};
    std::map<std::uint32_t, StabilityProposal> proposals_;
    std::map<AccountId, Tier> stakeholders_;
    std::map<std::uint32_t, std::map<std::uint64_t, std::map<AccountId, std::uint8_t>>> votes_;

    std::uint64_t interval_{0};
    IntervalReveal pending_;
    std::string commitment_;
    std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> revealed_;
    Rng rng_{0};
};

}  // namespace bda
