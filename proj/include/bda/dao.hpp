#pragma once

#include "bda/error.hpp"
#include "bda/ids.hpp"
#include "bda/ledger.hpp"
#include "bda/rational.hpp"
#include "bda/revenue.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bda {

enum class ProposalKind { Caretaker, Strategic };
enum class ProposalStatus { Open, Accepted, Rejected, Executed };
enum class GovernanceChoice { Yes, No };

constexpr std::string_view to_string(ProposalKind k) {
    return k == ProposalKind::Caretaker ? "Caretaker" : "Strategic";
}
constexpr std::string_view to_string(ProposalStatus s) {
    switch (s) {
        case ProposalStatus::Open: return "Open";
        case ProposalStatus::Accepted: return "Accepted";
        case ProposalStatus::Rejected: return "Rejected";
        case ProposalStatus::Executed: return "Executed";
    }
    return "?";
}

struct Subsidy {
    AccountId target;
    std::int64_t amount{0};
};

// Treasury effects a proposal may carry. Caretaker proposals must carry none.
struct ProposalAction {
    std::optional<std::int32_t> set_fee_bp;
    bool deactivate_fee{false};
    std::vector<Subsidy> subsidies;

    bool has_treasury_effect() const {
        return set_fee_bp.has_value() || deactivate_fee || !subsidies.empty();
    }
};

struct Proposal {
    ProposalId id;
    ProposalKind kind{ProposalKind::Caretaker};
    std::string description;
    ProposalAction action;
    ProposalStatus status{ProposalStatus::Open};
    // governance power frozen when the proposal opens
    std::map<AccountId, Rational> power_snapshot;
    std::map<AccountId, GovernanceChoice> ballots;  // latest ballot per voter
};

// Ecosystem-level governance: proposals, power-weighted majority voting and
// strategic treasury execution. No operation here touches token balances.
class Dao {
  public:
    Result<ProposalId> submit(const Ledger& ledger, AccountId proposer, ProposalKind kind,
                              std::string description, ProposalAction action);
    Result<void> vote(ProposalId proposal, AccountId voter, GovernanceChoice choice);
    // Accepted iff Yes weight strictly exceeds half the snapshot power
    Result<ProposalStatus> close_and_tally(ProposalId proposal);
    Result<void> execute(Ledger& ledger, Treasury& treasury, ProposalId proposal);

    const Proposal* proposal(ProposalId id) const;
    const std::map<ProposalId, Proposal>& proposals() const { return proposals_; }

  private:
    std::map<ProposalId, Proposal> proposals_;
    std::uint64_t next_proposal_{1};
};

}  // namespace bda
