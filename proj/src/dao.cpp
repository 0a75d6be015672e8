#include "bda/dao.hpp"

namespace bda {

Result<ProposalId> Dao::submit(const Ledger& ledger, AccountId proposer, ProposalKind kind,
                               std::string description, ProposalAction action) {
    if (!ledger.has_account(proposer)) return err(Errc::UnknownAccount, "proposer");
    auto powers = ledger.governance_powers();
    auto it = powers.find(proposer);
    if (it == powers.end() || it->second == 0) return err(Errc::NotAGovernor);
    if (kind == ProposalKind::Caretaker && action.has_treasury_effect()) {
        return err(Errc::MalformedPayload, "caretaker proposals carry no treasury action");
    }
    for (const auto& s : action.subsidies) {
        if (s.amount <= 0) return err(Errc::MalformedPayload, "subsidy must be positive");
        if (!ledger.has_account(s.target)) return err(Errc::UnknownAccount, "subsidy target");
    }
    if (action.set_fee_bp && (*action.set_fee_bp < 0 || *action.set_fee_bp > 10000)) {
        return err(Errc::MalformedPayload, "fee out of range");
    }
    if (action.set_fee_bp && action.deactivate_fee) {
        return err(Errc::MalformedPayload, "fee set and deactivated at once");
    }

    ProposalId id{next_proposal_++};
    Proposal p;
    p.id = id;
    p.kind = kind;
    p.description = std::move(description);
    p.action = std::move(action);
    p.status = ProposalStatus::Open;
    p.power_snapshot = std::move(powers);
    proposals_.emplace(id, std::move(p));
    return id;
}

Result<void> Dao::vote(ProposalId proposal, AccountId voter, GovernanceChoice choice) {
    auto it = proposals_.find(proposal);
    if (it == proposals_.end()) return err(Errc::UnknownProposal);
    Proposal& p = it->second;
    if (p.status != ProposalStatus::Open) return err(Errc::ProposalClosed);
    auto power = p.power_snapshot.find(voter);
    if (power == p.power_snapshot.end() || power->second == 0) return err(Errc::NotAGovernor);
    p.ballots[voter] = choice;  // re-vote overwrites
    return {};
}

Result<ProposalStatus> Dao::close_and_tally(ProposalId proposal) {
    auto it = proposals_.find(proposal);
    if (it == proposals_.end()) return err(Errc::UnknownProposal);
    Proposal& p = it->second;
    if (p.status != ProposalStatus::Open) return err(Errc::ProposalClosed);

    Rational yes(0), total(0);
    for (const auto& [acct, power] : p.power_snapshot) total += power;
    for (const auto& [acct, choice] : p.ballots) {
        if (choice == GovernanceChoice::Yes) yes += p.power_snapshot.at(acct);
    }
    // strict majority: ties and absences reject
    p.status = (yes * 2 > total) ? ProposalStatus::Accepted : ProposalStatus::Rejected;
    return p.status;
}

Result<void> Dao::execute(Ledger& ledger, Treasury& treasury, ProposalId proposal) {
    auto it = proposals_.find(proposal);
    if (it == proposals_.end()) return err(Errc::UnknownProposal);
    Proposal& p = it->second;
    if (p.status != ProposalStatus::Accepted) return err(Errc::NotAccepted);

    if (p.kind == ProposalKind::Strategic) {
        std::int64_t spend = 0;
        for (const auto& s : p.action.subsidies) spend += s.amount;
        if (spend > treasury.balance) return err(Errc::InsufficientTreasury);

        if (p.action.deactivate_fee) {
            // stays off until a later accepted proposal re-enacts it
            treasury.active = false;
        } else {
            if (p.action.set_fee_bp) treasury.fee_rate_bp = *p.action.set_fee_bp;
            treasury.active = true;
        }
        treasury.balance -= spend;
        for (const auto& s : p.action.subsidies) ledger.credit_cash(s.target, s.amount);
    }
    p.status = ProposalStatus::Executed;
    return {};
}

const Proposal* Dao::proposal(ProposalId id) const {
    auto it = proposals_.find(id);
    return it == proposals_.end() ? nullptr : &it->second;
}

}  // namespace bda
