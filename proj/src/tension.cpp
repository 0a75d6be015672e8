#include "bda/tension.hpp"

namespace bda {

namespace {

constexpr std::uint64_t kMaxIntervalSpan = 256;  // logical-time bound on a drawn boundary

}  // namespace

std::string TensionMeter::commitment_digest(std::uint64_t interval, const IntervalReveal& reveal) {
    CanonicalEncoder enc;
    enc.str("interval-commit");
    enc.u64(interval);
    enc.u64(reveal.nonce);
    enc.u64(reveal.next_end);
    return enc.digest();
}

std::string TensionMeter::vote_message(std::uint32_t x, std::uint64_t interval, AccountId voter,
                                       std::uint8_t choice) {
    CanonicalEncoder enc;
    enc.str("tension-vote");
    enc.u64(x);
    enc.u64(interval);
    enc.u64(voter.value);
    enc.u8(choice);
    return enc.digest();
}

void TensionMeter::roll_boundary(std::uint64_t now) {
    pending_.nonce = rng_.next();
    pending_.next_end = now + 1 + rng_.bounded(0, kMaxIntervalSpan - 1);
    commitment_ = commitment_digest(interval_, pending_);
}

Result<void> TensionMeter::init(DaoStructure structure, std::uint64_t seed, std::uint64_t now) {
    if (initialised_) return err(Errc::InvalidArgument, "tension meter already initialised");
    initialised_ = true;
    structure_ = structure;
    interval_ = 0;
    rng_ = Rng(seed);

    proposals_.clear();
    proposals_.emplace(1, StabilityProposal{1, TensionEdge::AB, Tier::Lower,
                                            "satisfaction with your own tier, 0..4"});
    if (structure == DaoStructure::Hierarchical) {
        proposals_.emplace(2, StabilityProposal{2, TensionEdge::AC, Tier::Lower,
                                                "satisfaction dealing with the higher tier, 0..4"});
    }
    proposals_.emplace(3, StabilityProposal{3, TensionEdge::AD, Tier::Lower,
                                            "closeness to exiting, 0 closest and 4 farthest"});
    roll_boundary(now);
    return {};
}

Result<void> TensionMeter::register_stakeholder(const Ledger& ledger, AccountId account,
                                                Tier tier) {
    if (!initialised_) return err(Errc::InvalidArgument, "tension meter not initialised");
    if (!ledger.has_account(account)) return err(Errc::UnknownAccount);
    if (structure_ == DaoStructure::Flat && tier == Tier::Higher) {
        return err(Errc::InvalidArgument, "flat structure has a single tier");
    }
    stakeholders_[account] = tier;
    return {};
}

VoteProof TensionMeter::make_proof(const Attestor& attestor, AccountId voter, std::uint32_t x,
                                   std::uint64_t interval, std::uint8_t choice) const {
    return VoteProof{attestor.attest(voter, vote_message(x, interval, voter, choice))};
}

Result<void> TensionMeter::vote_in_interval(const Attestor& attestor, std::uint32_t x,
                                            std::uint64_t interval, AccountId voter,
                                            std::int64_t choice, const VoteProof& proof) {
    if (!initialised_) return err(Errc::InvalidArgument, "tension meter not initialised");
    auto prop = proposals_.find(x);
    if (prop == proposals_.end()) return err(Errc::UnknownProposal);
    if (interval != interval_) {
        return err(Errc::StaleInterval, "only the current interval accepts votes");
    }
    if (choice < 0 || choice >= kChoiceCount) return err(Errc::BadChoice);
    const auto c = static_cast<std::uint8_t>(choice);
    if (proof.attestation.subject != voter ||
        !attestor.verify(proof.attestation, vote_message(x, interval, voter, c))) {
        return err(Errc::BadProof);
    }
    auto member = stakeholders_.find(voter);
    if (member == stakeholders_.end() || member->second != prop->second.tier_scope) {
        return err(Errc::OutOfScope);
    }
    votes_[x][interval][voter] = c;  // re-vote in the current interval overwrites
    return {};
}

Result<TallyResult> TensionMeter::tally_in_interval(std::uint32_t x,
                                                    std::uint64_t interval) const {
    if (!initialised_) return err(Errc::InvalidArgument, "tension meter not initialised");
    if (!proposals_.count(x)) return err(Errc::UnknownProposal);
    if (interval > interval_) return err(Errc::UnknownInterval);

    TallyResult tally{};  // recomputed fresh on every call
    auto px = votes_.find(x);
    if (px != votes_.end()) {
        auto pi = px->second.find(interval);
        if (pi != px->second.end()) {
            for (const auto& [voter, choice] : pi->second) tally.counts[choice] += 1;
        }
    }
    return tally;
}

Result<WeightedTallyResult> TensionMeter::weighted_tally_in_interval(
    std::uint32_t x, std::uint64_t interval, const std::map<AccountId, Rational>& weights) const {
    if (!initialised_) return err(Errc::InvalidArgument, "tension meter not initialised");
    if (!proposals_.count(x)) return err(Errc::UnknownProposal);
    if (interval > interval_) return err(Errc::UnknownInterval);

    WeightedTallyResult tally{};
    auto px = votes_.find(x);
    if (px != votes_.end()) {
        auto pi = px->second.find(interval);
        if (pi != px->second.end()) {
            for (const auto& [voter, choice] : pi->second) {
                auto w = weights.find(voter);
                if (w != weights.end()) tally.weights[choice] += w->second;
            }
        }
    }
    return tally;
}

Result<std::uint64_t> TensionMeter::update_interval(std::uint64_t nxtint,
                                                    const IntervalReveal& reveal,
                                                    std::uint64_t now) {
    if (!initialised_) return err(Errc::InvalidArgument, "tension meter not initialised");
    if (nxtint != interval_ + 1 || commitment_digest(interval_, reveal) != commitment_) {
        return err(Errc::BadTrigger);
    }
    revealed_.emplace_back(interval_, reveal.nonce, reveal.next_end);
    interval_ = nxtint;
    roll_boundary(now);  // commit to the next unpredictable boundary
    return interval_;
}

Result<TensionReport> TensionMeter::report(std::uint64_t interval) const {
    if (!initialised_) return err(Errc::InvalidArgument, "tension meter not initialised");
    if (interval > interval_) return err(Errc::UnknownInterval);
    if (interval == interval_) return err(Errc::IntervalStillOpen);

    TensionReport rep;
    rep.interval = interval;
    rep.structure = structure_;
    rep.polygon_edges = structure_ == DaoStructure::Hierarchical
                            ? std::vector<std::string>{"AB", "BC", "CD", "DA"}
                            : std::vector<std::string>{"AB", "BD", "DA"};

    for (const auto& [x, prop] : proposals_) {
        EdgeMean stat;
        stat.edge = prop.edge;
        Rational sum(0);
        auto px = votes_.find(x);
        if (px != votes_.end()) {
            auto pi = px->second.find(interval);
            if (pi != px->second.end()) {
                for (const auto& [voter, choice] : pi->second) {
                    Rational distance = Rational(choice) / 4;
                    rep.rows.push_back(TensionRow{voter, prop.edge, choice, distance});
                    sum += distance;
                    stat.voters += 1;
                }
            }
        }
        if (stat.voters > 0) stat.mean = sum / stat.voters;
        rep.means.push_back(stat);
    }

    // Fig. 5 corners: aligned voices with the exit pushed to distance 1 is the
    // best case; aligned voices sitting on the exit is the worst.
    bool all_present = true;
    bool aligned = true;
    bool exit_far = false;
    bool exit_here = false;
    for (const EdgeMean& m : rep.means) {
        if (m.voters == 0) {
            all_present = false;
            continue;
        }
        if (m.edge == TensionEdge::AD) {
            exit_far = m.mean == 1;
            exit_here = m.mean == 0;
        } else if (m.mean != 0) {
            aligned = false;
        }
    }
    if (all_present && aligned && exit_far) {
        rep.classification = TensionClass::BestCase;
    } else if (all_present && aligned && exit_here) {
        rep.classification = TensionClass::WorstCase;
    } else {
        rep.classification = TensionClass::Intermediate;
    }
    return rep;
}

}  // namespace bda
