#include "bda/revenue.hpp"

namespace bda {

Result<void> Revenue::set_component_price(const Ledger& ledger, AssetId asset,
                                          const std::string& component_ref, std::int64_t price,
                                          const std::vector<AccountId>& approvers) {
    if (price < 0) return err(Errc::InvalidArgument, "negative price");
    if (auto r = ledger.require_active(asset); !r) return r;
    if (auto r = ledger.require_ownership_majority(asset, approvers); !r) return r;
    prices_[{asset, component_ref}] = price;
    return {};
}

std::int64_t Revenue::price(AssetId asset, const std::string& component_ref) const {
    auto it = prices_.find({asset, component_ref});
    return it == prices_.end() ? 0 : it->second;
}

Result<PaymentId> Revenue::pay(const Ledger& ledger, AccountId consumer, AssetId asset,
                               std::int64_t amount, const std::string& component_ref) {
    if (!ledger.has_account(consumer)) return err(Errc::UnknownAccount, "consumer");
    if (auto r = ledger.require_active(asset); !r) return r;
    if (amount < 1 || amount < price(asset, component_ref)) {
        return err(Errc::Underpayment);
    }
    PaymentId id{next_payment_++};
    payments_.emplace(id, PaymentRecord{id, asset, consumer, amount, component_ref,
                                        PaymentStatus::Received, false});
    return id;
}

bool Revenue::confirm(AssetId asset, AccountId consumer, const std::string& component_ref) const {
    for (const auto& [id, rec] : payments_) {
        if (rec.asset == asset && rec.consumer == consumer && rec.component_ref == component_ref &&
            !rec.consumed) {
            return true;
        }
    }
    return false;
}

PaymentRecord* Revenue::find_confirmable(AssetId asset, AccountId consumer,
                                         const std::string& component_ref) {
    for (auto& [id, rec] : payments_) {
        if (rec.asset == asset && rec.consumer == consumer && rec.component_ref == component_ref &&
            !rec.consumed) {
            return &rec;
        }
    }
    return nullptr;
}

const PaymentRecord* Revenue::payment(PaymentId id) const {
    auto it = payments_.find(id);
    return it == payments_.end() ? nullptr : &it->second;
}

Result<DisbursementReport> Revenue::distribute(Ledger& ledger, Treasury& treasury,
                                               PaymentId payment) {
    auto it = payments_.find(payment);
    if (it == payments_.end()) return err(Errc::UnknownPayment);
    PaymentRecord& rec = it->second;
    if (rec.status == PaymentStatus::Disbursed) return err(Errc::AlreadyDisbursed);

    DisbursementReport report;
    report.payment = payment;
    report.amount = rec.amount;
    report.treasury_cut =
        treasury.active
            ? static_cast<std::int64_t>(static_cast<__int128>(rec.amount) * treasury.fee_rate_bp / 10000)
            : 0;
    const std::int64_t net = rec.amount - report.treasury_cut;

    const auto economic = ledger.balances().holders(rec.asset, TokenClass::Economic);
    const auto ownership = ledger.balances().holders(rec.asset, TokenClass::Ownership);

    // 50/50 pool split; the odd unit and any pool without holders fall to the
    // other side so every unit lands somewhere
    std::int64_t economic_pool = net / 2;
    std::int64_t ownership_pool = net - economic_pool;
    if (economic.empty()) {
        ownership_pool += economic_pool;
        economic_pool = 0;
    }
    if (ownership.empty()) {
        economic_pool += ownership_pool;
        ownership_pool = 0;
    }
    if (economic.empty() && ownership.empty()) {
        return err(Errc::InvalidArgument, "no holders to pay");
    }

    auto payout = [&ledger](const std::map<AccountId, std::int64_t>& holders, std::int64_t pool,
                            std::vector<std::pair<AccountId, std::int64_t>>& out) {
        std::vector<AccountId> ids;
        std::vector<std::int64_t> weights;
        for (const auto& [acct, bal] : holders) {
            ids.push_back(acct);
            weights.push_back(bal);
        }
        const std::vector<std::int64_t> shares = apportion(pool, weights);
        for (std::size_t i = 0; i < ids.size(); ++i) {
            out.emplace_back(ids[i], shares[i]);
            ledger.credit_cash(ids[i], shares[i]);
        }
    };
    payout(economic, economic_pool, report.economic_payouts);
    payout(ownership, ownership_pool, report.ownership_payouts);

    treasury.balance += report.treasury_cut;
    rec.status = PaymentStatus::Disbursed;
    reports_.push_back(report);
    return report;
}

}  // namespace bda
