#pragma once

#include "bda/error.hpp"
#include "bda/ids.hpp"
#include "bda/ledger.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace bda {

enum class PaymentStatus { Received, Disbursed };

constexpr std::string_view to_string(PaymentStatus s) {
    return s == PaymentStatus::Received ? "Received" : "Disbursed";
}

struct PaymentRecord {
    PaymentId id;
    AssetId asset;
    AccountId consumer;
    std::int64_t amount{0};
    std::string component_ref;
    PaymentStatus status{PaymentStatus::Received};
    bool consumed{false};  // set once the datastore releases against it
};

// Exact split of one payment: treasury cut, then a 50/50 pool split between
// economic and ownership holders, each pool apportioned by largest remainder.
struct DisbursementReport {
    PaymentId payment;
    std::int64_t amount{0};
    std::int64_t treasury_cut{0};
    std::vector<std::pair<AccountId, std::int64_t>> economic_payouts;   // ascending account
    std::vector<std::pair<AccountId, std::int64_t>> ownership_payouts;  // ascending account
};

// Fee sink of the strategic DAO. Inactive while the ecosystem runs as a
// caretaker DAO; only executed strategic proposals debit it.
struct Treasury {
    std::int64_t balance{0};
    std::int32_t fee_rate_bp{200};
    bool active{false};
};

class Revenue {
  public:
    Result<void> set_component_price(const Ledger& ledger, AssetId asset,
                                     const std::string& component_ref, std::int64_t price,
                                     const std::vector<AccountId>& approvers);
    std::int64_t price(AssetId asset, const std::string& component_ref) const;

    Result<PaymentId> pay(const Ledger& ledger, AccountId consumer, AssetId asset,
                          std::int64_t amount, const std::string& component_ref);

    // true iff an unconsumed payment matches; idempotent, consumes nothing
    bool confirm(AssetId asset, AccountId consumer, const std::string& component_ref) const;
    // oldest matching unconsumed payment, for the datastore release path
    PaymentRecord* find_confirmable(AssetId asset, AccountId consumer,
                                    const std::string& component_ref);

    Result<DisbursementReport> distribute(Ledger& ledger, Treasury& treasury, PaymentId payment);

    const PaymentRecord* payment(PaymentId id) const;
    const std::map<PaymentId, PaymentRecord>& payments() const { return payments_; }
    const std::vector<DisbursementReport>& reports() const { return reports_; }

  private:
    std::map<PaymentId, PaymentRecord> payments_;
    std::map<std::pair<AssetId, std::string>, std::int64_t> prices_;
    std::vector<DisbursementReport> reports_;
    std::uint64_t next_payment_{1};
};

}  // namespace bda
