#pragma once

#include "bda/attestation.hpp"
#include "bda/error.hpp"
#include "bda/hash.hpp"
#include "bda/ids.hpp"
#include "bda/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace bda {

struct Account {
    AccountId id;
    Role role;
};

// Registered data asset. Supplies are fixed at mint; merit_weight is the
// governance allocation that ownership shares carve up.
struct AssetRecord {
    AssetId id;
    std::string datastore_ref;
    std::int64_t ownership_supply{0};
    std::int64_t economic_supply{0};
    std::int64_t merit_weight{0};
    AssetState state{AssetState::Active};
    std::string contract_hash;
};

struct OwnershipSplit {
    AccountId account;
    std::int64_t amount{0};
};

// Terms the tokeniser mints against. The certification covers
// (data digest, timestamp) and must come from a registered Certifier.
struct TokenisationContract {
    std::vector<OwnershipSplit> split;
    std::int64_t ownership_supply{0};
    std::int64_t economic_supply{0};
    std::optional<std::int64_t> merit_weight;  // defaults to ownership_supply
    std::string datastore_ref;
    std::string data_digest;
    std::uint64_t timestamp{0};
    Attestation certification;

    std::string certified_message() const;
    std::string hash() const;
};

// Per-(asset, class, account) fungible holdings. Balances never go negative
// and per-class sums stay equal to minted supply less open escrow.
class BalanceBook {
  public:
    std::int64_t balance(AssetId asset, TokenClass cls, AccountId account) const;
    void credit(AssetId asset, TokenClass cls, AccountId account, std::int64_t amount);
    Result<void> debit(AssetId asset, TokenClass cls, AccountId account, std::int64_t amount);

    // accounts with a positive balance, ascending by account id
    std::map<AccountId, std::int64_t> holders(AssetId asset, TokenClass cls) const;
    std::int64_t held_total(AssetId asset, TokenClass cls) const;

    void encode(CanonicalEncoder& enc) const;
    void encode_class(CanonicalEncoder& enc, TokenClass cls) const;

  private:
    struct Key {
        AssetId asset;
        TokenClass cls;
        AccountId account;
        friend auto operator<=>(const Key&, const Key&) = default;
    };
    std::map<Key, std::int64_t> entries_;
};

// Accounts, the asset registry, token balances, cash receipts and derived
// governance power. All mutations validate fully before touching state.
class Ledger {
  public:
    AccountId register_account(Role role);

    Result<AssetId> onboard_asset(const Attestor& attestor, const TokenisationContract& contract,
                                  AccountId tokeniser);

    Result<void> transfer_economic(AssetId asset, AccountId from, AccountId to,
                                   std::int64_t amount);
    Result<void> transfer_ownership(AssetId asset, AccountId from, AccountId to,
                                    std::int64_t amount);

    // strict majority of ownership supply across distinct approvers
    Result<void> require_ownership_majority(AssetId asset,
                                            const std::vector<AccountId>& approvers) const;
    Result<void> retire_asset(AssetId asset, const std::vector<AccountId>& approvers);

    // power(account, asset) = merit_weight * ownership_balance / ownership_supply.
    // Retired assets confer no power.
    Rational governance_power(AccountId account, AssetId asset) const;
    std::map<AccountId, Rational> governance_powers() const;

    static bool ownership_eligible(Role role) {
        return role == Role::BuildingOwner || role == Role::AssetCompany;
    }
    // shared recipient check for direct transfers and exchange fills
    Result<void> check_recipient(TokenClass cls, AccountId to) const;

    bool has_account(AccountId id) const { return accounts_.count(id) > 0; }
    const Account* account(AccountId id) const;
    const AssetRecord* asset(AssetId id) const;
    Result<void> require_active(AssetId id) const;

    const BalanceBook& balances() const { return balances_; }
    BalanceBook& balances() { return balances_; }

    std::int64_t cash(AccountId account) const;
    void credit_cash(AccountId account, std::int64_t amount);

    const std::map<AccountId, Account>& accounts() const { return accounts_; }
    const std::map<AssetId, AssetRecord>& assets() const { return assets_; }

    void encode_state(CanonicalEncoder& enc) const;
    std::string ownership_digest() const;

  private:
    std::map<AccountId, Account> accounts_;
    std::map<AssetId, AssetRecord> assets_;
    std::set<std::string> contract_hashes_;
    BalanceBook balances_;
    std::map<AccountId, std::int64_t> cash_;
    std::uint64_t next_account_{1};
    std::uint64_t next_asset_{1};
};

// Largest-remainder apportionment of `pool` over `weights`: floors first,
// then one extra unit per slot in descending fractional-part order, ties to
// the lowest index. Returns empty when the weight total is zero.
std::vector<std::int64_t> apportion(std::int64_t pool, const std::vector<std::int64_t>& weights);

}  // namespace bda
