#include "bda/ledger.hpp"

#include <algorithm>
#include <numeric>

namespace bda {

std::optional<Role> role_from_string(std::string_view s) {
    for (Role r : {Role::BuildingOwner, Role::AssetCompany, Role::Contractor, Role::Certifier,
                   Role::Tokeniser, Role::Investor, Role::Consumer}) {
        if (s == to_string(r)) return r;
    }
    return std::nullopt;
}

std::optional<TokenClass> token_class_from_string(std::string_view s) {
    if (s == to_string(TokenClass::Ownership)) return TokenClass::Ownership;
    if (s == to_string(TokenClass::Economic)) return TokenClass::Economic;
    return std::nullopt;
}

std::string TokenisationContract::certified_message() const {
    CanonicalEncoder enc;
    enc.str("tokenise");
    enc.str(data_digest);
    enc.u64(timestamp);
    return enc.digest();
}

std::string TokenisationContract::hash() const {
    CanonicalEncoder enc;
    enc.str("contract");
    enc.u64(split.size());
    for (const auto& s : split) {
        enc.u64(s.account.value);
        enc.i64(s.amount);
    }
    enc.i64(ownership_supply);
    enc.i64(economic_supply);
    enc.i64(merit_weight.value_or(ownership_supply));
    enc.str(datastore_ref);
    enc.str(data_digest);
    enc.u64(timestamp);
    enc.u64(certification.subject.value);
    return enc.digest();
}

std::int64_t BalanceBook::balance(AssetId asset, TokenClass cls, AccountId account) const {
    auto it = entries_.find(Key{asset, cls, account});
    return it == entries_.end() ? 0 : it->second;
}

void BalanceBook::credit(AssetId asset, TokenClass cls, AccountId account, std::int64_t amount) {
    if (amount == 0) return;
    entries_[Key{asset, cls, account}] += amount;
}

Result<void> BalanceBook::debit(AssetId asset, TokenClass cls, AccountId account,
                                std::int64_t amount) {
    if (amount == 0) return {};
    auto it = entries_.find(Key{asset, cls, account});
    if (it == entries_.end() || it->second < amount) {
        return err(Errc::InsufficientBalance);
    }
    it->second -= amount;
    if (it->second == 0) entries_.erase(it);
    return {};
}

std::map<AccountId, std::int64_t> BalanceBook::holders(AssetId asset, TokenClass cls) const {
    std::map<AccountId, std::int64_t> out;
    for (const auto& [key, bal] : entries_) {
        if (key.asset == asset && key.cls == cls && bal > 0) out.emplace(key.account, bal);
    }
    return out;
}

std::int64_t BalanceBook::held_total(AssetId asset, TokenClass cls) const {
    std::int64_t total = 0;
    for (const auto& [key, bal] : entries_) {
        if (key.asset == asset && key.cls == cls) total += bal;
    }
    return total;
}

void BalanceBook::encode(CanonicalEncoder& enc) const {
    enc.str("balances");
    enc.u64(entries_.size());
    for (const auto& [key, bal] : entries_) {
        enc.u64(key.asset.value);
        enc.u8(key.cls == TokenClass::Ownership ? 0 : 1);
        enc.u64(key.account.value);
        enc.i64(bal);
    }
}

void BalanceBook::encode_class(CanonicalEncoder& enc, TokenClass cls) const {
    enc.str("balances-one-class");
    for (const auto& [key, bal] : entries_) {
        if (key.cls != cls) continue;
        enc.u64(key.asset.value);
        enc.u64(key.account.value);
        enc.i64(bal);
    }
}

AccountId Ledger::register_account(Role role) {
    AccountId id{next_account_++};
    accounts_.emplace(id, Account{id, role});
    return id;
}

const Account* Ledger::account(AccountId id) const {
    auto it = accounts_.find(id);
    return it == accounts_.end() ? nullptr : &it->second;
}

const AssetRecord* Ledger::asset(AssetId id) const {
    auto it = assets_.find(id);
    return it == assets_.end() ? nullptr : &it->second;
}

Result<void> Ledger::require_active(AssetId id) const {
    const AssetRecord* rec = asset(id);
    if (!rec) return err(Errc::UnknownAsset);
    if (rec->state == AssetState::Retired) return err(Errc::AssetRetired);
    return {};
}

Result<AssetId> Ledger::onboard_asset(const Attestor& attestor,
                                      const TokenisationContract& contract, AccountId tokeniser) {
    const Account* minter = account(tokeniser);
    if (!minter) return err(Errc::UnknownAccount, "tokeniser");
    if (minter->role != Role::Tokeniser) return err(Errc::WrongRole, "minting needs a Tokeniser");

    const Account* certifier = account(contract.certification.subject);
    if (!certifier || certifier->role != Role::Certifier ||
        !attestor.verify(contract.certification, contract.certified_message())) {
        return err(Errc::BadSignature, "certification does not verify");
    }

    if (contract.ownership_supply <= 0) return err(Errc::SplitMismatch, "supply must be positive");
    std::int64_t split_sum = 0;
    for (const auto& s : contract.split) {
        const Account* owner = account(s.account);
        if (!owner) return err(Errc::UnknownAccount, "split owner");
        if (!ownership_eligible(owner->role)) return err(Errc::IneligibleRecipient);
        if (s.amount <= 0) return err(Errc::SplitMismatch, "split entries must be positive");
        split_sum += s.amount;
    }
    if (split_sum != contract.ownership_supply) return err(Errc::SplitMismatch);
    if (contract.economic_supply < 0) return err(Errc::SplitMismatch, "negative economic supply");
    const std::int64_t merit = contract.merit_weight.value_or(contract.ownership_supply);
    if (merit < 0) return err(Errc::SplitMismatch, "negative merit weight");

    const std::string chash = contract.hash();
    if (contract_hashes_.count(chash)) {
        return err(Errc::DuplicateContract, "contract already onboarded");
    }

    AssetId id{next_asset_++};
    assets_.emplace(id, AssetRecord{id, contract.datastore_ref, contract.ownership_supply,
                                    contract.economic_supply, merit, AssetState::Active, chash});
    contract_hashes_.insert(chash);

    std::vector<std::int64_t> weights;
    weights.reserve(contract.split.size());
    for (const auto& s : contract.split) {
        balances_.credit(id, TokenClass::Ownership, s.account, s.amount);
        weights.push_back(s.amount);
    }
    // initial economic tokens go to the owners pro rata to their ownership split
    const std::vector<std::int64_t> econ = apportion(contract.economic_supply, weights);
    for (std::size_t i = 0; i < econ.size(); ++i) {
        balances_.credit(id, TokenClass::Economic, contract.split[i].account, econ[i]);
    }
    return id;
}

Result<void> Ledger::check_recipient(TokenClass cls, AccountId to) const {
    const Account* rcpt = account(to);
    if (!rcpt) return err(Errc::UnknownAccount, "recipient");
    if (cls == TokenClass::Ownership && !ownership_eligible(rcpt->role)) {
        return err(Errc::IneligibleRecipient, "ownership tokens stay with building-tied roles");
    }
    return {};
}

Result<void> Ledger::transfer_economic(AssetId asset, AccountId from, AccountId to,
                                       std::int64_t amount) {
    if (amount < 0) return err(Errc::InvalidArgument, "negative amount");
    if (auto r = require_active(asset); !r) return r;
    if (!has_account(from)) return err(Errc::UnknownAccount, "sender");
    if (auto r = check_recipient(TokenClass::Economic, to); !r) return r;
    if (balances_.balance(asset, TokenClass::Economic, from) < amount) {
        return err(Errc::InsufficientBalance);
    }
    if (auto r = balances_.debit(asset, TokenClass::Economic, from, amount); !r) return r;
    balances_.credit(asset, TokenClass::Economic, to, amount);
    return {};
}

Result<void> Ledger::transfer_ownership(AssetId asset, AccountId from, AccountId to,
                                        std::int64_t amount) {
    if (amount < 0) return err(Errc::InvalidArgument, "negative amount");
    if (auto r = require_active(asset); !r) return r;
    if (!has_account(from)) return err(Errc::UnknownAccount, "sender");
    if (auto r = check_recipient(TokenClass::Ownership, to); !r) return r;
    if (balances_.balance(asset, TokenClass::Ownership, from) < amount) {
        return err(Errc::InsufficientBalance);
    }
    if (auto r = balances_.debit(asset, TokenClass::Ownership, from, amount); !r) return r;
    balances_.credit(asset, TokenClass::Ownership, to, amount);
    // governance power is derived from ownership balances, so the coupled
    // power move needs no further bookkeeping
    return {};
}

Result<void> Ledger::require_ownership_majority(AssetId asset,
                                                const std::vector<AccountId>& approvers) const {
    const AssetRecord* rec = this->asset(asset);
    if (!rec) return err(Errc::UnknownAsset);
    std::set<AccountId> distinct(approvers.begin(), approvers.end());
    std::int64_t approving = 0;
    for (AccountId a : distinct) {
        if (!has_account(a)) return err(Errc::UnknownAccount, "approver");
        approving += balances_.balance(asset, TokenClass::Ownership, a);
    }
    // strict majority; ties fail
    if (approving * 2 <= rec->ownership_supply) {
        return err(Errc::InsufficientMajority);
    }
    return {};
}

Result<void> Ledger::retire_asset(AssetId asset, const std::vector<AccountId>& approvers) {
    auto it = assets_.find(asset);
    if (it == assets_.end()) return err(Errc::UnknownAsset);
    if (it->second.state == AssetState::Retired) return err(Errc::AssetRetired);
    if (auto r = require_ownership_majority(asset, approvers); !r) return r;
    it->second.state = AssetState::Retired;
    return {};
}

Rational Ledger::governance_power(AccountId account, AssetId asset) const {
    const AssetRecord* rec = this->asset(asset);
    if (!rec || rec->state != AssetState::Active || rec->ownership_supply == 0) return Rational(0);
    const std::int64_t bal = balances_.balance(asset, TokenClass::Ownership, account);
    return Rational(rec->merit_weight) * Rational(bal) / Rational(rec->ownership_supply);
}

std::map<AccountId, Rational> Ledger::governance_powers() const {
    std::map<AccountId, Rational> out;
    for (const auto& [id, rec] : assets_) {
        if (rec.state != AssetState::Active || rec.ownership_supply == 0) continue;
        for (const auto& [holder, bal] : balances_.holders(id, TokenClass::Ownership)) {
            out[holder] += Rational(rec.merit_weight) * Rational(bal) / Rational(rec.ownership_supply);
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

std::int64_t Ledger::cash(AccountId account) const {
    auto it = cash_.find(account);
    return it == cash_.end() ? 0 : it->second;
}

void Ledger::credit_cash(AccountId account, std::int64_t amount) {
    if (amount == 0) return;
    cash_[account] += amount;
}

void Ledger::encode_state(CanonicalEncoder& enc) const {
    enc.str("accounts");
    enc.u64(accounts_.size());
    for (const auto& [id, acct] : accounts_) {
        enc.u64(id.value);
        enc.str(to_string(acct.role));
    }
    enc.str("assets");
    enc.u64(assets_.size());
    for (const auto& [id, rec] : assets_) {
        enc.u64(id.value);
        enc.str(rec.datastore_ref);
        enc.i64(rec.ownership_supply);
        enc.i64(rec.economic_supply);
        enc.i64(rec.merit_weight);
        enc.u8(rec.state == AssetState::Active ? 0 : 1);
        enc.str(rec.contract_hash);
    }
    balances_.encode(enc);
    enc.str("cash");
    enc.u64(cash_.size());
    for (const auto& [id, amount] : cash_) {
        enc.u64(id.value);
        enc.i64(amount);
    }
}

std::string Ledger::ownership_digest() const {
    CanonicalEncoder enc;
    balances_.encode_class(enc, TokenClass::Ownership);
    return enc.digest();
}

std::vector<std::int64_t> apportion(std::int64_t pool, const std::vector<std::int64_t>& weights) {
    std::vector<std::int64_t> out(weights.size(), 0);
    __int128 total = 0;
    for (std::int64_t w : weights) total += w;
    if (total <= 0 || pool <= 0) return out;

    __int128 assigned = 0;
    std::vector<std::pair<__int128, std::size_t>> remainders;  // (remainder, index)
    remainders.reserve(weights.size());
    for (std::size_t i = 0; i < weights.size(); ++i) {
        const __int128 exact_num = static_cast<__int128>(pool) * weights[i];
        out[i] = static_cast<std::int64_t>(exact_num / total);
        assigned += out[i];
        remainders.emplace_back(exact_num % total, i);
    }
    std::sort(remainders.begin(), remainders.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;  // tie: lowest index first
    });
    auto leftover = static_cast<std::int64_t>(pool - assigned);
    for (std::int64_t i = 0; i < leftover; ++i) {
        out[remainders[static_cast<std::size_t>(i)].second] += 1;
    }
    return out;
}

}  // namespace bda
