#include "bda/market.hpp"

#include <cctype>

namespace bda {

std::vector<std::string> Market::normalize(std::string_view text) {
    std::vector<std::string> terms;
    std::string current;
    for (char c : text) {
        if (std::isalnum(static_cast<unsigned char>(c))) {
            current.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        } else if (!current.empty()) {
            terms.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) terms.push_back(std::move(current));
    return terms;
}

void Market::index_asset(AssetId asset, const std::set<std::string>& raw_terms) {
    auto& entry = index_[asset];
    for (const auto& raw : raw_terms) {
        for (auto& term : normalize(raw)) entry.insert(std::move(term));
    }
}

void Market::deindex_asset(AssetId asset) { index_.erase(asset); }

std::vector<AssetId> Market::search(const std::vector<std::string>& query) const {
    std::set<std::string> wanted;
    for (const auto& raw : query) {
        for (auto& term : normalize(raw)) wanted.insert(std::move(term));
    }
    std::vector<AssetId> hits;
    for (const auto& [asset, keywords] : index_) {  // ascending asset id
        for (const auto& term : wanted) {
            if (keywords.count(term)) {
                hits.push_back(asset);
                break;
            }
        }
    }
    return hits;
}

Result<ListingId> Market::list_tokens(Ledger& ledger, AccountId seller, AssetId asset,
                                      TokenClass cls, std::int64_t amount,
                                      std::int64_t unit_price) {
    if (amount <= 0 || unit_price < 0) return err(Errc::InvalidArgument);
    if (!ledger.has_account(seller)) return err(Errc::UnknownAccount, "seller");
    if (auto r = ledger.require_active(asset); !r) return r;
    if (cls == TokenClass::Ownership) {
        // sell side keeps the same eligibility rule as direct transfers
        if (auto r = ledger.check_recipient(cls, seller); !r) return r;
    }
    if (ledger.balances().balance(asset, cls, seller) < amount) {
        return err(Errc::InsufficientBalance);
    }
    if (auto r = ledger.balances().debit(asset, cls, seller, amount); !r) return r;
    ListingId id{next_listing_++};
    listings_.emplace(id, Listing{id, seller, asset, cls, amount, unit_price, ListingState::Open});
    return id;
}

Result<void> Market::cancel(Ledger& ledger, AccountId seller, ListingId listing) {
    auto it = listings_.find(listing);
    if (it == listings_.end()) return err(Errc::UnknownListing);
    if (it->second.state != ListingState::Open) return err(Errc::ListingClosed);
    if (it->second.seller != seller) return err(Errc::WrongRole, "only the seller may cancel");
    ledger.balances().credit(it->second.asset, it->second.cls, seller, it->second.amount);
    it->second.state = ListingState::Cancelled;
    return {};
}

Result<void> Market::take(Ledger& ledger, AccountId buyer, ListingId listing,
                          std::int64_t pay_amount) {
    auto it = listings_.find(listing);
    if (it == listings_.end()) return err(Errc::UnknownListing);
    Listing& l = it->second;
    if (l.state != ListingState::Open) return err(Errc::ListingClosed);
    if (auto r = ledger.require_active(l.asset); !r) return r;
    if (auto r = ledger.check_recipient(l.cls, buyer); !r) return r;
    if (static_cast<__int128>(pay_amount) != static_cast<__int128>(l.amount) * l.unit_price) {
        return err(Errc::WrongPayment);
    }

    // atomic settlement: escrow to buyer, currency to seller, then close
    ledger.balances().credit(l.asset, l.cls, buyer, l.amount);
    ledger.credit_cash(l.seller, pay_amount);
    l.state = ListingState::Filled;
    return {};
}

void Market::cancel_open_for_asset(Ledger& ledger, AssetId asset) {
    for (auto& [id, l] : listings_) {
        if (l.asset == asset && l.state == ListingState::Open) {
            ledger.balances().credit(l.asset, l.cls, l.seller, l.amount);
            l.state = ListingState::Cancelled;
        }
    }
}

std::int64_t Market::escrow_total(AssetId asset, TokenClass cls) const {
    std::int64_t total = 0;
    for (const auto& [id, l] : listings_) {
        if (l.asset == asset && l.cls == cls && l.state == ListingState::Open) total += l.amount;
    }
    return total;
}

const Listing* Market::listing(ListingId id) const {
    auto it = listings_.find(id);
    return it == listings_.end() ? nullptr : &it->second;
}

}  // namespace bda
