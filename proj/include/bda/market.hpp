#pragma once

#include "bda/error.hpp"
#include "bda/ids.hpp"
#include "bda/ledger.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace bda {

enum class ListingState { Open, Filled, Cancelled };

constexpr std::string_view to_string(ListingState s) {
    switch (s) {
        case ListingState::Open: return "Open";
        case ListingState::Filled: return "Filled";
        case ListingState::Cancelled: return "Cancelled";
    }
    return "?";
}

// Fixed-price, all-or-nothing offer. The amount is escrowed out of the seller
// balance at listing time and conserved until fill or cancel.
struct Listing {
    ListingId id;
    AccountId seller;
    AssetId asset;
    TokenClass cls{TokenClass::Economic};
    std::int64_t amount{0};
    std::int64_t unit_price{0};
    ListingState state{ListingState::Open};
};

// Keyword search over component metadata plus the escrow exchange.
class Market {
  public:
    static std::vector<std::string> normalize(std::string_view text);

    void index_asset(AssetId asset, const std::set<std::string>& raw_terms);
    void deindex_asset(AssetId asset);
    std::vector<AssetId> search(const std::vector<std::string>& query) const;

    Result<ListingId> list_tokens(Ledger& ledger, AccountId seller, AssetId asset, TokenClass cls,
                                  std::int64_t amount, std::int64_t unit_price);
    Result<void> cancel(Ledger& ledger, AccountId seller, ListingId listing);
    Result<void> take(Ledger& ledger, AccountId buyer, ListingId listing, std::int64_t pay_amount);

    // retirement path: release every open escrow back to its seller
    void cancel_open_for_asset(Ledger& ledger, AssetId asset);

    std::int64_t escrow_total(AssetId asset, TokenClass cls) const;
    const Listing* listing(ListingId id) const;
    const std::map<ListingId, Listing>& listings() const { return listings_; }

  private:
    std::map<ListingId, Listing> listings_;
    std::map<AssetId, std::set<std::string>> index_;
    std::uint64_t next_listing_{1};
};

}  // namespace bda
