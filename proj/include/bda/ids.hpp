#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string_view>

namespace bda {

// Stakeholder roles. A role is fixed at registration and gates what an
// account may hold or do (ownership eligibility, certification, minting).
enum class Role {
    BuildingOwner,
    AssetCompany,
    Contractor,
    Certifier,
    Tokeniser,
    Investor,
    Consumer,
};

enum class TokenClass { Ownership, Economic };

enum class AssetState { Active, Retired };

constexpr std::string_view to_string(Role r) {
    switch (r) {
        case Role::BuildingOwner: return "BuildingOwner";
        case Role::AssetCompany: return "AssetCompany";
        case Role::Contractor: return "Contractor";
        case Role::Certifier: return "Certifier";
        case Role::Tokeniser: return "Tokeniser";
        case Role::Investor: return "Investor";
        case Role::Consumer: return "Consumer";
    }
    return "?";
}

constexpr std::string_view to_string(TokenClass c) {
    return c == TokenClass::Ownership ? "Ownership" : "Economic";
}

constexpr std::string_view to_string(AssetState s) {
    return s == AssetState::Active ? "Active" : "Retired";
}

std::optional<Role> role_from_string(std::string_view s);
std::optional<TokenClass> token_class_from_string(std::string_view s);

// Opaque numeric identifier, tagged so ids of different entity kinds do not mix.
template <class Tag>
struct Id {
    std::uint64_t value{0};
    friend constexpr auto operator<=>(const Id&, const Id&) = default;
};

using AccountId = Id<struct AccountIdTag>;
using AssetId = Id<struct AssetIdTag>;
using PaymentId = Id<struct PaymentIdTag>;
using ListingId = Id<struct ListingIdTag>;
using ProposalId = Id<struct ProposalIdTag>;
using LicenceId = Id<struct LicenceIdTag>;

}  // namespace bda
