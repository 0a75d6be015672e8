#pragma once

#include <cassert>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace bda {

enum class Errc {
    // ledger
    BadSignature,
    SplitMismatch,
    WrongRole,
    DuplicateContract,
    InsufficientBalance,
    AssetRetired,
    IneligibleRecipient,
    InsufficientMajority,
    // revenue
    Underpayment,
    AlreadyDisbursed,
    UnknownPayment,
    // datastore
    BadCertification,
    PaymentNotFound,
    UnknownComponent,
    // market
    ListingClosed,
    WrongPayment,
    UnknownListing,
    // dao
    NotAGovernor,
    MalformedPayload,
    ProposalClosed,
    NotAccepted,
    InsufficientTreasury,
    UnknownProposal,
    // tension meter
    StaleInterval,
    BadProof,
    BadChoice,
    OutOfScope,
    UnknownInterval,
    IntervalStillOpen,
    BadTrigger,
    // cross-cutting
    UnknownAccount,
    UnknownAsset,
    InvalidArgument,
    // scenario runner
    ParseError,
    AssertionFailure,
    IoFailure,
};

std::string_view to_string(Errc c);

struct Error {
    Errc code;
    std::string detail;
};

// Value-or-error return for every fallible operation. Failed operations make
// no state change, so callers can treat an error as "nothing happened".
template <class T>
class Result {
  public:
    Result(T value) : v_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
    Result(Error e) : v_(std::move(e)) {}      // NOLINT(google-explicit-constructor)

    bool ok() const { return std::holds_alternative<T>(v_); }
    explicit operator bool() const { return ok(); }

    const T& value() const {
        assert(ok());
        return std::get<T>(v_);
    }
    T& value() {
        assert(ok());
        return std::get<T>(v_);
    }
    const Error& error() const {
        assert(!ok());
        return std::get<Error>(v_);
    }
    Errc code() const { return error().code; }

  private:
    std::variant<T, Error> v_;
};

template <>
class Result<void> {
  public:
    Result() = default;
    Result(Error e) : e_(std::move(e)) {}  // NOLINT(google-explicit-constructor)

    bool ok() const { return !e_.has_value(); }
    explicit operator bool() const { return ok(); }
    const Error& error() const {
        assert(!ok());
        return *e_;
    }
    Errc code() const { return error().code; }

  private:
    std::optional<Error> e_;
};

inline Error err(Errc code, std::string detail = {}) { return Error{code, std::move(detail)}; }

}  // namespace bda
