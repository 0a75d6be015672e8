#pragma once

#include "bda/hash.hpp"
#include "bda/ids.hpp"

#include <string>
#include <string_view>

namespace bda {

// Attestation binding a subject account to a message. Tags are opaque to
// everything except the attestor that issued them.
struct Attestation {
    AccountId subject;
    std::string tag;
};

// Identity-attestation seam. Certifier signatures, voter eligibility proofs
// and interval-trigger commitments all verify through this interface, so a
// real signature or anonymous-credential scheme can be swapped in without
// touching the modules that check proofs.
class Attestor {
  public:
    virtual ~Attestor() = default;

    virtual Attestation attest(AccountId subject, std::string_view message) const = 0;
    virtual bool verify(const Attestation& a, std::string_view message) const = 0;
};

// Default scheme: keyed hash over (per-subject secret, message). Deterministic
// and side-effect free; stands in for PKI at simulation scale.
class HashAttestor final : public Attestor {
  public:
    HashAttestor() = default;

    Attestation attest(AccountId subject, std::string_view message) const override {
        return Attestation{subject, tag_for(subject, message)};
    }

    bool verify(const Attestation& a, std::string_view message) const override {
        return a.tag == tag_for(a.subject, message);
    }

  private:
    std::string tag_for(AccountId subject, std::string_view message) const {
        CanonicalEncoder enc;
        enc.str("bda-attest");
        enc.u64(subject.value);
        enc.str(secret_for(subject));
        enc.str(message);
        return enc.digest();
    }

    std::string secret_for(AccountId subject) const {
        CanonicalEncoder enc;
        enc.str("bda-subject-secret");
        enc.u64(subject.value);
        return enc.digest();
    }
};

}  // namespace bda
