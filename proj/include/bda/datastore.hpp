#pragma once

#include "bda/attestation.hpp"
#include "bda/error.hpp"
#include "bda/ids.hpp"
#include "bda/ledger.hpp"
#include "bda/revenue.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace bda {

// One partition of an asset's data. The payload is a keyed field map held
// off-ledger; only digests of it ever reach logs or reports.
struct DataComponent {
    AssetId asset;
    std::string ref;
    std::map<std::string, std::string> fields;
    std::set<std::string> personal;  // field keys that are personal data
    std::set<std::string> tags;      // search metadata, never payload bulk
    Attestation cert;
    std::uint64_t version{0};
    bool deleted{false};
};

// Digest anchor trail. Redactions re-anchor a fresh digest instead of
// rewriting history, so the trail only ever grows.
struct AuditEntry {
    std::string ref;
    std::uint64_t version{0};
    std::string digest;
    std::string cert_tag;
    bool redaction{false};
};

struct AccessLicence {
    LicenceId id;
    AccountId consumer;
    AssetId asset;
    std::string component_ref;
    bool use_only{true};  // resale prohibited
    std::uint64_t issued_at{0};
};

struct Release {
    std::map<std::string, std::string> payload;
    AccessLicence licence;
};

class Datastore {
  public:
    static std::string payload_digest(const std::map<std::string, std::string>& fields);
    static std::string component_message(AssetId asset, const std::string& ref,
                                         const std::string& payload_digest);

    Result<std::uint64_t> store(const Ledger& ledger, const Attestor& attestor, AssetId asset,
                                const std::string& ref, std::map<std::string, std::string> fields,
                                std::set<std::string> personal, std::set<std::string> tags,
                                const Attestation& cert);

    // payment-gated: exactly one release per confirmed payment
    Result<Release> request(const Ledger& ledger, Revenue& revenue, AccountId consumer,
                            AssetId asset, const std::string& ref, std::uint64_t now);

    // erases every personal field keyed by subject across all live components;
    // re-anchors digests with a redaction note. Returns fields erased.
    std::uint64_t forget(const std::string& subject_key);

    std::vector<AuditEntry> audit(AssetId asset) const;
    // recompute stored payload digests against their latest anchors
    std::vector<std::pair<std::string, bool>> verify(AssetId asset) const;

    bool has_component(AssetId asset, const std::string& ref) const;
    const DataComponent* component(AssetId asset, const std::string& ref) const;
    std::set<std::string> keywords(AssetId asset, const std::string& ref) const;

    // retirement: destroy payloads, keep the anchor trail
    void purge_asset(AssetId asset);

    const std::vector<AccessLicence>& licences() const { return licences_; }
    const std::map<std::pair<AssetId, std::string>, DataComponent>& components() const {
        return components_;
    }

    // breaks a stored payload without re-anchoring; exists for audit tests only
    void tamper_for_test(AssetId asset, const std::string& ref, const std::string& key,
                         const std::string& value);

  private:
    std::map<std::pair<AssetId, std::string>, DataComponent> components_;
    std::map<AssetId, std::vector<AuditEntry>> audit_;
    std::vector<AccessLicence> licences_;
    std::uint64_t next_licence_{1};
};

}  // namespace bda
