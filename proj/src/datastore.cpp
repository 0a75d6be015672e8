#include "bda/datastore.hpp"

#include <algorithm>

namespace bda {

std::string Datastore::payload_digest(const std::map<std::string, std::string>& fields) {
    CanonicalEncoder enc;
    enc.str("payload");
    enc.u64(fields.size());
    for (const auto& [k, v] : fields) {
        enc.str(k);
        enc.str(v);
    }
    return enc.digest();
}

std::string Datastore::component_message(AssetId asset, const std::string& ref,
                                         const std::string& payload_digest) {
    CanonicalEncoder enc;
    enc.str("component");
    enc.u64(asset.value);
    enc.str(ref);
    enc.str(payload_digest);
    return enc.digest();
}

Result<std::uint64_t> Datastore::store(const Ledger& ledger, const Attestor& attestor,
                                       AssetId asset, const std::string& ref,
                                       std::map<std::string, std::string> fields,
                                       std::set<std::string> personal, std::set<std::string> tags,
                                       const Attestation& cert) {
    if (auto r = ledger.require_active(asset); !r) return r;
    const Account* certifier = ledger.account(cert.subject);
    const std::string digest = payload_digest(fields);
    if (!certifier || certifier->role != Role::Certifier ||
        !attestor.verify(cert, component_message(asset, ref, digest))) {
        return err(Errc::BadCertification);
    }
    for (const auto& key : personal) {
        if (!fields.count(key)) return err(Errc::InvalidArgument, "personal flag on missing field");
    }

    auto& comp = components_[{asset, ref}];
    comp.asset = asset;
    comp.ref = ref;
    comp.fields = std::move(fields);
    comp.personal = std::move(personal);
    comp.tags = std::move(tags);
    comp.cert = cert;
    comp.version += 1;  // re-store supersedes the old payload
    comp.deleted = false;
    audit_[asset].push_back(AuditEntry{ref, comp.version, digest, cert.tag, false});
    return comp.version;
}

Result<Release> Datastore::request(const Ledger& ledger, Revenue& revenue, AccountId consumer,
                                   AssetId asset, const std::string& ref, std::uint64_t now) {
    if (auto r = ledger.require_active(asset); !r) return r;
    if (!ledger.has_account(consumer)) return err(Errc::UnknownAccount, "consumer");
    const DataComponent* comp = component(asset, ref);
    if (!comp) return err(Errc::UnknownComponent);
    PaymentRecord* payment = revenue.find_confirmable(asset, consumer, ref);
    if (!payment) return err(Errc::PaymentNotFound);

    payment->consumed = true;  // one payment, one release
    AccessLicence licence{LicenceId{next_licence_++}, consumer, asset, ref, true, now};
    licences_.push_back(licence);
    return Release{comp->fields, licence};
}

std::uint64_t Datastore::forget(const std::string& subject_key) {
    std::uint64_t redacted = 0;
    for (auto& [key, comp] : components_) {
        if (comp.deleted) continue;
        if (comp.personal.count(subject_key) && comp.fields.count(subject_key)) {
            comp.fields.erase(subject_key);
            comp.personal.erase(subject_key);
            redacted += 1;
            audit_[comp.asset].push_back(AuditEntry{comp.ref, comp.version,
                                                    payload_digest(comp.fields), comp.cert.tag,
                                                    true});
        }
    }
    return redacted;
}

std::vector<AuditEntry> Datastore::audit(AssetId asset) const {
    auto it = audit_.find(asset);
    if (it == audit_.end()) return {};
    std::vector<AuditEntry> out = it->second;
    std::stable_sort(out.begin(), out.end(),
                     [](const AuditEntry& a, const AuditEntry& b) { return a.ref < b.ref; });
    return out;
}

std::vector<std::pair<std::string, bool>> Datastore::verify(AssetId asset) const {
    // latest anchor per component vs a digest recomputed from the stored payload
    std::map<std::string, std::string> latest;
    auto it = audit_.find(asset);
    if (it != audit_.end()) {
        for (const AuditEntry& e : it->second) latest[e.ref] = e.digest;
    }
    std::vector<std::pair<std::string, bool>> out;
    for (const auto& [key, comp] : components_) {
        if (key.first != asset || comp.deleted) continue;
        out.emplace_back(comp.ref, payload_digest(comp.fields) == latest[comp.ref]);
    }
    return out;
}

bool Datastore::has_component(AssetId asset, const std::string& ref) const {
    return component(asset, ref) != nullptr;
}

const DataComponent* Datastore::component(AssetId asset, const std::string& ref) const {
    auto it = components_.find({asset, ref});
    if (it == components_.end() || it->second.deleted) return nullptr;
    return &it->second;
}

std::set<std::string> Datastore::keywords(AssetId asset, const std::string& ref) const {
    std::set<std::string> out;
    const DataComponent* comp = component(asset, ref);
    if (!comp) return out;
    out.insert(comp->tags.begin(), comp->tags.end());
    return out;
}

void Datastore::purge_asset(AssetId asset) {
    for (auto& [key, comp] : components_) {
        if (key.first != asset) continue;
        comp.fields.clear();
        comp.personal.clear();
        comp.deleted = true;
    }
}

void Datastore::tamper_for_test(AssetId asset, const std::string& ref, const std::string& key,
                                const std::string& value) {
    auto it = components_.find({asset, ref});
    if (it != components_.end()) it->second.fields[key] = value;
}

}  // namespace bda
