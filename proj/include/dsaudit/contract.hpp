// Copyright 2026 The dsaudit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "dsaudit/verifier.hpp"

namespace dsaudit {

enum class ContractStatus { Uninit, Ack, Freeze, Audit, Prove, Closed };

inline const char* to_string(ContractStatus s)
{
    switch (s) {
    case ContractStatus::Uninit: return "UNINIT";
    case ContractStatus::Ack: return "ACK";
    case ContractStatus::Freeze: return "FREEZE";
    case ContractStatus::Audit: return "AUDIT";
    case ContractStatus::Prove: return "PROVE";
    case ContractStatus::Closed: return "CLOSED";
    }
    return "?";
}

/// Private is the protocol proper; InsecureDemo accepts unblinded 96-byte
/// proofs and exists only to feed the leakage demonstration.
enum class ProofMode { Private, InsecureDemo };

enum class Party { None, Owner, Provider };

inline const char* to_string(Party p) { return p == Party::Owner ? "owner" : p == Party::Provider ? "provider" : "none"; }

struct Agreement {
    std::uint64_t duration = 0;       ///< T, in rounds
    std::uint64_t num = 0;            ///< audits to run
    std::uint64_t k = 300;            ///< challenged chunks per audit
    std::uint64_t audit_interval = 1; ///< rounds between challenges; also the proof deadline
    std::uint64_t storage_fee = 0;    ///< on-chain storage cost charged when the provider rejects
    ProofMode mode = ProofMode::Private;
};

template <class Suite>
struct FileMetadata {
    typename Suite::Scalar name;
    std::uint64_t d = 0;
    std::uint64_t s = 0;
    std::uint64_t original_length = 0;
};

struct Balances {
    std::uint64_t owner_deposit = 0;
    std::uint64_t provider_deposit = 0;
    std::uint64_t owner_locked = 0;
    std::uint64_t provider_locked = 0;
    std::uint64_t paid_to_owner = 0;
    std::uint64_t paid_to_provider = 0;
    std::uint64_t owner_fee = 0; ///< storage fee borne by the owner after a rejection

    bool conserved() const
    {
        return owner_locked + provider_locked + paid_to_owner + paid_to_provider == owner_deposit + provider_deposit;
    }
};

struct Payout {
    Party recipient = Party::None;
    std::uint64_t amount = 0;
};

template <class Suite>
struct AuditRecord {
    std::uint64_t audit = 0;    ///< 0-based audit number, also the beacon round
    std::uint64_t time = 0;     ///< simulated clock at verification
    Challenge<Suite> challenge;
    Bytes proof;                ///< empty when the deadline passed without a proof
    bool passed = false;
    Payout payout;
};

enum class EventKind { Chal, ProofArrival, Verify, Deadline };

struct ScheduledEvent {
    std::uint64_t time = 0;
    EventKind kind = EventKind::Chal;
    std::uint64_t audit = 0;
    Bytes payload;
};

/// Answers a challenge, or stays silent (nullopt) and lets the deadline pass.
template <class Suite>
using ProviderFn = std::function<std::optional<Bytes>(const Challenge<Suite>&, const ChallengeSet<Suite>&)>;

/// The auditing contract as a deterministic state machine. Messages may be
/// delivered directly (negotiate, acknowledge, ...) or through the event queue
/// driven by run(); every state change is appended to the ledger.
template <class Suite>
class AuditContract {
public:
    using Json = nlohmann::ordered_json;

    ContractStatus status() const { return status_; }
    const Agreement& agreement() const { return agreement_; }
    const FileMetadata<Suite>& metadata() const { return metadata_; }
    const Balances& balances() const { return balances_; }
    std::uint64_t cnt() const { return cnt_; }
    std::uint64_t now() const { return now_; }
    const std::optional<Challenge<Suite>>& current_challenge() const { return challenge_; }
    const std::vector<AuditRecord<Suite>>& records() const { return records_; }
    const std::vector<Json>& ledger() const { return ledger_; }
    const VerificationContext<Suite>& context() const { return ctx_; }

    std::size_t proof_bytes() const
    {
        return agreement_.mode == ProofMode::Private ? AuditProof<Suite>::wire_bytes : NonPrivateProof<Suite>::wire_bytes;
    }

    void negotiate(const Agreement& ag, const PublicKey<Suite>& pk, const FileMetadata<Suite>& meta)
    {
        expect(ContractStatus::Uninit, "negotiate");
        require(ag.num >= 1, ErrorCode::InvalidAgreement, "an agreement must schedule at least one audit");
        require(ag.k >= 1 && ag.audit_interval >= 1, ErrorCode::InvalidAgreement, "k and audit_interval must be positive");
        require(ag.num * ag.audit_interval <= ag.duration, ErrorCode::InvalidAgreement,
                std::to_string(ag.num) + " audits every " + std::to_string(ag.audit_interval) + " rounds exceed T = " +
                    std::to_string(ag.duration));
        require(meta.d >= 1 && meta.s == pk.s, ErrorCode::InvalidAgreement, "metadata does not match the public key");
        agreement_ = ag;
        metadata_ = meta;
        ctx_ = VerificationContext<Suite>{pk, meta.name, meta.d, ag.k};
        status_ = ContractStatus::Ack;
        Json e = event("negotiated");
        e["T"] = ag.duration;
        e["num"] = ag.num;
        e["k"] = ag.k;
        e["audit_interval"] = ag.audit_interval;
        e["storage_fee"] = ag.storage_fee;
        e["mode"] = ag.mode == ProofMode::Private ? "private" : "insecure-demo";
        e["name"] = to_hex(Suite::encode(meta.name));
        e["d"] = meta.d;
        e["s"] = meta.s;
        e["original_length"] = meta.original_length;
        e["params"] = to_hex(pk.to_bytes());
        log(std::move(e));
    }

    void acknowledge()
    {
        expect(ContractStatus::Ack, "acknowledge");
        status_ = ContractStatus::Freeze;
        log(event("acked"));
    }

    /// The provider walks away; the owner has already paid to store the
    /// agreement on chain and no deposits move.
    void reject()
    {
        expect(ContractStatus::Ack, "reject");
        balances_.owner_fee = agreement_.storage_fee;
        status_ = ContractStatus::Closed;
        log(event("rejected"));
    }

    void freeze_deposits(std::uint64_t owner_amount, std::uint64_t provider_amount)
    {
        expect(ContractStatus::Freeze, "freeze_deposits");
        require(owner_amount > 0 && provider_amount > 0, ErrorCode::InsufficientDeposit, "both deposits must be positive");
        balances_.owner_deposit = balances_.owner_locked = owner_amount;
        balances_.provider_deposit = balances_.provider_locked = provider_amount;
        status_ = ContractStatus::Audit;
        first_challenge_ = now_ + agreement_.audit_interval;
        schedule({first_challenge_, EventKind::Chal, 0, {}});
        log(event("frozen"));
    }

    Challenge<Suite> fire_challenge(RandomnessBeacon& beacon)
    {
        if (status_ == ContractStatus::Closed && cnt_ == agreement_.num && agreement_.num > 0) {
            fail(ErrorCode::AuditsExhausted, "all " + std::to_string(agreement_.num) + " audits have run");
        }
        expect(ContractStatus::Audit, "fire_challenge");
        if (cnt_ >= agreement_.num) {
            settle();
            fail(ErrorCode::AuditsExhausted, "all " + std::to_string(agreement_.num) + " audits have run");
        }
        challenge_ = draw_challenge<Suite>(beacon, cnt_);
        pending_proof_.reset();
        deadline_ = now_ + agreement_.audit_interval;
        status_ = ContractStatus::Prove;
        schedule({deadline_, EventKind::Deadline, cnt_, {}});
        Json e = event("challenged");
        e["audit"] = cnt_;
        e["challenge"] = to_hex(challenge_->word());
        log(std::move(e));
        return *challenge_;
    }

    void submit_proof(ByteSpan proof)
    {
        expect(ContractStatus::Prove, "submit_proof");
        require(!pending_proof_, ErrorCode::WrongState, "a proof is already pending verification");
        require(proof.size() == proof_bytes(), ErrorCode::WrongLength,
                "proof must be " + std::to_string(proof_bytes()) + " bytes, got " + std::to_string(proof.size()));
        pending_proof_ = Bytes(proof.begin(), proof.end());
        schedule({now_, EventKind::Verify, cnt_, {}});
        Json e = event("proved");
        e["audit"] = cnt_;
        e["proof"] = to_hex(proof);
        log(std::move(e));
    }

    /// Verifies the pending proof, or, once the deadline has passed without
    /// one, records a failed audit.
    AuditRecord<Suite> fire_verify()
    {
        const bool timed_out = status_ == ContractStatus::Prove && !pending_proof_ && now_ >= deadline_;
        require(status_ == ContractStatus::Prove && (pending_proof_ || timed_out), ErrorCode::NoProofPending,
                "no proof awaiting verification");

        AuditRecord<Suite> rec;
        rec.audit = cnt_;
        rec.time = now_;
        rec.challenge = *challenge_;
        if (pending_proof_) {
            rec.proof = *pending_proof_;
            rec.passed = check(rec.challenge, rec.proof);
        }
        if (rec.passed) {
            rec.payout = {Party::Provider, tranche(balances_.owner_deposit)};
            balances_.owner_locked -= rec.payout.amount;
            balances_.paid_to_provider += rec.payout.amount;
        } else {
            rec.payout = {Party::Owner, tranche(balances_.provider_deposit)};
            balances_.provider_locked -= rec.payout.amount;
            balances_.paid_to_owner += rec.payout.amount;
        }
        ++cnt_;
        pending_proof_.reset();
        challenge_.reset();
        status_ = ContractStatus::Audit;
        records_.push_back(rec);

        Json e = event("verified");
        e["audit"] = rec.audit;
        e["challenge"] = to_hex(rec.challenge.word());
        e["proof"] = to_hex(rec.proof);
        e["verdict"] = rec.passed ? "pass" : (timed_out ? "timeout" : "fail");
        e["payout_to"] = to_string(rec.payout.recipient);
        e["payout"] = rec.payout.amount;
        log(std::move(e));

        if (cnt_ == agreement_.num) {
            settle();
        } else {
            schedule({first_challenge_ + cnt_ * agreement_.audit_interval, EventKind::Chal, cnt_, {}});
        }
        return rec;
    }

    /// Re-runs verification of a stored record against the negotiated params.
    bool reverify(const AuditRecord<Suite>& rec) const { return !rec.proof.empty() && check(rec.challenge, rec.proof); }

    /// Drives the event queue until the contract closes or nothing is left.
    /// The provider answers each challenge after `reply_delay` rounds.
    void run(RandomnessBeacon& beacon, const ProviderFn<Suite>& provider, std::uint64_t reply_delay = 0)
    {
        while (!queue_.empty() && status_ != ContractStatus::Closed) {
            auto it = queue_.begin();
            ScheduledEvent ev = std::move(it->second);
            queue_.erase(it);
            now_ = std::max(now_, ev.time);
            switch (ev.kind) {
            case EventKind::Chal: {
                if (status_ != ContractStatus::Audit || ev.audit != cnt_) break;
                auto ch = fire_challenge(beacon);
                auto reply = provider(ch, expand_challenge(ch, metadata_.d, agreement_.k));
                if (reply && reply_delay < agreement_.audit_interval) {
                    schedule({now_ + reply_delay, EventKind::ProofArrival, cnt_, std::move(*reply)});
                }
                break;
            }
            case EventKind::ProofArrival:
                if (status_ == ContractStatus::Prove && ev.audit == cnt_ && !pending_proof_) submit_proof(ev.payload);
                break;
            case EventKind::Verify:
                if (status_ == ContractStatus::Prove && ev.audit == cnt_ && pending_proof_) fire_verify();
                break;
            case EventKind::Deadline:
                if (status_ == ContractStatus::Prove && ev.audit == cnt_ && !pending_proof_) fire_verify();
                break;
            }
        }
    }

    /// The ledger as JSON lines.
    std::string ledger_jsonl() const
    {
        std::string out;
        for (const auto& e : ledger_) out += e.dump() + "\n";
        return out;
    }

private:
    void expect(ContractStatus want, const char* op) const
    {
        if (status_ != want) {
            fail(ErrorCode::WrongState,
                 std::string(op) + " requires state " + to_string(want) + " but contract is " + to_string(status_));
        }
    }

    /// Share number cnt of `total`, split so that num shares sum to total.
    std::uint64_t tranche(std::uint64_t total) const
    {
        const auto n = agreement_.num;
        auto upto = [&](std::uint64_t i) {
            return static_cast<std::uint64_t>(static_cast<unsigned __int128>(total) * i / n);
        };
        return upto(cnt_ + 1) - upto(cnt_);
    }

    bool check(const Challenge<Suite>& ch, ByteSpan proof) const
    {
        auto cs = expand_challenge(ch, metadata_.d, agreement_.k);
        try {
            return agreement_.mode == ProofMode::Private ? verify_private(ctx_, ch, cs, proof)
                                                         : verify_nonprivate(ctx_, ch, cs, proof);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::InvalidEncoding || e.code() == ErrorCode::WrongLength) return false;
            throw;
        }
    }

    void settle()
    {
        balances_.paid_to_owner += balances_.owner_locked;
        balances_.paid_to_provider += balances_.provider_locked;
        Json e = event("settled");
        e["refund_owner"] = balances_.owner_locked;
        e["refund_provider"] = balances_.provider_locked;
        balances_.owner_locked = balances_.provider_locked = 0;
        status_ = ContractStatus::Closed;
        queue_.clear();
        log(std::move(e));
    }

    void schedule(ScheduledEvent ev)
    {
        const auto key = std::make_pair(ev.time, next_seq_++);
        queue_.emplace(key, std::move(ev));
    }

    Json event(const char* name) const
    {
        Json e;
        e["seq"] = ledger_.size();
        e["time"] = now_;
        e["event"] = name;
        return e;
    }

    void log(Json e)
    {
        e["status"] = to_string(status_);
        e["cnt"] = cnt_;
        e["owner_locked"] = balances_.owner_locked;
        e["provider_locked"] = balances_.provider_locked;
        e["paid_to_owner"] = balances_.paid_to_owner;
        e["paid_to_provider"] = balances_.paid_to_provider;
        if (balances_.owner_fee) e["owner_fee"] = balances_.owner_fee;
        ledger_.push_back(std::move(e));
    }

    ContractStatus status_ = ContractStatus::Uninit;
    Agreement agreement_;
    FileMetadata<Suite> metadata_;
    VerificationContext<Suite> ctx_;
    Balances balances_;
    std::uint64_t cnt_ = 0;
    std::uint64_t now_ = 0;
    std::uint64_t first_challenge_ = 0;
    std::uint64_t deadline_ = 0;
    std::uint64_t next_seq_ = 0;
    std::optional<Challenge<Suite>> challenge_;
    std::optional<Bytes> pending_proof_;
    std::map<std::pair<std::uint64_t, std::uint64_t>, ScheduledEvent> queue_;
    std::vector<AuditRecord<Suite>> records_;
    std::vector<Json> ledger_;
};

/// Audit rounds recovered from a JSON-lines ledger.
template <class Suite>
struct ParsedLedger {
    Agreement agreement;
    FileMetadata<Suite> metadata;
    std::optional<PublicKey<Suite>> pk;
    std::vector<AuditRecord<Suite>> records;
};

template <class Suite>
ParsedLedger<Suite> parse_ledger(std::istream& in)
{
    ParsedLedger<Suite> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            auto e = nlohmann::json::parse(line);
            const std::string kind = e.at("event");
            if (kind == "negotiated") {
                auto& ag = out.agreement;
                ag.duration = e.at("T");
                ag.num = e.at("num");
                ag.k = e.at("k");
                ag.audit_interval = e.at("audit_interval");
                ag.storage_fee = e.at("storage_fee");
                ag.mode = e.at("mode") == "private" ? ProofMode::Private : ProofMode::InsecureDemo;
                out.metadata.name = Suite::read_scalar(from_hex(e.at("name").get<std::string>()));
                out.metadata.d = e.at("d");
                out.metadata.s = e.at("s");
                out.metadata.original_length = e.at("original_length");
                out.pk = PublicKey<Suite>::from_bytes(from_hex(e.at("params").get<std::string>()));
            } else if (kind == "verified") {
                AuditRecord<Suite> rec;
                rec.audit = e.at("audit");
                rec.time = e.at("time");
                auto word = from_hex(e.at("challenge").get<std::string>());
                require(word.size() == 48, ErrorCode::WrongLength, "challenge must be 48 bytes");
                BeaconWord w{};
                std::copy(word.begin(), word.end(), w.begin());
                rec.challenge = Challenge<Suite>::from_word(w, rec.audit);
                rec.proof = from_hex(e.at("proof").get<std::string>());
                rec.passed = e.at("verdict") == "pass";
                rec.payout.amount = e.at("payout");
                rec.payout.recipient = e.at("payout_to") == "provider" ? Party::Provider : Party::Owner;
                out.records.push_back(std::move(rec));
            }
        } catch (const nlohmann::json::exception& ex) {
            fail(ErrorCode::InvalidEncoding, "ledger line " + std::to_string(lineno) + ": " + ex.what());
        } catch (const Error& ex) {
            fail(ex.code(), "ledger line " + std::to_string(lineno) + ": " + ex.what());
        }
    }
    return out;
}

} // namespace dsaudit
