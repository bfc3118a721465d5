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

// dsaudit: command-line front end for keys, tags, audits, simulation, the
// leakage demo and fee estimation.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "dsaudit/artifacts.hpp"
#include "dsaudit/costs.hpp"
#include "dsaudit/simulate.hpp"

using namespace dsaudit;
using Suite = Bn254Suite;
using Scalar = Suite::Scalar;

namespace {

/// Exit codes: 0 success / proof accepted, 1 proof rejected, 2 bad input.
constexpr int kRejected = 1;
constexpr int kBadInput = 2;

std::unique_ptr<RandomSource> make_rng(const std::optional<std::uint64_t>& seed, std::string_view purpose)
{
    if (!seed) return std::make_unique<SystemRandom>();
    Bytes s;
    put_u64_be(s, *seed);
    s.insert(s.end(), purpose.begin(), purpose.end());
    return std::make_unique<SeededRandom>(s);
}

struct Paths {
    std::string file, pk, sk, tags, meta, challenge, proof, out, ledger, config;
};

int cmd_keygen(std::uint32_t s, const Paths& p, const std::optional<std::uint64_t>& seed)
{
    auto rng = make_rng(seed, "keygen");
    auto kp = keygen<Suite>(s, *rng);
    write_file(p.pk, kp.pk.to_bytes());
    write_file(p.sk, kp.sk.to_bytes());
    std::printf("public key  %s (%zu bytes, s = %u)\nsecret key  %s\n", p.pk.c_str(), kp.pk.to_bytes().size(), s, p.sk.c_str());
    return 0;
}

int cmd_tag(std::optional<std::uint32_t> s, const Paths& p, const std::optional<std::uint64_t>& seed)
{
    auto pk = parse_artifact(p.pk, PublicKey<Suite>::from_bytes);
    auto sk = parse_artifact(p.sk, SecretKey<Suite>::from_bytes);
    if (s && *s != pk.s) fail(ErrorCode::ParamMismatch, "configured s = " + std::to_string(*s) + " but key has s = " + std::to_string(pk.s));
    auto data = read_file(p.file);
    auto rng = make_rng(seed, "file-name");
    auto enc = encode_file<Suite>(data, {pk.s, Suite::block_bytes}, Scalar::random(*rng));
    auto tags = generate_tags(sk, pk, enc);
    require(verify_tags(pk, enc, tags), ErrorCode::InvalidEncoding, "generated tags do not verify; key pair mismatch?");
    write_file(p.tags, tags.to_bytes());
    write_file(p.meta, FileMeta<Suite>{pk.s, enc.name, enc.original_length, enc.d}.to_bytes());
    std::printf("%llu chunks of %u blocks, tags %s, metadata %s\n", static_cast<unsigned long long>(enc.d), pk.s,
                p.tags.c_str(), p.meta.c_str());
    return 0;
}

int cmd_challenge(std::uint64_t beacon_seed, std::uint64_t round, const Paths& p)
{
    SeededBeacon beacon(beacon_seed);
    auto ch = draw_challenge<Suite>(beacon, round);
    write_file(p.out, ch.to_bytes());
    std::printf("round %llu challenge %s\n", static_cast<unsigned long long>(round), to_hex(ch.word()).c_str());
    return 0;
}

int cmd_prove(std::uint64_t k, bool demo, const Paths& p, const std::optional<std::uint64_t>& seed)
{
    auto pk = parse_artifact(p.pk, PublicKey<Suite>::from_bytes);
    auto meta = parse_artifact(p.meta, FileMeta<Suite>::from_bytes);
    auto tags = parse_artifact(p.tags, TagSet<Suite>::from_bytes);
    auto ch = parse_artifact(p.challenge, Challenge<Suite>::from_bytes);
    auto enc = encode_file<Suite>(read_file(p.file), {pk.s, Suite::block_bytes}, meta.name);
    require(enc.d == meta.d && enc.original_length == meta.original_length, ErrorCode::ParamMismatch,
            p.file + " does not match " + p.meta);
    require(verify_tags(pk, enc, tags), ErrorCode::InvalidEncoding, p.tags + " does not authenticate " + p.file);
    auto cs = expand_challenge(ch, enc.d, k);
    auto rng = make_rng(seed, "blinding");
    Bytes proof = demo ? prove_nonprivate(pk, enc, tags, ch, cs).to_bytes() : prove_private(pk, enc, tags, ch, cs, *rng).to_bytes();
    write_file(p.out, proof);
    std::printf("%s proof %s (%zu bytes, %zu chunks challenged)\n", demo ? "unblinded" : "private", p.out.c_str(),
                proof.size(), cs.size());
    return 0;
}

int cmd_verify(std::uint64_t k, bool demo, const Paths& p)
{
    auto pk = parse_artifact(p.pk, PublicKey<Suite>::from_bytes);
    auto meta = parse_artifact(p.meta, FileMeta<Suite>::from_bytes);
    auto ch = parse_artifact(p.challenge, Challenge<Suite>::from_bytes);
    require(meta.s == pk.s, ErrorCode::ParamMismatch, "metadata and key disagree on s");
    VerificationContext<Suite> ctx{pk, meta.name, meta.d, k};
    auto cs = expand_challenge(ch, meta.d, k);
    bool ok = parse_artifact(p.proof, [&](ByteSpan b) { return demo ? verify_nonprivate(ctx, ch, cs, b) : verify_private(ctx, ch, cs, b); });
    std::puts(ok ? "PASS" : "FAIL");
    return ok ? 0 : kRejected;
}

int cmd_simulate(RunConfig cfg)
{
    cfg.validate();
    Bytes data;
    if (!cfg.file.empty()) {
        data = read_file(cfg.file);
    } else {
        data.resize(static_cast<std::size_t>(cfg.file_bytes));
        SeededRandom(cfg.seed ^ 0xf11e).fill(data);
    }
    auto res = simulate<Suite>(cfg, data);
    if (!cfg.ledger.empty()) write_file(cfg.ledger, res.ledger);

    std::uint64_t passes = 0, fails = 0;
    for (const auto& c : res.contracts) {
        passes += c.passes;
        fails += c.fails;
    }
    std::printf("file: %zu bytes, d = %llu chunks, s = %u, k = %llu\n", data.size(), static_cast<unsigned long long>(res.d),
                cfg.s, static_cast<unsigned long long>(cfg.k));
    if (cfg.corrupt_fraction > 0) {
        std::printf("corrupted chunks: %llu (from audit %llu)\n", static_cast<unsigned long long>(res.corrupted_chunks),
                    static_cast<unsigned long long>(cfg.corrupt_from_audit));
    }
    std::printf("contracts: %llu, audits passed: %llu, failed: %llu\n", static_cast<unsigned long long>(res.contracts.size()),
                static_cast<unsigned long long>(passes), static_cast<unsigned long long>(fails));
    if (res.contracts.size() > 1) {
        std::printf("contracts with a failed audit: %llu (%.4f)\n", static_cast<unsigned long long>(res.contracts_with_failure()),
                    static_cast<double>(res.contracts_with_failure()) / static_cast<double>(res.contracts.size()));
    }
    const auto& b = res.contracts[0].balances;
    std::printf("contract 0 final: paid to provider %llu, paid to owner %llu, still locked %llu\n",
                static_cast<unsigned long long>(b.paid_to_provider), static_cast<unsigned long long>(b.paid_to_owner),
                static_cast<unsigned long long>(b.owner_locked + b.provider_locked));
    if (!cfg.ledger.empty()) std::printf("ledger: %s\n", cfg.ledger.c_str());
    return 0;
}

int cmd_attack(const Paths& p)
{
    std::ifstream in(p.ledger);
    require(static_cast<bool>(in), ErrorCode::Io, "cannot open " + p.ledger);
    auto led = parse_ledger<Suite>(in);
    require(led.pk.has_value(), ErrorCode::InvalidEncoding, p.ledger + ": no negotiated event");
    const auto& meta = led.metadata;
    const std::size_t s = static_cast<std::size_t>(meta.s);
    const bool demo = led.agreement.mode == ProofMode::InsecureDemo;

    std::vector<ObservedRound<Suite>> rounds;
    std::vector<std::pair<Challenge<Suite>, AuditProof<Suite>>> private_rounds;
    for (const auto& r : led.records) {
        if (r.proof.empty()) continue;
        if (demo) {
            rounds.push_back({r.challenge, NonPrivateProof<Suite>::from_bytes(r.proof).y});
        } else {
            auto prf = AuditProof<Suite>::from_bytes(r.proof);
            rounds.push_back({r.challenge, prf.y_prime});
            private_rounds.emplace_back(r.challenge, prf);
        }
    }
    auto sets = group_transcripts(rounds);
    std::size_t usable = std::count_if(sets.begin(), sets.end(), [&](const auto& t) { return t.points.size() >= s; });
    std::printf("ledger: %zu audits with proofs, %zu seed groups, %zu with >= s = %zu openings, d = %llu, k = %llu, mode %s\n",
                rounds.size(), sets.size(), usable, s, static_cast<unsigned long long>(meta.d),
                static_cast<unsigned long long>(led.agreement.k), demo ? "insecure-demo" : "private");

    std::optional<Bytes> original;
    if (!p.file.empty()) original = read_file(p.file);

    if (demo) {
        require(led.agreement.k >= meta.d, ErrorCode::InsufficientPoints,
                "recovery needs every chunk challenged (k >= d)");
        auto enc = recover_file(rounds, meta.d, led.agreement.k, s);
        enc.original_length = meta.original_length;
        enc.n = encoded_shape(meta.original_length, {s, Suite::block_bytes}).n;
        Bytes bytes = decode_file(enc, {s, Suite::block_bytes});
        std::printf("recovered %zu bytes from the audit trail\n", bytes.size());
        if (!p.out.empty()) write_file(p.out, bytes);
        if (original) std::printf("matches original: %s\n", *original == bytes ? "yes" : "no");
        return 0;
    }

    // Private trail: an opening set is self-consistent only if extra points lie
    // on the polynomial interpolated through the first s of them.
    std::size_t checked = 0, consistent = 0;
    for (const auto& ts : sets) {
        if (ts.points.size() <= s) continue;
        auto poly = interpolate_combined(ts, s);
        for (std::size_t j = s; j < ts.points.size(); ++j, ++checked) consistent += poly(ts.points[j].first) == ts.points[j].second;
    }
    std::printf("interpolation consistency on extra openings: %zu of %zu\n", consistent, checked);
    if (original) {
        auto enc = encode_file<Suite>(*original, {s, Suite::block_bytes}, meta.name);
        std::size_t leaked = 0, attempted = 0;
        for (const auto& ts : sets) {
            if (ts.points.size() < s) continue;
            std::vector<std::pair<Challenge<Suite>, AuditProof<Suite>>> group;
            for (const auto& pr : private_rounds) {
                if (pr.first.c1_seed == ts.c1_seed && pr.first.c2_seed == ts.c2_seed) group.push_back(pr);
            }
            auto truth = combine_chunks(enc, expand_challenge(group[0].first, meta.d, led.agreement.k));
            auto rep = attack_private_transcripts(group, s, truth);
            ++attempted;
            leaked += rep.leaked();
            std::printf("  group %zu: raw mismatches %zu/%zu, zeta-normalised mismatches %zu/%zu\n", attempted,
                        rep.raw_mismatches, s, rep.normalised_mismatches, s);
        }
        std::printf("combined polynomials recovered: %zu of %zu\n", leaked, attempted);
    }
    std::puts("private trail: nothing recovered");
    return 0;
}

int cmd_estimate(const costs::FeeParams& fp)
{
    using namespace costs;
    FeeParams single = fp;
    single.redundancy_factor = 1;
    std::printf("%-34s %14s\n", "quantity", "fiat");
    std::printf("%-34s %14.6f\n", "per audit", per_audit_cost(fp));
    std::printf("%-34s %14.6f\n", "one-time storage", onetime_cost(fp));
    std::printf("%-34s %14.6f\n", "total, one contract", annual_cost(single));
    char label[64];
    std::snprintf(label, sizeof label, "total, redundancy x%g", fp.redundancy_factor);
    std::printf("%-34s %14.6f\n", label, annual_cost(fp));
    std::printf("(%g audits/year over %g years)\n", fp.audits_per_year, fp.duration_years);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"dsaudit: privacy-preserving storage audits"};
    app.require_subcommand(1);
    std::optional<std::uint64_t> seed;
    app.add_option("--seed", seed, "Seed for every random choice (default: system randomness)");

    Paths p;
    std::uint32_t s = 50;
    std::optional<std::uint32_t> tag_s;
    std::uint64_t k = 300, round = 0, beacon_seed = 1;
    bool demo = false;

    auto* keygen_cmd = app.add_subcommand("keygen", "Generate a key pair");
    keygen_cmd->add_option("--s", s, "Blocks per chunk")->check(CLI::PositiveNumber);
    keygen_cmd->add_option("--pk", p.pk, "Public key output")->required();
    keygen_cmd->add_option("--sk", p.sk, "Secret key output")->required();

    auto* tag_cmd = app.add_subcommand("tag", "Encode a file and compute its authenticators");
    tag_cmd->add_option("--file", p.file)->required()->check(CLI::ExistingFile);
    tag_cmd->add_option("--pk", p.pk)->required();
    tag_cmd->add_option("--sk", p.sk)->required();
    tag_cmd->add_option("--s", tag_s, "Expected blocks per chunk; must match the key");
    tag_cmd->add_option("--tags", p.tags, "Tag output")->required();
    tag_cmd->add_option("--meta", p.meta, "Metadata output")->required();

    auto* chal_cmd = app.add_subcommand("challenge", "Draw a challenge from the seeded beacon");
    chal_cmd->add_option("--beacon-seed", beacon_seed);
    chal_cmd->add_option("--round", round);
    chal_cmd->add_option("--out", p.out)->required();

    auto* prove_cmd = app.add_subcommand("prove", "Answer a challenge");
    prove_cmd->add_option("--file", p.file)->required();
    prove_cmd->add_option("--tags", p.tags)->required();
    prove_cmd->add_option("--out", p.out)->required();
    auto* verify_cmd = app.add_subcommand("verify", "Check a proof (exit 0 pass, 1 fail, 2 malformed)");
    verify_cmd->add_option("--proof", p.proof)->required();
    for (auto* c : {prove_cmd, verify_cmd}) {
        c->add_option("--pk", p.pk)->required();
        c->add_option("--meta", p.meta)->required();
        c->add_option("--challenge", p.challenge)->required();
        c->add_option("--k", k, "Challenged chunks")->check(CLI::PositiveNumber);
        c->add_flag("--insecure-demo", demo, "Unblinded proofs (leaks data; for the attack demo only)");
    }

    RunConfig cfg;
    auto* sim_cmd = app.add_subcommand("simulate", "Run audit contracts end to end");
    sim_cmd->add_option("--config", p.config, "JSON run configuration (flags override it)");
    sim_cmd->add_option("--s", cfg.s);
    sim_cmd->add_option("--k", cfg.k);
    sim_cmd->add_option("--num", cfg.num);
    sim_cmd->add_option("--audit-interval", cfg.audit_interval);
    sim_cmd->add_option("--beacon-seed", cfg.beacon_seed);
    sim_cmd->add_option("--owner-deposit", cfg.owner_deposit);
    sim_cmd->add_option("--provider-deposit", cfg.provider_deposit);
    sim_cmd->add_option("--corrupt", cfg.corrupt_fraction, "Fraction of chunks to tamper with");
    sim_cmd->add_option("--corrupt-from", cfg.corrupt_from_audit, "First audit that sees the damage");
    sim_cmd->add_option("--replay-period", cfg.replay_period, "Adversarial beacon: repeat (C1, C2) this many rounds");
    sim_cmd->add_option("--contracts", cfg.contracts);
    sim_cmd->add_option("--file", cfg.file);
    sim_cmd->add_option("--file-bytes", cfg.file_bytes);
    sim_cmd->add_option("--ledger", cfg.ledger, "Ledger output (JSON lines)");
    sim_cmd->add_flag("--insecure-demo", cfg.insecure_demo);

    auto* attack_cmd = app.add_subcommand("attack-demo", "Interpolation attack on a ledger");
    attack_cmd->add_option("--ledger", p.ledger)->required();
    attack_cmd->add_option("--out", p.out, "Where to write recovered bytes");
    attack_cmd->add_option("--file", p.file, "Original file, for comparison");

    costs::FeeParams fp;
    auto* cost_cmd = app.add_subcommand("estimate-cost", "On-chain fee estimate");
    cost_cmd->add_option("--gas-per-audit", fp.gas_per_audit);
    cost_cmd->add_option("--gas-price-gwei", fp.gas_price_gwei);
    cost_cmd->add_option("--token-price", fp.token_price);
    cost_cmd->add_option("--onetime-storage-gas", fp.onetime_storage_gas);
    cost_cmd->add_option("--beacon-cost", fp.beacon_cost_per_round);
    cost_cmd->add_option("--audits-per-year", fp.audits_per_year);
    cost_cmd->add_option("--redundancy", fp.redundancy_factor);
    cost_cmd->add_option("--years", fp.duration_years);
    for (auto* o : cost_cmd->get_options()) {
        if (o->get_name() != "--help") o->check(CLI::NonNegativeNumber);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kBadInput;
    }

    try {
        if (*keygen_cmd) return cmd_keygen(s, p, seed);
        if (*tag_cmd) return cmd_tag(tag_s, p, seed);
        if (*chal_cmd) return cmd_challenge(beacon_seed, round, p);
        if (*prove_cmd) return cmd_prove(k, demo, p, seed);
        if (*verify_cmd) return cmd_verify(k, demo, p);
        if (*sim_cmd) {
            RunConfig run;
            if (!p.config.empty()) {
                auto text = read_file(p.config);
                try {
                    run = nlohmann::json::parse(text.begin(), text.end()).get<RunConfig>();
                } catch (const nlohmann::json::exception& e) {
                    fail(ErrorCode::InvalidConfig, p.config + ": " + e.what());
                }
            }
            // explicit flags win over the file
            for (auto* opt : sim_cmd->get_options()) {
                if (opt->count() == 0) continue;
                const auto& n = opt->get_name();
                if (n == "--s") run.s = cfg.s;
                else if (n == "--k") run.k = cfg.k;
                else if (n == "--num") run.num = cfg.num;
                else if (n == "--audit-interval") run.audit_interval = cfg.audit_interval;
                else if (n == "--beacon-seed") run.beacon_seed = cfg.beacon_seed;
                else if (n == "--owner-deposit") run.owner_deposit = cfg.owner_deposit;
                else if (n == "--provider-deposit") run.provider_deposit = cfg.provider_deposit;
                else if (n == "--corrupt") run.corrupt_fraction = cfg.corrupt_fraction;
                else if (n == "--corrupt-from") run.corrupt_from_audit = cfg.corrupt_from_audit;
                else if (n == "--replay-period") run.replay_period = cfg.replay_period;
                else if (n == "--contracts") run.contracts = cfg.contracts;
                else if (n == "--file") run.file = cfg.file;
                else if (n == "--file-bytes") run.file_bytes = cfg.file_bytes;
                else if (n == "--ledger") run.ledger = cfg.ledger;
                else if (n == "--insecure-demo") run.insecure_demo = cfg.insecure_demo;
            }
            if (seed) run.seed = *seed;
            return cmd_simulate(run);
        }
        if (*attack_cmd) return cmd_attack(p);
        if (*cost_cmd) return cmd_estimate(fp);
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kBadInput;
    }
    return kBadInput;
}
