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

#include <map>
#include <vector>

#include "dsaudit/prover.hpp"

namespace dsaudit {

/// Evaluations (r_j, y_j) observed in rounds that shared one (C1, C2), hence
/// one index set and one combined polynomial.
template <class Suite>
struct TranscriptSet {
    std::array<std::uint8_t, 16> c1_seed{};
    std::array<std::uint8_t, 16> c2_seed{};
    std::vector<std::pair<typename Suite::Scalar, typename Suite::Scalar>> points;
};

/// The unique polynomial of degree < s through the first s points.
template <class Suite>
CombinedPolynomial<Suite> interpolate_combined(const TranscriptSet<Suite>& ts, std::size_t s)
{
    using Scalar = typename Suite::Scalar;
    require(s >= 1 && ts.points.size() >= s, ErrorCode::InsufficientPoints,
            "interpolating degree " + std::to_string(s) + " needs " + std::to_string(s) + " points, have " +
                std::to_string(ts.points.size()));
    for (std::size_t a = 0; a < ts.points.size(); ++a) {
        for (std::size_t b = a + 1; b < ts.points.size(); ++b) {
            require(!(ts.points[a].first == ts.points[b].first), ErrorCode::DuplicatePoint,
                    "evaluation points " + std::to_string(a) + " and " + std::to_string(b) + " coincide");
        }
    }

    // N(x) = prod_j (x - r_j); each Lagrange basis numerator is N(x) / (x - r_i).
    std::vector<Scalar> full{Scalar::one()};
    for (std::size_t j = 0; j < s; ++j) {
        const auto& r = ts.points[j].first;
        full.insert(full.begin(), Scalar::zero());
        for (std::size_t t = 0; t + 1 < full.size(); ++t) full[t] -= r * full[t + 1];
    }

    CombinedPolynomial<Suite> out{std::vector<Scalar>(s, Scalar::zero())};
    for (std::size_t i = 0; i < s; ++i) {
        const auto& [ri, yi] = ts.points[i];
        auto basis = poly_quotient(CombinedPolynomial<Suite>{full}, ri).quotient;
        Scalar denom = Scalar::one();
        for (std::size_t j = 0; j < s; ++j) {
            if (j != i) denom *= ri - ts.points[j].first;
        }
        Scalar w = yi * denom.inverse();
        for (std::size_t t = 0; t < s; ++t) out.coefficients[t] += w * basis[t];
    }
    return out;
}

/// Dense coefficient vector over chunks [0, d): entry i is c_i if chunk i was
/// challenged, zero otherwise.
template <class Suite>
std::vector<typename Suite::Scalar> dense_coefficients(const ChallengeSet<Suite>& cs, std::uint64_t d)
{
    std::vector<typename Suite::Scalar> v(static_cast<std::size_t>(d), Suite::Scalar::zero());
    for (std::size_t t = 0; t < cs.size(); ++t) {
        require(cs.indices[t] < d, ErrorCode::IndexOutOfRange, "challenged chunk outside the file");
        v[static_cast<std::size_t>(cs.indices[t])] = cs.coefficients[t];
    }
    return v;
}

template <class Suite>
struct LinearObservation {
    std::vector<typename Suite::Scalar> weights; ///< one per unknown chunk
    CombinedPolynomial<Suite> combined;
};

/// Solves sum_i weights[i] * chunk_i = combined for all chunks at once
/// (u equations, u unknown chunks), by Gauss-Jordan elimination.
template <class Suite>
std::vector<std::vector<typename Suite::Scalar>> recover_blocks(const std::vector<LinearObservation<Suite>>& systems)
{
    using Scalar = typename Suite::Scalar;
    require(!systems.empty(), ErrorCode::SingularSystem, "no observations");
    const std::size_t u = systems[0].weights.size();
    const std::size_t s = systems[0].combined.coefficients.size();
    require(systems.size() == u, ErrorCode::SingularSystem,
            std::to_string(systems.size()) + " observations for " + std::to_string(u) + " unknown chunks");

    std::vector<std::vector<Scalar>> a(u), b(u);
    for (std::size_t row = 0; row < u; ++row) {
        require(systems[row].weights.size() == u && systems[row].combined.coefficients.size() == s,
                ErrorCode::ParamMismatch, "observation shapes differ");
        a[row] = systems[row].weights;
        b[row] = systems[row].combined.coefficients;
    }
    for (std::size_t col = 0; col < u; ++col) {
        std::size_t pivot = col;
        while (pivot < u && a[pivot][col].is_zero()) ++pivot;
        require(pivot < u, ErrorCode::SingularSystem, "coefficient matrix is singular at column " + std::to_string(col));
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        Scalar inv = a[col][col].inverse();
        for (auto& v : a[col]) v *= inv;
        for (auto& v : b[col]) v *= inv;
        for (std::size_t row = 0; row < u; ++row) {
            if (row == col || a[row][col].is_zero()) continue;
            Scalar f = a[row][col];
            for (std::size_t t = 0; t < u; ++t) a[row][t] -= f * a[col][t];
            for (std::size_t t = 0; t < s; ++t) b[row][t] -= f * b[col][t];
        }
    }
    return b;
}

/// An audit round as the public sees it: the challenge and the revealed
/// evaluation (y for unblinded proofs, y' for private ones).
template <class Suite>
struct ObservedRound {
    Challenge<Suite> challenge;
    typename Suite::Scalar value;
};

/// Groups rounds by their (C1, C2) seeds, preserving first-seen order.
template <class Suite>
std::vector<TranscriptSet<Suite>> group_transcripts(const std::vector<ObservedRound<Suite>>& rounds)
{
    std::vector<TranscriptSet<Suite>> sets;
    std::map<std::pair<std::array<std::uint8_t, 16>, std::array<std::uint8_t, 16>>, std::size_t> where;
    for (const auto& rd : rounds) {
        auto key = std::make_pair(rd.challenge.c1_seed, rd.challenge.c2_seed);
        auto [it, fresh] = where.emplace(key, sets.size());
        if (fresh) sets.push_back({rd.challenge.c1_seed, rd.challenge.c2_seed, {}});
        sets[it->second].points.emplace_back(rd.challenge.r, rd.value);
    }
    return sets;
}

/// Full leak of the unblinded protocol: interpolate each combined polynomial,
/// then solve for every chunk. Needs d seed groups with s rounds each, all
/// challenging every chunk (k >= d).
template <class Suite>
FileEncoding<Suite> recover_file(const std::vector<ObservedRound<Suite>>& rounds, std::uint64_t d, std::uint64_t k,
                                 std::size_t s)
{
    auto sets = group_transcripts(rounds);
    std::vector<LinearObservation<Suite>> systems;
    for (const auto& ts : sets) {
        if (ts.points.size() < s) continue;
        Challenge<Suite> ch;
        ch.c1_seed = ts.c1_seed;
        ch.c2_seed = ts.c2_seed;
        systems.push_back({dense_coefficients(expand_challenge(ch, d, k), d), interpolate_combined(ts, s)});
        if (systems.size() == d) break;
    }
    require(systems.size() == d, ErrorCode::InsufficientPoints,
            "need " + std::to_string(d) + " seed groups with " + std::to_string(s) + " rounds each, have " +
                std::to_string(systems.size()));
    auto chunks = recover_blocks(systems);
    FileEncoding<Suite> enc;
    enc.s = s;
    enc.d = d;
    for (const auto& c : chunks) enc.blocks.insert(enc.blocks.end(), c.begin(), c.end());
    return enc;
}

/// Outcome of running the interpolation attack on private transcripts: the
/// raw values y' and the zeta-normalised values y'/zeta (zeta = H'(R) is
/// public) are both tried against the true combined polynomial.
template <class Suite>
struct PrivacyReport {
    std::size_t s = 0;
    CombinedPolynomial<Suite> recovered_raw;
    CombinedPolynomial<Suite> recovered_normalised;
    std::size_t raw_mismatches = 0;        ///< coefficient positions differing from the truth
    std::size_t normalised_mismatches = 0;

    bool leaked() const { return raw_mismatches == 0 || normalised_mismatches == 0; }
};

template <class Suite>
PrivacyReport<Suite> attack_private_transcripts(const std::vector<std::pair<Challenge<Suite>, AuditProof<Suite>>>& rounds,
                                                std::size_t s, const CombinedPolynomial<Suite>& truth)
{
    TranscriptSet<Suite> raw, normalised;
    for (const auto& [ch, prf] : rounds) {
        raw.points.emplace_back(ch.r, prf.y_prime);
        normalised.points.emplace_back(ch.r, prf.y_prime * Suite::hash_gt_to_scalar(prf.R).inverse());
    }
    PrivacyReport<Suite> rep;
    rep.s = s;
    rep.recovered_raw = interpolate_combined(raw, s);
    rep.recovered_normalised = interpolate_combined(normalised, s);
    for (std::size_t j = 0; j < s; ++j) {
        rep.raw_mismatches += !(rep.recovered_raw.coefficients[j] == truth.coefficients[j]);
        rep.normalised_mismatches += !(rep.recovered_normalised.coefficients[j] == truth.coefficients[j]);
    }
    return rep;
}

/// Models a beacon under the adversary's control (e.g. an eclipsed node):
/// (C1, C2) are held fixed for `period` consecutive rounds while r stays fresh,
/// so the same combined polynomial is opened at `period` points.
class ReplayBeacon final : public RandomnessBeacon {
public:
    ReplayBeacon(RandomnessBeacon& base, std::uint64_t period) : base_(base), period_(period) {}

    BeaconWord next(std::uint64_t round) override
    {
        BeaconWord seeds = base_.next(round / period_ * period_);
        BeaconWord w = base_.next(round);
        std::copy_n(seeds.begin(), 32, w.begin());
        return w;
    }

private:
    RandomnessBeacon& base_;
    std::uint64_t period_;
};

} // namespace dsaudit
