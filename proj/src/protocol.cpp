#include "qss/protocol.hpp"

#include <cmath>

#include "json.hpp"

namespace qss {

namespace {

std::vector<uint32_t> checked_proper_nonempty(const std::vector<uint32_t>& subset_a, uint32_t n) {
    std::vector<uint32_t> a = checked_subset(subset_a, n);
    if (a.empty()) throw InvalidSubset("measuring subset A must be nonempty");
    if (a.size() == n) throw InvalidSubset("measuring subset A must be proper");
    return a;
}

}  // namespace

DecodeIsometry::DecodeIsometry(const LinearCode& code, const std::vector<uint32_t>& subset_b)
    : field_(code.field()), k_(code.k()) {
    subset_b_ = checked_subset(subset_b, code.n());
    if (subset_b_.empty()) throw InvalidSubset("recovery subset B must be nonempty");

    GFMatrix gb = select_columns(code.generator(), subset_b_);
    rank_gb_ = static_cast<uint32_t>(rank(gb));
    if (rank_gb_ != k_) {
        throw NotAssisted("B=" + subset_to_string(subset_b_) + " cannot recover: rank(G_B)=" +
                          std::to_string(rank_gb_) + " < k=" + std::to_string(k_));
    }

    const uint32_t q = field_->q();
    dim_b_ = 1;
    for (size_t i = 0; i < subset_b_.size(); ++i) dim_b_ *= q;
    uint64_t messages = checked_pow(q, k_, uint64_t{1} << 32, "decoder table q^k");
    image_.resize(messages);
    for (uint64_t x = 0; x < messages; ++x) {
        GFVector word = encode_word(code.message(x), gb);
        uint64_t idx = 0;
        for (size_t i = 0; i < word.size(); ++i) idx = idx * q + word[i];
        image_[x] = idx;
    }
}

Secret DecodeIsometry::apply(const StateVector& state_b) const {
    require_same_field(*field_, *state_b.field());
    if (state_b.sites() != subset_b_.size() || state_b.dim() != dim_b_) {
        throw DimensionMismatch("state has " + std::to_string(state_b.sites()) +
                                " sites, decoder expects " + std::to_string(subset_b_.size()));
    }
    std::vector<Amplitude> out(image_.size());
    double captured = 0.0;
    for (uint64_t x = 0; x < image_.size(); ++x) {
        out[x] = state_b.amp(image_[x]);
        captured += std::norm(out[x]);
    }
    double leak = 1.0 - captured;
    if (leak > kAlgebraTol) {
        throw SupportLeak("amplitude mass " + std::to_string(leak) +
                          " outside the encoded subspace span{|x.G_B>}");
    }
    return Secret::normalized(field_, k_, std::move(out));
}

GFVector compute_correction(const LinearCode& code, const std::vector<uint32_t>& subset_a,
                            const GFVector& outcomes_a) {
    std::vector<uint32_t> a = checked_proper_nonempty(subset_a, code.n());
    require_same_field(*code.field(), *outcomes_a.field());
    if (outcomes_a.size() != a.size()) {
        throw DimensionMismatch("expected " + std::to_string(a.size()) + " outcomes, got " +
                                std::to_string(outcomes_a.size()));
    }
    std::vector<uint32_t> b = subset_complement(a, code.n());
    GFMatrix gb = select_columns(code.generator(), b);
    if (rank(gb) != code.k()) {
        throw NotAssisted("A=" + subset_to_string(a) + " is not LOCC-assisting: rank(G_B)=" +
                          std::to_string(rank(gb)) + " < k=" + std::to_string(code.k()) +
                          " for B=" + subset_to_string(b));
    }
    GFMatrix ga = select_columns(code.generator(), a);
    GFVector rhs = mat_vec(ga, outcomes_a);
    std::optional<GFVector> z = solve(gb, rhs);
    if (!z) {
        // rank(G_B) = k makes the columns of G_B span GF(q)^k
        throw Error("correction system unexpectedly inconsistent");
    }
    return *z;
}

ProtocolTranscript run_protocol(const LinearCode& code, const std::vector<uint32_t>& subset_a,
                                const Secret& secret, Rng& rng,
                                std::shared_ptr<const DecodeIsometry> decoder,
                                const Budgets& budgets) {
    std::vector<uint32_t> a = checked_proper_nonempty(subset_a, code.n());
    std::vector<uint32_t> b = subset_complement(a, code.n());
    if (!decoder) {
        decoder = std::make_shared<DecodeIsometry>(code, b);  // NotAssisted if rank < k
    } else if (decoder->subset_b() != b) {
        throw InvalidSubset("decoder was built for B=" + subset_to_string(decoder->subset_b()) +
                            ", run uses B=" + subset_to_string(b));
    }

    StateVector encoded = encode_secret(secret, code, budgets);
    auto [record, state_b] = encoded.measure_fourier(a, rng);

    // the uniform-outcome law: computed, then asserted
    double expected = 1.0;
    for (size_t i = 0; i < a.size(); ++i) expected /= code.q();
    if (std::abs(record.probability - expected) > kAlgebraTol) {
        throw Error("outcome probability " + std::to_string(record.probability) +
                    " deviates from the uniform law " + std::to_string(expected));
    }

    GFVector z = compute_correction(code, a, record.outcomes);
    for (size_t i = 0; i < b.size(); ++i) {
        state_b.apply_z(static_cast<uint32_t>(i), z[i]);
    }

    // after Z^z every surviving amplitude must equal c(x) itself, phase-free
    for (uint64_t x = 0; x < secret.dim(); ++x) {
        if (std::abs(state_b.amp(decoder->codeword_index(x)) - secret.amp(x)) > kAlgebraTol) {
            throw Error("phase correction failed to restore the coefficients exactly");
        }
    }

    Secret recovered = decoder->apply(state_b);
    ProtocolTranscript t{
        a,
        b,
        secret,
        record.outcomes,
        z,
        record.probability,
        recovered,
        fidelity(recovered, secret),
        rng.seed(),
        decoder,
    };
    return t;
}

ProtocolTranscript run_protocol(const LinearCode& code, const std::vector<uint32_t>& subset_a,
                                const Secret& secret, uint64_t seed,
                                std::shared_ptr<const DecodeIsometry> decoder,
                                const Budgets& budgets) {
    Rng rng(seed);
    return run_protocol(code, subset_a, secret, rng, std::move(decoder), budgets);
}

RankCriterionReport verify_rank_criterion(const LinearCode& code,
                                          const std::vector<uint32_t>& subset_a, uint32_t trials,
                                          uint64_t base_seed, const Budgets& budgets) {
    RankCriterionReport report;
    report.subset_a = checked_proper_nonempty(subset_a, code.n());
    report.subset_b = subset_complement(report.subset_a, code.n());
    report.k = code.k();
    GFMatrix gb = select_columns(code.generator(), report.subset_b);
    report.rank_gb = static_cast<uint32_t>(rank(gb));
    report.assisted = report.rank_gb == report.k;

    if (report.assisted) {
        auto decoder = std::make_shared<DecodeIsometry>(code, report.subset_b);
        report.trials = trials;
        for (uint32_t t = 0; t < trials; ++t) {
            Rng rng(base_seed + t);
            Secret secret = Secret::random(code.field(), code.k(), rng);
            ProtocolTranscript run =
                run_protocol(code, report.subset_a, secret, rng, decoder, budgets);
            report.min_fidelity = std::min(report.min_fidelity, run.fidelity);
        }
        report.pass = report.min_fidelity >= 1.0 - kAlgebraTol;
        return report;
    }

    // rank deficiency gives the map x -> x.G_B a nontrivial kernel; any
    // nonzero kernel element collides with the zero message
    std::vector<GFVector> kernel = kernel_basis(transpose(gb));
    if (kernel.empty()) throw Error("rank-deficient G_B has no kernel; rank computation broken");
    GFVector x1 = GFVector::zeros(code.field(), code.k());
    GFVector x2 = kernel.front();

    // operational indistinguishability: send the two basis secrets through
    // the same measurement outcome and compare what B holds
    uint64_t x2_index = 0;
    for (size_t i = 0; i < x2.size(); ++i) x2_index = x2_index * code.q() + x2[i];
    StateVector s1 = encode_secret(Secret::basis(code.field(), code.k(), 0), code, budgets);
    StateVector s2 =
        encode_secret(Secret::basis(code.field(), code.k(), x2_index), code, budgets);
    GFVector zero_outcome = GFVector::zeros(code.field(), report.subset_a.size());
    StateVector b1 = s1.project_fourier(report.subset_a, zero_outcome).second;
    StateVector b2 = s2.project_fourier(report.subset_a, zero_outcome).second;

    CollisionWitness witness{x1, x2, fidelity(b1, b2)};
    bool collide = encode_word(x1, gb) == encode_word(x2, gb);
    report.pass = !x2.is_zero() && collide && witness.state_overlap >= 1.0 - kAlgebraTol;
    report.witness = std::move(witness);
    return report;
}

std::string transcript_to_json(const ProtocolTranscript& t, const LinearCode& code) {
    using nlohmann::json;
    json j;
    j["code"] = json::parse(code_spec_to_json(code));
    json a = json::array(), b = json::array();
    for (uint32_t i : t.subset_a) a.push_back(i + 1);  // sites are 1-based externally
    for (uint32_t i : t.subset_b) b.push_back(i + 1);
    j["subset_a"] = std::move(a);
    j["subset_b"] = std::move(b);
    j["seed"] = t.seed;
    j["outcomes_a"] = std::vector<uint32_t>(t.outcomes_a.values().begin(),
                                            t.outcomes_a.values().end());
    j["correction_z"] = std::vector<uint32_t>(t.correction_z.values().begin(),
                                              t.correction_z.values().end());
    j["probability"] = round_real(t.outcome_probability);
    json secret = json::array(), recovered = json::array();
    for (const auto& amp : t.secret.amps()) {
        secret.push_back({round_real(amp.real()), round_real(amp.imag())});
    }
    for (const auto& amp : t.recovered.amps()) {
        recovered.push_back({round_real(amp.real()), round_real(amp.imag())});
    }
    j["secret"] = std::move(secret);
    j["recovered"] = std::move(recovered);
    j["fidelity"] = round_real(t.fidelity);
    return j.dump();
}

}  // namespace qss
