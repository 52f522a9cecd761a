#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qss/qsim.hpp"

namespace qss {

/*
 * Recovery-side isometry for a fixed (code, B): |x . G_B> -> |x>. It depends
 * only on B, never on measurement outcomes, so one instance is built per
 * (code, B) and reused across runs; only the phase correction Z^z varies.
 */
class DecodeIsometry {
  public:
    DecodeIsometry(const LinearCode& code, const std::vector<uint32_t>& subset_b);

    // Requires the input supported on span{|x . G_B>}; amplitude mass outside
    // it above 1e-9 throws SupportLeak.
    Secret apply(const StateVector& state_b) const;

    const std::vector<uint32_t>& subset_b() const { return subset_b_; }
    uint32_t rank_gb() const { return rank_gb_; }

    // Packed B-state index of |x . G_B> for message index x.
    uint64_t codeword_index(uint64_t message_index) const { return image_[message_index]; }

  private:
    FieldPtr field_;
    uint32_t k_;
    std::vector<uint32_t> subset_b_;
    uint32_t rank_gb_;
    std::vector<uint64_t> image_;  // message index -> B-state index
    uint64_t dim_b_;
};

// One full protocol run. correction_z always satisfies G_B . z^T = G_A . a^T
// exactly; for an assisted A the fidelity is 1 up to 1e-9.
struct ProtocolTranscript {
    std::vector<uint32_t> subset_a;
    std::vector<uint32_t> subset_b;
    Secret secret;
    GFVector outcomes_a;
    GFVector correction_z;
    double outcome_probability;
    Secret recovered;
    double fidelity;
    uint64_t seed;
    std::shared_ptr<const DecodeIsometry> decoder;  // shared across batch runs
};

// The canonical solution z of G_B . z^T = G_A . a^T (free variables zero).
// Solvability is guaranteed once rank(G_B) = k; NotAssisted otherwise.
GFVector compute_correction(const LinearCode& code, const std::vector<uint32_t>& subset_a,
                            const GFVector& outcomes_a);

// encode -> Fourier-measure A -> correction solve -> Z^z on B -> decode.
// Measurement randomness comes from `rng` only; a fresh Rng per run makes the
// transcript reproducible from its recorded seed. When `decoder` is null a
// fresh isometry is built.
ProtocolTranscript run_protocol(const LinearCode& code, const std::vector<uint32_t>& subset_a,
                                const Secret& secret, Rng& rng,
                                std::shared_ptr<const DecodeIsometry> decoder = nullptr,
                                const Budgets& budgets = {});

// Convenience overload: runs with Rng(seed).
ProtocolTranscript run_protocol(const LinearCode& code, const std::vector<uint32_t>& subset_a,
                                const Secret& secret, uint64_t seed,
                                std::shared_ptr<const DecodeIsometry> decoder = nullptr,
                                const Budgets& budgets = {});

// Two distinct messages whose codewords agree on B — the reason a
// rank-deficient B cannot recover anything: the corresponding basis secrets
// reach B as the same state (up to phase), so no fixed map separates them.
struct CollisionWitness {
    GFVector x1, x2;
    double state_overlap;  // fidelity of the two post-measurement B states
};

// Both directions of the rank criterion for one subset A.
struct RankCriterionReport {
    std::vector<uint32_t> subset_a;
    std::vector<uint32_t> subset_b;
    uint32_t rank_gb = 0;
    uint32_t k = 0;
    bool assisted = false;
    uint32_t trials = 0;        // randomized forward runs executed
    double min_fidelity = 1.0;  // over the forward runs
    std::optional<CollisionWitness> witness;
    bool pass = false;
};

// Forward: rank(G_B) = k implies `trials` randomized runs all hit fidelity 1.
// Converse: rank(G_B) < k implies a collision witness exists and the two
// basis secrets are operationally indistinguishable on B. Trial t uses seed
// base_seed + t.
RankCriterionReport verify_rank_criterion(const LinearCode& code,
                                          const std::vector<uint32_t>& subset_a, uint32_t trials,
                                          uint64_t base_seed, const Budgets& budgets = {});

// Structured transcript serialization; subsets are 1-based in external form
// and reals carry fixed 12-decimal precision.
std::string transcript_to_json(const ProtocolTranscript& t, const LinearCode& code);

}  // namespace qss
