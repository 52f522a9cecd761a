#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qss/code.hpp"
#include "qss/rng.hpp"

namespace qss {

using Amplitude = std::complex<double>;

/*
 * Basis-index convention used by every state, dump file and golden test:
 * an n-site state over GF(q) is indexed by tuples in GF(q)^n through base-q
 * positional encoding with site 0 (the CLI's site 1) as the MOST significant
 * digit. index = sum_i digit_i * q^(n-1-i).
 */

// A k-qudit secret: q^k normalized complex amplitudes.
class Secret {
  public:
    Secret(FieldPtr field, uint32_t k, std::vector<Amplitude> amps);

    // Rescales to unit norm first (used for file input and random draws).
    static Secret normalized(FieldPtr field, uint32_t k, std::vector<Amplitude> amps);
    static Secret basis(FieldPtr field, uint32_t k, uint64_t index);
    static Secret random(FieldPtr field, uint32_t k, Rng& rng);

    const FieldPtr& field() const { return field_; }
    uint32_t k() const { return k_; }
    uint64_t dim() const { return amps_.size(); }
    std::span<const Amplitude> amps() const { return amps_; }
    const Amplitude& amp(uint64_t i) const { return amps_[i]; }

  private:
    FieldPtr field_;
    uint32_t k_;
    std::vector<Amplitude> amps_;
};

// Outcome of measuring the sites in subset_a in the Fourier basis.
struct MeasurementRecord {
    std::vector<uint32_t> subset_a;  // 0-based, ascending
    GFVector outcomes;               // one element per measured site, same order
    double probability;              // computed from the amplitudes, never assumed
};

// Dense state vector of `sites` qudits of dimension q. Operations mutate the
// owned buffer; values may be copied and sent between threads freely.
class StateVector {
  public:
    StateVector(FieldPtr field, uint32_t sites, std::vector<Amplitude> amps);
    static StateVector basis(FieldPtr field, uint32_t sites, uint64_t index);

    const FieldPtr& field() const { return field_; }
    uint32_t sites() const { return sites_; }
    uint64_t dim() const { return amps_.size(); }
    std::span<const Amplitude> amps() const { return amps_; }
    const Amplitude& amp(uint64_t i) const { return amps_[i]; }
    double norm_sq() const;

    uint32_t digit(uint64_t index, uint32_t site) const;
    uint64_t index_of(std::span<const uint32_t> digits) const;

    // Single-site Fourier rotation F = q^(-1/2) sum_{x,z} w^tr(xz) |z><x|,
    // w = exp(2*pi*i/p). adjoint() applies the conjugate transpose.
    void apply_fourier(uint32_t site);
    void apply_fourier_adjoint(uint32_t site);

    // Diagonal phase operator Z^z: |x> -> w^tr(zx) |x> on one site.
    void apply_z(uint32_t site, uint32_t z);
    void apply_z(uint32_t site, const FieldElement& z);

    // Born-rule probabilities of all q^|A| Fourier-basis outcomes on subset A,
    // indexed by the packed outcome tuple (ascending site order of A).
    std::vector<double> fourier_outcome_distribution(const std::vector<uint32_t>& subset_a) const;

    // Projective Fourier-basis measurement of subset A: the outcome is drawn
    // from the computed distribution, the state is projected and renormalized,
    // and the reduced state on the complement B is returned re-indexed over
    // GF(q)^|B| in ascending original site order.
    std::pair<MeasurementRecord, StateVector> measure_fourier(
        const std::vector<uint32_t>& subset_a, Rng& rng) const;

    // As above with a forced outcome; DegenerateState if its probability
    // is below 1e-12.
    std::pair<MeasurementRecord, StateVector> project_fourier(
        const std::vector<uint32_t>& subset_a, const GFVector& outcome) const;

    // One line per nonzero amplitude: "d0,d1,...,dn-1 re im", sorted by
    // index, reals in fixed 12-decimal form.
    std::string dump() const;

  private:
    void check_site(uint32_t site) const;
    std::vector<uint32_t> check_measurement_subset(const std::vector<uint32_t>& subset_a) const;
    void apply_single_site(uint32_t site, std::span<const Amplitude> matrix);

    FieldPtr field_;
    uint32_t sites_;
    std::vector<Amplitude> amps_;
    std::vector<uint64_t> stride_;  // stride_[site] = q^(sites-1-site)
};

// The encoding isometry |x> -> |x . G|: amplitude c(x) lands on the codeword
// index, everything else is zero.
StateVector encode_secret(const Secret& secret, const LinearCode& code,
                          const Budgets& budgets = {});

// |<u|v>|^2 — 1 iff equal up to global phase.
double fidelity(const Secret& u, const Secret& v);
double fidelity(const StateVector& u, const StateVector& v);

}  // namespace qss
