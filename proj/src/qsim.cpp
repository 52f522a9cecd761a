#include "qss/qsim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qss {

namespace {

constexpr double kDegenerateTol = 1e-12;

double abs_sq(const Amplitude& a) { return std::norm(a); }

// w^r for r in [0, p), w = exp(2*pi*i/p). All phase exponents in the
// simulator are integer traces mod p, so one table per field suffices.
std::vector<Amplitude> omega_powers(const Field& f) {
    std::vector<Amplitude> w(f.p());
    for (uint32_t r = 0; r < f.p(); ++r) {
        double angle = 2.0 * std::numbers::pi * r / f.p();
        w[r] = Amplitude(std::cos(angle), std::sin(angle));
    }
    return w;
}

std::vector<Amplitude> fourier_matrix(const Field& f, bool adjoint) {
    const uint32_t q = f.q();
    std::vector<Amplitude> w = omega_powers(f);
    double scale = 1.0 / std::sqrt(static_cast<double>(q));
    std::vector<Amplitude> mat(static_cast<size_t>(q) * q);
    for (uint32_t z = 0; z < q; ++z) {
        for (uint32_t x = 0; x < q; ++x) {
            Amplitude e = w[f.trace(f.mul(x, z))] * scale;
            mat[static_cast<size_t>(z) * q + x] = adjoint ? std::conj(e) : e;
        }
    }
    return mat;
}

double vec_norm_sq(std::span<const Amplitude> amps) {
    double n = 0.0;
    for (const auto& a : amps) n += abs_sq(a);
    return n;
}

void require_normalized(std::span<const Amplitude> amps, const char* what) {
    if (std::abs(vec_norm_sq(amps) - 1.0) > kAlgebraTol) {
        throw Error(std::string(what) + " is not normalized (|norm^2 - 1| > 1e-9)");
    }
}

}  // namespace

Secret::Secret(FieldPtr field, uint32_t k, std::vector<Amplitude> amps)
    : field_(std::move(field)), k_(k), amps_(std::move(amps)) {
    if (!field_) throw Error("null field");
    if (k_ < 1) throw DimensionMismatch("secret needs k >= 1");
    uint64_t dim = checked_pow(field_->q(), k_, uint64_t{1} << 32, "secret dimension q^k");
    if (amps_.size() != dim) {
        throw DimensionMismatch("secret needs q^k = " + std::to_string(dim) + " amplitudes, got " +
                                std::to_string(amps_.size()));
    }
    require_normalized(amps_, "secret");
}

Secret Secret::normalized(FieldPtr field, uint32_t k, std::vector<Amplitude> amps) {
    double n = std::sqrt(vec_norm_sq(amps));
    if (n < kDegenerateTol) throw DegenerateState("cannot normalize an all-zero amplitude vector");
    for (auto& a : amps) a /= n;
    return Secret(std::move(field), k, std::move(amps));
}

Secret Secret::basis(FieldPtr field, uint32_t k, uint64_t index) {
    uint64_t dim = checked_pow(field->q(), k, uint64_t{1} << 32, "secret dimension q^k");
    if (index >= dim) throw IndexOutOfRange("basis index out of range");
    std::vector<Amplitude> amps(dim, Amplitude(0, 0));
    amps[index] = Amplitude(1, 0);
    return Secret(std::move(field), k, std::move(amps));
}

Secret Secret::random(FieldPtr field, uint32_t k, Rng& rng) {
    uint64_t dim = checked_pow(field->q(), k, uint64_t{1} << 32, "secret dimension q^k");
    std::vector<Amplitude> amps(dim);
    for (auto& a : amps) a = Amplitude(rng.normal(), rng.normal());
    return normalized(std::move(field), k, std::move(amps));
}

StateVector::StateVector(FieldPtr field, uint32_t sites, std::vector<Amplitude> amps)
    : field_(std::move(field)), sites_(sites), amps_(std::move(amps)) {
    if (!field_) throw Error("null field");
    if (sites_ < 1) throw DimensionMismatch("state needs at least one site");
    uint64_t dim = checked_pow(field_->q(), sites_, uint64_t{1} << 32, "state dimension q^n");
    if (amps_.size() != dim) {
        throw DimensionMismatch("state needs q^n = " + std::to_string(dim) + " amplitudes, got " +
                                std::to_string(amps_.size()));
    }
    require_normalized(amps_, "state vector");
    stride_.resize(sites_);
    uint64_t s = 1;
    for (uint32_t i = sites_; i-- > 0;) {
        stride_[i] = s;
        s *= field_->q();
    }
}

StateVector StateVector::basis(FieldPtr field, uint32_t sites, uint64_t index) {
    uint64_t dim = checked_pow(field->q(), sites, uint64_t{1} << 32, "state dimension q^n");
    if (index >= dim) throw IndexOutOfRange("basis index out of range");
    std::vector<Amplitude> amps(dim, Amplitude(0, 0));
    amps[index] = Amplitude(1, 0);
    return StateVector(std::move(field), sites, std::move(amps));
}

double StateVector::norm_sq() const { return vec_norm_sq(amps_); }

void StateVector::check_site(uint32_t site) const {
    if (site >= sites_) {
        throw IndexOutOfRange("site " + std::to_string(site) + " out of range [0, " +
                              std::to_string(sites_) + ")");
    }
}

uint32_t StateVector::digit(uint64_t index, uint32_t site) const {
    check_site(site);
    return static_cast<uint32_t>((index / stride_[site]) % field_->q());
}

uint64_t StateVector::index_of(std::span<const uint32_t> digits) const {
    if (digits.size() != sites_) throw DimensionMismatch("digit tuple length != sites");
    uint64_t idx = 0;
    for (uint32_t i = 0; i < sites_; ++i) {
        field_->check_element(digits[i]);
        idx += digits[i] * stride_[i];
    }
    return idx;
}

void StateVector::apply_single_site(uint32_t site, std::span<const Amplitude> matrix) {
    const uint32_t q = field_->q();
    const uint64_t stride = stride_[site];
    const uint64_t block = stride * q;
    std::vector<Amplitude> in(q), out(q);
    for (uint64_t high = 0; high < amps_.size(); high += block) {
        for (uint64_t low = 0; low < stride; ++low) {
            const uint64_t base = high + low;
            for (uint32_t x = 0; x < q; ++x) in[x] = amps_[base + x * stride];
            for (uint32_t z = 0; z < q; ++z) {
                Amplitude acc(0, 0);
                for (uint32_t x = 0; x < q; ++x) {
                    acc += matrix[static_cast<size_t>(z) * q + x] * in[x];
                }
                out[z] = acc;
            }
            for (uint32_t z = 0; z < q; ++z) amps_[base + z * stride] = out[z];
        }
    }
}

void StateVector::apply_fourier(uint32_t site) {
    check_site(site);
    apply_single_site(site, fourier_matrix(*field_, /*adjoint=*/false));
}

void StateVector::apply_fourier_adjoint(uint32_t site) {
    check_site(site);
    apply_single_site(site, fourier_matrix(*field_, /*adjoint=*/true));
}

void StateVector::apply_z(uint32_t site, uint32_t z) {
    check_site(site);
    field_->check_element(z);
    std::vector<Amplitude> w = omega_powers(*field_);
    std::vector<Amplitude> phase(field_->q());
    for (uint32_t x = 0; x < field_->q(); ++x) phase[x] = w[field_->trace(field_->mul(z, x))];
    const uint64_t stride = stride_[site];
    const uint32_t q = field_->q();
    for (uint64_t i = 0; i < amps_.size(); ++i) {
        amps_[i] *= phase[static_cast<uint32_t>((i / stride) % q)];
    }
}

void StateVector::apply_z(uint32_t site, const FieldElement& z) {
    require_same_field(*field_, *z.field);
    apply_z(site, z.value);
}

std::vector<uint32_t> StateVector::check_measurement_subset(
    const std::vector<uint32_t>& subset_a) const {
    std::vector<uint32_t> a = subset_a;
    std::sort(a.begin(), a.end());
    for (size_t i = 0; i < a.size(); ++i) {
        check_site(a[i]);
        if (i > 0 && a[i] == a[i - 1]) {
            throw IndexOutOfRange("duplicate site " + std::to_string(a[i]));
        }
    }
    if (a.empty() || a.size() == sites_) {
        throw IndexOutOfRange("measured subset must be a proper nonempty subset of the sites");
    }
    return a;
}

std::vector<double> StateVector::fourier_outcome_distribution(
    const std::vector<uint32_t>& subset_a) const {
    std::vector<uint32_t> a = check_measurement_subset(subset_a);
    StateVector rotated = *this;
    for (uint32_t site : a) rotated.apply_fourier_adjoint(site);

    uint64_t outcomes = 1;
    for (size_t i = 0; i < a.size(); ++i) outcomes *= field_->q();
    std::vector<double> dist(outcomes, 0.0);
    for (uint64_t idx = 0; idx < amps_.size(); ++idx) {
        uint64_t packed = 0;
        for (uint32_t site : a) packed = packed * field_->q() + rotated.digit(idx, site);
        dist[packed] += abs_sq(rotated.amp(idx));
    }
    return dist;
}

std::pair<MeasurementRecord, StateVector> StateVector::project_fourier(
    const std::vector<uint32_t>& subset_a, const GFVector& outcome) const {
    std::vector<uint32_t> a = check_measurement_subset(subset_a);
    require_same_field(*field_, *outcome.field());
    if (outcome.size() != a.size()) {
        throw DimensionMismatch("outcome tuple length != measured subset size");
    }

    // measuring in the basis {F|x>} == rotating by F^dagger, then reading the
    // computational digits at the measured sites
    StateVector rotated = *this;
    for (uint32_t site : a) rotated.apply_fourier_adjoint(site);

    std::vector<uint32_t> b = subset_complement(a, sites_);
    const uint32_t q = field_->q();
    uint64_t base = 0;
    for (size_t i = 0; i < a.size(); ++i) base += outcome[i] * stride_[a[i]];

    uint64_t dim_b = 1;
    for (size_t i = 0; i < b.size(); ++i) dim_b *= q;
    std::vector<Amplitude> reduced(dim_b);
    double prob = 0.0;
    for (uint64_t bi = 0; bi < dim_b; ++bi) {
        uint64_t idx = base, rest = bi;
        for (size_t j = b.size(); j-- > 0;) {
            idx += (rest % q) * stride_[b[j]];
            rest /= q;
        }
        reduced[bi] = rotated.amp(idx);
        prob += abs_sq(reduced[bi]);
    }
    if (prob < kDegenerateTol) {
        throw DegenerateState("projection has vanishing norm; outcome probability " +
                              std::to_string(prob));
    }
    double scale = 1.0 / std::sqrt(prob);
    for (auto& amp : reduced) amp *= scale;

    MeasurementRecord record{a, outcome, prob};
    return {std::move(record), StateVector(field_, static_cast<uint32_t>(b.size()),
                                           std::move(reduced))};
}

std::pair<MeasurementRecord, StateVector> StateVector::measure_fourier(
    const std::vector<uint32_t>& subset_a, Rng& rng) const {
    std::vector<uint32_t> a = check_measurement_subset(subset_a);
    std::vector<double> dist = fourier_outcome_distribution(a);

    double u = rng.uniform();
    uint64_t pick = 0;
    bool picked = false;
    double acc = 0.0;
    for (uint64_t i = 0; i < dist.size(); ++i) {
        if (dist[i] <= 0.0) continue;
        pick = i;  // last positive-probability outcome, the rounding fallback
        acc += dist[i];
        if (u < acc) {
            picked = true;
            break;
        }
    }
    if (!picked && acc == 0.0) {
        throw DegenerateState("measurement distribution sums to zero");
    }

    std::vector<uint32_t> digits(a.size());
    uint64_t rest = pick;
    for (size_t i = a.size(); i-- > 0;) {
        digits[i] = static_cast<uint32_t>(rest % field_->q());
        rest /= field_->q();
    }
    return project_fourier(a, GFVector(field_, std::move(digits)));
}

std::string StateVector::dump() const {
    std::string out;
    for (uint64_t idx = 0; idx < amps_.size(); ++idx) {
        const Amplitude& amp = amps_[idx];
        if (std::abs(amp) <= kDegenerateTol) continue;
        for (uint32_t s = 0; s < sites_; ++s) {
            if (s) out += ",";
            out += std::to_string(digit(idx, s));
        }
        out += " " + format_real(amp.real()) + " " + format_real(amp.imag()) + "\n";
    }
    return out;
}

StateVector encode_secret(const Secret& secret, const LinearCode& code, const Budgets& budgets) {
    require_same_field(*secret.field(), *code.field());
    if (secret.k() != code.k()) {
        throw DimensionMismatch("secret has k=" + std::to_string(secret.k()) +
                                " but the code encodes k=" + std::to_string(code.k()));
    }
    uint64_t dim = checked_pow(code.q(), code.n(), budgets.max_amplitudes,
                               "encoded state dimension q^n");
    std::vector<Amplitude> target(dim, Amplitude(0, 0));
    for (uint64_t x = 0; x < secret.dim(); ++x) {
        GFVector word = code.codeword(code.message(x));
        uint64_t idx = 0;
        for (size_t i = 0; i < word.size(); ++i) idx = idx * code.q() + word[i];
        target[idx] = secret.amp(x);
    }
    return StateVector(code.field(), code.n(), std::move(target));
}

double fidelity(const Secret& u, const Secret& v) {
    if (u.dim() != v.dim()) throw DimensionMismatch("fidelity needs equal dimensions");
    Amplitude overlap(0, 0);
    for (uint64_t i = 0; i < u.dim(); ++i) overlap += std::conj(u.amp(i)) * v.amp(i);
    return abs_sq(overlap);
}

double fidelity(const StateVector& u, const StateVector& v) {
    if (u.dim() != v.dim()) throw DimensionMismatch("fidelity needs equal dimensions");
    Amplitude overlap(0, 0);
    for (uint64_t i = 0; i < u.dim(); ++i) overlap += std::conj(u.amp(i)) * v.amp(i);
    return abs_sq(overlap);
}

}  // namespace qss
