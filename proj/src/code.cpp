#include "qss/code.hpp"

#include <algorithm>

namespace qss {

namespace {

// Lexicographic size-k combinations of {0..n-1}.
struct Combinations {
    uint32_t n, k;
    std::vector<uint32_t> cur;
    bool done = false;

    Combinations(uint32_t n_, uint32_t k_) : n(n_), k(k_) {
        cur.resize(k);
        for (uint32_t i = 0; i < k; ++i) cur[i] = i;
        done = k > n;
    }

    bool next(std::vector<uint32_t>& out) {
        if (done) return false;
        out = cur;
        int i = static_cast<int>(k) - 1;
        while (i >= 0 && cur[static_cast<size_t>(i)] == n - k + static_cast<uint32_t>(i)) --i;
        if (i < 0) {
            done = true;
        } else {
            ++cur[static_cast<size_t>(i)];
            for (uint32_t j = static_cast<uint32_t>(i) + 1; j < k; ++j) {
                cur[j] = cur[j - 1] + 1;
            }
        }
        return true;
    }
};

}  // namespace

LinearCode::LinearCode(GFMatrix generator) : field_(generator.field()), G_(std::move(generator)) {
    if (G_.rows() > G_.cols()) {
        throw Error("generator matrix has more rows than columns (k > n)");
    }
    size_t r = rank(G_);
    if (r != G_.rows()) {
        throw Error("generator matrix must have full row rank: rank " + std::to_string(r) +
                    " < k = " + std::to_string(G_.rows()));
    }
}

uint64_t LinearCode::message_count(uint64_t limit) const {
    return checked_pow(q(), k(), limit, "codeword enumeration q^k");
}

GFVector LinearCode::message(uint64_t index) const {
    std::vector<uint32_t> digits(k());
    for (uint32_t i = k(); i-- > 0;) {
        digits[i] = static_cast<uint32_t>(index % q());
        index /= q();
    }
    return GFVector(field_, std::move(digits));
}

uint32_t min_distance(const LinearCode& code, const Budgets& budgets) {
    uint64_t total = code.message_count(budgets.max_codewords);
    uint32_t best = code.n() + 1;
    for (uint64_t idx = 1; idx < total; ++idx) {
        GFVector w = code.codeword(code.message(idx));
        uint32_t wt = static_cast<uint32_t>(w.hamming_weight());
        if (wt < best) {
            best = wt;
            if (best == 1) break;
        }
    }
    return best;
}

uint32_t distance_via_rank(const LinearCode& code, const Budgets& budgets) {
    uint32_t n = code.n(), k = code.k();
    if (n > budgets.max_subset_sites) {
        throw BudgetExceeded("column-subset scan over n=" + std::to_string(n) +
                             " exceeds budget n <= " + std::to_string(budgets.max_subset_sites));
    }
    // largest r such that removing ANY r columns keeps the rank at k
    uint32_t max_r = 0;
    for (uint32_t r = 1; r + k <= n; ++r) {
        bool all_full_rank = true;
        Combinations combos(n, n - r);
        std::vector<uint32_t> keep;
        while (combos.next(keep)) {
            if (rank(select_columns(code.generator(), keep)) != k) {
                all_full_rank = false;
                break;
            }
        }
        if (!all_full_rank) break;
        max_r = r;
    }
    return 1 + max_r;
}

bool is_mds(const LinearCode& code, const Budgets& budgets) {
    return min_distance(code, budgets) == code.n() - code.k() + 1;
}

SubsetReport is_locc_assisting(const LinearCode& code, const std::vector<uint32_t>& subset_a) {
    std::vector<uint32_t> a = checked_subset(subset_a, code.n());
    if (a.size() == code.n()) {
        throw InvalidSubset("measuring subset must be proper: complement B may not be empty");
    }
    SubsetReport report;
    report.subset_b = subset_complement(a, code.n());
    report.rank_gb =
        static_cast<uint32_t>(rank(select_columns(code.generator(), report.subset_b)));
    report.assisted = report.rank_gb == code.k();
    return report;
}

std::vector<SubsetReport> enumerate_assisting(const LinearCode& code, const Budgets& budgets) {
    uint32_t n = code.n();
    if (n > budgets.max_subset_sites) {
        throw BudgetExceeded("subset scan over n=" + std::to_string(n) +
                             " exceeds budget n <= " + std::to_string(budgets.max_subset_sites));
    }
    std::vector<SubsetReport> out;
    for (uint32_t size = 1; size < n; ++size) {
        Combinations combos(n, size);
        std::vector<uint32_t> b;
        while (combos.next(b)) {
            SubsetReport report;
            report.subset_b = b;
            report.rank_gb = static_cast<uint32_t>(rank(select_columns(code.generator(), b)));
            report.assisted = report.rank_gb == code.k();
            out.push_back(std::move(report));
        }
    }
    return out;
}

}  // namespace qss
