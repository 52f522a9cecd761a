#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qss/gflinalg.hpp"

namespace qss {

/*
 * An [n,k,d]_q linear code held as a k x n generator matrix of full row rank.
 * Codewords are row-vector products x . G with x in GF(q)^k.
 */
class LinearCode {
  public:
    explicit LinearCode(GFMatrix generator);

    uint32_t n() const { return static_cast<uint32_t>(G_.cols()); }
    uint32_t k() const { return static_cast<uint32_t>(G_.rows()); }
    uint32_t q() const { return field_->q(); }
    const FieldPtr& field() const { return field_; }
    const GFMatrix& generator() const { return G_; }

    // q^k; throws BudgetExceeded against `limit` when enumeration would blow up.
    uint64_t message_count(uint64_t limit) const;

    // Message tuple for an enumeration index (base-q digits, position 0 most
    // significant), and its codeword.
    GFVector message(uint64_t index) const;
    GFVector codeword(const GFVector& x) const { return encode_word(x, G_); }

  private:
    FieldPtr field_;
    GFMatrix G_;
};

// One entry of the recovery-subset scan: can the complement of B hand the
// secret to B by local measurements and classical messages alone?
struct SubsetReport {
    std::vector<uint32_t> subset_b;  // 0-based, ascending
    uint32_t rank_gb = 0;
    bool assisted = false;  // rank_gb == k
};

// Minimum Hamming weight over all q^k - 1 nonzero codewords.
uint32_t min_distance(const LinearCode& code, const Budgets& budgets = {});

// Independent route to the distance: 1 + the largest r such that every
// column subset of size n - r still has rank k. Cross-validates min_distance.
uint32_t distance_via_rank(const LinearCode& code, const Budgets& budgets = {});

// Singleton equality d = n - k + 1.
bool is_mds(const LinearCode& code, const Budgets& budgets = {});

// Rank criterion for subset A (0-based, possibly empty, never the full set):
// the complement B can recover the secret iff rank(G_B) = k.
SubsetReport is_locc_assisting(const LinearCode& code, const std::vector<uint32_t>& subset_a);

// Reports for every proper nonempty B, ascending by |B| then lexicographic.
std::vector<SubsetReport> enumerate_assisting(const LinearCode& code,
                                              const Budgets& budgets = {});

// JSON code-spec format (the single CLI input):
//   {"field": {"p": 2, "m": 1, "poly": [0,1]}, "generator": [[1,1,1]]}
// "poly" may be omitted when a built-in modulus exists. Element values are
// integers in [0, q). Malformed input throws ParseError with line/column.
LinearCode load_code_spec(const std::string& json_text);
LinearCode load_code_file(const std::string& path);
std::string code_spec_to_json(const LinearCode& code);

}  // namespace qss
