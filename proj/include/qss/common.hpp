#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qss {

// Error taxonomy shared by all modules. The CLI maps these onto its
// exit-code contract (0 ok, 1 protocol/verification failure, 2 usage/parse
// error, 3 budget exceeded).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonPrimeCharacteristic : Error { using Error::Error; };
struct ReduciblePolynomial : Error { using Error::Error; };
struct NoBuiltinPolynomial : Error { using Error::Error; };
struct FieldMismatch : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct EmptySelection : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };
struct InvalidSubset : Error { using Error::Error; };
struct NotAssisted : Error { using Error::Error; };
struct SupportLeak : Error { using Error::Error; };
struct DegenerateState : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// Enumeration and memory ceilings. Oversized requests fail loudly with
// BudgetExceeded instead of hanging or exhausting memory.
struct Budgets {
    uint64_t max_codewords = uint64_t{1} << 24;   // codeword enumeration
    uint32_t max_subset_sites = 20;               // 2^n player/column subset scans
    uint64_t max_amplitudes = uint64_t{1} << 24;  // dense state-vector length q^n
};

// Tolerance for deterministic algebraic identities (norms, phases, fidelity).
inline constexpr double kAlgebraTol = 1e-9;

// base^exp as u64; throws BudgetExceeded mentioning `what` if the result
// would exceed `limit`.
uint64_t checked_pow(uint64_t base, uint32_t exp, uint64_t limit, const char* what);

// Fixed 12-decimal formatting for serialized reals, so identical runs
// produce identical bytes. Negative zero is normalized to "0.000000000000".
std::string format_real(double x);

// Rounds to the value format_real prints (applied before JSON emission).
double round_real(double x);

// Sorts a 0-based index subset and validates it against [0, n).
// Duplicates and out-of-range entries throw InvalidSubset.
std::vector<uint32_t> checked_subset(std::vector<uint32_t> s, uint32_t n);

// Complement of a sorted subset within [0, n).
std::vector<uint32_t> subset_complement(const std::vector<uint32_t>& s, uint32_t n);

// "{i+1,j+1,...}" — external rendering of a 0-based subset (1-based text).
std::string subset_to_string(const std::vector<uint32_t>& s);

}  // namespace qss
