#pragma once

// One verifier per family of identities satisfied by d_n^(r)(x). Each
// returns a VerifyReport with an exact verdict; nothing is compared up to a
// tolerance.
//
// Native modes:
//   symbolic-poly        both sides built as BiPoly in (x, r) and compared
//   cleared-denominator  as above after multiplying out r-dependent
//                        denominators; excluded r values are listed as skips
//   interpolation-grid   symbolic in x at D+1 distinct parameter values,
//                        where D bounds the degree in that parameter
// With CheckOptions::point_grid every verifier instead runs the same
// formulas at sampled rational (r, x), taking d_n from the scalar
// recurrence.

#include "delannoy/report.hpp"
#include "delannoy/sequences.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace delannoy {

VerifyReport verify_square(unsigned n_max, const CheckOptions& options = {},
                           SequenceCache& cache = SequenceCache::global());
VerifyReport verify_linearization(unsigned m_max, unsigned n_max, const CheckOptions& options = {},
                                  SequenceCache& cache = SequenceCache::global());
VerifyReport verify_newform_consequences(unsigned n_max, const CheckOptions& options = {},
                                         SequenceCache& cache = SequenceCache::global());
VerifyReport verify_jacobi(unsigned n_max, const CheckOptions& options = {},
                           SequenceCache& cache = SequenceCache::global());
VerifyReport verify_meixner(unsigned n_max, const CheckOptions& options = {},
                            SequenceCache& cache = SequenceCache::global());
VerifyReport verify_recurrences(unsigned n_max, const CheckOptions& options = {},
                                SequenceCache& cache = SequenceCache::global());
VerifyReport verify_special_values(unsigned n_max, const CheckOptions& options = {},
                                   SequenceCache& cache = SequenceCache::global());
VerifyReport verify_shift_identities(unsigned n_max, const CheckOptions& options = {},
                                     SequenceCache& cache = SequenceCache::global());
VerifyReport verify_guo_family(unsigned n_max, const CheckOptions& options = {},
                               SequenceCache& cache = SequenceCache::global());
VerifyReport verify_weighted_square_sum(unsigned n_max, const CheckOptions& options = {},
                                   SequenceCache& cache = SequenceCache::global());

/// Stable ids of every verifier run by the suite, in suite order.
const std::vector<std::string>& verifier_ids();
/// Default depth (n_max) of a verifier id.
unsigned default_depth(const std::string& id);

VerifyReport run_verifier(const std::string& id, unsigned depth, const CheckOptions& options = {},
                          SequenceCache& cache = SequenceCache::global());

struct SuiteConfig {
    /// Empty: every verifier.
    std::vector<std::string> selected;
    /// Overrides default_depth for every selected verifier.
    std::optional<unsigned> depth;
    /// Per-id depth overrides, applied after `depth`.
    std::map<std::string, unsigned> depths;
    /// Verifier whose right-hand sides are perturbed (fault injection).
    std::optional<std::string> perturb;
    bool point_grid = false;
    bool parallel = true;
};

/// Runs the selected verifiers; the result is in verifier_ids() order
/// regardless of scheduling. Unknown ids throw std::invalid_argument before
/// anything is computed.
std::vector<VerifyReport> run_suite(const SuiteConfig& config,
                                    SequenceCache& cache = SequenceCache::global());

bool all_passed(const std::vector<VerifyReport>& reports);

} // namespace delannoy
