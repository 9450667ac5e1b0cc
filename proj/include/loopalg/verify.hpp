#ifndef LOOPALG_VERIFY_HPP
#define LOOPALG_VERIFY_HPP

#include <random>

#include "loopalg/bv.hpp"

namespace loopalg {

struct VerifyOptions {
    long degree_lo = -24;
    long degree_hi = 24;
    std::uint32_t word_length = 3;
    std::uint64_t seed = 0;
    unsigned random_triples = 200;   // seven-term identity samples
    unsigned property_cases = 500;   // per structural property suite
};

struct SuiteResult {
    std::string check;
    std::vector<std::string> failures;
    long long elapsed_ms = 0;

    bool ok() const { return failures.empty(); }
};

Scalar random_scalar(RingTag ring, std::mt19937_64& rng);
/// Random normal-form element with up to max_terms basis monomials of word
/// length <= word_length.
Element random_element(const PresentedAlgebra& A, std::mt19937_64& rng,
                       std::uint32_t word_length, unsigned max_terms);
/// Random homogeneous element of the tensor model, empty only if the degree
/// window has no basis.
LoopElement random_homogeneous_loop(const LoopModel& M, std::mt19937_64& rng,
                                    std::uint32_t word_length, unsigned max_terms);

/// Full invariant suite: Delta^2, seven-term, path agreement, rewrite
/// well-definedness, Hilbert oracle (fields), structural properties.
std::vector<SuiteResult> run_verification(const LoopModel& M, const VerifyOptions& opt);

bool all_ok(const std::vector<SuiteResult>& results);

}  // namespace loopalg

#endif
