#ifndef PARTNET_VERIFY_HPP
#define PARTNET_VERIFY_HPP

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace partnet {

/* The differential sweep behind `partnet verify`. Every jump-based
 * method is compared against an independent classical oracle over a
 * range of n. The methods are injectable so a deliberately broken
 * implementation can be pushed through the same code path (mutation
 * testing of the harness itself).
 */
struct VerifyMethods {
    std::function<mpz_class(std::uint32_t)> partition_count;
    std::function<std::uint64_t(std::uint32_t)> enumerate_count;
    std::function<long long(std::uint32_t)> trace;
    std::function<std::vector<std::uint32_t>(std::uint32_t)> divisor_counts;
    std::function<std::uint64_t(std::uint32_t)> sigma1;

    /// The library implementations.
    static VerifyMethods defaults();
};

struct VerifyCheck {
    std::string name;
    std::uint32_t cap = 0; // highest n this check ran to
    bool ok = true;
    std::string counterexample; // empty when ok
};

struct VerifyReport {
    std::uint32_t max = 0;
    std::vector<VerifyCheck> checks;

    bool ok() const;
    /// Counterexample of the first failing check, or empty.
    std::string first_counterexample() const;
};

/* Runs all checks up to max. Enumeration-backed checks are capped lower
 * than the polynomial ones because their cost grows super-polynomially;
 * each check's effective cap is recorded in the report.
 */
VerifyReport run_verification(std::uint32_t max,
                              const VerifyMethods& methods = VerifyMethods::defaults());

/// Human-readable report: a header with the caps, one line per check,
/// and the first counterexample when anything failed.
std::string format_report(const VerifyReport& report);

} // namespace partnet

#endif
