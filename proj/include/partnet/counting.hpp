#ifndef PARTNET_COUNTING_HPP
#define PARTNET_COUNTING_HPP

#include <gmpxx.h>

#include <cstdint>
#include <unordered_map>

namespace partnet {

/// Memo of block counts keyed by (order, block size). Exact integers;
/// the stored value for order 0 is always 1.
class CountTable {
public:
    const mpz_class* find(std::uint32_t order, std::uint32_t block) const;
    const mpz_class& store(std::uint32_t order, std::uint32_t block, mpz_class value);
    std::size_t size() const noexcept { return entries_.size(); }

private:
    static std::uint64_t key(std::uint32_t order, std::uint32_t block) noexcept {
        return (std::uint64_t{order} << 32) | block;
    }
    std::unordered_map<std::uint64_t, mpz_class> entries_;
};

/* Number of partitions that descend from an initial jump of the given
 * order when the starting order-1 block holds `block` partitions:
 *
 *   count(0, t) = 1
 *   count(s, t) = sum_{i=1}^{ceil(t/s)} count(s-1, t - s(i-1))
 *
 * Every recursive argument stays >= 1. The returned reference lives in
 * the memo table.
 */
const mpz_class& block_partition_count(std::uint32_t order, std::uint32_t block,
                                       CountTable& memo);

/// Exact number of partitions of n, summing block counts over all first
/// jump orders: sum_{i=0}^{floor(n/2)} count(i, n+1-2i). p(0) = 1.
mpz_class partition_count(std::uint32_t n, CountTable& memo);
mpz_class partition_count(std::uint32_t n);

} // namespace partnet

#endif
