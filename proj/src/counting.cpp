#include "partnet/counting.hpp"

#include <cassert>
#include <utility>

namespace partnet {

const mpz_class* CountTable::find(std::uint32_t order, std::uint32_t block) const {
    auto it = entries_.find(key(order, block));
    return it == entries_.end() ? nullptr : &it->second;
}

const mpz_class& CountTable::store(std::uint32_t order, std::uint32_t block,
                                   mpz_class value) {
    return entries_.insert_or_assign(key(order, block), std::move(value)).first->second;
}

const mpz_class& block_partition_count(std::uint32_t order, std::uint32_t block,
                                       CountTable& memo) {
    assert(block >= 1);
    if (const mpz_class* hit = memo.find(order, block))
        return *hit;

    mpz_class result;
    if (order == 0) {
        result = 1;
    } else {
        const std::uint32_t steps = (block + order - 1) / order; // ceil, exact
        for (std::uint32_t i = 1; i <= steps; ++i)
            result += block_partition_count(order - 1, block - order * (i - 1), memo);
    }
    return memo.store(order, block, std::move(result));
}

mpz_class partition_count(std::uint32_t n, CountTable& memo) {
    mpz_class total;
    for (std::uint32_t i = 0; i <= n / 2; ++i)
        total += block_partition_count(i, n + 1 - 2 * i, memo);
    return total;
}

mpz_class partition_count(std::uint32_t n) {
    CountTable memo;
    return partition_count(n, memo);
}

} // namespace partnet
