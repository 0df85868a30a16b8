#include "partnet/distinct.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

#include "partnet/errors.hpp"

namespace partnet {

DistinctPartition::DistinctPartition(term_t initial, std::vector<term_t> tail) {
    if (initial == 0)
        throw std::invalid_argument("the initial term must be positive");
    for (std::size_t i = 0; i < tail.size(); ++i) {
        if (tail[i] == 0 || tail[i] >= initial)
            throw std::invalid_argument("every tail part must lie strictly between 0 and the initial term");
        if (i > 0 && tail[i] <= tail[i - 1])
            throw std::invalid_argument("tail parts must be strictly increasing");
    }
    terms_.reserve(tail.size() + 1);
    terms_.push_back(initial);
    terms_.insert(terms_.end(), tail.begin(), tail.end());
    n_ = std::accumulate(terms_.begin(), terms_.end(), term_t{0});
}

term_t DistinctPartition::smallest() const noexcept {
    return terms_.size() == 1 ? terms_.front() : terms_[1];
}

std::string DistinctPartition::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i)
            out << ' ';
        out << terms_[i];
    }
    return out.str();
}

DistinctPartition invariant_jump(const DistinctPartition& p, JumpOrder r) {
    if (r == 0)
        throw InvalidInvariantJump("jump order must be at least 1");
    if (r >= p.smallest())
        throw InvalidInvariantJump("order " + std::to_string(r) +
                                   " is not smaller than the part " +
                                   std::to_string(p.smallest()));
    std::vector<term_t> tail;
    tail.reserve(p.part_count());
    tail.push_back(r);
    tail.insert(tail.end(), p.terms().begin() + 1, p.terms().end());
    return DistinctPartition(p.initial(), std::move(tail));
}

DescendingJumpSetStream::DescendingJumpSetStream(term_t a1) : a1_(a1) {
    if (a1 == 0)
        throw std::invalid_argument("the initial term must be positive");
}

void DescendingJumpSetStream::advance() {
    const term_t max_elem = a1_ - 1;
    // next tail of the same size, in lexicographic order
    for (std::size_t i = combo_.size(); i-- > 0;) {
        const term_t limit = max_elem - static_cast<term_t>(combo_.size() - 1 - i);
        if (combo_[i] < limit) {
            ++combo_[i];
            for (std::size_t j = i + 1; j < combo_.size(); ++j)
                combo_[j] = combo_[j - 1] + 1;
            return;
        }
    }
    // grow to the next size
    if (combo_.size() == max_elem) {
        done_ = true;
        return;
    }
    combo_.resize(combo_.size() + 1);
    std::iota(combo_.begin(), combo_.end(), term_t{1});
}

std::optional<DistinctPartition> DescendingJumpSetStream::next() {
    if (done_)
        return std::nullopt;
    DistinctPartition result(a1_, combo_);
    advance();
    return result;
}

DistinctPartitionStream::DistinctPartitionStream(term_t n) : n_(n) {
    if (n == 0)
        throw std::invalid_argument("cannot enumerate partitions of 0");
}

std::optional<SignedTraceTerm> DistinctPartitionStream::emit(term_t final_part) {
    std::vector<term_t> tail;
    tail.reserve(chosen_.size() + 1);
    tail.push_back(final_part);
    tail.insert(tail.end(), chosen_.rbegin(), chosen_.rend());
    DistinctPartition partition(a1_, std::move(tail));
    const term_t smallest = partition.smallest();
    const int sign = partition.sign();
    return SignedTraceTerm{std::move(partition), smallest, sign};
}

std::optional<SignedTraceTerm> DistinctPartitionStream::next() {
    for (;;) {
        if (frames_.empty()) {
            // move to the next initial term whose remainder fits into
            // a strictly decreasing tail below it
            do {
                ++a1_;
            } while (a1_ <= n_ &&
                     std::uint64_t{a1_} * (a1_ - 1) / 2 < std::uint64_t{n_ - a1_});
            if (a1_ > n_)
                return std::nullopt;
            chosen_.clear();
            const term_t remaining = n_ - a1_;
            if (remaining == 0) {
                DistinctPartition partition(a1_);
                return SignedTraceTerm{partition, a1_, 1};
            }
            frames_.push_back({remaining, std::min<term_t>(a1_ - 1, remaining)});
        }

        Frame& frame = frames_.back();
        const term_t e = frame.candidate;
        // below this bound the elements under e cannot reach the sum
        if (e == 0 || std::uint64_t{e} * (e + 1) / 2 < frame.remaining) {
            frames_.pop_back();
            if (frames_.empty())
                continue; // this initial term is exhausted
            chosen_.pop_back();
            frames_.back().candidate -= 1;
            continue;
        }
        if (e == frame.remaining) {
            frame.candidate = e - 1;
            return emit(e);
        }
        // choose e, place the rest among parts below it; always feasible
        // because e(e+1)/2 >= remaining implies e(e-1)/2 >= remaining - e
        chosen_.push_back(e);
        frames_.push_back({frame.remaining - e, e - 1});
    }
}

long long trace(term_t n) {
    long long total = 0;
    DistinctPartitionStream stream(n);
    while (auto term = stream.next())
        total += term->sign * static_cast<long long>(term->smallest);
    return total;
}

PartitionNetwork build_divisor_network(term_t a1_max, std::size_t node_budget) {
    if (a1_max == 0)
        throw std::invalid_argument("a1_max must be positive");
    if (a1_max >= 63 || ((std::uint64_t{1} << a1_max) - 1) > node_budget)
        throw LimitExceeded("divisor network up to " + std::to_string(a1_max) +
                            " exceeds the budget of " + std::to_string(node_budget) +
                            " nodes");

    PartitionNetwork net;
    net.kind = NetworkKind::divisor;
    net.parameter = a1_max;

    std::map<std::vector<term_t>, std::uint32_t> ids;
    for (term_t a1 = 1; a1 <= a1_max; ++a1) {
        DescendingJumpSetStream stream(a1);
        while (auto p = stream.next()) {
            const auto id = static_cast<std::uint32_t>(net.nodes.size());
            const auto value = static_cast<std::int64_t>(p->sign()) * p->smallest();
            net.nodes.push_back({id, p->terms(), value});
            ids.emplace(p->terms(), id);

            if (p->part_count() >= 2) {
                // undo the last jump: drop the second term
                std::vector<term_t> parent_terms;
                parent_terms.reserve(p->part_count() - 1);
                parent_terms.push_back(p->initial());
                parent_terms.insert(parent_terms.end(), p->terms().begin() + 2,
                                    p->terms().end());
                const std::uint32_t parent_id = ids.at(parent_terms);
                net.edges.push_back({parent_id, id, p->terms()[1], parent_terms.size() == 1});
            }
        }
    }
    return net;
}

} // namespace partnet
