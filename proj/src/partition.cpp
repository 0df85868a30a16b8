#include "partnet/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "partnet/errors.hpp"

namespace partnet {

bool is_jump_form(const std::vector<term_t>& terms) {
    if (terms.empty())
        return false;
    for (term_t t : terms)
        if (t == 0)
            return false;
    // tail non-descending, first term at least the last
    for (std::size_t i = 2; i < terms.size(); ++i)
        if (terms[i] < terms[i - 1])
            return false;
    return terms.front() >= terms.back();
}

Partition::Partition(std::vector<term_t> terms) : terms_(std::move(terms)) {
    if (!is_jump_form(terms_))
        throw std::invalid_argument("partition terms are not in jump form");
    n_ = std::accumulate(terms_.begin(), terms_.end(), term_t{0});
}

Partition Partition::single(term_t n) {
    return Partition(std::vector<term_t>{n});
}

Partition Partition::from_parts(std::vector<term_t> parts) {
    if (parts.empty())
        throw std::invalid_argument("a partition needs at least one part");
    std::sort(parts.begin(), parts.end());
    std::rotate(parts.begin(), parts.end() - 1, parts.end());
    return Partition(std::move(parts));
}

std::string Partition::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i)
            out << ' ';
        out << terms_[i];
    }
    return out.str();
}

bool is_valid_jump(const Partition& p, JumpOrder r) noexcept {
    if (r == 0)
        return false;
    // For [n] the relevant last term is the r being split off.
    const term_t last = p.part_count() == 1 ? r : p.last();
    if (p.first() < r + last)
        return false;
    return p.part_count() == 1 || r <= p.second();
}

Partition jump(const Partition& p, JumpOrder r) {
    if (r == 0)
        throw InvalidJump("jump order must be at least 1");
    const term_t last = p.part_count() == 1 ? r : p.last();
    if (p.first() < r + last)
        throw InvalidJump("reduced first term " + std::to_string(p.first()) + "-" +
                          std::to_string(r) + " would fall below the last term " +
                          std::to_string(last));
    if (p.part_count() >= 2 && r > p.second())
        throw InvalidJump("order " + std::to_string(r) + " exceeds the second term " +
                          std::to_string(p.second()));

    std::vector<term_t> result;
    result.reserve(p.part_count() + 1);
    result.push_back(p.first() - r);
    result.push_back(r);
    result.insert(result.end(), p.terms().begin() + 1, p.terms().end());
    return Partition(std::move(result));
}

std::optional<Partition> predecessor(const Partition& p) {
    if (p.part_count() == 1)
        return std::nullopt;
    std::vector<term_t> result;
    result.reserve(p.part_count() - 1);
    result.push_back(p.first() + p.second());
    result.insert(result.end(), p.terms().begin() + 2, p.terms().end());
    return Partition(std::move(result));
}

term_t order1_jump_set_size(const Partition& p) noexcept {
    return p.first() - p.last() + 1;
}

} // namespace partnet
