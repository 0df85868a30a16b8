#ifndef PARTNET_PARTITION_HPP
#define PARTNET_PARTITION_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace partnet {

using term_t = std::uint32_t;

/// Jump order of a single transformation; always >= 1.
using JumpOrder = term_t;

bool is_jump_form(const std::vector<term_t>& terms);

/* A partition of a positive integer n in jump form: the first term is
 * the working head, the remaining terms are non-descending, and the
 * first term is never smaller than the last. Equivalently, reading
 * a2 a3 ... am a1 gives a non-descending sequence. Every partition has
 * exactly one such representation, which is what makes predecessor()
 * well defined.
 */
class Partition {
public:
    /// Takes terms already in jump form; throws std::invalid_argument otherwise.
    explicit Partition(std::vector<term_t> terms);

    static Partition single(term_t n);

    /// Builds the jump form of an arbitrary multiset of positive parts:
    /// sort ascending, rotate the largest part to the front.
    static Partition from_parts(std::vector<term_t> parts);

    const std::vector<term_t>& terms() const noexcept { return terms_; }
    term_t first() const noexcept { return terms_.front(); }
    term_t second() const noexcept { return terms_[1]; }
    term_t last() const noexcept { return terms_.back(); }
    std::size_t part_count() const noexcept { return terms_.size(); }
    term_t sum() const noexcept { return n_; }

    /// Space-separated terms, e.g. "4 1 2 3".
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.terms_ <=> b.terms_;
    }

private:
    std::vector<term_t> terms_;
    term_t n_ = 0;
};

/// True iff splitting the first term into (a1-r, r) yields a valid
/// partition: the remainder must not fall below the last term, and r
/// must not exceed the second term when one exists. For a single-term
/// partition [n] this reduces to n - r >= r.
bool is_valid_jump(const Partition& p, JumpOrder r) noexcept;

/// Splits the first term a1 into (a1-r, r). Throws InvalidJump, naming
/// the violated condition, when is_valid_jump(p, r) is false.
Partition jump(const Partition& p, JumpOrder r);

/// Merges the first two terms, inverting the jump of order a2 that
/// produced p. Returns nullopt for a single-term partition (the root).
std::optional<Partition> predecessor(const Partition& p);

/// Number of partitions reachable by repeated order-1 jumps, including
/// p itself: a1 - am + 1 (1 for a single-term partition).
term_t order1_jump_set_size(const Partition& p) noexcept;

} // namespace partnet

#endif
