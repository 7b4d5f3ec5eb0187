#pragma once

/**
 * @file composition.hpp
 * @brief Compositions (n-tuples of non-negative integers) and the
 *        dominance and triangularity orders on them.
 */

#include <vector>

namespace qmacd {

class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> entries);

    int size() const { return static_cast<int>(entries_.size()); }
    int operator[](int i) const { return entries_[static_cast<size_t>(i)]; }
    const std::vector<int>& entries() const { return entries_; }

    int weight() const;

    /// decreasing rearrangement (the associated partition)
    Composition sorted() const;
    bool is_partition() const;

    bool operator==(const Composition& o) const = default;
    bool operator<(const Composition& o) const { return entries_ < o.entries_; }

private:
    std::vector<int> entries_;
};

/// dominance order: nu < eta iff nu != eta and all leading partial sums of
/// eta - nu are non-negative. Requires equal lengths and weights.
bool dominance_less(const Composition& nu, const Composition& eta);

/// the order used in the triangular expansion of E_eta: nu+ < eta+ in
/// dominance, or nu+ = eta+ and nu < eta. Requires equal lengths and weights.
bool prec_order(const Composition& nu, const Composition& eta);

/// all compositions of given weight with n parts, lexicographic order
std::vector<Composition> compositions_of_weight(int n, int weight);

/// all compositions with n parts and weight <= max_weight, by weight then lex
std::vector<Composition> compositions_up_to_weight(int n, int max_weight);

/// all partitions with at most n parts and weight <= max_weight
std::vector<Composition> partitions_up_to_weight(int n, int max_weight);

} // namespace qmacd
