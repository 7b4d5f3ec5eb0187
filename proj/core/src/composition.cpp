#include "qmacd/composition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace qmacd {

Composition::Composition(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("Composition: empty");
    for (int e : entries_)
        if (e < 0) throw std::invalid_argument("Composition: negative entry");
}

int Composition::weight() const {
    return std::accumulate(entries_.begin(), entries_.end(), 0);
}

Composition Composition::sorted() const {
    std::vector<int> s = entries_;
    std::sort(s.begin(), s.end(), std::greater<int>());
    return Composition(std::move(s));
}

bool Composition::is_partition() const {
    return std::is_sorted(entries_.rbegin(), entries_.rend());
}

bool dominance_less(const Composition& nu, const Composition& eta) {
    if (nu.size() != eta.size()) throw std::invalid_argument("dominance_less: length mismatch");
    if (nu.weight() != eta.weight()) throw std::invalid_argument("dominance_less: weight mismatch");
    if (nu == eta) return false;
    int partial = 0;
    for (int i = 0; i < nu.size(); ++i) {
        partial += eta[i] - nu[i];
        if (partial < 0) return false;
    }
    return true;
}

bool prec_order(const Composition& nu, const Composition& eta) {
    if (nu.size() != eta.size()) throw std::invalid_argument("prec_order: length mismatch");
    if (nu.weight() != eta.weight()) throw std::invalid_argument("prec_order: weight mismatch");
    Composition np = nu.sorted(), ep = eta.sorted();
    if (np == ep) return dominance_less(nu, eta);
    return dominance_less(np, ep);
}

std::vector<Composition> compositions_of_weight(int n, int weight) {
    std::vector<Composition> out;
    std::vector<int> cur(static_cast<size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int pos, int rem) {
        if (pos == n - 1) {
            cur[static_cast<size_t>(pos)] = rem;
            out.emplace_back(cur);
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            cur[static_cast<size_t>(pos)] = v;
            rec(pos + 1, rem - v);
        }
    };
    rec(0, weight);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Composition> compositions_up_to_weight(int n, int max_weight) {
    std::vector<Composition> out;
    for (int w = 0; w <= max_weight; ++w) {
        auto cs = compositions_of_weight(n, w);
        out.insert(out.end(), cs.begin(), cs.end());
    }
    return out;
}

std::vector<Composition> partitions_up_to_weight(int n, int max_weight) {
    std::vector<Composition> out;
    for (const auto& c : compositions_up_to_weight(n, max_weight))
        if (c.is_partition()) out.push_back(c);
    return out;
}

} // namespace qmacd
