#include "tci/order.hpp"

#include <algorithm>
#include <numeric>

namespace tci {

MonomialOrder MonomialOrder::lex(std::size_t arity) {
    MonomialOrder o;
    o.arity_ = arity;
    o.groups_.reserve(arity);
    for (std::size_t k = 0; k < arity; ++k)
        o.groups_.push_back({static_cast<int>(k)});
    return o;
}

MonomialOrder MonomialOrder::grevlex(std::size_t arity) {
    MonomialOrder o;
    o.arity_ = arity;
    std::vector<int> all(arity);
    std::iota(all.begin(), all.end(), 0);
    o.groups_.push_back(std::move(all));
    return o;
}

MonomialOrder MonomialOrder::blocks(std::size_t arity,
                                    const std::vector<std::vector<int>>& groups,
                                    const std::vector<InnerKind>& inner) {
    if (!inner.empty() && inner.size() != groups.size())
        throw input_error("one inner order per block expected");
    std::vector<char> seen(arity, 0);
    MonomialOrder o;
    o.arity_ = arity;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        if (groups[g].empty()) continue;
        for (int v : groups[g]) {
            if (v < 0 || static_cast<std::size_t>(v) >= arity || seen[v])
                throw input_error("blocks must partition the variables");
            seen[v] = 1;
        }
        InnerKind k = inner.empty() ? InnerKind::grevlex : inner[g];
        if (k == InnerKind::lex) {
            for (int v : groups[g]) o.groups_.push_back({v});
        } else {
            o.groups_.push_back(groups[g]);
        }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
        throw input_error("blocks must cover all variables");
    return o;
}

MonomialOrder MonomialOrder::weighted(std::vector<long> weights) {
    for (long w : weights)
        if (w <= 0) throw input_error("weights must be positive");
    MonomialOrder o = grevlex(weights.size());
    o.weights_ = std::move(weights);
    return o;
}

MonomialOrder MonomialOrder::grevlex_sequence(std::vector<int> sequence) {
    std::vector<char> seen(sequence.size(), 0);
    for (int v : sequence) {
        if (v < 0 || static_cast<std::size_t>(v) >= sequence.size() || seen[v])
            throw input_error("sequence must be a permutation");
        seen[v] = 1;
    }
    MonomialOrder o;
    o.arity_ = sequence.size();
    o.groups_.push_back(std::move(sequence));
    return o;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (!weights_.empty()) {
        long da = 0, db = 0;
        for (std::size_t k = 0; k < weights_.size(); ++k) {
            da += weights_[k] * a[k];
            db += weights_[k] * b[k];
        }
        if (da != db) return da < db ? -1 : 1;
    }
    for (const auto& g : groups_) {
        int da = 0, db = 0;
        for (int v : g) { da += a[v]; db += b[v]; }
        if (da != db) return da < db ? -1 : 1;
        // graded tie: reverse scan, the side with the smaller trailing
        // exponent is the larger monomial
        for (auto it = g.rbegin(); it != g.rend(); ++it) {
            int d = a[*it] - b[*it];
            if (d != 0) return d > 0 ? -1 : 1;
        }
    }
    return 0;
}

bool MonomialOrder::is_graded() const {
    return weights_.empty() && groups_.size() == 1;
}

bool MonomialOrder::eliminates(const std::vector<int>& drop) const {
    if (!weights_.empty()) return false;
    std::vector<char> dropped(arity_, 0);
    for (int v : drop) dropped[v] = 1;
    // the dropped variables must occupy a prefix of the group sequence
    std::size_t g = 0;
    std::size_t covered = 0;
    for (; g < groups_.size() && covered < drop.size(); ++g) {
        for (int v : groups_[g])
            if (!dropped[v]) return false;
        covered += groups_[g].size();
    }
    return covered == drop.size();
}

std::string MonomialOrder::key() const {
    std::string s = "w[";
    for (long w : weights_) s += std::to_string(w) + ",";
    s += "]g";
    for (const auto& g : groups_) {
        s += "[";
        for (int v : g) s += std::to_string(v) + ",";
        s += "]";
    }
    return s;
}

} // namespace tci
