#include "tci/ideal.hpp"

#include "tci/groebner.hpp"

namespace tci {

Ideal::Ideal(ContextPtr ctx, std::vector<Polynomial> generators)
    : impl_(std::make_shared<Impl>()) {
    if (!ctx) throw input_error("ideal requires a context");
    for (const Polynomial& p : generators) require_same_context(ctx, p.context());
    std::vector<Polynomial> gens;
    gens.reserve(generators.size());
    for (Polynomial& p : generators)
        if (!p.is_zero()) gens.push_back(std::move(p));
    if (gens.empty()) gens.push_back(Polynomial::zero(ctx));
    impl_->ctx = std::move(ctx);
    impl_->gens = std::move(gens);
}

bool Ideal::is_zero_ideal() const {
    for (const Polynomial& p : impl_->gens)
        if (!p.is_zero()) return false;
    return true;
}

const std::vector<Polynomial>& Ideal::groebner(const MonomialOrder& ord, Budget& budget,
                                               const char* stage) const {
    const std::string key = ord.key();
    {
        std::lock_guard<std::mutex> hold(impl_->lock);
        auto it = impl_->bases.find(key);
        if (it != impl_->bases.end()) return *it->second;
    }
    auto basis = std::make_shared<const std::vector<Polynomial>>(
        groebner_basis(impl_->gens, ord, budget, stage));
    std::lock_guard<std::mutex> hold(impl_->lock);
    auto [it, inserted] = impl_->bases.emplace(key, std::move(basis));
    return *it->second; // first writer wins; identical content either way
}

std::optional<std::vector<Polynomial>> Ideal::cached_groebner(const MonomialOrder& ord) const {
    std::lock_guard<std::mutex> hold(impl_->lock);
    auto it = impl_->bases.find(ord.key());
    if (it == impl_->bases.end()) return std::nullopt;
    return *it->second;
}

} // namespace tci
