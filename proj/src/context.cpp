#include "tci/context.hpp"

namespace tci {

ContextPtr VariableContext::make(std::vector<std::string> names,
                                 std::vector<Block> blocks) {
    auto ctx = std::shared_ptr<VariableContext>(new VariableContext());
    for (std::size_t k = 0; k < names.size(); ++k) {
        const std::string& n = names[k];
        if (n.empty()) throw input_error("empty variable name");
        if (n == "i")
            throw input_error("variable name 'i' is reserved for the imaginary unit");
        if (!ctx->index_.emplace(n, static_cast<int>(k)).second)
            throw input_error("duplicate variable name '" + n + "'");
    }
    if (!blocks.empty()) {
        int expect = 0;
        for (const Block& b : blocks) {
            if (b.begin != expect || b.end < b.begin ||
                b.end > static_cast<int>(names.size()))
                throw input_error("blocks must partition the variable range");
            expect = b.end;
        }
        if (expect != static_cast<int>(names.size()))
            throw input_error("blocks must partition the variable range");
    }
    ctx->names_ = std::move(names);
    ctx->blocks_ = std::move(blocks);
    return ctx;
}

const Block& VariableContext::block(const std::string& name) const {
    for (const Block& b : blocks_)
        if (b.name == name) return b;
    throw input_error("unknown block '" + name + "'");
}

} // namespace tci
