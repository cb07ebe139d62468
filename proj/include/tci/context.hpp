#ifndef TCI_CONTEXT_HPP
#define TCI_CONTEXT_HPP

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tci/errors.hpp"

namespace tci {

class VariableContext;
using ContextPtr = std::shared_ptr<const VariableContext>;

// Named, contiguous slice [begin, end) of the variable list.
struct Block {
    std::string name;
    int begin = 0;
    int end = 0;
    int size() const { return end - begin; }
};

// Ordered list of variable names, optionally partitioned into named blocks.
// Immutable after construction; polynomials share it by ContextPtr.
class VariableContext {
public:
    // Blocks, when given, must tile [0, n) exactly in order.  The name "i" is
    // reserved for the imaginary unit.
    static ContextPtr make(std::vector<std::string> names,
                           std::vector<Block> blocks = {});

    std::size_t arity() const { return names_.size(); }
    const std::string& name(std::size_t idx) const { return names_[idx]; }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<int> index_of(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    const std::vector<Block>& blocks() const { return blocks_; }
    const Block& block(const std::string& name) const;
    bool has_blocks() const { return !blocks_.empty(); }

    // Contexts are interchangeable when the variable names agree; blocks are
    // bookkeeping and do not affect polynomial identity.
    bool same_names(const VariableContext& o) const { return names_ == o.names_; }

private:
    VariableContext() = default;
    std::vector<std::string> names_;
    std::vector<Block> blocks_;
    std::unordered_map<std::string, int> index_;
};

inline void require_same_context(const ContextPtr& a, const ContextPtr& b) {
    if (a.get() == b.get()) return;
    if (!a || !b || !a->same_names(*b))
        throw input_error("variable context mismatch");
}

} // namespace tci

#endif
