#ifndef TCI_ERRORS_HPP
#define TCI_ERRORS_HPP

#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tci {

// Malformed or mathematically inadmissible input (bad syntax, wrong
// dimensions, empty variety where a curve is required, ...).
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A computation ran out of its step budget or hit a degree cap.  The engine
// never returns a partial answer: it throws this instead.
class resource_error : public std::runtime_error {
public:
    resource_error(std::string stage, std::uint64_t limit)
        : std::runtime_error("resource budget exceeded during " + stage +
                             " (limit " + std::to_string(limit) + " steps)"),
          stage_(std::move(stage)), limit_(limit) {}

    const std::string& stage() const { return stage_; }
    std::uint64_t limit() const { return limit_; }

private:
    std::string stage_;
    std::uint64_t limit_;
};

// Violation of an internal invariant (e.g. a proved dimension bound failing).
// Signals an implementation bug, never a property of the input.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

// Shared step budget.  All expensive kernels charge reduction work against
// one of these; the counter is atomic so independent computations may run
// concurrently against the same budget.
class Budget {
public:
    explicit Budget(std::uint64_t limit = kDefaultLimit) : limit_(limit) {}

    // Charges n units attributed to `stage`; throws resource_error once the
    // limit is crossed.  Cancellation granularity is therefore one charge.
    void spend(std::uint64_t n, const char* stage) {
        std::uint64_t now = spent_.fetch_add(n, std::memory_order_relaxed) + n;
        if (now > limit_)
            throw resource_error(stage ? stage : "computation", limit_);
    }

    std::uint64_t used() const { return spent_.load(std::memory_order_relaxed); }
    std::uint64_t limit() const { return limit_; }

    // Large enough for every shipped fixture with an order of magnitude to
    // spare; override with --budget when pushing bigger inputs through.
    static constexpr std::uint64_t kDefaultLimit = 400'000'000;

private:
    std::atomic<std::uint64_t> spent_{0};
    std::uint64_t limit_;
};

} // namespace tci

#endif
