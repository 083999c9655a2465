#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace slackkit {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

struct RingMismatch : Error {
    explicit RingMismatch(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& what) : Error(what) {}
};

// A step/time budget for the heavy ideal-theoretic operations.  Budget
// exhaustion is reported as an exception so it can never be confused
// with a mathematical verdict.
struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& what) : Error("budget exceeded: " + what) {}
};

class Budget {
public:
    Budget() = default;

    static Budget unlimited() { return Budget(); }

    static Budget seconds(double s) {
        Budget b;
        b.deadline_ = std::chrono::steady_clock::now() +
                      std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                          std::chrono::duration<double>(s));
        return b;
    }

    static Budget steps(std::uint64_t n) {
        Budget b;
        b.max_steps_ = n;
        return b;
    }

    // Counts one unit of work; throws once the budget is spent.  The
    // clock is only consulted every few hundred steps.
    void tick(const char* context) {
        ++steps_;
        if (max_steps_ && steps_ > *max_steps_)
            throw BudgetExceeded(std::string(context) + " (step limit)");
        if (deadline_ && (steps_ & 0xff) == 0 &&
            std::chrono::steady_clock::now() > *deadline_)
            throw BudgetExceeded(std::string(context) + " (time limit)");
    }

    std::uint64_t steps_used() const { return steps_; }

private:
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    std::optional<std::uint64_t> max_steps_;
    std::uint64_t steps_ = 0;
};

} // namespace slackkit
