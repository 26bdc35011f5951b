#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ilvr {

// Argument outside the mathematical domain of an operation (p <= 0, t <= 0, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Caller violated a precondition that is not a numeric domain issue
// (mismatched anchor/path, too few samples, bad bin count).
class ContractError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A generated price path reached p <= 0.
class PathRejected : public DomainError {
public:
    PathRejected(std::size_t step, double price)
        : DomainError("price path crossed zero at step " + std::to_string(step) +
                      " (price " + std::to_string(price) + ")"),
          step_(step), price_(price) {}

    std::size_t step() const noexcept { return step_; }
    double price() const noexcept { return price_; }

private:
    std::size_t step_;
    double price_;
};

// A path inside an ensemble was rejected; carries the run index.
class RunRejected : public PathRejected {
public:
    RunRejected(std::size_t run_index, const PathRejected& cause)
        : PathRejected(cause), run_index_(run_index),
          message_("run " + std::to_string(run_index) + ": " + cause.what()) {}

    std::size_t run_index() const noexcept { return run_index_; }
    const char* what() const noexcept override { return message_.c_str(); }

private:
    std::size_t run_index_;
    std::string message_;
};

// The Brownian approximation is not valid at this time: the zero-price
// cutoff has moved inside the Gaussian integration window.
class RegimeError : public std::runtime_error {
public:
    explicit RegimeError(double t)
        : std::runtime_error("Brownian approximation invalid at this t: t=" + std::to_string(t)),
          t_(t) {}

    double time() const noexcept { return t_; }

private:
    double t_;
};

}  // namespace ilvr
