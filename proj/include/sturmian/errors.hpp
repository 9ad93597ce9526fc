#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sturmian {

// Word-spec text could not be parsed; position() is the byte offset of the
// offending character in the input.
class spec_parse_error : public std::runtime_error {
public:
    spec_parse_error(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// A fixed-point floor landed inside the guard band of an integer even after
// escalating to full stored precision.
class precision_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A computation would exceed the configured memory budget or an internal
// size cap.
class capacity_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluation requested at (or too близко to) the pole s = 1.
class pole_error : public std::domain_error {
    using std::domain_error::domain_error;
};

// Direct Dirichlet summation requested outside its half-plane of convergence.
class convergence_error : public std::domain_error {
    using std::domain_error::domain_error;
};

// Least-squares fit is degenerate (too few or coincident checkpoints).
class fit_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace sturmian
