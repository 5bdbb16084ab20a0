#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace zzlattice {

// Invalid user-supplied configuration, parameter, or input file.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Requested computation exceeds a hard resource guard (state too large, etc.).
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Dressed-state assignment failed: some computational-subspace label could not
// be matched to an eigenstate with squared overlap above 0.5.
class LabelingAmbiguous : public std::runtime_error {
public:
    LabelingAmbiguous(std::vector<int> label, double overlap);

    const std::vector<int>& label() const noexcept { return label_; }
    double overlap() const noexcept { return overlap_; }

private:
    std::vector<int> label_;
    double overlap_;
};

// A sweep produced no valid points at all.
class EmptyResultError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A routed circuit failed equivalence verification against its source circuit.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace zzlattice
