#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "switchsim/analysis.hpp"

namespace switchsim {

// A fully resolved invocation; the flag parser in tools/ produces one of
// these. Artifacts are deterministic functions of the config.
struct RunConfig {
    enum class Command { curve, region, sequence, multicopy, verify };
    enum class Format { csv, json };

    Command command = Command::curve;
    Format format = Format::csv;
    std::string out = "-";  // "-" = stdout

    std::string family;
    std::vector<double> pvec;              // family "pauli": explicit probabilities
    std::vector<double> params;            // sequence: fixed family parameters
    std::vector<int> orders;               // curve/sequence orders, multicopy copy counts
    std::vector<std::string> protocols;    // curve: extra protocol columns
    std::string ensemble;                  // tag; "" = default for the dimension
    std::vector<GridAxis> grid;

    long long samples = 2'000'000;
    std::uint64_t seed = 1;
    std::string predicate;

    int threads = 1;
    int order_cap = -1;
    std::size_t max_branches = kDefaultMaxBranches;
};

// Executes the config and writes the artifact. Returns 0, or 1 when a verify
// run had failing checks. Configuration problems throw std::invalid_argument
// or std::domain_error; branch blow-ups throw resource_error.
int run(const RunConfig& config);

// Numbers in artifacts carry 12 significant digits.
std::string format_number(double v);

// Resolve an ensemble tag ("", "orthogonal", "omega1..3", or
// "bloch:x,y,z;x,y,z[;q1,q2]") for channels of the given dimension.
Ensemble resolve_ensemble(const std::string& tag, int dim);

// The individual cross-checks behind `verify`.
struct VerifyCheck {
    std::string name;
    bool passed;
    double worst;  // largest deviation observed
};
std::vector<VerifyCheck> run_verify_checks(std::uint64_t seed);

}  // namespace switchsim
