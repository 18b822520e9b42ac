// Property sweeps behind the `verify` command: Parseval and round-trip
// checks for the transform, brute-force Hilbert-Schmidt identity
// comparisons, the operator-norm bound, and the uncertainty-bound
// Monte Carlo.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qsr {

struct VerifyOptions {
    int rows = 8;
    int cols = 8;
    long trials = 1000;
    std::uint64_t seed = 1;
    // Test hook: corrupts one spectrum cell before the Parseval/round-trip
    // checks so the failure path stays exercised.
    bool inject_fault = false;
};

struct PropertyResult {
    std::string name;
    bool pass = false;
    double worst = 0.0;  // worst error or smallest margin seen
    std::string note;
};

/// Runs every sweep; throws "spec" when dims exceed the 16x16 brute-force
/// budget. trials == 0 yields vacuous passes.
std::vector<PropertyResult> run_verify(const VerifyOptions& options);

bool all_pass(const std::vector<PropertyResult>& results);

/// CSV: property,pass,worst,note — one row per property.
void write_verify_summary(const std::vector<PropertyResult>& results,
                          const std::string& path);

}  // namespace qsr
