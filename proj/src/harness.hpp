#pragma once

// Shared by the CLI and the acceptance runner: the golden cases replayed
// against paper-examples/, and the exhaustive verify battery.

#include <functional>
#include <string>
#include <vector>

#include "krmodel/krmodel.hpp"

namespace krm::harness {

struct GoldenCase {
    std::string name;                  // file is paper-examples/<name>.txt
    std::function<std::string()> render;
};

struct GoldenOutcome {
    std::string name;
    bool pass = false;
    std::string detail;                // first differing line, or the error
};

const std::vector<GoldenCase>& golden_cases();
std::vector<GoldenOutcome> run_golden(const std::string& dir);

// Text of a path of words, one step per line.
std::string render_steps(const LieType& t, const Window& start, const std::vector<Root>& roots);

struct VerifyReport {
    LieType type;
    std::vector<int> lambda;
    std::size_t chain_length = 0;
    std::size_t admissible = 0;
    std::size_t tensor = 0;
    std::size_t roundtrip_forward = 0;   // invert(sfill(J)) == J
    std::size_t roundtrip_backward = 0;  // sfill(invert(x)) == x
    std::size_t traces = 0;
    std::size_t steps = 0;
    std::size_t skips = 0;
    std::size_t passes = 0;              // (k,k+1) steps taken
    std::vector<std::string> mismatches;

    bool ok() const { return mismatches.empty(); }
};

int worker_count();   // KRM_WORKERS, else hardware concurrency

// Cardinality, injectivity and image of sfill, two-sided roundtrip, and
// per-trace checks (QBG legality, row monotonicity, stage-I-only skips).
VerifyReport verify_suite(const LieType& t, const std::vector<int>& lambda, int workers = 0);

// Row monotonicity of one column sweep: each row moves clockwise from its
// start toward its target without overshooting, except that a (k,k+1)
// step may overshoot once and then the row continues from there.
bool sweep_monotone(const LieType& t, const std::vector<PathTrace>& sweep, const Column& target);

} // namespace krm::harness
