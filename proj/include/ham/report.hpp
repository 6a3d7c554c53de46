#pragma once

#include <cstdint>
#include <string>

#include "ham/closure.hpp"
#include "ham/kernel.hpp"
#include "ham/outcome.hpp"

namespace ham {

// Stable JSON shapes for scripting; bump when a field changes meaning.
constexpr int kReportSchemaVersion = 1;

struct RunReport {
    std::string outcome;  // "hamiltonian" | "non-hamiltonian" | "refused"
    std::string strategy; // which engine answered
    std::string guard;    // why auto picked it / why a refusal fired
    int n = 0;
    int k_count = 0;
    int k_degree = 0;
    double wall_time_ms = 0;
    uint64_t seed = 0;
    double epsilon = 0;
    std::optional<HamCycle> cycle;
    std::optional<Certificate> certificate;
    std::string message; // refusal detail
};

std::string report_to_json(const RunReport& report, bool pretty = true);
std::string certificate_to_json(const Certificate& cert, bool pretty = true);
std::string log_to_json(const AugmentationLog& log);
std::string kernel_sidecar_json(const KernelResult& result, bool pretty = true);

// Reads back a {"type":"cut", ...} certificate for the verify command.
CutCertificate cut_certificate_from_json(const std::string& text, int n);

} // namespace ham
