#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ham/graph.hpp"

namespace ham {

enum class InstanceModel { count_relaxed, degree_relaxed };

// Parameters for random instance generation. count-relaxed targets
// "at least n-k vertices of degree >= n/2"; degree-relaxed targets
// "minimum degree >= ceil(n/2) - k".
struct InstanceSpec {
    InstanceModel model = InstanceModel::count_relaxed;
    int n = 0;
    int k = 0;
    uint64_t seed = 0;
    bool planted = false; // force a known Hamiltonian cycle

    void validate() const;
};

struct GeneratedInstance {
    Graph graph;
    std::optional<HamCycle> planted_cycle;
};

// Deterministic in spec.seed.
GeneratedInstance generate(const InstanceSpec& spec);

// Number of vertices below the n/2 degree threshold (the measured count-k).
int measure_count_k(const Graph& g);
// max(0, ceil(n/2) - min degree) (the measured degree-k).
int measure_degree_k(const Graph& g);

InstanceModel model_from_name(const std::string& name);
std::string model_name(InstanceModel m);

} // namespace ham
