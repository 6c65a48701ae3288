#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "riesz/configuration.hpp"
#include "riesz/epstein.hpp"
#include "riesz/equilibrium.hpp"
#include "riesz/gibbs.hpp"
#include "riesz/hamiltonian.hpp"
#include "riesz/kernel.hpp"
#include "riesz/minimizer.hpp"
#include "riesz/periodic.hpp"

namespace riesz {

// JSON views of the library's result types. Infinite values are written
// as the string "+inf" (or "-inf"); keys come out sorted.
using Json = nlohmann::json;

Json finite_or_tag(double value);

Json to_json(const KernelSpec& spec);
Json to_json(const EquilibriumModel& model);
Json to_json(const Configuration& config);
Json to_json(const SplitReport& rep);
Json to_json(const SeparationReport& rep);
Json to_json(const MinimizeResult& res);
Json to_json(const FitResult& fit);
Json to_json(const LatticeEnergyReport& rep);
Json to_json(const SamplerStats& stats);

/// Writes `text` to `path` through a temporary file in the same directory
/// followed by a rename.
void write_file_atomic(const std::filesystem::path& path, const std::string& text);

}  // namespace riesz
