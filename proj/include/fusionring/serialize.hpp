#pragma once

#include "fusionring/fusion.hpp"
#include "fusionring/level.hpp"
#include "fusionring/modular.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace fusionring {

using Json = nlohmann::json;

/// Serializable view of LevelData: P_k, P̌_k, Σ_k phases.
struct WeightSet {
    AffineType type;
    int level = 0;
    int dual_coxeter = 0;
    std::int64_t norm_const = 0;
    std::vector<Weight> weights;
    std::vector<Coweight> dual_weights;
    std::vector<std::vector<int>> sigma_labels;
    std::vector<std::vector<RationalPhase>> sigma_phases;

    bool operator==(const WeightSet&) const = default;
};

WeightSet weight_set(const LevelData& ld);

Json to_json(const WeightSet& w);
WeightSet weight_set_from_json(const Json& j);
std::string to_csv(const WeightSet& w);

/// Sparse: nonzero coefficients as [λ, μ, ν, c] index quadruples.
Json to_json(const FusionTable& t);
FusionTable fusion_table_from_json(const Json& j);
/// "# type=.. level=.. max_residual=.." then λ,μ,ν,c rows with quoted weights.
std::string to_csv(const FusionTable& t);
FusionTable fusion_table_from_csv(const std::string& text);

/// Entries as [re, im] pairs with the tolerance the matrix was checked against.
Json to_json(const SMatrix& s);
SMatrix s_matrix_from_json(const Json& j);
std::string to_csv(const SMatrix& s);

Json weights_json(const std::vector<Weight>& w);
std::vector<Weight> weights_from_json(const Json& j);

}  // namespace fusionring
