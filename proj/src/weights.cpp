#include "fusionring/errors.hpp"
#include "fusionring/root_system.hpp"

#include <algorithm>
#include <set>

namespace fusionring {

std::map<Weight, std::int64_t> dominant_weight_multiplicities(const RootSystem& rs, const Weight& highest) {
    if (!highest.is_dominant()) throw InvalidInput("highest weight must be dominant, got " + highest.str());
    const auto& roots = rs.positive_roots();
    std::vector<int> root_height;
    for (const auto& c : rs.positive_roots_simple()) {
        int h = 0;
        for (int x : c) h += x;
        root_height.push_back(h);
    }

    // Dominant weights below λ are connected to λ by subtracting positive roots
    // through dominant weights.
    std::map<Weight, int> depth{{highest, 0}};
    std::vector<Weight> frontier{highest};
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const auto& mu : frontier) {
            for (std::size_t a = 0; a < roots.size(); ++a) {
                Weight nu = mu - roots[a];
                if (!nu.is_dominant()) continue;
                if (depth.emplace(nu, depth[mu] + root_height[a]).second) next.push_back(std::move(nu));
            }
        }
        frontier = std::move(next);
    }

    std::vector<std::pair<int, Weight>> order;
    for (const auto& [w, d] : depth) order.emplace_back(d, w);
    std::sort(order.begin(), order.end());

    std::map<Weight, std::int64_t> mult;
    const Weight rho = rs.rho();
    const std::int64_t top = rs.scaled_form(highest + rho, highest + rho);
    auto lookup = [&](const Weight& w) -> std::int64_t {
        auto it = mult.find(rs.fold_dominant(w).dominant);
        return it == mult.end() ? 0 : it->second;
    };
    for (const auto& [d, mu] : order) {
        if (d == 0) {
            mult[mu] = 1;
            continue;
        }
        std::int64_t numerator = 0;
        for (const auto& alpha : roots) {
            Weight shifted = mu;
            for (;;) {
                shifted += alpha;
                const std::int64_t m = lookup(shifted);
                if (m == 0) break;
                numerator += 2 * rs.scaled_form(shifted, alpha) * m;
            }
        }
        const std::int64_t denominator = top - rs.scaled_form(mu + rho, mu + rho);
        if (denominator <= 0 || numerator % denominator != 0)
            throw InternalError("Freudenthal recursion produced a non-integral multiplicity at " + mu.str());
        const std::int64_t m = numerator / denominator;
        if (m > 0) mult[mu] = m;
    }
    return mult;
}

std::map<Weight, std::int64_t> freudenthal_weight_multiplicities(const RootSystem& rs, const Weight& highest) {
    std::map<Weight, std::int64_t> all;
    for (const auto& [dom, m] : dominant_weight_multiplicities(rs, highest)) {
        std::set<Weight> orbit{dom};
        std::vector<Weight> frontier{dom};
        while (!frontier.empty()) {
            std::vector<Weight> next;
            for (const auto& w : frontier)
                for (int i = 0; i < rs.rank(); ++i) {
                    if (w[i] == 0) continue;
                    Weight r = rs.reflect(w, i);
                    if (orbit.insert(r).second) next.push_back(std::move(r));
                }
            frontier = std::move(next);
        }
        for (const auto& w : orbit) all[w] = m;
    }
    return all;
}

std::map<Weight, std::int64_t> tensor_decompose(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
    if (!lambda.is_dominant() || !mu.is_dominant())
        throw InvalidInput("tensor_decompose requires dominant weights");
    const bool swap = rs.weyl_dimension(mu) > rs.weyl_dimension(lambda);
    const Weight& big = swap ? mu : lambda;
    const Weight& small = swap ? lambda : mu;
    const Weight rho = rs.rho();

    std::map<Weight, std::int64_t> out;
    for (const auto& [tau, m] : freudenthal_weight_multiplicities(rs, small)) {
        const DominantFold f = rs.fold_dominant(big + tau + rho);
        if (f.on_wall) continue;
        out[f.dominant - rho] += f.parity * m;
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second < 0) throw InternalError("negative Racah-Speiser multiplicity at " + it->first.str());
        it = it->second == 0 ? out.erase(it) : std::next(it);
    }
    return out;
}

}  // namespace fusionring
