#pragma once

#include "fusionring/fusion.hpp"
#include "fusionring/serialize.hpp"

#include <string>
#include <vector>

namespace fusionring {

struct CheckItem {
    std::string name;
    bool passed = false;
    bool warning = false;  // a failed warning-level item does not fail the suite
    std::string detail;
};

struct SuiteOptions {
    Tolerances tol;
    Limits limits;
    bool exhaustive = true;  // Kac–Walton on every pair instead of a sample
    Backend backend = Backend::Parallel;
    std::int64_t fundamental_set_cap = 100'000;  // |T_k| bound for full enumeration
};

struct SuiteReport {
    AffineType type;
    int level = 0;
    std::vector<CheckItem> items;

    bool passed() const;
    const CheckItem* find(const std::string& name) const;
};

/// Every invariant of the library for one (type, k).
SuiteReport run_invariant_suite(const AffineType& type, int k, const SuiteOptions& opt = {});

/// max |(χ_λ, χ_μ) − δ_λμ|
double orthonormality_residual(const FusionRing& ring);

struct FundamentalSetCheck {
    std::int64_t torus_size = 0;
    std::int64_t regular = 0;
    std::int64_t expected = 0;  // |W̊|·|P_k|
    bool exact_cover = false;   // each regular point is w(t) for exactly one (w, t)
};

/// Full enumeration of T_k against W̊ × Σ_k.
FundamentalSetCheck fundamental_set_check(const LevelData& ld);

Json to_json(const SuiteReport& r);

}  // namespace fusionring
