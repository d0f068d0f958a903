#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace fusionring {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// X_N^(r): family X, subscript N, twist order r.
struct AffineType {
    Family family = Family::A;
    int N = 1;
    int r = 1;

    /// Canonical serialization, e.g. "A4~2".
    std::string str() const;
    auto operator<=>(const AffineType&) const = default;
};

/// Checks (family, N, r) against the affine classification.
bool is_valid(const AffineType& t);

/// Validating constructor; throws InvalidInput.
AffineType make_affine_type(Family family, int N, int r);

/// Accepts "A4~2", "A_4^(2)", "A_{4}^{(2)}", "C2^1", lowercase letters.
AffineType parse_affine_type(std::string_view text);

/// Three classes that decide the shape of M, θ̌ and Σ_k.
enum class TypeClass {
    Untwisted,    // X_N^(1)
    EvenTwisted,  // A_{2n}^(2)
    Twisted,      // every other r > 1
};

TypeClass type_class(const AffineType& t);

/// True for X_N^(1) and A_{2n}^(2): M = κ(Q̌), Σ_k built from P_k.
inline bool uses_weight_points(const AffineType& t) { return type_class(t) != TypeClass::Twisted; }

/// Finite Cartan type with a node numbering variant. `reversed` flips the
/// standard chain order (used for F_4 inside E_6^(2) and G_2 inside D_4^(3)).
struct FiniteType {
    Family family = Family::A;
    int rank = 1;
    bool reversed = false;

    std::string str() const;
    auto operator<=>(const FiniteType&) const = default;
};

struct AffineData {
    AffineType type;
    int rank = 0;                 // n; the affine matrix has order n+1
    std::vector<int> marks;       // a_0 .. a_n
    std::vector<int> comarks;     // ǎ_0 .. ǎ_n
    int dual_coxeter = 0;         // ȟ
    FiniteType finite_type;       // g̊ with node numbering matching marks[1..n]
    FiniteType orbit_source_type; // ġ
    AffineType adjacent;          // A'
};

/// Static tables for a validated type.
AffineData affine_data(const AffineType& t);

AffineType adjacent_type(const AffineType& t);

/// Finite Cartan matrix Å with Å[i][j] = <α_j, α̌_i> in this project's numbering.
std::vector<std::vector<int>> finite_cartan_matrix(const FiniteType& f);

/// |Φ⁺| from the classification.
int positive_root_count(const FiniteType& f);

/// |W̊| from the classification (may exceed int range for E_8, hence int64).
long long weyl_group_order(const FiniteType& f);

}  // namespace fusionring
