#include "fusionring/affine_data.hpp"

#include "fusionring/errors.hpp"

#include <cctype>
#include <regex>

namespace fusionring {

namespace {

std::vector<int> filled(int count, int value) { return std::vector<int>(count, value); }

int affine_rank(const AffineType& t) {
    if (t.r == 1) return t.N;
    if (t.family == Family::A) return t.N % 2 == 0 ? t.N / 2 : (t.N + 1) / 2;
    if (t.family == Family::D && t.r == 2) return t.N - 1;
    if (t.family == Family::E) return 4;
    return 2;  // D_4^(3)
}

}  // namespace

std::string AffineType::str() const {
    return std::string(1, static_cast<char>(family)) + std::to_string(N) + "~" + std::to_string(r);
}

std::string FiniteType::str() const {
    return std::string(1, static_cast<char>(family)) + std::to_string(rank) + (reversed ? "'" : "");
}

bool is_valid(const AffineType& t) {
    switch (t.r) {
    case 1:
        switch (t.family) {
        case Family::A: return t.N >= 1;
        case Family::B: return t.N >= 3;
        case Family::C: return t.N >= 2;
        case Family::D: return t.N >= 4;
        case Family::E: return t.N >= 6 && t.N <= 8;
        case Family::F: return t.N == 4;
        case Family::G: return t.N == 2;
        }
        return false;
    case 2:
        if (t.family == Family::A) return t.N >= 4;  // A_{2n}^(2), n >= 2; A_{2n-1}^(2), n >= 3
        if (t.family == Family::D) return t.N >= 4;  // D_{n+1}^(2), n >= 3
        if (t.family == Family::E) return t.N == 6;
        return false;
    case 3:
        return t.family == Family::D && t.N == 4;
    default:
        return false;
    }
}

AffineType make_affine_type(Family family, int N, int r) {
    AffineType t{family, N, r};
    if (!is_valid(t))
        throw InvalidInput("affine type " + t.str() + " is not in the affine classification");
    return t;
}

AffineType parse_affine_type(std::string_view text) {
    static const std::regex pattern(R"(^\s*([A-Ga-g])_?\{?(\d+)\}?\s*(?:~|\^)\s*\{?\(?([123])\)?\}?\s*$)");
    std::string s(text);
    std::smatch m;
    if (!std::regex_match(s, m, pattern))
        throw InvalidInput("malformed affine type '" + s + "' (expected e.g. A4~2 or A_4^(2))");
    const auto letter = static_cast<char>(std::toupper(static_cast<unsigned char>(m[1].str()[0])));
    const int N = std::stoi(m[2].str());
    const int r = std::stoi(m[3].str());
    return make_affine_type(static_cast<Family>(letter), N, r);
}

TypeClass type_class(const AffineType& t) {
    if (t.r == 1) return TypeClass::Untwisted;
    if (t.family == Family::A && t.N % 2 == 0) return TypeClass::EvenTwisted;
    return TypeClass::Twisted;
}

AffineType adjacent_type(const AffineType& t) {
    if (t.r == 2 && t.family == Family::A && t.N % 2 == 1) {
        const int n = (t.N + 1) / 2;
        return AffineType{Family::D, n + 1, 2};
    }
    if (t.r == 2 && t.family == Family::D) {
        const int n = t.N - 1;
        return AffineType{Family::A, 2 * n - 1, 2};
    }
    return t;
}

AffineData affine_data(const AffineType& t) {
    if (!is_valid(t)) throw InvalidInput("affine type " + t.str() + " is not in the affine classification");
    AffineData d;
    d.type = t;
    const int n = affine_rank(t);
    d.rank = n;
    d.adjacent = adjacent_type(t);

    auto& a = d.marks;
    auto& ac = d.comarks;
    if (t.r == 1) {
        d.finite_type = FiniteType{t.family, n, false};
        d.orbit_source_type = d.finite_type;
        switch (t.family) {
        case Family::A:
            a = filled(n + 1, 1);
            ac = a;
            d.dual_coxeter = n + 1;
            break;
        case Family::B:
            a = filled(n + 1, 2);
            a[0] = a[1] = 1;
            ac = a;
            ac[n] = 1;
            d.dual_coxeter = 2 * n - 1;
            break;
        case Family::C:
            a = filled(n + 1, 2);
            a[0] = a[n] = 1;
            ac = filled(n + 1, 1);
            d.dual_coxeter = n + 1;
            break;
        case Family::D:
            a = filled(n + 1, 2);
            a[0] = a[1] = a[n - 1] = a[n] = 1;
            ac = a;
            d.dual_coxeter = 2 * n - 2;
            break;
        case Family::E:
            if (n == 6) a = {1, 1, 2, 3, 2, 1, 2};
            if (n == 7) a = {1, 2, 3, 4, 3, 2, 1, 2};
            if (n == 8) a = {1, 2, 4, 6, 5, 4, 3, 2, 3};
            ac = a;
            d.dual_coxeter = n == 6 ? 12 : n == 7 ? 18 : 30;
            break;
        case Family::F:
            a = {1, 2, 3, 4, 2};
            ac = {1, 2, 3, 2, 1};
            d.dual_coxeter = 9;
            break;
        case Family::G:
            a = {1, 2, 3};
            ac = {1, 2, 1};
            d.dual_coxeter = 4;
            break;
        }
        return d;
    }

    if (type_class(t) == TypeClass::EvenTwisted) {  // A_{2n}^(2)
        d.finite_type = FiniteType{Family::C, n, false};
        d.orbit_source_type = FiniteType{Family::A, 2 * n, false};
        a = filled(n + 1, 2);
        a[n] = 1;
        ac = filled(n + 1, 2);
        ac[0] = 1;
        d.dual_coxeter = 2 * n + 1;
    } else if (t.family == Family::A) {  // A_{2n-1}^(2)
        d.finite_type = FiniteType{Family::C, n, false};
        d.orbit_source_type = FiniteType{Family::D, n + 1, false};
        a = filled(n + 1, 2);
        a[0] = a[1] = a[n] = 1;
        ac = filled(n + 1, 2);
        ac[0] = ac[1] = 1;
        d.dual_coxeter = 2 * n;
    } else if (t.family == Family::D && t.r == 2) {  // D_{n+1}^(2)
        d.finite_type = FiniteType{Family::B, n, false};
        d.orbit_source_type = FiniteType{Family::A, 2 * n - 1, false};
        a = filled(n + 1, 1);
        ac = filled(n + 1, 2);
        ac[0] = ac[n] = 1;
        d.dual_coxeter = 2 * n;
    } else if (t.family == Family::E) {  // E_6^(2)
        d.finite_type = FiniteType{Family::F, 4, true};
        d.orbit_source_type = FiniteType{Family::E, 6, false};
        a = {1, 2, 3, 2, 1};
        ac = {1, 2, 3, 4, 2};
        d.dual_coxeter = 12;
    } else {  // D_4^(3)
        d.finite_type = FiniteType{Family::G, 2, true};
        d.orbit_source_type = FiniteType{Family::D, 4, false};
        a = {1, 2, 1};
        ac = {1, 2, 3};
        d.dual_coxeter = 6;
    }
    return d;
}

std::vector<std::vector<int>> finite_cartan_matrix(const FiniteType& f) {
    const int n = f.rank;
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    auto link = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
    for (int i = 0; i < n; ++i) c[i][i] = 2;

    switch (f.family) {
    case Family::A:
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
        break;
    case Family::B:  // α_n short
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
        c[n - 1][n - 2] = -2;
        break;
    case Family::C:  // α_n long
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
        c[n - 2][n - 1] = -2;
        break;
    case Family::D:
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
        link(n - 3, n - 1);
        break;
    case Family::E:  // chain 1..n-1, node n on node 3
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
        link(2, n - 1);
        break;
    case Family::F:  // 1,2 long; 3,4 short
        link(0, 1);
        link(1, 2);
        link(2, 3);
        c[2][1] = -2;
        break;
    case Family::G:  // 1 long, 2 short
        c[0][1] = -1;
        c[1][0] = -3;
        break;
    }
    if (f.reversed) {
        auto r = c;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) r[i][j] = c[n - 1 - i][n - 1 - j];
        c = std::move(r);
    }
    return c;
}

int positive_root_count(const FiniteType& f) {
    const int n = f.rank;
    switch (f.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
    }
    return 0;
}

long long weyl_group_order(const FiniteType& f) {
    const int n = f.rank;
    long long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    switch (f.family) {
    case Family::A: return fact * (n + 1);
    case Family::B:
    case Family::C: return fact << n;
    case Family::D: return fact << (n - 1);
    case Family::E: return n == 6 ? 51840LL : n == 7 ? 2903040LL : 696729600LL;
    case Family::F: return 1152;
    case Family::G: return 12;
    }
    return 0;
}

}  // namespace fusionring
