#include "fusionring/weyl_group.hpp"

#include "fusionring/errors.hpp"

namespace fusionring {

namespace {

void check_cap(const RootSystem& rs, long long cap) {
    if (rs.weyl_order() > cap)
        throw CapExceeded("Weyl group too large: |W| = " + std::to_string(rs.weyl_order()) +
                          " exceeds the cap " + std::to_string(cap));
}

// Depth-first walk of W̊. The child s_i·w of w is visited iff i is the smallest
// left descent of s_i·w, i.e. (s_i w ρ)_j > 0 for all j < i. Visitor receives
// the vectors carried along (ρ-image first) plus parity and length.
template <class Visit>
void walk(const RootSystem& rs, std::vector<std::vector<int>> carried, Visit&& visit) {
    const int n = rs.rank();
    const auto& A = rs.cartan();
    const std::size_t m = carried.size();
    struct Frame {
        std::vector<std::vector<int>> v;
        int next_gen;
        int length;
    };
    std::vector<Frame> stack;
    stack.push_back({std::move(carried), 0, 0});
    visit(stack.back().v, 0);
    while (!stack.empty()) {
        Frame& top = stack.back();
        if (top.next_gen == n) {
            stack.pop_back();
            continue;
        }
        const int i = top.next_gen++;
        const auto& r = top.v[0];
        if (r[i] <= 0) continue;  // s_i would shorten w
        bool minimal = true;
        for (int j = 0; j < i && minimal; ++j) minimal = r[j] - r[i] * A[j][i] > 0;
        if (!minimal) continue;
        Frame child{top.v, 0, top.length + 1};
        for (std::size_t k = 0; k < m; ++k) {
            auto& x = child.v[k];
            const int c = x[i];
            if (c)
                for (int j = 0; j < n; ++j) x[j] -= c * A[j][i];
        }
        stack.push_back(std::move(child));
        visit(stack.back().v, stack.back().length);
    }
}

}  // namespace

WeylOrbit weyl_orbit(const RootSystem& rs, const Weight& x, long long cap) {
    check_cap(rs, cap);
    WeylOrbit orbit;
    orbit.rank = rs.rank();
    orbit.images.reserve(static_cast<std::size_t>(rs.weyl_order()) * rs.rank());
    orbit.parity.reserve(static_cast<std::size_t>(rs.weyl_order()));
    walk(rs, {rs.rho().coords, x.coords}, [&](const std::vector<std::vector<int>>& v, int length) {
        orbit.images.insert(orbit.images.end(), v[1].begin(), v[1].end());
        orbit.parity.push_back(length % 2 ? -1 : 1);
    });
    if (static_cast<long long>(orbit.size()) != rs.weyl_order())
        throw InternalError("Weyl group enumeration produced " + std::to_string(orbit.size()) +
                            " elements, expected " + std::to_string(rs.weyl_order()));
    return orbit;
}

std::vector<WeylElement> weyl_group_elements(const RootSystem& rs, long long cap) {
    check_cap(rs, cap);
    const int n = rs.rank();
    std::vector<std::vector<int>> carried{rs.rho().coords};
    for (int i = 0; i < n; ++i) carried.push_back(Weight::zero(n).coords), carried.back()[i] = 1;
    std::vector<WeylElement> out;
    walk(rs, std::move(carried), [&](const std::vector<std::vector<int>>& v, int length) {
        WeylElement e;
        e.rho_image = Weight(v[0]);
        e.parity = length % 2 ? -1 : 1;
        e.length = length;
        e.matrix.assign(n, std::vector<int>(n));
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) e.matrix[i][j] = v[1 + j][i];
        out.push_back(std::move(e));
    });
    if (static_cast<long long>(out.size()) != rs.weyl_order())
        throw InternalError("Weyl group enumeration size mismatch");
    return out;
}

}  // namespace fusionring
