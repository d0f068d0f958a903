#include "fusionring/check.hpp"

#include "fusionring/modular.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>

namespace fusionring {

namespace {

std::string num(double x) {
    std::ostringstream os;
    os.precision(3);
    os << x;
    return os.str();
}

class Suite {
public:
    explicit Suite(SuiteReport& r) : r_(r) {}

    // Runs one check; any exception counts as a failure with its message.
    void run(const std::string& name, bool warning, const std::function<bool(std::string&)>& body) {
        CheckItem item{name, false, warning, {}};
        try {
            item.passed = body(item.detail);
        } catch (const std::exception& e) {
            item.passed = false;
            item.detail = e.what();
        }
        r_.items.push_back(std::move(item));
    }

private:
    SuiteReport& r_;
};

}  // namespace

bool SuiteReport::passed() const {
    for (const auto& i : items)
        if (!i.passed && !i.warning) return false;
    return true;
}

const CheckItem* SuiteReport::find(const std::string& name) const {
    for (const auto& i : items)
        if (i.name == name) return &i;
    return nullptr;
}

double orthonormality_residual(const FusionRing& ring) {
    const auto& j = ring.numerators();
    const Eigen::MatrixXcd g = j * j.adjoint() / static_cast<double>(ring.level().norm_const());
    return (g - Eigen::MatrixXcd::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
}

FundamentalSetCheck fundamental_set_check(const LevelData& ld) {
    FundamentalSetCheck out;
    const auto torus = enumerate_T_k(ld);
    out.torus_size = static_cast<std::int64_t>(torus.size());
    std::set<std::vector<RationalPhase>> regular;
    for (const auto& t : torus)
        if (ld.is_regular(t)) regular.insert(t.phases());
    out.regular = static_cast<std::int64_t>(regular.size());
    out.expected = ld.roots().weyl_order() * static_cast<std::int64_t>(ld.size());

    std::set<std::vector<RationalPhase>> images;
    bool duplicate = false;
    for (const auto& w : weyl_group_elements(ld.roots(), ld.limits().weyl_cap))
        for (const auto& t : ld.sigma())
            if (!images.insert(act(w.matrix, t).phases()).second) duplicate = true;
    out.exact_cover = !duplicate && images == regular;
    return out;
}

SuiteReport run_invariant_suite(const AffineType& type, int k, const SuiteOptions& opt) {
    SuiteReport rep;
    rep.type = type;
    rep.level = k;
    Suite suite(rep);
    const bool twisted = type.r > 1;

    const LevelData ld = LevelData::build(type, k, opt.limits);
    const auto& rs = ld.roots();
    const std::size_t P = ld.size();

    suite.run("dual_coxeter_lemma", false, [&](std::string& d) {
        const int rhs = ld.theta_check()(rs.rho()) + 1;
        d = "h = " + std::to_string(ld.affine().dual_coxeter) + ", <rho,theta> + 1 = " + std::to_string(rhs);
        return rhs == ld.affine().dual_coxeter;
    });
    suite.run("sigma_cardinality", false, [&](std::string& d) {
        d = "|Sigma_k| = " + std::to_string(ld.sigma().size()) + ", |P_k| = " + std::to_string(P);
        return ld.sigma().size() == P;
    });
    suite.run("sigma_injective_regular", false, [&](std::string& d) {
        std::set<std::vector<RationalPhase>> seen;
        for (const auto& t : ld.sigma()) {
            if (!ld.is_regular(t)) {
                d = "non-regular point";
                return false;
            }
            seen.insert(t.phases());
        }
        d = std::to_string(seen.size()) + " distinct points";
        return seen.size() == ld.sigma().size();
    });
    suite.run("theta_check_dual_fixed", false, [&](std::string&) {
        for (std::size_t i = 0; i < P; ++i)
            if (ld.theta_check()(ld.weights()[ld.dual_index(i)]) != ld.theta_check()(ld.weights()[i])) return false;
        return true;
    });
    suite.run("norm_const", false, [&](std::string& d) {
        IntMatrix b;
        for (const auto& v : ld.lattice_basis()) b.push_back(v.coords);
        std::int64_t expect = std::abs(determinant(b));
        for (int i = 0; i < rs.rank(); ++i) expect *= ld.shifted_level();
        d = "|T_k| = " + std::to_string(ld.norm_const());
        return expect == ld.norm_const();
    });

    if (ld.norm_const() <= opt.fundamental_set_cap) {
        suite.run("fundamental_set", false, [&](std::string& d) {
            const auto f = fundamental_set_check(ld);
            d = "regular " + std::to_string(f.regular) + " of " + std::to_string(f.torus_size) + ", |W||P_k| = " +
                std::to_string(f.expected);
            return f.torus_size == ld.norm_const() && f.regular == f.expected && f.exact_cover;
        });
    }

    const FusionRing ring(ld, opt.tol, opt.backend);

    suite.run("delta_positive_two_paths", false, [&](std::string& d) {
        double worst = 0, smallest = INFINITY;
        for (std::size_t t = 0; t < ld.sigma().size(); ++t) {
            const double a = ring.delta()[t], b = delta_by_product(ld, ld.sigma()[t]);
            smallest = std::min(smallest, a);
            worst = std::max(worst, std::abs(a - b) / b);
        }
        d = "min Delta = " + num(smallest) + ", relative gap " + num(worst);
        return smallest > 0 && worst < opt.tol.path_agreement;
    });
    suite.run("conjugation_symmetry", false, [&](std::string& d) {
        double worst = 0;
        const auto& c = ring.characters();
        for (std::size_t i = 0; i < P; ++i)
            for (Eigen::Index t = 0; t < c.cols(); ++t)
                worst = std::max(worst, std::abs(c(ld.dual_index(i), t) - std::conj(c(i, t))) /
                                            std::max(1.0, std::abs(c(i, t))));
        d = "max deviation " + num(worst);
        return worst < 1e-12;
    });
    suite.run("chi_two_paths", false, [&](std::string& d) {
        double worst = 0;
        const auto& c = ring.characters();
        for (std::size_t i = 0; i < P; ++i) {
            const auto mult = freudenthal_weight_multiplicities(rs, ld.weights()[i]);
            for (std::size_t t = 0; t < ld.sigma().size(); ++t) {
                Complex z = 0;
                const auto& pt = ld.sigma()[t];
                for (const auto& [mu, m] : mult)
                    z += static_cast<double>(m) * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(pt.phase_index(mu)) /
                                                                   static_cast<double>(pt.denominator));
                worst = std::max(worst, std::abs(z - c(i, t)) / std::max(1.0, std::abs(z)));
            }
        }
        d = "max relative gap " + num(worst);
        return worst < opt.tol.path_agreement;
    });
    suite.run("orthonormality", false, [&](std::string& d) {
        const double r = orthonormality_residual(ring);
        d = "max |G - I| = " + num(r);
        return r < opt.tol.orthonormality;
    });

    FusionTable table;
    bool have_table = false;
    suite.run("integrality", false, [&](std::string& d) {
        table = fusion_table(ring);
        have_table = true;
        d = "max residual " + num(table.max_residual);
        return table.max_residual < opt.tol.integrality;
    });
    if (!have_table) return rep;

    suite.run("ring_axioms", false, [&](std::string& d) {
        const auto f = ring_axiom_failures(table);
        if (!f.empty()) d = f.front() + " (" + std::to_string(f.size()) + " failures)";
        return f.empty();
    });
    suite.run("non_negativity", twisted, [&](std::string& d) {
        const auto neg = negative_entries(table);
        if (!neg.empty()) d = std::to_string(neg.size()) + " negative coefficients";
        return neg.empty();
    });
    suite.run("kac_walton", false, [&](std::string& d) {
        std::size_t pairs = 0;
        for (std::size_t l = 0; l < P; ++l)
            for (std::size_t m = l; m < P; ++m) {
                if (!opt.exhaustive && l > 2) continue;
                const auto proj = kac_walton_product(ring, l, m);
                const auto exact = kac_walton_product_exact(ring, l, m);
                for (std::size_t n = 0; n < P; ++n)
                    if (proj[n] != table(l, m, n) || exact[n] != table(l, m, n)) {
                        d = "mismatch at (" + ld.weights()[l].str() + " | " + ld.weights()[m].str() + " | " +
                            ld.weights()[n].str() + "): table " + std::to_string(table(l, m, n)) + ", projection " +
                            std::to_string(proj[n]) + ", reflections " + std::to_string(exact[n]);
                        return false;
                    }
                ++pairs;
            }
        d = std::to_string(pairs) + (opt.exhaustive ? " pairs (exhaustive)" : " pairs (sample)");
        return true;
    });
    suite.run("stabilization", false, [&](std::string& d) {
        std::size_t applied = 0;
        for (std::size_t l = 0; l < P; ++l)
            for (std::size_t m = 0; m < P; ++m) {
                const auto classical = tensor_decompose(rs, ld.weights()[l], ld.weights()[m]);
                for (std::size_t n = 0; n < P; ++n) {
                    const Weight s = ld.weights()[l] + ld.weights()[m] + ld.weights()[n];
                    if (ld.theta_check()(s) > 2 * k) continue;
                    ++applied;
                    const auto it = classical.find(ld.weights()[n]);
                    const std::int64_t c = it == classical.end() ? 0 : it->second;
                    if (c != table(l, m, n)) {
                        d = "classical " + std::to_string(c) + " vs fusion " + std::to_string(table(l, m, n));
                        return false;
                    }
                }
            }
        d = std::to_string(applied) + " triples within the bound";
        return true;
    });
    suite.run("verlinde_genus0", false, [&](std::string& d) {
        double worst = 0;
        for (std::size_t l = 0; l < P; ++l)
            for (std::size_t m = 0; m < P; ++m) {
                const auto two = verlinde_trace(ring, 0, {ld.weights()[l], ld.weights()[m]});
                worst = std::max(worst, two.residual);
                if (two.value != (m == ld.dual_index(l) ? 1 : 0) || !two.integral) return false;
                for (std::size_t n = 0; n < P; ++n) {
                    const auto three = verlinde_trace(ring, 0, {ld.weights()[l], ld.weights()[m], ld.weights()[n]});
                    worst = std::max(worst, three.residual);
                    if (three.value != table.symmetric(l, m, n) || !three.integral) return false;
                }
            }
        d = "max residual " + num(worst);
        return true;
    });
    suite.run("verlinde_genus1", false, [&](std::string& d) {
        const auto v = verlinde_trace(ring, 1, {});
        d = "value " + std::to_string(v.value) + ", residual " + num(v.residual);
        return v.integral && v.value == static_cast<std::int64_t>(P);
    });
    suite.run("verlinde_genus2", twisted, [&](std::string& d) {
        const auto v = verlinde_trace(ring, 2, {});
        d = "value " + std::to_string(v.value) + ", residual " + num(v.residual);
        return v.integral;
    });

    SMatrix s;
    bool have_s = false;
    suite.run("s_unitarity", false, [&](std::string& d) {
        s = s_matrix(type, k, opt.limits);
        have_s = true;
        const double r = unitarity_residual(s);
        d = "max |S S^* - I| = " + num(r);
        return r < opt.tol.unitarity;
    });
    suite.run("s_transpose", false, [&](std::string& d) {
        const auto t = check_transpose(type, k, opt.tol.unitarity, opt.limits);
        d = "max deviation " + num(t.max_deviation);
        return t.ok;
    });
    if (have_s && shares_weight_points(type)) {
        suite.run("verlinde_diagonalization", false, [&](std::string& d) {
            const double r = verlinde_diagonalization_residual(s, table);
            d = "max residual " + num(r);
            return r < opt.tol.integrality;
        });
    }
    if (type_class(type) == TypeClass::Twisted) {
        suite.run("epsilon_duality", false, [&](std::string& d) {
            const auto e = epsilon_map(type, adjacent_type(type));
            for (int x : e.sigma) d += std::to_string(x);
            d = "sigma = " + d;
            return epsilon_is_valid(type, adjacent_type(type), e.sigma);
        });
    }
    return rep;
}

Json to_json(const SuiteReport& r) {
    Json items = Json::array();
    for (const auto& i : r.items)
        items.push_back({{"name", i.name}, {"passed", i.passed}, {"warning", i.warning}, {"detail", i.detail}});
    return {{"type", r.type.str()}, {"level", r.level}, {"passed", r.passed()}, {"checks", items}};
}

}  // namespace fusionring
