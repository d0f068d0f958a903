#include "fusionring/serialize.hpp"

#include "fusionring/errors.hpp"

#include <cstdio>
#include <set>
#include <sstream>

namespace fusionring {

namespace {

template <class V>
Json coords_json(const std::vector<V>& vs) {
    Json a = Json::array();
    for (const auto& v : vs) a.push_back(v.coords);
    return a;
}

template <class V>
std::vector<V> coords_from_json(const Json& j) {
    std::vector<V> out;
    for (const auto& e : j) out.emplace_back(e.get<std::vector<int>>());
    return out;
}

std::string exact_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

double parse_double(const std::string& s) {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw InvalidInput("bad number '" + s + "'");
    return v;
}

// Splits one CSV record honouring double quotes.
std::vector<std::string> csv_fields(const std::string& line) {
    std::vector<std::string> out(1);
    bool quoted = false;
    for (char c : line) {
        if (c == '"') quoted = !quoted;
        else if (c == ',' && !quoted) out.emplace_back();
        else out.back() += c;
    }
    if (quoted) throw InvalidInput("unterminated quote in CSV line: " + line);
    return out;
}

std::string header_value(const std::string& header, const std::string& key) {
    std::istringstream in(header);
    std::string tok;
    while (in >> tok)
        if (tok.rfind(key + "=", 0) == 0) return tok.substr(key.size() + 1);
    throw InvalidInput("CSV header lacks '" + key + "'");
}

}  // namespace

Json weights_json(const std::vector<Weight>& w) { return coords_json(w); }
std::vector<Weight> weights_from_json(const Json& j) { return coords_from_json<Weight>(j); }

WeightSet weight_set(const LevelData& ld) {
    WeightSet w;
    w.type = ld.type();
    w.level = ld.level();
    w.dual_coxeter = ld.affine().dual_coxeter;
    w.norm_const = ld.norm_const();
    w.weights = ld.weights();
    w.dual_weights = ld.dual_weights();
    for (const auto& t : ld.sigma()) {
        w.sigma_labels.push_back(t.label);
        w.sigma_phases.push_back(t.phases());
    }
    return w;
}

Json to_json(const WeightSet& w) {
    Json j;
    j["type"] = w.type.str();
    j["level"] = w.level;
    j["dual_coxeter"] = w.dual_coxeter;
    j["norm_const"] = w.norm_const;
    j["weights"] = coords_json(w.weights);
    if (!w.dual_weights.empty()) j["dual_weights"] = coords_json(w.dual_weights);
    Json sigma = Json::array();
    for (std::size_t i = 0; i < w.sigma_phases.size(); ++i) {
        Json phases = Json::array();
        for (const auto& p : w.sigma_phases[i]) phases.push_back(p.str());
        sigma.push_back({{"label", w.sigma_labels[i]}, {"phases", phases}});
    }
    j["sigma"] = sigma;
    return j;
}

WeightSet weight_set_from_json(const Json& j) {
    WeightSet w;
    w.type = parse_affine_type(j.at("type").get<std::string>());
    w.level = j.at("level").get<int>();
    w.dual_coxeter = j.at("dual_coxeter").get<int>();
    w.norm_const = j.at("norm_const").get<std::int64_t>();
    w.weights = coords_from_json<Weight>(j.at("weights"));
    if (j.contains("dual_weights")) w.dual_weights = coords_from_json<Coweight>(j.at("dual_weights"));
    for (const auto& s : j.at("sigma")) {
        w.sigma_labels.push_back(s.at("label").get<std::vector<int>>());
        std::vector<RationalPhase> phases;
        for (const auto& p : s.at("phases")) phases.push_back(RationalPhase::parse(p.get<std::string>()));
        w.sigma_phases.push_back(std::move(phases));
    }
    return w;
}

std::string to_csv(const WeightSet& w) {
    std::ostringstream os;
    os << "index,weight,sigma_label,phases\n";
    for (std::size_t i = 0; i < w.weights.size(); ++i) {
        std::string phases;
        for (const auto& p : w.sigma_phases.at(i)) phases += (phases.empty() ? "" : " ") + p.str();
        os << i << ",\"" << w.weights[i].str() << "\",\"" << Weight(w.sigma_labels.at(i)).str() << "\",\"" << phases
           << "\"\n";
    }
    return os.str();
}

Json to_json(const FusionTable& t) {
    Json j;
    j["type"] = t.type.str();
    j["level"] = t.level;
    j["weights"] = coords_json(t.weights);
    j["dual"] = t.dual;
    Json entries = Json::array();
    const std::size_t P = t.size();
    for (std::size_t l = 0; l < P; ++l)
        for (std::size_t m = 0; m < P; ++m)
            for (std::size_t n = 0; n < P; ++n)
                if (const auto c = t(l, m, n); c != 0) entries.push_back({l, m, n, c});
    j["entries"] = entries;
    j["max_residual"] = t.max_residual;
    return j;
}

FusionTable fusion_table_from_json(const Json& j) {
    FusionTable t;
    t.type = parse_affine_type(j.at("type").get<std::string>());
    t.level = j.at("level").get<int>();
    t.weights = coords_from_json<Weight>(j.at("weights"));
    t.dual = j.at("dual").get<std::vector<std::size_t>>();
    const std::size_t P = t.size();
    if (t.dual.size() != P) throw InvalidInput("dual list does not match the weight list");
    t.coeffs.assign(P * P * P, 0);
    for (const auto& e : j.at("entries")) {
        const auto l = e.at(0).get<std::size_t>(), m = e.at(1).get<std::size_t>(), n = e.at(2).get<std::size_t>();
        if (l >= P || m >= P || n >= P) throw InvalidInput("fusion entry index out of range");
        t.coeffs[(l * P + m) * P + n] = e.at(3).get<std::int64_t>();
    }
    t.max_residual = j.at("max_residual").get<double>();
    return t;
}

std::string to_csv(const FusionTable& t) {
    std::ostringstream os;
    os << "# type=" << t.type.str() << " level=" << t.level << " max_residual=" << exact_double(t.max_residual)
       << "\n";
    os << "lambda,mu,nu,c\n";
    const std::size_t P = t.size();
    for (std::size_t l = 0; l < P; ++l)
        for (std::size_t m = 0; m < P; ++m)
            for (std::size_t n = 0; n < P; ++n)
                if (const auto c = t(l, m, n); c != 0)
                    os << '"' << t.weights[l].str() << "\",\"" << t.weights[m].str() << "\",\"" << t.weights[n].str()
                       << "\"," << c << "\n";
    return os.str();
}

FusionTable fusion_table_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string header, columns, line;
    if (!std::getline(in, header) || header.rfind("# ", 0) != 0) throw InvalidInput("CSV table lacks its header");
    std::getline(in, columns);
    FusionTable t;
    t.type = parse_affine_type(header_value(header, "type"));
    t.level = std::stoi(header_value(header, "level"));
    t.max_residual = parse_double(header_value(header, "max_residual"));

    struct Row {
        Weight l, m, n;
        std::int64_t c;
    };
    std::vector<Row> rows;
    std::set<Weight> seen;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = csv_fields(line);
        if (f.size() != 4) throw InvalidInput("CSV row needs 4 fields: " + line);
        const int rank = static_cast<int>(csv_fields(f[0]).size());
        Row r{parse_weight(f[0], rank), parse_weight(f[1], rank), parse_weight(f[2], rank), std::stoll(f[3])};
        seen.insert(r.l);
        seen.insert(r.m);
        seen.insert(r.n);
        rows.push_back(std::move(r));
    }
    // Every weight occurs through the unit row c_{0λ}^λ = 1, and λ* through c_{λλ*}^0.
    t.weights.assign(seen.begin(), seen.end());
    const std::size_t P = t.size();
    t.coeffs.assign(P * P * P, 0);
    auto idx = [&](const Weight& w) {
        return static_cast<std::size_t>(std::lower_bound(t.weights.begin(), t.weights.end(), w) - t.weights.begin());
    };
    for (const auto& r : rows) t.coeffs[(idx(r.l) * P + idx(r.m)) * P + idx(r.n)] = r.c;
    t.dual.assign(P, 0);
    for (std::size_t l = 0; l < P; ++l) {
        std::size_t found = P;
        for (std::size_t m = 0; m < P; ++m)
            if (t(l, m, 0) != 0) found = m;
        if (found == P) throw InvalidInput("CSV table has no dual for " + t.weights[l].str());
        t.dual[l] = found;
    }
    return t;
}

Json to_json(const SMatrix& s) {
    Json j;
    j["source"] = s.source.str();
    j["target"] = s.target.str();
    j["level"] = s.level;
    j["rows"] = coords_json(s.rows);
    j["cols"] = coords_json(s.cols);
    Json entries = Json::array();
    for (Eigen::Index i = 0; i < s.entries.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index k = 0; k < s.entries.cols(); ++k) row.push_back({s.entries(i, k).real(), s.entries(i, k).imag()});
        entries.push_back(row);
    }
    j["entries"] = entries;
    j["tolerance"] = s.tolerance;
    return j;
}

SMatrix s_matrix_from_json(const Json& j) {
    SMatrix s;
    s.source = parse_affine_type(j.at("source").get<std::string>());
    s.target = parse_affine_type(j.at("target").get<std::string>());
    s.level = j.at("level").get<int>();
    s.rows = coords_from_json<Weight>(j.at("rows"));
    s.cols = coords_from_json<Weight>(j.at("cols"));
    const auto& e = j.at("entries");
    s.entries.resize(static_cast<Eigen::Index>(s.rows.size()), static_cast<Eigen::Index>(s.cols.size()));
    if (e.size() != s.rows.size()) throw InvalidInput("S-matrix row count mismatch");
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i].size() != s.cols.size()) throw InvalidInput("S-matrix column count mismatch");
        for (std::size_t k = 0; k < e[i].size(); ++k)
            s.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = {e[i][k].at(0).get<double>(),
                                                                                      e[i][k].at(1).get<double>()};
    }
    s.tolerance = j.at("tolerance").get<double>();
    return s;
}

std::string to_csv(const SMatrix& s) {
    std::ostringstream os;
    os << "row,col,re,im\n";
    for (Eigen::Index i = 0; i < s.entries.rows(); ++i)
        for (Eigen::Index k = 0; k < s.entries.cols(); ++k)
            os << '"' << s.rows[i].str() << "\",\"" << s.cols[k].str() << "\"," << exact_double(s.entries(i, k).real())
               << ',' << exact_double(s.entries(i, k).imag()) << "\n";
    return os.str();
}

}  // namespace fusionring
