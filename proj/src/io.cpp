#include "framedual/io.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

namespace framedual::io {

namespace {

std::vector<double> number_array(const json& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_array())
        throw Error("ParseError", "missing or non-array field '" + key + "'");
    std::vector<double> out;
    out.reserve(j[key].size());
    for (const auto& v : j[key]) {
        if (!v.is_number()) throw Error("ParseError", "non-numeric entry in '" + key + "'");
        out.push_back(v.get<double>());
    }
    return out;
}

ComplexVector complex_vector(const json& j, Index expected = -1) {
    const std::vector<double> re = number_array(j, "re");
    const std::vector<double> im = number_array(j, "im");
    if (re.size() != im.size()) throw Error("ParseError", "'re' and 'im' lengths differ");
    if (expected >= 0 && static_cast<Index>(re.size()) != expected)
        throw Error("ParseError", "vector length " + std::to_string(re.size()) +
                                      ", expected " + std::to_string(expected));
    ComplexVector v(re.size());
    for (size_t i = 0; i < re.size(); ++i) v(static_cast<Index>(i)) = cd(re[i], im[i]);
    return v;
}

json split_parts(const ComplexVector& v) {
    json re = json::array(), im = json::array();
    for (Index i = 0; i < v.size(); ++i) {
        re.push_back(v(i).real());
        im.push_back(v(i).imag());
    }
    return json{{"re", std::move(re)}, {"im", std::move(im)}};
}

}  // namespace

json window_to_json(const ComplexVector& w) {
    json j = split_parts(w);
    j["L"] = w.size();
    return j;
}

ComplexVector window_from_json(const json& j) {
    if (!j.contains("L") || !j["L"].is_number_integer())
        throw Error("ParseError", "window: missing integer field 'L'");
    const Index L = j["L"].get<Index>();
    if (L < 2) throw Error("ParseError", "window: L must be >= 2");
    return complex_vector(j, L);
}

json system_to_json(const VectorSystem& sys) {
    json vectors = json::array();
    for (const auto& v : sys.vectors) vectors.push_back(split_parts(v));
    return json{{"dim", sys.dim}, {"vectors", std::move(vectors)}};
}

VectorSystem system_from_json(const json& j) {
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw Error("ParseError", "vector system: missing integer field 'dim'");
    if (!j.contains("vectors") || !j["vectors"].is_array() || j["vectors"].empty())
        throw Error("ParseError", "vector system: missing non-empty array 'vectors'");
    const Index dim = j["dim"].get<Index>();
    std::vector<ComplexVector> vecs;
    vecs.reserve(j["vectors"].size());
    for (const auto& e : j["vectors"]) vecs.push_back(complex_vector(e, dim));
    return VectorSystem::make(dim, std::move(vecs));
}

json group_to_json(const FiniteGroup& group, const Multiplier& mu) {
    json mul = json::array(), mu_re = json::array(), mu_im = json::array();
    for (int g = 0; g < group.order; ++g) {
        mul.push_back(group.mul[g]);
        json re_row = json::array(), im_row = json::array();
        for (int h = 0; h < group.order; ++h) {
            re_row.push_back(mu.at(g, h).real());
            im_row.push_back(mu.at(g, h).imag());
        }
        mu_re.push_back(std::move(re_row));
        mu_im.push_back(std::move(im_row));
    }
    return json{{"order", group.order},
                {"mul", std::move(mul)},
                {"mu_re", std::move(mu_re)},
                {"mu_im", std::move(mu_im)}};
}

std::pair<FiniteGroup, Multiplier> group_from_json(const json& j) {
    if (!j.contains("order") || !j["order"].is_number_integer())
        throw Error("ParseError", "group: missing integer field 'order'");
    const int n = j["order"].get<int>();
    if (n < 1) throw Error("ParseError", "group: order must be >= 1");

    auto int_table = [&](const std::string& key) {
        if (!j.contains(key) || !j[key].is_array() || static_cast<int>(j[key].size()) != n)
            throw Error("ParseError", "group: field '" + key + "' must be an order x order array");
        std::vector<std::vector<int>> t;
        for (const auto& row : j[key]) {
            if (!row.is_array() || static_cast<int>(row.size()) != n)
                throw Error("ParseError", "group: ragged row in '" + key + "'");
            t.push_back(row.get<std::vector<int>>());
        }
        return t;
    };
    auto double_table = [&](const std::string& key) {
        if (!j.contains(key) || !j[key].is_array() || static_cast<int>(j[key].size()) != n)
            throw Error("ParseError", "group: field '" + key + "' must be an order x order array");
        std::vector<std::vector<double>> t;
        for (const auto& row : j[key]) {
            if (!row.is_array() || static_cast<int>(row.size()) != n)
                throw Error("ParseError", "group: ragged row in '" + key + "'");
            t.push_back(row.get<std::vector<double>>());
        }
        return t;
    };

    FiniteGroup group = FiniteGroup::from_table(int_table("mul"));
    const auto re = double_table("mu_re");
    const auto im = double_table("mu_im");
    ComplexMatrix mu(n, n);
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) mu(g, h) = cd(re[g][h], im[g][h]);
    Multiplier multiplier = validate_multiplier(group, mu);
    return {std::move(group), std::move(multiplier)};
}

json frame_report_to_json(const FrameReport& r) {
    return json{{"lower_bound", r.lower_bound},
                {"upper_bound", r.upper_bound},
                {"span_dim", r.span_dim},
                {"is_complete", r.is_complete},
                {"is_frame", r.is_frame},
                {"is_tight", r.is_tight},
                {"is_parseval", r.is_parseval},
                {"is_riesz_sequence", r.is_riesz_sequence},
                {"is_orthogonal", r.is_orthogonal},
                {"riesz_lower", r.riesz_lower},
                {"riesz_upper", r.riesz_upper}};
}

json verdict_to_json(const DualityVerdict& v) {
    return json{{"check", v.check},
                {"passed", v.passed},
                {"residuals", v.residuals},
                {"flags", v.flags},
                {"seed", v.seed},
                {"tolerance", v.tolerance}};
}

ZLattice parse_lattice_spec(const std::string& spec, int fallback_L) {
    std::string s;
    s.reserve(spec.size());
    for (char c : spec)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);

    int L = 0;
    std::string gens_part;
    if (s.rfind("L=", 0) == 0) {
        const auto semi = s.find(';');
        if (semi == std::string::npos)
            throw Error("ParseError", "lattice spec: expected ';' after L clause");
        try {
            size_t used = 0;
            L = std::stoi(s.substr(2, semi - 2), &used);
            if (used != semi - 2) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw Error("ParseError", "lattice spec: bad L value");
        }
        gens_part = s.substr(semi + 1);
    } else {
        gens_part = s;
    }

    if (fallback_L > 0) {
        if (L > 0 && L != fallback_L)
            throw Error("ParseError", "lattice spec: L clause conflicts with --L");
        L = fallback_L;
    }
    if (L < 2) throw Error("ParseError", "lattice spec: L not given (use 'L=n;' or --L)");

    if (gens_part.rfind("gens=", 0) != 0)
        throw Error("ParseError", "lattice spec: expected 'gens=(a,b),...'");
    gens_part = gens_part.substr(5);

    std::vector<std::pair<int, int>> gens;
    size_t pos = 0;
    while (pos < gens_part.size()) {
        if (gens_part[pos] != '(')
            throw Error("ParseError", "lattice spec: expected '(' in generator list");
        const auto close = gens_part.find(')', pos);
        if (close == std::string::npos)
            throw Error("ParseError", "lattice spec: unmatched '(' in generator list");
        const std::string body = gens_part.substr(pos + 1, close - pos - 1);
        const auto comma = body.find(',');
        if (comma == std::string::npos)
            throw Error("ParseError", "lattice spec: generator needs two components");
        try {
            gens.emplace_back(std::stoi(body.substr(0, comma)), std::stoi(body.substr(comma + 1)));
        } catch (const std::exception&) {
            throw Error("ParseError", "lattice spec: bad generator component");
        }
        pos = close + 1;
        if (pos < gens_part.size()) {
            if (gens_part[pos] != ',')
                throw Error("ParseError", "lattice spec: generators must be comma separated");
            ++pos;
        }
    }
    if (gens.empty()) throw Error("ParseError", "lattice spec: empty generator list");
    return lattice_from_generators(L, gens);
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("ParseError", "cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& err) {
        throw Error("ParseError", std::string("invalid JSON in ") + path + ": " + err.what());
    }
    return j;
}

void write_json(const json& j, const std::string& path) {
    if (path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error("ParseError", "cannot open output file: " + path);
    out << j.dump(2) << "\n";
}

}  // namespace framedual::io
