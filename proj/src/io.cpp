#include "hjpoly/io.hpp"

#include "hjpoly/errors.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace hjpoly {

namespace {

Rat rat_from_json(const Json& js) {
    if (!js.is_string()) throw std::invalid_argument("expected a rational encoded as a string");
    return Rat::from_string(js.get<std::string>());
}

Json rat_to_json(const Rat& value) { return Json(value.str()); }

Json rvec_to_json(const RVec& v) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < v.size(); ++i) arr.push_back(rat_to_json(v[i]));
    return arr;
}

RVec rvec_from_json(const Json& js) {
    if (!js.is_array() || js.empty()) throw std::invalid_argument("expected a coordinate array");
    RVec v(js.size());
    for (std::size_t i = 0; i < js.size(); ++i) v[i] = rat_from_json(js[i]);
    return v;
}

Json hyperplane_to_json(const Hyperplane& hp) {
    return Json{{"c0", rat_to_json(hp.constant())}, {"c", rvec_to_json(hp.coeffs())}};
}

Hyperplane hyperplane_from_json(const Json& js) {
    return Hyperplane(rat_from_json(js.at("c0")), rvec_from_json(js.at("c")));
}

std::vector<std::uint32_t> index_vector_from_json(const Json& js) {
    if (!js.is_array()) throw std::invalid_argument("expected an index array");
    std::vector<std::uint32_t> out;
    out.reserve(js.size());
    for (const auto& e : js) {
        if (!e.is_number_unsigned() && !e.is_number_integer())
            throw std::invalid_argument("vertex indices must be integers");
        const auto v = e.get<long long>();
        if (v < 0) throw std::invalid_argument("vertex indices must be nonnegative");
        out.push_back(static_cast<std::uint32_t>(v));
    }
    return out;
}

}  // namespace

HypergraphFile hypergraph_file(const HJHypergraph& hj) {
    HypergraphFile file;
    file.graph = hj.graph;
    file.d = hj.d;
    file.n = hj.n;
    file.patterns = hj.patterns;
    return file;
}

Json to_json(const HypergraphFile& file) {
    Json js;
    js["vertex_count"] = file.graph.vertex_count;
    Json edges = Json::array();
    for (const auto& e : file.graph.edges) edges.push_back(e);
    js["edges"] = std::move(edges);
    if (file.d) js["d"] = *file.d;
    if (file.n) js["n"] = *file.n;
    if (file.patterns) {
        if (!file.d || !file.n)
            throw std::invalid_argument("patterns require the (d, n) annotation");
        Json pats = Json::array();
        for (const auto& p : file.patterns.value()) pats.push_back(pattern_string(p, *file.d));
        js["patterns"] = std::move(pats);
    }
    return js;
}

HypergraphFile hypergraph_file_from_json(const Json& js) {
    HypergraphFile file;
    file.graph.vertex_count = js.at("vertex_count").get<std::uint32_t>();
    for (const auto& edge : js.at("edges")) file.graph.edges.push_back(index_vector_from_json(edge));
    validate_hypergraph(file.graph);
    if (js.contains("d")) file.d = js.at("d").get<int>();
    if (js.contains("n")) file.n = js.at("n").get<int>();
    if (js.contains("patterns")) {
        if (!file.d || !file.n)
            throw std::invalid_argument("patterns require the (d, n) annotation");
        std::vector<LinePattern> pats;
        for (const auto& p : js.at("patterns"))
            pats.push_back(pattern_from_string(p.get<std::string>(), *file.d, *file.n));
        if (pats.size() != file.graph.edges.size())
            throw std::invalid_argument("pattern count differs from edge count");
        file.patterns = std::move(pats);
    }
    return file;
}

Json tau_solution_json(const TauResult& result) {
    Json js;
    js["mode"] = "tau";
    js["exact"] = result.exact;
    js["bounds"] = Json::array({result.lower, result.upper});
    if (result.exact)
        js["tau"] = result.upper;
    else
        js["tau"] = nullptr;
    js["witness"] = result.witness.vertices;
    return js;
}

TauResult tau_solution_from_json(const Json& js) {
    if (js.at("mode").get<std::string>() != "tau")
        throw std::invalid_argument("not a transversal solution file");
    TauResult result;
    result.exact = js.at("exact").get<bool>();
    const auto& bounds = js.at("bounds");
    if (!bounds.is_array() || bounds.size() != 2)
        throw std::invalid_argument("bounds must be a [lower, upper] pair");
    result.lower = bounds[0].get<std::size_t>();
    result.upper = bounds[1].get<std::size_t>();
    result.witness.vertices = index_vector_from_json(js.at("witness"));
    if (result.lower > result.upper) throw std::invalid_argument("inverted bounds");
    if (result.witness.vertices.size() != result.upper)
        throw std::invalid_argument("witness size differs from the upper bound");
    if (result.exact && result.lower != result.upper)
        throw std::invalid_argument("exact solutions need equal bounds");
    return result;
}

Json chi_solution_json(const ChiResult& result) {
    Json js;
    js["mode"] = "chi";
    js["exact"] = true;
    js["chi"] = result.chi;
    js["coloring"] = result.coloring.colors;
    return js;
}

ChiResult chi_solution_from_json(const Json& js) {
    if (js.at("mode").get<std::string>() != "chi")
        throw std::invalid_argument("not a coloring solution file");
    ChiResult result;
    result.chi = js.at("chi").get<int>();
    for (const auto& c : js.at("coloring")) {
        const int color = c.get<int>();
        if (color < 1 || color > result.chi)
            throw std::invalid_argument("coloring entry outside 1..chi");
        result.coloring.colors.push_back(color);
    }
    return result;
}

Json to_json(const RealizationFile& file) {
    const auto& real = file.realization;
    Json js;
    js["d"] = real.d;
    js["n"] = real.n;
    js["seed"] = real.seed;
    js["precision_bits"] = real.precision_bits;
    js["epsilon"] = rat_to_json(real.epsilon);
    Json points;
    for (std::size_t i = 0; i < real.coordinates.size(); ++i) {
        const Word w = word_from_index(i, real.d, real.n);
        points[word_string(w, real.d)] = rvec_to_json(real.coordinates[i]);
    }
    js["points"] = std::move(points);
    Json lines = Json::array();
    for (const auto& line : real.lines) {
        Json lj;
        lj["pattern"] = pattern_string(line.pattern, real.d);
        lj["slope"] = rat_to_json(line.slope);
        lj["intercept"] = rat_to_json(line.intercept);
        lj["vertices"] = line.members;
        lines.push_back(std::move(lj));
    }
    js["lines"] = std::move(lines);
    if (file.certificates) {
        const auto& bundle = *file.certificates;
        Json facets = Json::array();
        for (const auto& f : bundle.facets) {
            Json fj;
            fj["pattern"] = pattern_string(f.pattern, real.d);
            fj["on_set"] = f.on_set;
            fj["hyperplane"] = hyperplane_to_json(f.hyperplane);
            fj["orientation"] = f.orientation;
            fj["min_slack"] = rat_to_json(f.min_slack);
            facets.push_back(std::move(fj));
        }
        Json vertices = Json::array();
        for (const auto& v : bundle.vertices) {
            Json vj;
            vj["vertex"] = v.vertex;
            vj["functional"] = hyperplane_to_json(v.functional);
            vertices.push_back(std::move(vj));
        }
        js["certificates"] = Json{{"facets", std::move(facets)}, {"vertices", std::move(vertices)}};
    }
    return js;
}

RealizationFile realization_file_from_json(const Json& js) {
    RealizationFile file;
    Realization& real = file.realization;
    real.d = js.at("d").get<int>();
    real.n = js.at("n").get<int>();
    real.seed = js.at("seed").get<std::uint64_t>();
    real.precision_bits = js.at("precision_bits").get<unsigned>();
    real.epsilon = rat_from_json(js.at("epsilon"));
    if (real.d < 1 || real.n < 1) throw std::invalid_argument("bad realization dimensions");

    const auto& points = js.at("points");
    if (!points.is_object()) throw std::invalid_argument("points must be an object");
    mpz_class count = pow_mpz(static_cast<unsigned long>(real.d), static_cast<unsigned long>(real.n));
    if (!count.fits_ulong_p() || points.size() != count.get_ui())
        throw std::invalid_argument("point count differs from d^n");
    real.coordinates.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Word w = word_from_index(i, real.d, real.n);
        const std::string key = word_string(w, real.d);
        if (!points.contains(key)) throw std::invalid_argument("missing point for word " + key);
        real.coordinates.push_back(rvec_from_json(points.at(key)));
    }

    for (const auto& lj : js.at("lines")) {
        LineGeom line;
        line.pattern = pattern_from_string(lj.at("pattern").get<std::string>(), real.d, real.n);
        line.slope = rat_from_json(lj.at("slope"));
        line.intercept = rat_from_json(lj.at("intercept"));
        line.members = index_vector_from_json(lj.at("vertices"));
        real.lines.push_back(std::move(line));
    }
    validate_realization(real);

    if (js.contains("certificates")) {
        const auto& cj = js.at("certificates");
        CertBundle bundle;
        for (const auto& fj : cj.at("facets")) {
            bundle.facets.push_back(FacetCertificate{
                pattern_from_string(fj.at("pattern").get<std::string>(), real.d, real.n),
                index_vector_from_json(fj.at("on_set")),
                hyperplane_from_json(fj.at("hyperplane")), fj.at("orientation").get<int>(),
                rat_from_json(fj.at("min_slack"))});
        }
        for (const auto& vj : cj.at("vertices")) {
            bundle.vertices.push_back(VertexCertificate{
                vj.at("vertex").get<std::uint32_t>(),
                hyperplane_from_json(vj.at("functional"))});
        }
        file.certificates = std::move(bundle);
    }
    return file;
}

std::string decimal_string(const Rat& value, unsigned digits) {
    const mpz_class scale = pow_mpz(10, digits);
    mpz_class an = abs(value.num()) * scale;
    // round half away from zero: floor((2|n| 10^k + den) / (2 den))
    mpz_class rounded = (2 * an + value.den()) / (2 * value.den());
    const bool negative = value.sign() < 0 && rounded != 0;
    mpz_class whole = rounded / scale;
    mpz_class frac = rounded % scale;
    std::string out = negative ? "-" : "";
    out += whole.get_str();
    if (digits > 0) {
        std::string f = frac.get_str();
        out += "." + std::string(digits - f.size(), '0') + f;
    }
    return out;
}

std::string off_export(const Realization& real, unsigned digits) {
    std::ostringstream os;
    os << "# Lossy decimal export: " << digits
       << " fractional digits per coordinate, rounded half away from zero.\n";
    os << "# Exact source: realization d=" << real.d << " n=" << real.n << " seed=" << real.seed
       << " precision_bits=" << real.precision_bits << " epsilon=" << real.epsilon.str()
       << "; use the JSON export for exact values.\n";
    os << "nOFF\n" << real.d << "\n";
    os << real.coordinates.size() << " 0 0\n";
    for (const auto& p : real.coordinates) {
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (j) os << ' ';
            os << decimal_string(p[j], digits);
        }
        os << '\n';
    }
    return os.str();
}

std::string dump_json(const Json& js) { return js.dump(2) + "\n"; }

}  // namespace hjpoly
