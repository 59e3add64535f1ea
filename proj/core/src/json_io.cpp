#include "qflab/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qflab/errors.hpp"

namespace qf {

using njson = nlohmann::json;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

void emit_matrix(std::ostringstream& os, const SymMatrix& m) {
    os << "[";
    for (int i = 0; i < m.n(); ++i) {
        if (i) os << ",";
        os << "[";
        for (int k = 0; k < m.n(); ++k) {
            if (k) os << ",";
            os << format_double(m(i, k));
        }
        os << "]";
    }
    os << "]";
}

void emit_vec(std::ostringstream& os, const Vec& v) {
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << format_double(v[i]);
    }
    os << "]";
}

SymMatrix parse_matrix(const njson& j, int n) {
    std::vector<double> flat;
    if (j.is_array() && !j.empty() && j[0].is_array()) {
        for (const auto& row : j)
            for (const auto& x : row) flat.push_back(x.get<double>());
    } else if (j.is_array()) {
        for (const auto& x : j) flat.push_back(x.get<double>());
    } else {
        throw precondition_error("family JSON: matrix must be an array");
    }
    if (static_cast<int>(flat.size()) != n * n) throw precondition_error("family JSON: matrix size mismatch");
    return SymMatrix::from_rows(n, flat, 1e-12);
}

njson parse_or_throw(const std::string& text) {
    njson j = njson::parse(text, nullptr, false);
    if (j.is_discarded()) throw precondition_error("malformed JSON");
    return j;
}

void emit_curve(std::ostringstream& os, const DegeneracyCurve& c) {
    os << "{\"j\":" << c.j << ",\"closed\":" << (c.closed ? "true" : "false")
       << ",\"endpoints_on_boundary\":" << (c.endpoints_on_boundary ? "true" : "false") << ",\"points\":[";
    for (std::size_t i = 0; i < c.points.size(); ++i) {
        if (i) os << ",";
        emit_vec(os, c.points[i]);
    }
    os << "]}";
}

DegeneracyCurve parse_curve(const njson& j) {
    DegeneracyCurve c;
    c.j = j.value("j", 0);
    c.closed = j.at("closed").get<bool>();
    c.endpoints_on_boundary = j.value("endpoints_on_boundary", !c.closed);
    for (const auto& p : j.at("points")) {
        Vec v;
        for (const auto& x : p) v.push_back(x.get<double>());
        c.points.push_back(std::move(v));
    }
    if (c.points.size() < 2) throw precondition_error("curve JSON: need at least 2 points");
    return c;
}

void emit_entry(std::ostringstream& os, const DifferentialEntry& e) {
    os << "{\"r\":" << e.r << ",\"source\":[" << e.si << "," << e.sj << "],\"target\":[" << e.ti << ","
       << e.tj << "],\"matrix\":[";
    for (int r = 0; r < e.matrix.rows(); ++r) {
        if (r) os << ",";
        os << "[";
        for (int c = 0; c < e.matrix.cols(); ++c) {
            if (c) os << ",";
            os << (e.matrix.get(r, c) ? 1 : 0);
        }
        os << "]";
    }
    os << "]}";
}

} // namespace

std::string write_family(const QuadraticFamily& F) {
    std::ostringstream os;
    os << "{\"n\":" << F.n() << ",\"domain\":";
    const auto& dom = F.domain();
    if (dom.kind() == ParamDomain::Kind::Ball) {
        os << "{\"kind\":\"ball\",\"center\":";
        emit_vec(os, dom.center());
        os << ",\"radius\":" << format_double(dom.radius()) << "}";
    } else {
        os << "{\"kind\":\"box\",\"lo\":";
        emit_vec(os, dom.lo());
        os << ",\"hi\":";
        emit_vec(os, dom.hi());
        os << "}";
    }
    os << ",\"base\":";
    emit_matrix(os, F.base());
    os << ",\"directions\":[";
    for (std::size_t i = 0; i < F.directions().size(); ++i) {
        if (i) os << ",";
        emit_matrix(os, F.directions()[i]);
    }
    os << "]}";
    return os.str();
}

QuadraticFamily load_family(const std::string& text) {
    try {
        njson j = parse_or_throw(text);
        int n = j.at("n").get<int>();
        if (n < 1) throw precondition_error("family JSON: n must be >= 1");
        const auto& jd = j.at("domain");
        std::string kind = jd.at("kind").get<std::string>();
        ParamDomain dom = [&]() {
            if (kind == "ball") {
                Vec c;
                for (const auto& x : jd.at("center")) c.push_back(x.get<double>());
                return ParamDomain::ball(c, jd.at("radius").get<double>());
            }
            if (kind == "box") {
                Vec lo, hi;
                for (const auto& x : jd.at("lo")) lo.push_back(x.get<double>());
                for (const auto& x : jd.at("hi")) hi.push_back(x.get<double>());
                return ParamDomain::box(lo, hi);
            }
            throw precondition_error("family JSON: domain kind must be box or ball");
        }();
        SymMatrix base = parse_matrix(j.at("base"), n);
        std::vector<SymMatrix> dirs;
        for (const auto& jm : j.at("directions")) dirs.push_back(parse_matrix(jm, n));
        return QuadraticFamily(dom, std::move(base), std::move(dirs));
    } catch (const njson::exception& e) {
        throw precondition_error(std::string("family JSON: ") + e.what());
    }
}

std::string write_curves(const std::vector<DegeneracyCurve>& curves, int j) {
    std::ostringstream os;
    os << "{\"j\":" << j << ",\"curves\":[";
    for (std::size_t i = 0; i < curves.size(); ++i) {
        if (i) os << ",";
        emit_curve(os, curves[i]);
    }
    os << "]}";
    return os.str();
}

std::vector<DegeneracyCurve> load_curves(const std::string& text) {
    try {
        njson j = parse_or_throw(text);
        std::vector<DegeneracyCurve> out;
        if (j.contains("curves")) {
            int jj = j.value("j", 0);
            for (const auto& c : j.at("curves")) {
                out.push_back(parse_curve(c));
                if (out.back().j == 0) out.back().j = jj;
            }
        } else {
            out.push_back(parse_curve(j));
        }
        return out;
    } catch (const njson::exception& e) {
        throw precondition_error(std::string("curve JSON: ") + e.what());
    }
}

std::string write_page(const E2Page& page, const std::vector<DifferentialEntry>& d2,
                       const std::vector<DifferentialEntry>& d3) {
    std::ostringstream os;
    os << "{\"n\":" << page.n << ",\"d\":" << page.d << ",\"grid_res\":" << page.grid_res
       << ",\"tol\":" << format_double(page.tol) << ",\"ranks\":{";
    bool first = true;
    for (int i = 0; i <= page.d; ++i)
        for (int j = 0; j <= page.n - 1; ++j) {
            int r = page.rank(i, j);
            if (r == 0) continue;
            if (!first) os << ",";
            first = false;
            os << "\"" << i << "," << j << "\":" << r;
        }
    os << "},\"d2\":[";
    for (std::size_t i = 0; i < d2.size(); ++i) {
        if (i) os << ",";
        emit_entry(os, d2[i]);
    }
    os << "],\"d3\":[";
    for (std::size_t i = 0; i < d3.size(); ++i) {
        if (i) os << ",";
        emit_entry(os, d3[i]);
    }
    os << "]}";
    return os.str();
}

std::string write_link_result(const LinkResult& r) {
    std::ostringstream os;
    os << "{\"lk_mod2\":" << r.lk_mod2 << ",\"directions_tested\":" << r.directions_tested << "}";
    return os.str();
}

std::string write_prop1_reports(const std::vector<Prop1Report>& reports) {
    std::ostringstream os;
    os << "[";
    for (std::size_t t = 0; t < reports.size(); ++t) {
        const auto& r = reports[t];
        if (t) os << ",";
        os << "{\"trial\":" << r.trial << ",\"seed\":" << r.seed << ",\"resamples\":" << r.resamples
           << ",\"radius\":" << format_double(r.radius) << ",\"S0\":";
        emit_matrix(os, r.S0);
        os << ",\"curves\":[";
        for (int j = 0; j < 3; ++j) {
            if (j) os << ",";
            os << "{\"j\":" << (j + 1) << ",\"count\":" << r.curve_counts[static_cast<std::size_t>(j)]
               << ",\"length\":" << format_double(r.curve_lengths[static_cast<std::size_t>(j)])
               << ",\"nonempty\":" << (r.nonempty[static_cast<std::size_t>(j)] ? "true" : "false") << "}";
        }
        os << "],\"lk21\":" << r.lk21 << ",\"lk23\":" << r.lk23 << "}";
    }
    os << "]";
    return os.str();
}

std::string write_collapse(const CollapseReport& rep) {
    std::ostringstream os;
    os << "{\"einf_total\":" << rep.total_rank << ",\"complete\":" << (rep.complete ? "true" : "false")
       << ",\"undetermined\":[";
    for (std::size_t i = 0; i < rep.undetermined.size(); ++i) {
        if (i) os << ",";
        os << "[" << rep.undetermined[i].first << "," << rep.undetermined[i].second << "]";
    }
    os << "]}";
    return os.str();
}

std::string write_lemma4(const Lemma4Report& rep) {
    std::ostringstream os;
    os << "{\"page\":" << write_page(rep.page, {rep.d2}, {}) << ",\"collapse\":" << write_collapse(rep.collapse)
       << "}";
    return os.str();
}

std::string write_hopf_pipeline(const HopfPipelineResult& res) {
    std::ostringstream os;
    os << "{\"zeta\":";
    emit_matrix(os, res.zeta);
    os << ",\"page\":" << write_page(res.page, {}, res.d3) << ",\"curves\":[";
    for (int j = 0; j < 3; ++j) {
        if (j) os << ",";
        os << write_curves(res.curves[static_cast<std::size_t>(j)], j + 1);
    }
    os << "],\"collapse\":" << write_collapse(res.collapse) << "}";
    return os.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw precondition_error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw precondition_error("cannot write file: " + path);
    out << text;
}

} // namespace qf
