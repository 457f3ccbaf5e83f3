#include "sspvip/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace sspvip {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Json vec_to_json(const Vec& v) {
    Json arr = Json::array();
    for (Index i = 0; i < v.size(); ++i) {
        if (v[i] == kInf) arr.push_back("inf");
        else if (v[i] == -kInf) arr.push_back("-inf");
        else arr.push_back(v[i]);
    }
    return arr;
}

Vec vec_from_json(const Json& j) {
    require(j.is_array(), "instance: expected an array of numbers");
    Vec v(static_cast<Index>(j.size()));
    Index i = 0;
    for (const auto& e : j) {
        if (e.is_string()) {
            std::string s = e.get<std::string>();
            if (s == "inf") v[i] = kInf;
            else if (s == "-inf") v[i] = -kInf;
            else throw StructuralError("instance: bad bound string '" + s + "'");
        } else if (e.is_number()) {
            v[i] = e.get<double>();
        } else {
            throw StructuralError("instance: array element is neither number nor inf string");
        }
        ++i;
    }
    return v;
}

Json set_to_json(const ConvexSet& set) {
    Json j;
    j["kind"] = set.describe();
    switch (set.kind()) {
        case SetKind::Box:
            j["lower"] = vec_to_json(set.lower());
            j["upper"] = vec_to_json(set.upper());
            break;
        case SetKind::CoordinateSubspace: {
            Json mask = Json::array();
            for (bool b : set.mask()) mask.push_back(b);
            j["mask"] = mask;
            break;
        }
        case SetKind::EuclideanBall:
            j["center"] = vec_to_json(set.center());
            j["radius"] = set.radius();
            break;
        default:
            break;
    }
    return j;
}

ConvexSet set_from_json(const Json& j, const LpSpace& host) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "whole") return ConvexSet::whole_space();
    if (kind == "orthant") return ConvexSet::nonnegative_orthant();
    if (kind == "box") return ConvexSet::box(vec_from_json(j.at("lower")), vec_from_json(j.at("upper")));
    if (kind == "subspace") {
        std::vector<bool> mask;
        for (const auto& e : j.at("mask")) mask.push_back(e.get<bool>());
        return ConvexSet::coordinate_subspace(std::move(mask));
    }
    if (kind == "ball")
        return ConvexSet::euclidean_ball(host, vec_from_json(j.at("center")),
                                         j.at("radius").get<double>());
    throw StructuralError("instance: unknown set kind '" + kind + "'");
}

Json map_to_json(const MonotoneMap& map) {
    Json j;
    j["kind"] = map.describe();
    j["shift"] = vec_to_json(map.shift());
    switch (map.kind()) {
        case MapKind::AffineScalar:
            j["gain"] = map.gain();
            break;
        case MapKind::DiagonalAffine:
            j["diag"] = vec_to_json(map.diag());
            break;
        case MapKind::ComponentwiseMonotone:
            j["alpha"] = map.alpha();
            j["beta"] = map.beta();
            break;
    }
    return j;
}

MonotoneMap map_from_json(const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    Vec shift = vec_from_json(j.at("shift"));
    if (kind == "affine_scalar")
        return MonotoneMap::affine_scalar(j.at("gain").get<double>(), std::move(shift));
    if (kind == "diagonal_affine")
        return MonotoneMap::diagonal_affine(vec_from_json(j.at("diag")), std::move(shift));
    if (kind == "componentwise")
        return MonotoneMap::componentwise(j.at("alpha").get<double>(), j.at("beta").get<double>(),
                                          std::move(shift));
    throw StructuralError("instance: unknown map kind '" + kind + "'");
}

Json mat_to_json(const Mat& m) {
    Json rows = Json::array();
    for (Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat mat_from_json(const Json& j, Index rows, Index cols) {
    require(j.is_array() && static_cast<Index>(j.size()) == rows, "instance: bad matrix rows");
    Mat m(rows, cols);
    for (Index r = 0; r < rows; ++r) {
        const auto& row = j.at(static_cast<size_t>(r));
        require(row.is_array() && static_cast<Index>(row.size()) == cols,
                "instance: bad matrix row length");
        for (Index c = 0; c < cols; ++c) m(r, c) = row.at(static_cast<size_t>(c)).get<double>();
    }
    return m;
}

std::string fmt17(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

Json instance_to_json(const SspvipInstance& inst) {
    Json j;
    j["format"] = "sspvip-instance";
    j["version"] = 1;
    j["seed"] = inst.seed;
    j["space1"] = {{"dim", inst.space1.dim()}, {"p", inst.space1.p()}};
    j["space2"] = {{"dim", inst.space2.dim()}, {"p", inst.space2.p()}};
    j["set1"] = set_to_json(inst.set1);
    j["set2"] = set_to_json(inst.set2);
    j["maps"] = {{"F", map_to_json(inst.F)},
                 {"G", map_to_json(inst.G)},
                 {"f", map_to_json(inst.f)},
                 {"g", map_to_json(inst.g)}};
    j["A"] = mat_to_json(inst.A.matrix());
    if (inst.known_solution) {
        j["known_solution"] = {{"x1", vec_to_json(inst.known_solution->first)},
                               {"y1", vec_to_json(inst.known_solution->second)}};
    } else {
        j["known_solution"] = nullptr;
    }
    return j;
}

SspvipInstance instance_from_json(const Json& j) {
    require(j.is_object(), "instance: not a JSON object");
    require(j.value("format", "") == "sspvip-instance", "instance: bad or missing format tag");
    LpSpace space1(j.at("space1").at("dim").get<Index>(), j.at("space1").at("p").get<double>());
    LpSpace space2(j.at("space2").at("dim").get<Index>(), j.at("space2").at("p").get<double>());
    Mat a = mat_from_json(j.at("A"), space2.dim(), space1.dim());
    const auto& maps = j.at("maps");
    std::optional<std::pair<Vec, Vec>> known;
    if (j.contains("known_solution") && !j.at("known_solution").is_null()) {
        known = std::make_pair(vec_from_json(j.at("known_solution").at("x1")),
                               vec_from_json(j.at("known_solution").at("y1")));
    }
    SspvipInstance inst{space1,
                        space2,
                        set_from_json(j.at("set1"), space1),
                        set_from_json(j.at("set2"), space2),
                        map_from_json(maps.at("F")),
                        map_from_json(maps.at("G")),
                        map_from_json(maps.at("f")),
                        map_from_json(maps.at("g")),
                        BoundedLinearOp(std::move(a), space1, space2),
                        std::move(known),
                        j.value("seed", std::uint64_t{0})};
    require(inst.F.dim() == space1.dim() && inst.G.dim() == space1.dim(),
            "instance: F/G dimension mismatch");
    require(inst.f.dim() == space2.dim() && inst.g.dim() == space2.dim(),
            "instance: f/g dimension mismatch");
    if (inst.known_solution) {
        require(inst.known_solution->first.size() == space1.dim() &&
                    inst.known_solution->second.size() == space1.dim(),
                "instance: known solution dimension mismatch");
    }
    return inst;
}

Json certificate_to_json(const ContractionCertificate& cert) {
    Json j;
    j["lambda"] = cert.lambda;
    j["gamma"] = cert.gamma;
    j["rho"] = cert.rho;
    j["c1"] = cert.c1;
    j["c2"] = cert.c2;
    j["op_norm_upper"] = cert.op_norm_upper;
    j["theta1"] = cert.theta1;
    j["theta2"] = cert.theta2;
    j["theta3"] = cert.theta3;
    j["theta4"] = cert.theta4;
    j["m"] = cert.m;
    j["p1"] = cert.p1;
    j["p2"] = cert.p2;
    j["k1"] = cert.k1;
    j["k2"] = cert.k2;
    j["theta"] = cert.theta;
    j["lambda_window"] = {cert.window_lower, cert.window_upper};
    j["feasible"] = cert.feasible;
    j["diagnostics"] = cert.diagnostics;
    return j;
}

Json verify_report_to_json(const VerifyReport& report) {
    Json suites = Json::array();
    for (const auto& s : report.suites) {
        suites.push_back({{"name", s.name},
                          {"samples", s.samples},
                          {"max_violation", s.max_violation},
                          {"tolerance", s.tolerance},
                          {"pass", s.pass}});
    }
    return Json{{"format", "sspvip-verify-report"}, {"suites", suites},
                {"all_pass", report.all_pass()}};
}

Json summary_to_json(const SolveResult& result, const SolverConfig& cfg) {
    const IterateRecord& last = result.final_record();
    Json j;
    j["format"] = "sspvip-solve-summary";
    j["config"] = {{"lambda", cfg.lambda},       {"gamma", cfg.gamma},
                   {"rho", cfg.rho},             {"alpha", cfg.alpha.describe()},
                   {"max_iters", cfg.max_iters}, {"tol_residual", cfg.tol_residual},
                   {"tol_step", cfg.tol_step}};
    j["certificate"] = certificate_to_json(result.cert);
    j["status"] = solve_status_name(result.status);
    j["iterations"] = result.iterations;
    j["final_residuals"] = {last.residuals[0], last.residuals[1], last.residuals[2],
                            last.residuals[3]};
    if (std::isfinite(last.err_star)) j["final_err_star"] = last.err_star;
    j["warnings"] = result.warnings;
    return j;
}

std::string trace_to_csv(const SolveResult& result) {
    std::ostringstream out;
    out << "n,r1,r2,r3,r4,err_star,step,theta_bound_rhs\n";
    for (const auto& rec : result.trace) {
        out << rec.n;
        for (double r : rec.residuals) out << ',' << fmt17(r);
        out << ',' << (std::isfinite(rec.err_star) ? fmt17(rec.err_star) : "");
        out << ',' << (std::isfinite(rec.step) ? fmt17(rec.step) : "");
        out << ',' << (std::isfinite(rec.theta_bound_rhs) ? fmt17(rec.theta_bound_rhs) : "");
        out << '\n';
    }
    return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << content;
    if (!f) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

SspvipInstance load_instance(const std::string& path) {
    Json j;
    try {
        j = Json::parse(read_text_file(path));
    } catch (const Json::parse_error& e) {
        throw StructuralError("malformed instance file " + path + ": " + e.what());
    }
    return instance_from_json(j);
}

void save_instance(const SspvipInstance& inst, const std::string& path) {
    write_text_file(path, instance_to_json(inst).dump(2) + "\n");
}

}  // namespace sspvip
