#include "kconn/qcp_model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "kconn/comm_graph.hpp"
#include "kconn/edge_augment.hpp"
#include "kconn/errors.hpp"
#include "kconn/max_flow.hpp"

namespace kconn {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kCheckTol = 1e-6;

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt_bound(double v) {
    if (v == kInf) return "inf";
    if (v == -kInf) return "-inf";
    return fmt17(v);
}

double parse_bound(const std::string& tok) {
    if (tok == "inf") return kInf;
    if (tok == "-inf") return -kInf;
    return std::stod(tok);
}

}  // namespace

const char* family_tag(ConstraintFamily family) {
    switch (family) {
        case ConstraintFamily::MaxMovement: return "move";
        case ConstraintFamily::EdgeIndicator: return "edge_ind";
        case ConstraintFamily::EdgeUse: return "edge_use";
        case ConstraintFamily::FlowConservation: return "flow";
        case ConstraintFamily::VertexDisjoint: return "disjoint";
    }
    return "?";
}

static ConstraintFamily family_from_tag(const std::string& tag) {
    if (tag == "move") return ConstraintFamily::MaxMovement;
    if (tag == "edge_ind") return ConstraintFamily::EdgeIndicator;
    if (tag == "edge_use") return ConstraintFamily::EdgeUse;
    if (tag == "flow") return ConstraintFamily::FlowConservation;
    if (tag == "disjoint") return ConstraintFamily::VertexDisjoint;
    throw Error("qcp parse: unknown constraint family '" + tag + "'");
}

int QcpModel::e_var(int i, int j) const {
    if (i == j) return -1;
    return 1 + n * dim + pair_index(i, j);
}

int QcpModel::z_var(int s, int d, int i, int j) const {
    if (s == d || i == j) return -1;
    return 1 + n * dim + num_e_vars() + pair_index(s, d) * n * (n - 1) + pair_index(i, j);
}

QcpModel build_qcp(const Instance& instance, int k) {
    instance.validate();
    if (k < 1) throw std::invalid_argument("build_qcp: k must be >= 1");
    const int n = instance.n();
    if (n <= k)
        throw Infeasible("build_qcp: k-connectivity needs at least k+1 robots (n=" +
                         std::to_string(n) + ", k=" + std::to_string(k) + ")");

    QcpModel m;
    m.n = n;
    m.dim = instance.dim;
    m.k = k;
    m.h = instance.h;
    m.original_positions = instance.positions;

    // Big-M bounds |dist^2 - h^2| for any solution whose movements stay
    // within the workspace scale.
    double max_pair = 0.0;
    Vec3 lo = instance.positions[0], hi = instance.positions[0];
    for (const Vec3& p : instance.positions) {
        lo.x = std::min(lo.x, p.x); lo.y = std::min(lo.y, p.y); lo.z = std::min(lo.z, p.z);
        hi.x = std::max(hi.x, p.x); hi.y = std::max(hi.y, p.y); hi.z = std::max(hi.z, p.z);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            max_pair = std::max(max_pair, distance(instance.positions[i], instance.positions[j]));
    const double diag = norm(hi - lo);
    const double reach = max_pair + 2.0 * diag + m.h;
    m.big_m = reach * reach;

    // Variables, in a fixed layout: zstar, then coordinates, then e, then z.
    m.vars.push_back({"zstar", VarKind::Continuous, 0.0, kInf});
    for (int i = 0; i < n; ++i)
        for (int c = 0; c < m.dim; ++c)
            m.vars.push_back({"xs_" + std::to_string(i) + "_" + std::to_string(c),
                              VarKind::Continuous, -kInf, kInf});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                m.vars.push_back({"e_" + std::to_string(i) + "_" + std::to_string(j),
                                  VarKind::Binary, 0.0, 1.0});
    for (int s = 0; s < n; ++s)
        for (int d = 0; d < n; ++d) {
            if (s == d) continue;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (i != j)
                        m.vars.push_back({"z_" + std::to_string(s) + "_" + std::to_string(d) +
                                              "_" + std::to_string(i) + "_" + std::to_string(j),
                                          VarKind::Binary, 0.0, 1.0});
        }

    auto coord = [&](const Vec3& p, int c) { return c == 0 ? p.x : (c == 1 ? p.y : p.z); };

    // Max movement: ||xs_i - x_i||^2 - zstar <= 0.
    for (int i = 0; i < n; ++i) {
        QcpConstraint con;
        con.family = ConstraintFamily::MaxMovement;
        con.idx = {i, -1, -1, -1};
        con.lo = -kInf;
        con.hi = 0.0;
        con.lin.push_back({m.zstar_var(), -1.0});
        for (int c = 0; c < m.dim; ++c) {
            const double xc = coord(instance.positions[i], c);
            con.quad.push_back({m.xstar_var(i, c), m.xstar_var(i, c), 1.0});
            con.lin.push_back({m.xstar_var(i, c), -2.0 * xc});
            con.constant += xc * xc;
        }
        m.constraints.push_back(std::move(con));
    }

    // Edge indicator: 0 <= ||xs_i - xs_j||^2 - h^2 + M * e_ij <= M.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            QcpConstraint con;
            con.family = ConstraintFamily::EdgeIndicator;
            con.idx = {i, j, -1, -1};
            con.lo = 0.0;
            con.hi = m.big_m;
            con.constant = -m.h * m.h;
            con.lin.push_back({m.e_var(i, j), m.big_m});
            for (int c = 0; c < m.dim; ++c) {
                con.quad.push_back({m.xstar_var(i, c), m.xstar_var(i, c), 1.0});
                con.quad.push_back({m.xstar_var(j, c), m.xstar_var(j, c), 1.0});
                con.quad.push_back({m.xstar_var(i, c), m.xstar_var(j, c), -2.0});
            }
            m.constraints.push_back(std::move(con));
        }

    // Edge use: z_{s,d,i,j} - e_{i,j} <= 0.
    for (int s = 0; s < n; ++s)
        for (int d = 0; d < n; ++d) {
            if (s == d) continue;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    if (i == j) continue;
                    QcpConstraint con;
                    con.family = ConstraintFamily::EdgeUse;
                    con.idx = {s, d, i, j};
                    con.lo = -kInf;
                    con.hi = 0.0;
                    con.lin.push_back({m.z_var(s, d, i, j), 1.0});
                    con.lin.push_back({m.e_var(i, j), -1.0});
                    m.constraints.push_back(std::move(con));
                }
        }

    // Flow conservation: out(i) - in(i) = k at s, -k at d, 0 elsewhere.
    for (int s = 0; s < n; ++s)
        for (int d = 0; d < n; ++d) {
            if (s == d) continue;
            for (int i = 0; i < n; ++i) {
                QcpConstraint con;
                con.family = ConstraintFamily::FlowConservation;
                con.idx = {s, d, i, -1};
                const double rhs = i == s ? k : (i == d ? -k : 0.0);
                con.lo = rhs;
                con.hi = rhs;
                for (int j = 0; j < n; ++j) {
                    if (j == i) continue;
                    con.lin.push_back({m.z_var(s, d, i, j), 1.0});
                    con.lin.push_back({m.z_var(s, d, j, i), -1.0});
                }
                m.constraints.push_back(std::move(con));
            }
        }

    // Vertex disjointness: internal vertices forward at most one path.
    for (int s = 0; s < n; ++s)
        for (int d = 0; d < n; ++d) {
            if (s == d) continue;
            for (int i = 0; i < n; ++i) {
                if (i == s || i == d) continue;
                QcpConstraint con;
                con.family = ConstraintFamily::VertexDisjoint;
                con.idx = {s, d, i, -1};
                con.lo = -kInf;
                con.hi = 1.0;
                for (int j = 0; j < n; ++j)
                    if (j != i) con.lin.push_back({m.z_var(s, d, i, j), 1.0});
                m.constraints.push_back(std::move(con));
            }
        }
    return m;
}

std::string export_qcp(const QcpModel& model, QcpExportFormat format) {
    if (format != QcpExportFormat::Text) throw Error("export_qcp: unsupported format");
    std::ostringstream out;
    out << "kconn-qcp 1\n";
    out << "n " << model.n << "\n";
    out << "dim " << model.dim << "\n";
    out << "k " << model.k << "\n";
    out << "h " << fmt17(model.h) << "\n";
    out << "bigm " << fmt17(model.big_m) << "\n";
    for (int i = 0; i < model.n; ++i) {
        const Vec3& p = model.original_positions[i];
        out << "pos " << i << " " << fmt17(p.x) << " " << fmt17(p.y) << " " << fmt17(p.z)
            << "\n";
    }
    out << "objective minimize zstar\n";
    for (const QcpVariable& v : model.vars)
        out << "var " << v.name << " " << (v.kind == VarKind::Binary ? "binary" : "continuous")
            << " " << fmt_bound(v.lo) << " " << fmt_bound(v.hi) << "\n";
    for (const QcpConstraint& c : model.constraints) {
        out << "con " << family_tag(c.family);
        for (int idx : c.idx) {
            if (idx < 0) {
                out << " .";
            } else {
                out << " " << idx;
            }
        }
        out << " lo " << fmt_bound(c.lo) << " hi " << fmt_bound(c.hi) << " const "
            << fmt17(c.constant);
        out << " lin " << c.lin.size();
        for (const LinTerm& t : c.lin) out << " " << model.vars[t.var].name << " " << fmt17(t.coeff);
        out << " quad " << c.quad.size();
        for (const QuadTerm& t : c.quad)
            out << " " << model.vars[t.a].name << " " << model.vars[t.b].name << " "
                << fmt17(t.coeff);
        out << "\n";
    }
    return out.str();
}

QcpModel parse_qcp(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    QcpModel m;
    std::vector<std::pair<std::string, int>> name_ids;
    auto var_id = [&](const std::string& name) {
        const auto it = std::lower_bound(
            name_ids.begin(), name_ids.end(), name,
            [](const std::pair<std::string, int>& a, const std::string& b) { return a.first < b; });
        if (it == name_ids.end() || it->first != name)
            throw Error("qcp parse: unknown variable '" + name + "'");
        return it->second;
    };
    bool sorted = false;

    if (!std::getline(in, line) || line != "kconn-qcp 1")
        throw Error("qcp parse: missing or unsupported header");

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "n") {
            ls >> m.n;
        } else if (tag == "dim") {
            ls >> m.dim;
        } else if (tag == "k") {
            ls >> m.k;
        } else if (tag == "h") {
            std::string v; ls >> v; m.h = parse_bound(v);
        } else if (tag == "bigm") {
            std::string v; ls >> v; m.big_m = parse_bound(v);
        } else if (tag == "pos") {
            int i; std::string x, y, z;
            ls >> i >> x >> y >> z;
            if (static_cast<int>(m.original_positions.size()) != i)
                throw Error("qcp parse: positions out of order");
            m.original_positions.push_back({parse_bound(x), parse_bound(y), parse_bound(z)});
        } else if (tag == "objective") {
            std::string sense, what;
            ls >> sense >> what;
            if (sense != "minimize" || what != "zstar")
                throw Error("qcp parse: unexpected objective");
        } else if (tag == "var") {
            QcpVariable v;
            std::string kind, lo, hi;
            ls >> v.name >> kind >> lo >> hi;
            v.kind = kind == "binary" ? VarKind::Binary : VarKind::Continuous;
            v.lo = parse_bound(lo);
            v.hi = parse_bound(hi);
            name_ids.emplace_back(v.name, static_cast<int>(m.vars.size()));
            m.vars.push_back(std::move(v));
        } else if (tag == "con") {
            if (!sorted) {
                std::sort(name_ids.begin(), name_ids.end());
                sorted = true;
            }
            QcpConstraint c;
            std::string fam;
            ls >> fam;
            c.family = family_from_tag(fam);
            for (int& idx : c.idx) {
                std::string t;
                ls >> t;
                idx = t == "." ? -1 : std::stoi(t);
            }
            std::string kw, v;
            ls >> kw >> v;  // lo
            c.lo = parse_bound(v);
            ls >> kw >> v;  // hi
            c.hi = parse_bound(v);
            ls >> kw >> v;  // const
            c.constant = parse_bound(v);
            std::size_t count = 0;
            ls >> kw >> count;  // lin
            for (std::size_t t = 0; t < count; ++t) {
                std::string name, coeff;
                ls >> name >> coeff;
                c.lin.push_back({var_id(name), parse_bound(coeff)});
            }
            ls >> kw >> count;  // quad
            for (std::size_t t = 0; t < count; ++t) {
                std::string a, b, coeff;
                ls >> a >> b >> coeff;
                c.quad.push_back({var_id(a), var_id(b), parse_bound(coeff)});
            }
            if (!ls) throw Error("qcp parse: malformed constraint line");
            m.constraints.push_back(std::move(c));
        } else {
            throw Error("qcp parse: unknown line tag '" + tag + "'");
        }
    }
    if (static_cast<int>(m.original_positions.size()) != m.n)
        throw Error("qcp parse: position count mismatch");
    return m;
}

FeasibilityReport check_feasible(const QcpModel& model, const std::vector<Vec3>& candidate,
                                 WitnessStrategy strategy) {
    if (strategy != WitnessStrategy::MaxFlowWitness)
        throw std::invalid_argument("check_feasible: unknown witness strategy");
    if (static_cast<int>(candidate.size()) != model.n)
        throw std::invalid_argument("check_feasible: candidate size mismatch");
    if (model.dim == 2)
        for (const Vec3& p : candidate)
            if (p.z != 0.0)
                throw std::invalid_argument("check_feasible: 3D candidate for a 2D model");

    std::vector<double> value(model.vars.size(), 0.0);

    FeasibilityReport report;
    for (int i = 0; i < model.n; ++i) {
        const Vec3& p = candidate[i];
        value[model.xstar_var(i, 0)] = p.x;
        if (model.dim >= 2) value[model.xstar_var(i, 1)] = p.y;
        if (model.dim == 3) value[model.xstar_var(i, 2)] = p.z;
        const double move = distance(p, model.original_positions[i]);
        report.objective_zstar = std::max(report.objective_zstar, move * move);
    }
    value[model.zstar_var()] = report.objective_zstar;

    // Edge indicators from the candidate geometry.
    Instance moved;
    moved.dim = model.dim;
    moved.h = model.h;
    moved.positions = candidate;
    const CommGraph graph = build_comm_graph(moved);
    for (int i = 0; i < model.n; ++i)
        for (int j = 0; j < model.n; ++j)
            if (i != j) value[model.e_var(i, j)] = graph.edge(i, j) ? 1.0 : 0.0;

    // Path witness: k vertex-disjoint paths per ordered pair, as unit flows.
    for (int s = 0; s < model.n; ++s)
        for (int d = 0; d < model.n; ++d) {
            if (s == d) continue;
            const auto paths = disjoint_path_witness(graph, s, d, model.k);
            for (const std::vector<int>& path : paths)
                for (std::size_t t = 0; t + 1 < path.size(); ++t)
                    value[model.z_var(s, d, path[t], path[t + 1])] = 1.0;
        }

    for (const QcpConstraint& con : model.constraints) {
        double v = con.constant;
        for (const LinTerm& t : con.lin) v += t.coeff * value[t.var];
        for (const QuadTerm& t : con.quad) v += t.coeff * value[t.a] * value[t.b];
        double residual = 0.0;
        if (v < con.lo - kCheckTol) residual = con.lo - v;
        if (v > con.hi + kCheckTol) residual = std::max(residual, v - con.hi);
        if (residual > 0.0) report.violations.push_back({con.family, con.idx, residual});
    }
    report.feasible = report.violations.empty();
    return report;
}

double fcr_lower_bound(const Instance& instance, int k) {
    const double t = bottleneck_threshold(instance, k);
    return std::max(0.0, (t - instance.h) / 2.0);
}

}  // namespace kconn
