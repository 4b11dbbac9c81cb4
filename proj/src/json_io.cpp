#include "kconn/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "kconn/errors.hpp"

namespace kconn {

using nlohmann::json;

namespace {

json point_to_json(const Vec3& p, int dim) {
    json a = json::array({p.x, p.y});
    if (dim == 3) a.push_back(p.z);
    return a;
}

Vec3 point_from_json(const json& a, int dim, const char* what) {
    if (!a.is_array() || static_cast<int>(a.size()) != dim)
        throw Error(std::string(what) + ": every point needs exactly dim coordinates");
    Vec3 p{a[0].get<double>(), a[1].get<double>(), 0.0};
    if (dim == 3) p.z = a[2].get<double>();
    return p;
}

}  // namespace

Instance parse_instance_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(std::string("instance: invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("dim") || !j.contains("h") || !j.contains("positions"))
        throw Error("instance: expected {\"dim\", \"h\", \"positions\"}");
    Instance inst;
    try {
        inst.dim = j["dim"].get<int>();
        inst.h = j["h"].get<double>();
        for (const json& p : j["positions"])
            inst.positions.push_back(point_from_json(p, inst.dim, "instance"));
    } catch (const json::exception& e) {
        throw Error(std::string("instance: invalid JSON: ") + e.what());
    }
    inst.validate();
    return inst;
}

Instance load_instance(const std::string& path) { return parse_instance_json(read_text_file(path)); }

std::string instance_to_json(const Instance& instance) {
    json j;
    j["dim"] = instance.dim;
    j["h"] = instance.h;
    json pts = json::array();
    for (const Vec3& p : instance.positions) pts.push_back(point_to_json(p, instance.dim));
    j["positions"] = pts;
    return j.dump(2) + "\n";
}

void save_instance(const Instance& instance, const std::string& path) {
    write_text_file(path, instance_to_json(instance));
}

std::string plan_to_json(const RestorationPlan& plan) {
    json j;
    json pts = json::array();
    for (const Vec3& p : plan.final_positions) pts.push_back(point_to_json(p, plan.original.dim));
    j["final_positions"] = pts;
    j["minmax"] = plan.minmax;
    j["total"] = plan.total;
    j["per_robot"] = plan.per_robot;
    return j.dump(2) + "\n";
}

void save_plan(const RestorationPlan& plan, const std::string& path) {
    write_text_file(path, plan_to_json(plan));
}

RestorationPlan load_plan(const std::string& path, const Instance& instance) {
    json j;
    try {
        j = json::parse(read_text_file(path));
        RestorationPlan plan;
        plan.original = instance;
        for (const json& p : j.at("final_positions"))
            plan.final_positions.push_back(point_from_json(p, instance.dim, "plan"));
        plan.minmax = j.at("minmax").get<double>();
        plan.total = j.at("total").get<double>();
        plan.per_robot = j.at("per_robot").get<std::vector<double>>();
        return plan;
    } catch (const json::exception& e) {
        throw Error(std::string("plan: invalid JSON: ") + e.what());
    }
}

std::string augmentation_to_json(const AugmentationSet& aug) {
    json arr = json::array();
    for (const WeightedNonEdge& e : aug.edges)
        arr.push_back({{"i", e.i}, {"j", e.j}, {"w", e.w}});
    return arr.dump(2) + "\n";
}

void save_augmentation(const AugmentationSet& aug, const std::string& path) {
    write_text_file(path, augmentation_to_json(aug));
}

AugmentationSet load_augmentation(const std::string& path, int k) {
    AugmentationSet aug;
    aug.k = k;
    try {
        const json arr = json::parse(read_text_file(path));
        for (const json& e : arr) {
            WeightedNonEdge edge{e.at("i").get<int>(), e.at("j").get<int>(),
                                 e.at("w").get<double>()};
            aug.edges.push_back(edge);
            aug.bottleneck = std::max(aug.bottleneck, edge.w);
        }
    } catch (const json::exception& e) {
        throw Error(std::string("augmentation: invalid JSON: ") + e.what());
    }
    return aug;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open for writing: " + path);
    out << content;
    if (!out) throw Error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace kconn
