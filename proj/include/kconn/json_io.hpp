#pragma once

#include <string>

#include "kconn/edge_augment.hpp"
#include "kconn/errors.hpp"
#include "kconn/geometry.hpp"
#include "kconn/relocation.hpp"

namespace kconn {

// Canonical on-disk instance format:
//   {"dim": 2, "h": 1.0, "positions": [[x, y], ...]}
Instance parse_instance_json(const std::string& text);
Instance load_instance(const std::string& path);
std::string instance_to_json(const Instance& instance);
void save_instance(const Instance& instance, const std::string& path);

// Plan format:
//   {"final_positions": [...], "minmax": .., "total": .., "per_robot": [...]}
std::string plan_to_json(const RestorationPlan& plan);
void save_plan(const RestorationPlan& plan, const std::string& path);
RestorationPlan load_plan(const std::string& path, const Instance& instance);

// Augmentation set format: [{"i":..,"j":..,"w":..}, ...]
std::string augmentation_to_json(const AugmentationSet& aug);
void save_augmentation(const AugmentationSet& aug, const std::string& path);
AugmentationSet load_augmentation(const std::string& path, int k);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace kconn
