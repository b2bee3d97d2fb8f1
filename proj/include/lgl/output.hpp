#pragma once

// Egg-box diagrams (DOT) and the structured JSON report for an instance.

#include <string>

#include <json.hpp>

#include "lgl/config.hpp"
#include "lgl/instance.hpp"

namespace lgl {

// One cluster per D-class in increasing codimension; inside, a table whose
// rows are R-classes and columns L-classes. Cells are H-classes, marked * if
// they hold an idempotent and ** if that idempotent is minimal.
std::string eggbox_dot(const Semigroup& s);

// The same for a bare table with one label per element. Without grades,
// D-classes are ordered by the size of their principal ideals.
std::string eggbox_dot(const SemigroupTable& t, const std::vector<std::string>& labels,
                       const std::vector<int>& grades = {});

// Fields: instance, order, j_classes, ideals, minimal_idempotents,
// unit_group, rank, green, j_class_count, iso_invariants, skipped.
nlohmann::json structured_report(const InstanceConfig& cfg);

// Writes text to path; throws Error naming the path on failure.
void write_file(const std::string& path, const std::string& text);

}  // namespace lgl
