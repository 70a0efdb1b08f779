#pragma once

#include <array>
#include <optional>
#include <string>

namespace covertab {

// The four 2x5 zero patterns of the two-dimensional scan. An entry is true
// where the pattern forces a zero; every other entry is required nonzero.
enum class Shape { I, II, III, IV };

using ShapeMask = std::array<std::array<bool, 5>, 2>;

ShapeMask shape_mask(Shape s);

std::string shape_name(Shape s);
std::optional<Shape> shape_from_name(const std::string& name);

inline constexpr std::array<Shape, 4> kAllShapes{Shape::I, Shape::II, Shape::III, Shape::IV};

}  // namespace covertab
