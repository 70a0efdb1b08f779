#include "covertab/shapes.hpp"

namespace covertab {

ShapeMask shape_mask(Shape s) {
  switch (s) {
    case Shape::I:
      return {{{false, false, false, true, true}, {true, true, true, false, false}}};
    case Shape::II:
      return {{{false, false, false, true, true}, {true, true, false, false, false}}};
    case Shape::III:
      return {{{false, false, false, false, true}, {true, true, false, false, false}}};
    case Shape::IV:
      return {{{false, false, false, false, true}, {true, true, true, false, false}}};
  }
  return {};
}

std::string shape_name(Shape s) {
  switch (s) {
    case Shape::I: return "I";
    case Shape::II: return "II";
    case Shape::III: return "III";
    case Shape::IV: return "IV";
  }
  return "?";
}

std::optional<Shape> shape_from_name(const std::string& name) {
  if (name == "I" || name == "i" || name == "1") return Shape::I;
  if (name == "II" || name == "ii" || name == "2") return Shape::II;
  if (name == "III" || name == "iii" || name == "3") return Shape::III;
  if (name == "IV" || name == "iv" || name == "4") return Shape::IV;
  return std::nullopt;
}

}  // namespace covertab
