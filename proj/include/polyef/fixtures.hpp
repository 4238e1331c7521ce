#pragma once

#include <optional>
#include <span>
#include <string_view>

namespace polyef {

/// A bundled JSON document: the segment X, its ten-constraint H-description,
/// the slab U, the map A, and the reduction instance built from them.
struct Fixture {
  std::string_view name;
  std::string_view payload;
};

std::span<const Fixture> fixtures();
std::optional<std::string_view> find_fixture(std::string_view name);

} // namespace polyef
