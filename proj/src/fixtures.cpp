#include "polyef/fixtures.hpp"

#include <array>

namespace polyef {

namespace {

// X = conv{(8,10,6), (12,15,9)} in R³.
constexpr std::string_view kXVrep = R"({
  "dim": 3,
  "vrep": {
    "points": [["8", "10", "6"], ["12", "15", "9"]],
    "rays": [],
    "lines": []
  }
})";

// The same segment described by opposing inequality pairs, one equality and
// coordinate bounds.
constexpr std::string_view kXHrep = R"({
  "dim": 3,
  "hrep": {
    "inequalities": [
      {"coef": ["-5", "4", "0"], "rhs": "0"},
      {"coef": ["3", "0", "-4"], "rhs": "0"},
      {"coef": ["-1", "0", "0"], "rhs": "-8"},
      {"coef": ["1", "0", "0"], "rhs": "12"},
      {"coef": ["0", "-1", "0"], "rhs": "-10"},
      {"coef": ["0", "1", "0"], "rhs": "15"},
      {"coef": ["0", "0", "-1"], "rhs": "-6"},
      {"coef": ["0", "0", "1"], "rhs": "9"}
    ],
    "equalities": [
      {"coef": ["0", "3", "-5"], "rhs": "0"}
    ]
  }
})";

// U = {(w, x) ∈ R⁴ : 2 ≤ 0·x + w ≤ 3}; coordinate 0 is w.
constexpr std::string_view kU = R"({
  "dim": 4,
  "hrep": {
    "inequalities": [
      {"coef": ["-1", "0", "0", "0"], "rhs": "-2"},
      {"coef": ["1", "0", "0", "0"], "rhs": "3"}
    ],
    "equalities": []
  }
})";

constexpr std::string_view kMapA = R"({
  "matrix": [["4", "0", "0", "0"], ["5", "0", "0", "0"], ["3", "0", "0", "0"]],
  "offset": ["0", "0", "0"]
})";

// x - (4,5,3)w = 0 couples X with Y = {w : 2 ≤ w ≤ 3}.
constexpr std::string_view kReduction = R"({
  "X": {
    "dim": 3,
    "hrep": {
      "inequalities": [
        {"coef": ["-5", "4", "0"], "rhs": "0"},
        {"coef": ["3", "0", "-4"], "rhs": "0"},
        {"coef": ["-1", "0", "0"], "rhs": "-8"},
        {"coef": ["1", "0", "0"], "rhs": "12"},
        {"coef": ["0", "-1", "0"], "rhs": "-10"},
        {"coef": ["0", "1", "0"], "rhs": "15"},
        {"coef": ["0", "0", "-1"], "rhs": "-6"},
        {"coef": ["0", "0", "1"], "rhs": "9"}
      ],
      "equalities": [
        {"coef": ["0", "3", "-5"], "rhs": "0"}
      ]
    }
  },
  "Y": {
    "dim": 1,
    "hrep": {
      "inequalities": [
        {"coef": ["-1"], "rhs": "-2"},
        {"coef": ["1"], "rhs": "3"}
      ],
      "equalities": []
    }
  },
  "graph": {
    "B": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
    "C": [["-4"], ["-5"], ["-3"]],
    "b": ["0", "0", "0"]
  },
  "alpha": ["1", "1", "1"]
})";

constexpr std::array<Fixture, 5> kFixtures{{
    {"example1_X_vrep", kXVrep},
    {"example1_X_hrep_eq10", kXHrep},
    {"example1_U", kU},
    {"example1_mapA", kMapA},
    {"example1_reduction", kReduction},
}};

} // namespace

std::span<const Fixture> fixtures() { return kFixtures; }

std::optional<std::string_view> find_fixture(std::string_view name) {
  for (const auto &f : kFixtures)
    if (f.name == name)
      return f.payload;
  return std::nullopt;
}

} // namespace polyef
