#include "lefcalc/paper_example.hpp"

namespace lefcalc {

// Vertices: 0 and 1 span the fixed closed edge, 2 is the fixed vertex, 3 and
// 4 are exchanged. Triangles 023 and 024 are exchanged across the edge 02.
std::string_view paper_example_document() {
  return R"({
  "function": [
    {"set": "X1", "value": 1},
    {"set": "X2", "value": 4},
    {"set": "X3", "value": 2},
    {"set": "X4", "value": 1},
    {"set": "X5", "value": 3}
  ],
  "map": [0, 1, 2, 4, 3],
  "maximal": [[0, 1], [0, 2, 3], [0, 2, 4]],
  "sets": {
    "X1": [[2]],
    "X2": [[0], [1], [0, 1]],
    "X3": [[0, 2]],
    "X4": [[3], [4]],
    "X5": [[0, 3], [0, 4], [2, 3], [2, 4], [0, 2, 3], [0, 2, 4]]
  },
  "sheaf": [
    {"rank": 1, "set": "X1"},
    {"rank": 4, "set": "X2"},
    {"rank": 2, "set": "X3"},
    {"rank": 1, "set": "X4"},
    {"rank": 3, "set": "X5"}
  ],
  "vertex_count": 5
}
)";
}

}  // namespace lefcalc
