// Copyright 2026 The pauliprop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pauliprop/models.hpp"

namespace pauliprop {

// Embedded copy of data/heavy_hex_127.txt so the preset works without a
// data path. A unit test keeps the two in sync.
const char* const kHeavyHex127Data = R"GEO(# 127-qubit heavy-hexagon coupling map (IBM Eagle processor family).
# One edge per line: qubit_i qubit_j color. The three colors (0,1,2) are
# disjoint perfect-matching rounds: no two edges of a color share a qubit,
# so all two-qubit gates within a round can be applied in parallel.
# 127 qubits, 144 edges, 3 colors. File format version 1.
2 1 0
33 39 0
59 60 0
66 67 0
72 81 0
118 119 0
21 20 0
26 25 0
13 12 0
31 32 0
70 74 0
122 123 0
96 97 0
57 56 0
63 64 0
107 108 0
103 104 0
46 45 0
28 35 0
7 6 0
79 78 0
5 4 0
109 114 0
62 61 0
58 71 0
37 52 0
76 77 0
0 14 0
36 51 0
106 105 0
73 85 0
88 87 0
68 55 0
116 115 0
94 95 0
100 110 0
17 30 0
92 102 0
50 49 0
83 84 0
48 47 0
98 99 0
8 9 0
121 120 0
23 24 0
44 43 0
22 15 0
53 41 0
53 60 1
123 124 1
21 22 1
11 12 1
67 68 1
2 3 1
66 65 1
122 121 1
110 118 1
6 5 1
94 90 1
28 29 1
14 18 1
63 62 1
111 104 1
100 99 1
45 44 1
4 15 1
20 19 1
57 58 1
77 71 1
76 75 1
26 27 1
16 8 1
35 47 1
31 30 1
48 49 1
69 70 1
125 126 1
89 74 1
80 79 1
116 117 1
114 113 1
10 9 1
106 93 1
101 102 1
92 83 1
98 91 1
82 81 1
54 64 1
96 109 1
85 84 1
87 86 1
108 112 1
34 24 1
42 43 1
40 41 1
39 38 1
10 11 2
54 45 2
111 122 2
64 65 2
60 61 2
103 102 2
72 62 2
4 3 2
33 20 2
58 59 2
26 16 2
28 27 2
8 7 2
104 105 2
73 66 2
87 93 2
85 86 2
55 49 2
68 69 2
89 88 2
80 81 2
117 118 2
101 100 2
114 115 2
96 95 2
29 30 2
106 107 2
83 82 2
91 79 2
0 1 2
56 52 2
90 75 2
126 112 2
36 32 2
46 47 2
77 78 2
97 98 2
17 12 2
119 120 2
22 23 2
24 25 2
43 34 2
42 41 2
40 39 2
37 38 2
125 124 2
50 51 2
18 19 2
)GEO";

}  // namespace pauliprop
