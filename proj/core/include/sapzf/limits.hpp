/*
 * Copyright 2026 The sapzf Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

namespace sapzf {

/// Size caps for the exponential searches. Exceeding a cap raises CapError.
struct Limits {
    int canonical_vertices = 10;
    int minor_vertices = 10;
    int zfs_search_vertices = 24;
    int vertex_cover_vertices = 32;
    int zsap_nonedges = 20;
    int zvc_vertices = 12;
    int enumerate_vertices = 8;
    int perturbation_doublings = 64;
};

inline const Limits default_limits{};

} // namespace sapzf
