#pragma once

namespace ngg {

// Desk-scale guards. The environment variable NGG_MAX_VERTICES, when set,
// overrides both defaults.
int vertex_limit(int fallback);

inline int automorphism_vertex_limit() { return vertex_limit(12); }
inline int box_vertex_limit() { return vertex_limit(20); }

}  // namespace ngg
