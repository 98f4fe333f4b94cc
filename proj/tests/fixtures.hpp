#pragma once

// Diagrams shared by several suites.

namespace fixtures {

inline constexpr const char* kink = "flatknotoid 1+ 1+";
inline constexpr const char* kink_mirror = "flatknotoid 1- 1-";
inline constexpr const char* two_kinks = "flatknotoid 1+ 1+ 2+ 2+";
inline constexpr const char* clasp = "flatknotoid 1+ 2- 1+ 2-";
inline constexpr const char* clasp_knotoid = "knotoid O1+ U2- U1+ O2-";
inline constexpr const char* kink_knotoid = "knotoid O1+ U1+";
inline constexpr const char* trefoil = "knot O1+ U2- O3+ U1+ O2- U3+";
inline constexpr const char* figure_eight = "knot U1+ O2+ U3- O1+ U4+ O3- U2+ O4+";
inline constexpr const char* bridge3 = "knot O1+ O2+ O3- U4- U5+ U6+ O6+ U3- U2+ U7- O8+ O5+ O4- U1+ O7- U8+";

// First prime diagrams, in generation order, on which each lemma applies.
inline constexpr const char* two_sided_n4 = "flatknotoid 1- 2+ 3- 4+ 1- 2+ 3- 4+";
inline constexpr const char* ended_chain_n5 = "flatknotoid 1- 2- 3+ 1- 4- 5+ 4- 3+ 2- 5+";
inline constexpr const char* one_sided_n6 = "flatknotoid 1- 2+ 3- 4+ 1- 2+ 5- 6+ 3- 4+ 5- 6+";
// Non-ended chains first appear at n = 8 and only on non-canonical minimal shortcuts.
inline constexpr const char* non_ended_n8 = "flatknotoid 1- 2- 3+ 4+ 1- 4+ 5- 6+ 7- 8+ 7- 5- 2- 3+ 6+ 8+";

}  // namespace fixtures
