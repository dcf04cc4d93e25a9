#pragma once

namespace clasp {

// Resource guards. None of these bound the mathematics; they keep
// enumeration and normal-form growth at desk scale.
struct Limits {
  int max_degree = 8;          // dim() and tree enumeration
  int max_colors = 6;
  int max_derived_depth = 3;   // in_derived / fox_derivative level
  int max_c_tree = 6;          // c_tree(n)
  int max_brute_legs = 12;     // brute_glue: X legs per monomial
  int max_glue_legs = 24;      // glue: X legs per monomial
  long max_enumeration = 2'000'000;
};

inline const Limits& default_limits() {
  static const Limits limits{};
  return limits;
}

}  // namespace clasp
