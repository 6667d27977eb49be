#pragma once

#include "bicorn/curvepair.hpp"

namespace bicorn::testing {

// One crossing on the torus: a = (1,0), b = (0,1).
inline CurvePair torus_pair(int sign = 1) {
  CurvePair cp;
  cp.a_cycle = {1};
  cp.b_cycle = {1};
  cp.sign[1] = sign;
  cp.genus = 1;
  return cp;
}

// Two crossings of opposite sign: a bigon pair on the sphere.
inline CurvePair bigon_pair() {
  CurvePair cp;
  cp.a_cycle = {1, 2};
  cp.b_cycle = {1, 2};
  cp.sign[1] = 1;
  cp.sign[2] = -1;
  cp.genus = 0;
  return cp;
}

// Two crossings of equal sign: minimal position on the torus.
inline CurvePair torus_two_pair() {
  CurvePair cp;
  cp.a_cycle = {1, 2};
  cp.b_cycle = {1, 2};
  cp.sign[1] = 1;
  cp.sign[2] = 1;
  cp.genus = 1;
  return cp;
}

inline CurvePair disjoint_pair(int genus) {
  CurvePair cp;
  cp.genus = genus;
  return cp;
}

// All pairs with n crossings up to relabeling: a = (1..n), b starts at 1.
template <class Fn>
inline void enumerate_pairs(int n, Fn&& fn) {
  std::vector<int> rest;
  for (int v = 2; v <= n; ++v) rest.push_back(v);
  std::vector<int> b{1};
  std::sort(rest.begin(), rest.end());
  do {
    b.resize(1);
    b.insert(b.end(), rest.begin(), rest.end());
    for (int mask = 0; mask < (1 << n); ++mask) {
      CurvePair cp;
      for (int v = 1; v <= n; ++v) cp.a_cycle.push_back(v);
      cp.b_cycle = b;
      for (int v = 1; v <= n; ++v) cp.sign[v] = (mask >> (v - 1) & 1) ? 1 : -1;
      PairIndex ix = index_pair(cp);
      FaceCensus fc = face_census(cp, ix);
      cp.genus = fc.derived_genus;
      fn(cp, fc);
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
}

}  // namespace bicorn::testing
