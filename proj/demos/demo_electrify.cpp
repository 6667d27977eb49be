// Cones the a cosets of a free group ball and watches left multiplication by
// b become loxodromic while the a axis collapses.

#include <cstdio>

#include "bicorn/io.hpp"

using namespace bicorn;

int main() {
  FreeTreeBall ball = free_tree_ball(7);
  SubsetFamily ys = all_cosets(ball, 'a');
  std::printf("radius %d ball: %d words, %zu a-cosets\n", ball.radius,
              ball.graph.vertex_count, ys.member.size());

  ElectrifiedGraph e = electrify(ball.graph, ys);
  int root = ball.index.at("");
  std::vector<Half> base = dijkstra_row(ball.graph, {root});
  std::vector<Half> elec = dijkstra_row(e.graph, {root});
  for (const char* w : {"aaaa", "bbbb", "abab", "baba"})
    std::printf("d(e, %s) = %s   electric %s\n", w, fmt_half(base[ball.index.at(w)]).c_str(),
                fmt_half(elec[ball.index.at(w)]).c_str());

  GraphAutomorphism f = extend_to_cones(e, mult_by(ball, "b"));
  TranslationReport tr = translation_length(e.graph, f, root, ball.radius, Rat(1, 2));
  std::printf("orbit of b: ");
  for (Half d : tr.displacement) std::printf("%s ", fmt_half(d).c_str());
  std::printf("\ntail slope %s, %s\n", tr.tail_slope.str().c_str(),
              tr.loxodromic ? "loxodromic" : "bounded");

  GraphAutomorphism g = extend_to_cones(e, mult_by(ball, "a"));
  TranslationReport ta = translation_length(e.graph, g, root, ball.radius);
  std::printf("orbit of a: ");
  for (Half d : ta.displacement) std::printf("%s ", fmt_half(d).c_str());
  std::printf("\ntail slope %s after coning its axis\n", ta.tail_slope.str().c_str());
  return 0;
}
