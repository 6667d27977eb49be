// Walks the six-crossing genus two pair through its surgery sequence and the
// bicorn pipeline, narrating each stage on stdout.

#include <cstdio>

#include "bicorn/io.hpp"

using namespace bicorn;

int main() {
  CurvePair cp;
  cp.a_cycle = {1, 2, 3, 4, 5, 6};
  cp.b_cycle = {1, 3, 5, 2, 6, 4};
  for (int v = 1; v <= 6; ++v) cp.sign[v] = v % 2 ? 1 : -1;
  cp.genus = 2;
  validate_curve_pair(cp);
  std::printf("pair on a genus %d surface, %d crossings\n", cp.genus, cp.count());

  SurgerySequence seq = curve_surgery_sequence(cp);
  for (size_t k = 0; k < seq.steps.size(); ++k) {
    const SurgeryStep& st = seq.steps[k];
    std::printf("step %zu: arc %d from %d to %d (%s), %s, %d -> %d crossings\n",
                k + 1, st.arc.index, st.arc.start, st.arc.end,
                st.arc.returning ? "returning" : "crossing", piece_name(st.choice),
                seq.curves_with_b[k].count(), seq.curves_with_b[k + 1].count());
  }

  BicornSequence bs = nested_bicorn_sequence(cp);
  std::printf("%zu nested bicorns, %s\n", bs.bicorns.size(),
              bs.completed ? "completed" : "stopped early");
  PipelineRun run = run_pipeline(cp, bs.bicorns);
  for (size_t k = 0; k < run.stages.size(); ++k) {
    const PipelineStage& st = run.stages[k];
    std::printf("stage %zu: %d pre branches collapse to %d, curve %s\n", k + 1,
                st.pre.pre.data.branch_count, st.collapsed.track.branch_count,
                st.dual ? "switch-dual" : "not dual");
  }
  std::printf("%s\n", run.halted.empty() ? "pipeline clean" : run.halted.c_str());
  return 0;
}
