// Copyright 2026 The dihquiver Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <stdexcept>
#include <string>

#include "dihquiver/kernels.h"

namespace dihquiver::kernels {

PropagationPlan CompilePlan(const StrandPresentation& presentation) {
  using Step = PropagationPlan::Step;
  using StepKind = PropagationPlan::StepKind;

  PropagationPlan plan;
  plan.strand_count = presentation.generator_count();
  std::vector<bool> known(plan.strand_count, false);
  auto idx = [&](Generator g) {
    return static_cast<std::uint32_t>(presentation.FlatIndex(g));
  };
  known[idx({1, 1})] = true;
  known[idx({1, 2})] = true;

  struct Pending {
    Step step;
    bool symmetric;  // equality: may be solved in either direction
    bool done = false;
  };
  std::vector<Pending> pending;
  for (const TwistRelation& r : presentation.twists) {
    pending.push_back({{StepKind::kTwist, idx(r.result), idx(r.left), idx(r.right)}, false});
  }
  for (const EqualityRelation& r : presentation.gluings) {
    pending.push_back({{StepKind::kCopy, idx(r.lhs), idx(r.rhs), 0}, true});
  }

  // Sweep until no relation can fire. Twists are listed tangle by tangle and
  // gluings after them, so this fills tangle 1, then glues and fills 2..N.
  bool progress = true;
  while (progress) {
    progress = false;
    for (Pending& p : pending) {
      if (p.done) continue;
      Step& s = p.step;
      if (s.kind == StepKind::kTwist) {
        if (known[s.first] && known[s.second]) {
          if (known[s.target]) {
            plan.checks.push_back(s);
          } else {
            plan.steps.push_back(s);
            known[s.target] = true;
          }
          p.done = true;
          progress = true;
        }
      } else {
        if (known[s.first] && known[s.target]) {
          plan.checks.push_back(s);
        } else if (known[s.first]) {
          plan.steps.push_back(s);
          known[s.target] = true;
        } else if (known[s.target] && p.symmetric) {
          std::swap(s.first, s.target);
          plan.steps.push_back(s);
          known[s.target] = true;
        } else {
          continue;
        }
        p.done = true;
        progress = true;
      }
    }
  }

  for (std::size_t i = 0; i < known.size(); ++i) {
    if (!known[i]) {
      throw std::logic_error("strand " + std::to_string(i) +
                             " is not determined by the seeds");
    }
  }
  for (const Pending& p : pending) {
    if (!p.done) throw std::logic_error("unresolved relation in presentation");
  }
  for (const EqualityRelation& r : presentation.closures) {
    plan.checks.push_back({StepKind::kCopy, idx(r.lhs), idx(r.rhs), 0});
  }
  return plan;
}

bool Propagate(const PropagationPlan& plan, const DihedralQuandle& q, int a, int b,
               std::span<int> strands) {
  using StepKind = PropagationPlan::StepKind;
  strands[0] = a;
  strands[1] = b;
  for (const auto& s : plan.steps) {
    strands[s.target] = s.kind == StepKind::kCopy
                            ? strands[s.first]
                            : q.Op(strands[s.first], strands[s.second]);
  }
  for (const auto& c : plan.checks) {
    const int expected = c.kind == StepKind::kCopy
                             ? strands[c.first]
                             : q.Op(strands[c.first], strands[c.second]);
    if (strands[c.target] != expected) return false;
  }
  return true;
}

}  // namespace dihquiver::kernels
