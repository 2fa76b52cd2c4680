// Copyright 2026 The osbrp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OSBRP_MILP_EXPORT_H_
#define OSBRP_MILP_EXPORT_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "osbrp/model.h"

namespace osbrp {

// The repositioning problem as a linear model in CPLEX LP text format.
//
// Variables per epoch h: sh_h (virtual stock, free), lp_h and lm_h (surplus
// and stockout loss, >= 0), s_h (stock, in [0, C]); per visit i: x_i in
// [q_i - Q_i, q_i]. Rows per epoch:
//
//   bal_h:  sh_h - s_{h-1} [- x_i] = d_h     (s_0 moves to the right side)
//   lnk_h:  s_h - sh_h + lp_h - lm_h = 0
//
// The max(0, .) definitions of the losses are not written out: any feasible
// point has lp_h >= sh_h - C and lm_h >= -sh_h, and minimizing lp + lm drives
// both to equality. Every column has at most two nonzeros of opposite sign,
// so the relaxation has integral vertices.

struct LpTerm {
  Bikes coefficient = 1;
  std::string variable;
};

struct LpRow {
  std::string name;
  std::vector<LpTerm> terms;
  Bikes rhs = 0;  // all rows are equalities
};

struct LpBound {
  std::string variable;
  std::optional<Bikes> lower;  // unset: -infinity
  std::optional<Bikes> upper;  // unset: +infinity
};

struct LpModel {
  std::vector<std::string> comments;
  std::vector<LpTerm> objective;  // minimized
  std::vector<LpRow> rows;
  std::vector<LpBound> bounds;
  std::vector<std::string> generals;

  std::size_t VariableCount() const;
  std::size_t ConstraintCount() const { return rows.size(); }
  // LP file text, LF line endings.
  std::string ToText() const;
};

// `relax` drops the Generals section.
LpModel BuildLpModel(const Instance& instance, bool relax);

inline std::string ExportLp(const Instance& instance, bool relax) {
  return BuildLpModel(instance, relax).ToText();
}

}  // namespace osbrp

#endif  // OSBRP_MILP_EXPORT_H_
