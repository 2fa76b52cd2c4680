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

#include "osbrp/milp_export.h"

#include <set>
#include <sstream>

namespace osbrp {
namespace {

std::string Var(const char* prefix, std::int64_t index) {
  return std::string(prefix) + "_" + std::to_string(index);
}

// Writes "a + b - 2 c" with a line break every few terms.
void WriteTerms(std::ostream& out, const std::vector<LpTerm>& terms) {
  constexpr int kTermsPerLine = 8;
  int on_line = 0;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const LpTerm& t = terms[k];
    if (on_line == kTermsPerLine) {
      out << "\n   ";
      on_line = 0;
    }
    const Bikes mag = t.coefficient < 0 ? -t.coefficient : t.coefficient;
    if (k == 0) {
      if (t.coefficient < 0) out << "- ";
    } else {
      out << (t.coefficient < 0 ? " - " : " + ");
    }
    if (mag != 1) out << mag << ' ';
    out << t.variable;
    ++on_line;
  }
  if (terms.empty()) out << "0";
}

}  // namespace

std::size_t LpModel::VariableCount() const {
  std::set<std::string> names;
  for (const LpTerm& t : objective) names.insert(t.variable);
  for (const LpRow& r : rows) {
    for (const LpTerm& t : r.terms) names.insert(t.variable);
  }
  for (const LpBound& b : bounds) names.insert(b.variable);
  for (const std::string& g : generals) names.insert(g);
  return names.size();
}

std::string LpModel::ToText() const {
  std::ostringstream out;
  for (const std::string& c : comments) out << "\\ " << c << '\n';
  out << "Minimize\n obj: ";
  WriteTerms(out, objective);
  out << "\nSubject To\n";
  for (const LpRow& r : rows) {
    out << ' ' << r.name << ": ";
    WriteTerms(out, r.terms);
    out << " = " << r.rhs << '\n';
  }
  out << "Bounds\n";
  for (const LpBound& b : bounds) {
    if (!b.lower && !b.upper) {
      out << ' ' << b.variable << " free\n";
    } else if (b.lower && b.upper) {
      out << ' ' << *b.lower << " <= " << b.variable << " <= " << *b.upper
          << '\n';
    } else if (b.lower) {
      out << ' ' << b.variable << " >= " << *b.lower << '\n';
    } else {
      out << " -inf <= " << b.variable << " <= " << *b.upper << '\n';
    }
  }
  if (!generals.empty()) {
    out << "Generals\n";
    for (const std::string& g : generals) out << ' ' << g << '\n';
  }
  out << "End\n";
  return out.str();
}

LpModel BuildLpModel(const Instance& instance, bool relax) {
  Validate(instance);
  const Epoch m = instance.epochs();
  const std::size_t w = instance.visits.size();

  LpModel model;
  model.comments = {
      "One-station bike repositioning: minimize lost requests.",
      "C = " + std::to_string(instance.capacity) +
          ", s0 = " + std::to_string(instance.initial_stock) +
          ", m = " + std::to_string(m) + ", w = " + std::to_string(w) +
          (relax ? ", linear relaxation" : ", integer interventions"),
      "Losses lp_h = max(0, sh_h - C) and lm_h = max(0, -sh_h) are encoded",
      "as s_h = sh_h - lp_h + lm_h with 0 <= s_h <= C; minimizing lp + lm",
      "makes them equal to the max() values at every optimum.",
  };

  for (Epoch h = 1; h <= m; ++h) {
    model.objective.push_back({1, Var("lp", h)});
    model.objective.push_back({1, Var("lm", h)});
  }

  std::size_t next = 0;
  for (Epoch h = 1; h <= m; ++h) {
    LpRow bal{Var("bal", h), {{1, Var("sh", h)}}, instance.demand[h - 1]};
    if (h == 1) {
      bal.rhs += instance.initial_stock;
    } else {
      bal.terms.push_back({-1, Var("s", h - 1)});
    }
    if (next < w && instance.visits[next].epoch == h) {
      bal.terms.push_back({-1, Var("x", static_cast<std::int64_t>(next + 1))});
      ++next;
    }
    model.rows.push_back(std::move(bal));
    model.rows.push_back({Var("lnk", h),
                          {{1, Var("s", h)},
                           {-1, Var("sh", h)},
                           {1, Var("lp", h)},
                           {-1, Var("lm", h)}},
                          0});
  }

  for (std::size_t i = 0; i < w; ++i) {
    const Visit& v = instance.visits[i];
    model.bounds.push_back({Var("x", static_cast<std::int64_t>(i + 1)),
                            v.min_intervention(), v.max_intervention()});
  }
  for (Epoch h = 1; h <= m; ++h) {
    model.bounds.push_back({Var("sh", h), std::nullopt, std::nullopt});
    model.bounds.push_back({Var("s", h), Bikes{0}, instance.capacity});
  }

  if (!relax) {
    for (std::size_t i = 0; i < w; ++i) {
      model.generals.push_back(Var("x", static_cast<std::int64_t>(i + 1)));
    }
  }
  return model;
}

}  // namespace osbrp
