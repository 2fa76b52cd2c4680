#!/usr/bin/env python3
# Copyright 2026 The osbrp Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Solves an LP file written by `osbrp export-lp` with HiGHS (via scipy).

Only the subset the exporter emits is understood: one objective, equality
rows, two-sided / free / one-sided bounds, and an optional Generals section
(ignored: the relaxation is solved). Prints one JSON object:

  {"status": "optimal", "objective": 1.0, "integral": true, "values": {...}}

Exit codes: 0 solved, 1 solver failure, 77 scipy unavailable.
"""

import json
import re
import sys

try:
    import numpy as np
    from scipy.optimize import linprog
except ImportError:  # pragma: no cover
    sys.exit(77)

SECTIONS = ("minimize", "subject to", "bounds", "generals", "end")


def parse_terms(text):
    terms = []
    sign, coef = 1, None
    for tok in text.split():
        if tok == "+":
            sign = 1
        elif tok == "-":
            sign = -1
        elif re.fullmatch(r"-?\d+(\.\d+)?", tok):
            coef = float(tok)
        else:
            terms.append((sign * (1.0 if coef is None else coef), tok))
            sign, coef = 1, None
    return terms


def parse(path):
    body = {name: [] for name in SECTIONS}
    current = None
    with open(path, encoding="utf-8") as f:
        for raw in f:
            line = raw.rstrip("\n")
            if line.startswith("\\"):
                continue
            key = line.strip().lower()
            if key in SECTIONS:
                current = key
                continue
            if current is not None and line.strip():
                body[current].append(line.strip())

    objective = " ".join(body["minimize"])
    objective = objective.split(":", 1)[1] if ":" in objective else objective
    obj_terms = parse_terms(objective)

    rows = []
    for match in re.finditer(r"(\w+):\s*(.*?)\s*=\s*(-?\d+)(?=\s+\w+:|\s*$)",
                             " ".join(body["subject to"])):
        rows.append((parse_terms(match.group(2)), float(match.group(3))))

    bounds = {}
    for line in body["bounds"]:
        m = re.fullmatch(r"(\S+) <= (\S+) <= (\S+)", line)
        if m:
            lo = None if m.group(1) == "-inf" else float(m.group(1))
            bounds[m.group(2)] = (lo, float(m.group(3)))
            continue
        m = re.fullmatch(r"(\S+) free", line)
        if m:
            bounds[m.group(1)] = (None, None)
            continue
        m = re.fullmatch(r"(\S+) >= (\S+)", line)
        if m:
            bounds[m.group(1)] = (float(m.group(2)), None)
            continue
        raise ValueError("unsupported bound line: " + line)
    return obj_terms, rows, bounds


def main(argv):
    obj_terms, rows, bounds = parse(argv[1])
    names = []
    index = {}

    def col(name):
        if name not in index:
            index[name] = len(names)
            names.append(name)
        return index[name]

    for _, v in obj_terms:
        col(v)
    for terms, _ in rows:
        for _, v in terms:
            col(v)
    for v in bounds:
        col(v)

    c = np.zeros(len(names))
    for a, v in obj_terms:
        c[index[v]] += a
    a_eq = np.zeros((len(rows), len(names)))
    b_eq = np.zeros(len(rows))
    for r, (terms, rhs) in enumerate(rows):
        for a, v in terms:
            a_eq[r, index[v]] += a
        b_eq[r] = rhs
    var_bounds = [bounds.get(v, (0.0, None)) for v in names]

    res = linprog(c, A_eq=a_eq, b_eq=b_eq, bounds=var_bounds,
                  method="highs-ds")
    if res.status != 0:
        print(json.dumps({"status": "failed", "message": res.message}))
        return 1
    values = {v: float(res.x[index[v]]) for v in names}
    integral = all(abs(x - round(x)) < 1e-6 for x in values.values())
    print(json.dumps({"status": "optimal", "objective": float(res.fun),
                      "integral": integral, "values": values}))
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
