#!/usr/bin/env python3
# pblin: pseudo-Boolean linearization toolkit
# Copyright (C) 2026 the pblin authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#   http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Solver adapter: reads an exported .lp file, solves it with scipy's HiGHS
backend, and writes the solution file format the bridge expects.

Usage: lp_bridge.py MODEL.lp SOLUTION.sol

Integrality sections (Binary/General) are honored when present; relaxed
exports simply have none.  The objective written to the solution file is the
raw LP objective; the caller adds the offset back and divides out any scale.
"""

import sys

from scipy.optimize import linprog


def parse_terms(tokens, variables):
    coeffs = {}
    sign = 1.0
    pending = None
    for tok in tokens:
        if tok == "+":
            sign = 1.0
        elif tok == "-":
            sign = -1.0
        else:
            is_number = True
            try:
                value = float(tok)
            except ValueError:
                is_number = False
            if is_number:
                pending = sign * value
            else:
                name = tok
                if tok.startswith(("+", "-")):
                    sign = -1.0 if tok[0] == "-" else 1.0
                    name = tok[1:]
                variables.setdefault(name, len(variables))
                coeffs[name] = coeffs.get(name, 0.0) + (pending if pending is not None else sign)
                sign = 1.0
                pending = None
    return coeffs


def main():
    if len(sys.argv) != 3:
        sys.exit("usage: lp_bridge.py MODEL.lp SOLUTION.sol")
    lp_path, sol_path = sys.argv[1], sys.argv[2]

    variables = {}
    objective = {}
    rows = []  # (coeffs, sense, rhs)
    bounds = {}
    integral = set()
    section = None

    with open(lp_path) as handle:
        for raw in handle:
            line = raw.strip()
            if not line or line.startswith("\\"):
                continue
            lowered = line.lower()
            if lowered in ("minimize", "maximize"):
                section = "objective"
                continue
            if lowered == "subject to":
                section = "rows"
                continue
            if lowered == "bounds":
                section = "bounds"
                continue
            if lowered == "binary":
                section = "binary"
                continue
            if lowered == "general":
                section = "general"
                continue
            if lowered == "end":
                break

            if section == "objective":
                body = line.split(":", 1)[1] if ":" in line else line
                objective.update(parse_terms(body.split(), variables))
            elif section == "rows":
                body = line.split(":", 1)[1] if ":" in line else line
                for sense in ("<=", ">=", "="):
                    if sense in body:
                        lhs, rhs = body.rsplit(sense, 1)
                        rows.append((parse_terms(lhs.split(), variables), sense, float(rhs)))
                        break
            elif section == "bounds":
                parts = line.split("<=")
                if len(parts) == 3:
                    name = parts[1].strip()
                    variables.setdefault(name, len(variables))
                    bounds[name] = (float(parts[0]), float(parts[2]))
            elif section in ("binary", "general"):
                variables.setdefault(line, len(variables))
                integral.add(line)
                if section == "binary":
                    bounds[line] = (0.0, 1.0)

    n = len(variables)
    c = [0.0] * n
    for name, value in objective.items():
        c[variables[name]] = value

    a_ub, b_ub, a_eq, b_eq = [], [], [], []
    for coeffs, sense, rhs in rows:
        dense = [0.0] * n
        for name, value in coeffs.items():
            dense[variables[name]] = value
        if sense == "<=":
            a_ub.append(dense)
            b_ub.append(rhs)
        elif sense == ">=":
            a_ub.append([-v for v in dense])
            b_ub.append(-rhs)
        else:
            a_eq.append(dense)
            b_eq.append(rhs)

    var_bounds = [bounds.get(name, (0.0, None)) for name in variables]
    integrality = [1 if name in integral else 0 for name in variables]

    result = linprog(
        c,
        A_ub=a_ub or None,
        b_ub=b_ub or None,
        A_eq=a_eq or None,
        b_eq=b_eq or None,
        bounds=var_bounds,
        method="highs",
        integrality=integrality if any(integrality) else None,
    )
    if not result.success:
        sys.exit(f"solve failed: {result.message}")

    with open(sol_path, "w") as out:
        out.write("=status= optimal\n")
        out.write(f"=obj= {result.fun:.12g}\n")
        for name, index in variables.items():
            out.write(f"{name} {result.x[index]:.12g}\n")


if __name__ == "__main__":
    main()
