"""Independent reference values for the corpus, computed with sympy.

Writes frozen.json next to this script. The C++ tests only read the frozen
file; rerun this script by hand when the corpus changes.
"""

import itertools
import json
import pathlib
import re

from sympy import Matrix, Poly, Rational, expand, groebner, symbols, sympify

HERE = pathlib.Path(__file__).resolve().parent
CORPUS = HERE.parent.parent / "corpus" / "charts.cl"


def load_corpus():
    """Minimal reader for the ring/ideal/point lines of the corpus file."""
    rings, ideals, points = None, {}, {}
    for raw in CORPUS.read_text().splitlines():
        line = raw.split("#", 1)[0].strip().rstrip(";")
        if not line:
            continue
        if line.startswith("ring"):
            names = re.search(r"\[(.*)\]", line).group(1).split(",")
            rings = symbols([n.strip() for n in names])
        elif line.startswith("ideal"):
            name, rhs = line[len("ideal"):].split("=", 1)
            gens = [sympify(g.replace("^", "**")) for g in rhs.split(",")]
            ideals[name.strip()] = (rings, gens)
        elif line.startswith("point"):
            name, rhs = line[len("point"):].split("=", 1)
            points[name.strip()] = [Rational(c) for c in rhs.strip()[1:-1].split(",")]
    return ideals, points


def text(f):
    return str(expand(f)).replace("**", "^")


def gb(gens, gens_vars, order="grevlex"):
    return list(groebner(gens, *gens_vars, order=order).exprs)


def leading_exponents(basis, gens_vars):
    return [Poly(g, *gens_vars).monoms(order="grevlex")[0] for g in basis]


def divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def standard_monomial_count(gens, gens_vars):
    """dim_k P/I for zero-dimensional I by enumerating standard monomials."""
    lead = leading_exponents(gb(gens, gens_vars), gens_vars)
    if any(all(e == 0 for e in m) for m in lead):
        return 0
    frontier, seen = [tuple(0 for _ in gens_vars)], set()
    while frontier:
        m = frontier.pop()
        if m in seen or any(divides(l, m) for l in lead):
            continue
        seen.add(m)
        if sum(m) > 200:
            raise ValueError("not zero-dimensional")
        for i in range(len(m)):
            frontier.append(tuple(e + (j == i) for j, e in enumerate(m)))
    return len(seen)


def krull_dimension(gens, gens_vars):
    """Largest set of variables with no leading monomial supported on it."""
    lead = leading_exponents(gb(gens, gens_vars), gens_vars)
    if any(all(e == 0 for e in m) for m in lead):
        return -1
    n = len(gens_vars)
    for k in range(n, -1, -1):
        for subset in itertools.combinations(range(n), k):
            if all(any(m[i] > 0 for i in range(n) if i not in subset) for m in lead):
                return k
    return 0


def monomials_of_degree(gens_vars, d):
    out = []
    for combo in itertools.combinations_with_replacement(gens_vars, d):
        m = 1
        for v in combo:
            m *= v
        out.append(m)
    return out


def coarse_obstruction_dimension(gens, gens_vars, point, cutoff=6):
    """dim I/mI at the point: len P/(mI + m^N) - len P/(I + m^N)."""
    shifted = [expand(g.subs({v: v + c for v, c in zip(gens_vars, point)}, simultaneous=True)) for g in gens]
    power = monomials_of_degree(gens_vars, cutoff)
    m_times_i = [v * g for v in gens_vars for g in shifted]
    return (standard_monomial_count(m_times_i + power, gens_vars)
            - standard_monomial_count(shifted + power, gens_vars))


def jacobian_rank(gens, gens_vars, point):
    at = dict(zip(gens_vars, point))
    return Matrix([[g.diff(v).subs(at) for v in gens_vars] for g in gens]).rank()


def normal_cone(gens, gens_vars):
    """Rees relations by eliminating t from (u_i - t f_i), plus I."""
    t = symbols("t")
    u = symbols(" ".join(f"u{i + 1}" for i in range(len(gens))))
    u = u if isinstance(u, tuple) else (u,)
    rees = gb([ui - t * f for ui, f in zip(u, gens)], (t,) + tuple(gens_vars) + u, order="lex")
    kept = [g for g in rees if not g.has(t)]
    return [text(g) for g in gb(kept + list(gens), tuple(gens_vars) + u)]


def lowest_form(f, gens_vars):
    p = Poly(f, *gens_vars)
    low = min(sum(m) for m in p.monoms())
    return sum(c * Poly({m: 1}, *gens_vars).as_expr() for m, c in p.terms() if sum(m) == low)


def main():
    ideals, points = load_corpus()
    out = {"groebner": {}, "krull_dimension": {}, "length": {}, "normal_cone": {}, "point": {}, "tangent_cone": {}}
    for name, (gens_vars, gens) in ideals.items():
        out["groebner"][name] = [text(g) for g in gb(gens, gens_vars)]
        out["krull_dimension"][name] = krull_dimension(gens, gens_vars)
        if out["krull_dimension"][name] == 0:
            out["length"][name] = standard_monomial_count(gens, gens_vars)
        if len(gens_vars) <= 3:
            out["normal_cone"][name] = normal_cone(gens, gens_vars)

    point_cases = {
        "node": "o", "fat_line": "o", "cusp": "o", "nodal_cubic": "o", "double_point": "o",
        "two_points": "right", "parabola": "o", "axes": "o3", "node_x_double_point": "o3",
        "fat_line_x_point": "o3", "twisted_cubic": "o4", "cusp_x_node": "o4",
    }
    for name, pt in point_cases.items():
        gens_vars, gens = ideals[name]
        full = coarse_obstruction_dimension(gens, gens_vars, points[pt])
        rank = jacobian_rank(gens, gens_vars, points[pt])
        out["point"][name] = {"point": pt, "coarse_dimension_minimal": full - rank, "jacobian_rank": rank,
                              "tangent_t0": len(gens_vars) - rank}

    # Principal or homogeneous charts: the tangent cone at 0 is read off directly.
    for name in ["node", "cusp", "nodal_cubic", "parabola", "fat_line", "twisted_cubic"]:
        gens_vars, gens = ideals[name]
        if len(gens) == 1:
            out["tangent_cone"][name] = [text(lowest_form(gens[0], gens_vars))]
        else:
            out["tangent_cone"][name] = [text(g) for g in gb(gens, gens_vars)]

    (HERE / "frozen.json").write_text(json.dumps(out, indent=2, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
