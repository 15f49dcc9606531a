"""Constructors for the standard examples and the algebra-building operations.

Each ``*_data`` function returns an unvalidated :class:`AlgebraData`;
:func:`builtin` dispatches by name and validates.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Optional, Sequence

from .algebra import AlgebraData, AxiomError, FrobeniusAlgebra, build_algebra, rescale_trace, sign
from .linalg import Mat, inverse, to_fraction


def _data(x) -> AlgebraData:
    return x.data if isinstance(x, FrobeniusAlgebra) else x


def field_data(trace: Fraction = Fraction(1)) -> AlgebraData:
    """The ground field with ``tr(1) = trace``."""
    return AlgebraData(
        labels=("1",),
        degrees=(0,),
        parities=(0,),
        unit=(Fraction(1),),
        trace=(to_fraction(trace),),
        d=0,
        products={(0, 0): ((0, Fraction(1)),)},
        name="field",
    )


def matrix_data(n: int) -> AlgebraData:
    """``M_n`` with the usual trace; basis ``E_ij`` in row-major order."""
    if n < 1:
        raise ValueError("matrix size must be positive")
    if n == 1:
        data = field_data()
        return AlgebraData(**{**data.__dict__, "name": "matrix1"})
    idx = {(i, j): t for t, (i, j) in enumerate(itertools.product(range(n), repeat=2))}
    products = {}
    for (i, j), a in idx.items():
        for (k, l), b in idx.items():
            if j == k:
                products[(a, b)] = ((idx[(i, l)], Fraction(1)),)
    size = n * n
    return AlgebraData(
        labels=tuple(f"E{i + 1}{j + 1}" for i, j in idx),
        degrees=(0,) * size,
        parities=(0,) * size,
        unit=tuple(Fraction(1 if i == j else 0) for i, j in idx),
        trace=tuple(Fraction(1 if i == j else 0) for i, j in idx),
        d=0,
        products=products,
        name=f"matrix{n}",
    )


def group_data(table: Sequence[Sequence[int]], labels: Optional[Sequence[str]] = None, name: str = "group") -> AlgebraData:
    """Group algebra from a multiplication table ``table[g][h] = gh``.

    The trace picks out the coefficient of the identity.
    """
    n = len(table)
    if any(len(r) != n for r in table) or any(not 0 <= x < n for r in table for x in r):
        raise ValueError("group table must be a square table of element indices")
    ident = [g for g in range(n) if all(table[g][h] == h and table[h][g] == h for h in range(n))]
    if len(ident) != 1:
        raise ValueError("group table has no identity")
    e = ident[0]
    for g, h, k in itertools.product(range(n), repeat=3):
        if table[table[g][h]][k] != table[g][table[h][k]]:
            raise ValueError(f"group table is not associative at {(g, h, k)}")
    for g in range(n):
        if sorted(table[g]) != list(range(n)):
            raise ValueError("group table rows must be permutations")
    labels = tuple(labels) if labels else tuple(f"g{g}" for g in range(n))
    return AlgebraData(
        labels=labels,
        degrees=(0,) * n,
        parities=(0,) * n,
        unit=tuple(Fraction(1 if g == e else 0) for g in range(n)),
        trace=tuple(Fraction(1 if g == e else 0) for g in range(n)),
        d=0,
        products={(g, h): ((table[g][h], Fraction(1)),) for g in range(n) for h in range(n)},
        name=name,
    )


def cyclic_group_table(n: int) -> list:
    return [[(g + h) % n for h in range(n)] for g in range(n)]


def symmetric_group_table(n: int) -> tuple:
    """Multiplication table and one-line labels of ``S_n`` (composition right to left)."""
    perms = list(itertools.permutations(range(n)))
    pos = {p: i for i, p in enumerate(perms)}
    table = [[pos[tuple(p[q[i]] for i in range(n))] for q in perms] for p in perms]
    labels = ["".join(str(x + 1) for x in p) for p in perms]
    return table, labels


def cyclic_group_data(n: int) -> AlgebraData:
    labels = ["1"] + [f"g{k}" if k > 1 else "g" for k in range(1, n)]
    return group_data(cyclic_group_table(n), labels, name=f"Z{n}")


def symmetric_group_data(n: int) -> AlgebraData:
    table, labels = symmetric_group_table(n)
    return group_data(table, labels, name=f"S{n}")


def parse_graph(spec) -> tuple:
    """``"path3"``, ``"cycle4"`` or ``"1-2,2-3"`` into (vertices, edges)."""
    if isinstance(spec, tuple):
        return spec
    spec = str(spec).strip()
    for prefix in ("path", "cycle"):
        if spec.startswith(prefix) and spec[len(prefix):].isdigit():
            n = int(spec[len(prefix):])
            verts = list(range(1, n + 1))
            edges = [(i, i + 1) for i in range(1, n)]
            if prefix == "cycle" and n >= 3:
                edges.append((1, n))
            return verts, edges
    edges = []
    verts = set()
    for part in spec.split(","):
        a, b = part.split("-")
        a, b = int(a), int(b)
        edges.append((min(a, b), max(a, b)))
        verts.update((a, b))
    return sorted(verts), edges


def zigzag_data(graph="path2", eps: Optional[dict] = None) -> AlgebraData:
    """Skew-zigzag algebra of a connected simple graph.

    Basis: ``e_i``, then ``c_i``, then ``a_ij`` (path from j to i) for each
    ordered adjacent pair. ``eps`` maps ordered pairs to orientation
    coefficients; by default ``eps[i, j] = +1`` when ``i < j``.
    """
    verts, edges = parse_graph(graph)
    if len(verts) == 1:
        if edges:
            raise ValueError("zigzag graph must be loop-free")
        return AlgebraData(
            labels=("1", "c"),
            degrees=(0, 2),
            parities=(0, 0),
            unit=(Fraction(1), Fraction(0)),
            trace=(Fraction(0), Fraction(1)),
            d=1,
            products={(0, 0): ((0, Fraction(1)),), (0, 1): ((1, Fraction(1)),), (1, 0): ((1, Fraction(1)),)},
            name="zigzag1",
        )
    edge_set = set()
    for i, j in edges:
        if i == j:
            raise ValueError("zigzag graph must be loop-free")
        if (i, j) in edge_set:
            raise ValueError("zigzag graph must not have multiple edges")
        edge_set.add((i, j))
    adj = {v: set() for v in verts}
    for i, j in edge_set:
        if i not in adj or j not in adj:
            raise ValueError("edge endpoint is not a vertex")
        adj[i].add(j)
        adj[j].add(i)
    seen, stack = {verts[0]}, [verts[0]]
    while stack:
        v = stack.pop()
        for w in adj[v] - seen:
            seen.add(w)
            stack.append(w)
    if seen != set(verts):
        raise ValueError("zigzag graph must be connected")
    if eps is None:
        eps = {}
        for i, j in edge_set:
            eps[(i, j)] = Fraction(1)
            eps[(j, i)] = Fraction(-1)
    eps = {k: to_fraction(v) for k, v in eps.items()}
    for i in verts:
        for j in verts:
            e_ij = eps.get((i, j), Fraction(0))
            adjacent = j in adj[i]
            if adjacent != (e_ij != 0):
                raise ValueError(f"eps must be nonzero exactly on edges (pair {i},{j})")
            if e_ij != -eps.get((j, i), Fraction(0)):
                raise ValueError(f"eps must be antisymmetric (pair {i},{j})")
    arrows = sorted((i, j) for i in verts for j in adj[i])
    labels = [f"e{v}" for v in verts] + [f"c{v}" for v in verts] + [f"a{i}{j}" for i, j in arrows]
    nv = len(verts)
    E = {v: t for t, v in enumerate(verts)}
    C = {v: nv + t for t, v in enumerate(verts)}
    A = {ij: 2 * nv + t for t, ij in enumerate(arrows)}
    one = Fraction(1)
    products = {}
    for v in verts:
        products[(E[v], E[v])] = ((E[v], one),)
        products[(E[v], C[v])] = ((C[v], one),)
        products[(C[v], E[v])] = ((C[v], one),)
    for (i, j), t in A.items():
        # a_ij runs from j to i; paths compose right to left
        products[(E[i], t)] = ((t, one),)
        products[(t, E[j])] = ((t, one),)
        products[(t, A[(j, i)])] = ((C[i], 1 / eps[(i, j)]),)
    return AlgebraData(
        labels=tuple(labels),
        degrees=tuple([0] * nv + [2] * nv + [1] * len(arrows)),
        parities=tuple([0] * nv + [0] * nv + [1] * len(arrows)),
        unit=tuple([one] * nv + [Fraction(0)] * (nv + len(arrows))),
        trace=tuple([Fraction(0)] * nv + [one] * nv + [Fraction(0)] * len(arrows)),
        d=1,
        products=products,
        name=f"zigzag{nv}",
    )


def dual_numbers_data() -> AlgebraData:
    """``k[c]/(c^2)``, c even of degree 2, ``tr(c) = 1``."""
    data = zigzag_data("path1")
    return AlgebraData(**{**data.__dict__, "name": "dual_numbers"})


def clifford1_data() -> AlgebraData:
    """``k<c>/(c^2 - 1)`` with c odd of degree 0, ``tr(1) = 0``, ``tr(c) = 1``.

    The trace is odd, so this is rejected by :func:`build_algebra`; its
    graded tensor square is a valid algebra.
    """
    one = Fraction(1)
    return AlgebraData(
        labels=("1", "c"),
        degrees=(0, 0),
        parities=(0, 1),
        unit=(one, Fraction(0)),
        trace=(Fraction(0), one),
        d=0,
        products={(0, 0): ((0, one),), (0, 1): ((1, one),), (1, 0): ((1, one),), (1, 1): ((0, one),)},
        name="clifford1",
    )


def exterior_data(n: int = 2) -> AlgebraData:
    """Exterior algebra on ``n`` odd generators of degree 1; trace on the top form."""
    if n < 1 or n % 2:
        raise ValueError("exterior algebra needs a positive even number of generators")
    subsets = [s for k in range(n + 1) for s in itertools.combinations(range(n), k)]
    pos = {s: i for i, s in enumerate(subsets)}
    products = {}
    for s in subsets:
        for t in subsets:
            if set(s) & set(t):
                continue
            merged = s + t
            inv = sum(1 for a in range(len(merged)) for b in range(a + 1, len(merged)) if merged[a] > merged[b])
            products[(pos[s], pos[t])] = ((pos[tuple(sorted(merged))], Fraction(sign(inv))),)
    top = tuple(range(n))
    labels = ["1" if not s else "".join(f"x{i + 1}" for i in s) for s in subsets]
    return AlgebraData(
        labels=tuple(labels),
        degrees=tuple(len(s) for s in subsets),
        parities=tuple(len(s) % 2 for s in subsets),
        unit=tuple(Fraction(1 if not s else 0) for s in subsets),
        trace=tuple(Fraction(1 if s == top else 0) for s in subsets),
        d=n // 2,
        products=products,
        name=f"exterior{n}",
    )


def product_data(A, B, trace_weights: Sequence = (1, 1)) -> AlgebraData:
    """Direct product with trace ``(a, b) -> wA tr_A(a) + wB tr_B(b)``."""
    A, B = _data(A), _data(B)
    if A.d != B.d:
        raise ValueError("factors must have traces of the same degree")
    wa, wb = (to_fraction(w) for w in trace_weights)
    n = A.dim
    products = dict(A.products)
    for (i, j), terms in B.products.items():
        products[(n + i, n + j)] = tuple((n + k, c) for k, c in terms)
    return AlgebraData(
        labels=tuple(f"{x}|" for x in A.labels) + tuple(f"|{x}" for x in B.labels),
        degrees=A.degrees + B.degrees,
        parities=A.parities + B.parities,
        unit=A.unit + B.unit,
        trace=tuple(wa * t for t in A.trace) + tuple(wb * t for t in B.trace),
        d=A.d,
        products=products,
        name=f"({A.name}x{B.name})",
    )


def tensor_power_data(A, n: int) -> AlgebraData:
    """``A^{(x)n}`` with the Koszul sign rule; tensor factors numbered right to left.

    Basis tuples ``(i_1, ..., i_n)`` hold the index at tensor position 1 first,
    i.e. the *rightmost* factor. Products carry ``(-1)^{|a_p||b_q|}`` for
    every ``p < q``; the trace is the product of the factor traces.
    """
    A = _data(A)
    if n < 1:
        raise ValueError("tensor power must be positive")
    basis = list(itertools.product(range(A.dim), repeat=n))
    pos = {t: i for i, t in enumerate(basis)}
    table = {}
    for (i, j), terms in A.products.items():
        table.setdefault(i, {})[j] = terms
    products = {}
    par = A.parities
    for s in basis:
        for t in basis:
            exps = 0
            for p in range(n):
                if par[s[p]]:
                    exps += sum(par[t[q]] for q in range(p + 1, n))
            factors = []
            for p in range(n):
                terms = table.get(s[p], {}).get(t[p], ())
                if not terms:
                    break
                factors.append(terms)
            else:
                acc = {}
                for combo in itertools.product(*factors):
                    c = Fraction(sign(exps))
                    for _, x in combo:
                        c *= x
                    key = pos[tuple(k for k, _ in combo)]
                    acc[key] = acc.get(key, Fraction(0)) + c
                terms = tuple((k, c) for k, c in acc.items() if c)
                if terms:
                    products[(pos[s], pos[t])] = terms

    def label(t):
        return "(x)".join(A.labels[i] for i in reversed(t))

    def unit_coeff(t):
        c = Fraction(1)
        for i in t:
            c *= A.unit[i]
        return c

    def trace_coeff(t):
        c = Fraction(1)
        for i in t:
            c *= A.trace[i]
        return c

    return AlgebraData(
        labels=tuple(label(t) for t in basis),
        degrees=tuple(sum(A.degrees[i] for i in t) for t in basis),
        parities=tuple(sum(A.parities[i] for i in t) % 2 for t in basis),
        unit=tuple(unit_coeff(t) for t in basis),
        trace=tuple(trace_coeff(t) for t in basis),
        d=n * A.d,
        products=products,
        name=f"{A.name}^{n}",
    )


def opposite_data(A) -> AlgebraData:
    """``a^op b^op = (-1)^{|a||b|} (ba)^op`` with the same trace."""
    A = _data(A)
    products = {}
    for (j, i), terms in A.products.items():
        s = sign(A.parities[i] * A.parities[j])
        products[(i, j)] = tuple((k, s * c) for k, c in terms)
    return AlgebraData(
        labels=tuple(f"{x}^op" for x in A.labels),
        degrees=A.degrees,
        parities=A.parities,
        unit=A.unit,
        trace=A.trace,
        d=A.d,
        products=products,
        name=f"{A.name}^op",
    )


def change_basis_data(A, P) -> AlgebraData:
    """Rewrite ``A`` in the basis ``b'_i = sum_k P[i][k] b_k``.

    ``P`` must be invertible and mix only basis elements of equal degree
    and parity.
    """
    A = _data(A)
    P = P if isinstance(P, Mat) else Mat.from_rows(P)
    n = A.dim
    for i in range(n):
        for k in range(n):
            if P[i, k] and (A.degrees[i], A.parities[i]) != (A.degrees[k], A.parities[k]):
                raise ValueError("change of basis must preserve degree and parity")
    Pt_inv = inverse(P.transpose())
    table = {}
    for (i, j), terms in A.products.items():
        table[(i, j)] = terms

    def new_coords(old):
        return Pt_inv.apply(old)

    products = {}
    for i in range(n):
        for j in range(n):
            old = [Fraction(0)] * n
            for k in range(n):
                if not P[i, k]:
                    continue
                for l in range(n):
                    if not P[j, l]:
                        continue
                    for m, c in table.get((k, l), ()):
                        old[m] += P[i, k] * P[j, l] * c
            if any(old):
                new = new_coords(old)
                products[(i, j)] = tuple((m, c) for m, c in enumerate(new) if c)
    unit_new = new_coords(A.unit)
    trace_new = tuple(sum((P[i, k] * A.trace[k] for k in range(n)), Fraction(0)) for i in range(n))
    return AlgebraData(
        labels=tuple(f"{x}'" for x in A.labels),
        degrees=A.degrees,
        parities=A.parities,
        unit=tuple(unit_new),
        trace=trace_new,
        d=A.d,
        products=products,
        name=f"{A.name}'",
    )


GRAPH_DEFAULT = "path2"


def builtin(name: str, **params) -> FrobeniusAlgebra:
    """Validated built-in algebra by name.

    Names: ``field``, ``matrix`` (n), ``cyclic`` (n), ``symmetric`` (n),
    ``group`` (table, labels), ``zigzag`` (graph, eps), ``dual_numbers``,
    ``clifford1``, ``exterior`` (n), ``product`` (A, B, trace_weights),
    ``tensor_power`` (A, n), ``opposite`` (A).
    """
    name = name.lower().replace("-", "_")
    if name in ("field", "k"):
        data = field_data(params.get("trace", 1))
    elif name == "matrix":
        data = matrix_data(int(params.get("n", 2)))
    elif name in ("cyclic", "z"):
        data = cyclic_group_data(int(params.get("n", 2)))
    elif name in ("symmetric", "s"):
        data = symmetric_group_data(int(params.get("n", 3)))
    elif name == "group":
        data = group_data(params["table"], params.get("labels"))
    elif name == "zigzag":
        data = zigzag_data(params.get("graph", GRAPH_DEFAULT), params.get("eps"))
    elif name == "dual_numbers":
        data = dual_numbers_data()
    elif name == "clifford1":
        data = clifford1_data()
    elif name == "exterior":
        data = exterior_data(int(params.get("n", 2)))
    elif name == "product":
        data = product_data(params["A"], params["B"], params.get("trace_weights", (1, 1)))
    elif name == "tensor_power":
        data = tensor_power_data(params["A"], int(params.get("n", 2)))
    elif name == "rescaled_pair":
        return rescaled_pair()
    elif name == "opposite":
        data = opposite_data(params["A"])
    else:
        raise ValueError(f"unknown built-in algebra {name!r}")
    return build_algebra(data)


def standard_algebras() -> dict:
    """The valid built-ins used by the verification sweeps, keyed by name."""
    return {
        "field": builtin("field"),
        "matrix2": builtin("matrix", n=2),
        "matrix3": builtin("matrix", n=3),
        "Z2": builtin("cyclic", n=2),
        "Z3": builtin("cyclic", n=3),
        "S3": builtin("symmetric", n=3),
        "zigzag1": builtin("zigzag", graph="path1"),
        "zigzag2": builtin("zigzag", graph="path2"),
        "zigzag3": builtin("zigzag", graph="path3"),
        "dual_numbers": builtin("dual_numbers"),
        "product": builtin("product", A=field_data(), B=matrix_data(2)),
        "clifford1^2": builtin("tensor_power", A=clifford1_data(), n=2),
        "exterior2": builtin("exterior", n=2),
    }


def rescaled_pair() -> FrobeniusAlgebra:
    """``k x k`` built with trace weights (2, 3) and rescaled so kappa = (1, 1)."""
    A = build_algebra(product_data(field_data(), field_data(), trace_weights=(2, 3)))
    e = A.element({0: 2, 1: 3})
    return rescale_trace(A, e)


__all__ = [
    "AxiomError",
    "builtin",
    "standard_algebras",
    "rescaled_pair",
    "field_data",
    "matrix_data",
    "group_data",
    "cyclic_group_data",
    "symmetric_group_data",
    "zigzag_data",
    "dual_numbers_data",
    "clifford1_data",
    "exterior_data",
    "product_data",
    "tensor_power_data",
    "opposite_data",
    "change_basis_data",
]
