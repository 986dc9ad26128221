"""Independent derivations of expected values frozen into the C++ tests.

Routes here deliberately differ from the library:
  * correction tables: symbolic solve (sympy) of the level system with
    polynomial-in-level unknowns, instead of numeric back-substitution;
  * independence polynomials: itertools enumeration over frozensets;
  * labels: a literal transcription of the construction with plain ints.
Run: python3 derive_expected.py
"""
from itertools import combinations
from math import comb

import sympy as sp


def correction_table(k, parity, levels):
    """Solve the triangular level system symbolically; parity 0 = even levels."""
    l = sp.symbols("l")
    deg = max(k - 2, 0)
    coeffs = [[sp.Symbol(f"c{i}_{d}") for d in range(deg + 1)] for i in range(k)]
    g = [sum(c * l**d for d, c in enumerate(row)) for row in coeffs]
    eqs = []
    # g_i(l) + g_{i-1}(l) - g_i(l+2) = C(l+1, i-1) for 1 <= i <= k-1
    eqs.append(sp.expand(g[0] - g[0].subs(l, l + 2)))
    for i in range(1, k):
        rhs = sp.expand_func(sp.binomial(l + 1, i - 1))
        eqs.append(sp.expand(g[i] + g[i - 1] - g[i].subs(l, l + 2) - rhs))
    eqs.append(sp.expand(g[k - 1] - sp.expand_func(sp.binomial(l, k - 2))))
    flat = []
    for e in eqs:
        flat += sp.Poly(e, l).all_coeffs()
    sol = sp.solve(flat, [c for row in coeffs for c in row], dict=True)
    assert len(sol) == 1, sol
    out = {}
    for lev in levels:
        assert lev % 2 == parity
        out[lev] = [int(gi.subs(sol[0]).subs(l, lev)) for gi in g]
    return out


def build_edges(bits, k):
    edges = set()
    for m, b in enumerate(bits):
        if b == "1":
            for s in combinations(range(1, m + 1), k - 1):
                edges.add(tuple(sorted(s + (m + 1,))))
    return edges


def ipoly(n, edges):
    coeffs = [0] * (n + 1)
    es = [frozenset(e) for e in edges]
    for r in range(n + 1):
        for w in combinations(range(1, n + 1), r):
            ws = frozenset(w)
            if not any(e <= ws for e in es):
                coeffs[r] += 1
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def labels(bits, k):
    s = bits.index("1")
    c = [2] * s + [3]
    tau = 2 * k
    for m in range(s + 1, len(bits)):
        iso = [i for i in range(m) if bits[i] == "0"]
        dom = [i for i in range(m) if bits[i] == "1"]
        if bits[m] == "1":
            smallest = sorted(c[i] for i in iso)[: k - 1]
            c.append(tau + 1 - sum(smallest))
        else:
            if len(dom) >= k - 1:
                chosen = dom[-(k - 1):]
            else:
                chosen = dom + list(range(k - 1 - len(dom)))
            new = 2 * tau + 1 - sum(2 * c[i] for i in chosen)
            c = [2 * x for x in c] + [new]
            tau = 2 * tau + 1
    return c, tau


if __name__ == "__main__":
    print("alpha k=2", correction_table(2, 0, range(0, 13, 2)))
    print("alpha k=3", correction_table(3, 0, range(0, 13, 2)))
    print("alpha k=4", correction_table(4, 0, range(4, 13, 2)))
    print("beta  k=4", correction_table(4, 1, range(3, 14, 2)))
    print("alpha k=5", correction_table(5, 0, range(4, 13, 2)))
    print("00101", ipoly(5, build_edges("00101", 3)))
    print("001010", ipoly(6, build_edges("001010", 3)))
    print("Abar_8 k=4", ipoly(8, build_edges("00001010", 4)))
    h1 = [(1, 4, 5), (2, 3, 5), (2, 4, 5), (3, 4, 5)]
    h2 = [(1, 2, 3), (1, 3, 4), (2, 3, 5), (3, 4, 5)]
    print("H1", ipoly(5, h1), "H2", ipoly(5, h2))
    print("labels ex1", labels("0010100011101", 3))
    print("labels ex2", labels("0010101010101", 3))
    print("labels 001", labels("001", 3))
    print("labels k=4 000010", labels("000010", 4))
    # a few k=4/k=5 instances for the unit tests
    print("A_9 k=4", ipoly(9, build_edges("000010101", 4)))
    print("Abar_12 k=5", ipoly(12, build_edges("000010101010", 5)))
