"""Model builders and brute-force oracles shared by the test modules."""

import itertools

from lattice_hahn import build_from_covers, build_powerset, generate
from lattice_hahn.complement import set_complement
from lattice_hahn.measures import additive_measure


def powerset_algebra(labels):
    lat = build_powerset(labels)
    return generate(lat, set_complement(lat), lat.elements())


def atom_measure(weights, labels=None, kind="signed"):
    labels = labels or "pqrs"[: len(weights)]
    return additive_measure(powerset_algebra(list(labels)), weights, kind)


def m3():
    return build_from_covers(
        ["⊥", "a", "b", "c", "⊤"],
        [("⊥", "a"), ("⊥", "b"), ("⊥", "c"), ("a", "⊤"), ("b", "⊤"), ("c", "⊤")],
    )


def n5():
    return build_from_covers(
        ["⊥", "a", "b", "c", "⊤"],
        [("⊥", "a"), ("a", "b"), ("b", "⊤"), ("⊥", "c"), ("c", "⊤")],
    )


def two_chain():
    return build_from_covers(["⊥", "⊤"], [("⊥", "⊤")])


# Oracles below work from the order relation alone and never touch the meet/join tables.

def oracle_glb(leq, x, y):
    n = len(leq)
    lower = [z for z in range(n) if leq[z][x] and leq[z][y]]
    return [b for b in lower if all(leq[c][b] for c in lower)]


def oracle_lub(leq, x, y):
    n = len(leq)
    upper = [z for z in range(n) if leq[x][z] and leq[y][z]]
    return [b for b in upper if all(leq[b][c] for c in upper)]


def oracle_distributive(leq):
    n = len(leq)
    meet = lambda x, y: oracle_glb(leq, x, y)[0]
    join = lambda x, y: oracle_lub(leq, x, y)[0]
    for x, y, z in itertools.product(range(n), repeat=3):
        if meet(x, join(y, z)) != join(meet(x, y), meet(x, z)):
            return False
        if join(x, meet(y, z)) != meet(join(x, y), join(x, z)):
            return False
    return True


def oracle_maximal_chains(members, leq):
    """All maximal chains through ``members`` by brute-force extension from the minimum."""
    ms = sorted(members)
    start = [m for m in ms if all(leq[m][x] for x in ms)]
    out = []

    def grow(chain):
        last = chain[-1]
        above = [g for g in ms if g != last and leq[last][g]]
        nxt = [g for g in above if not any(k != g and leq[k][g] for k in above)]
        if not nxt:
            out.append(tuple(chain))
        for g in nxt:
            grow(chain + [g])

    grow(start)
    return out


def oracle_signed_clauses(algebra, values):
    """Clause verdicts of a signed measure computed by direct enumeration."""
    lat = algebra.lattice
    leq = lat.leq_table
    ms = algebra.members
    v = values
    c1 = v[lat.bottom] == 0
    c2a = all(
        not (leq[h][g] and v[h] >= 0 and v[g] >= 0) or v[h] <= v[g] for h in ms for g in ms
    )
    c2b = all(
        not (leq[h][g] and v[h] <= 0 and v[g] <= 0) or v[g] <= v[h] for h in ms for g in ms
    )
    c3 = True
    for h in ms:
        for g in ms:
            j = oracle_lub(leq, h, g)[0]
            m = oracle_glb(leq, h, g)[0]
            if v[j] + v[m] != v[h] + v[g]:
                c3 = False
    c4 = True
    for chain in oracle_maximal_chains(ms, leq):
        for i in range(1, len(chain) + 1):
            sup = chain[0]
            for x in chain[1:i]:
                sup = oracle_lub(leq, sup, x)[0]
            if v[sup] != v[chain[i - 1]]:
                c4 = False
    return {"1": c1, "2a": c2a, "2b": c2b, "3": c3, "4": c4}
