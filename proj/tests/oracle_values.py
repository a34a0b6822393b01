"""Independent brute-force oracle for the frozen values in the C++ tests.

Run: python3 tests/oracle_values.py
"""
from itertools import permutations

FIG1 = dict(part=[1, 2, 2, 1, 2, 1, 2, 1],
            edges=[(1, 2), (1, 3), (2, 4), (3, 4), (3, 8), (4, 5), (5, 6), (6, 7), (7, 8)])
FIG2 = dict(part=[2, 1, 1, 2, 2, 1, 2, 2, 1, 2],
            edges=[(1, 2), (1, 3), (1, 9), (2, 4), (3, 4), (3, 5), (3, 10), (4, 6), (5, 6),
                   (6, 7), (6, 8), (6, 10), (7, 9), (8, 9), (9, 10)])


def adj(g):
    s = set()
    for u, w in g["edges"]:
        s.add((u, w))
        s.add((w, u))
    return s


def gtc_witness(g, seq):
    """Smallest (p, q, b, d) violating the ordering, or None."""
    a = adj(g)
    n = len(seq)
    part = lambda pos: g["part"][seq[pos - 1] - 1]
    bad = lambda x, y: part(x) != part(y) and (seq[x - 1], seq[y - 1]) not in a
    for p in range(1, n + 1):
        for q in range(p + 1, n + 1):
            if (seq[p - 1], seq[q - 1]) not in a:
                continue
            inner = [b for b in range(p + 1, q) if bad(q, b)]
            outer = [d for d in list(range(1, p)) + list(range(q + 1, n + 1)) if bad(p, d)]
            if inner and outer:
                return (p, q, min(inner), min(outer))
    return None


def w_set(g, seq, i):
    """Columns reached from row i: walk left with wraparound, skip own-part zeros."""
    a = adj(g)
    n = len(seq)
    part = lambda pos: g["part"][seq[pos - 1] - 1]
    out = []
    pos = i
    for _ in range(n - 1):
        pos = n if pos == 1 else pos - 1
        if part(pos) == part(i):
            continue
        if (seq[i - 1], seq[pos - 1]) not in a:
            break
        out.append(pos)
    return set(out)


def first_uncovered(g, seq):
    a = adj(g)
    n = len(seq)
    w = {i: w_set(g, seq, i) for i in range(1, n + 1)}
    for p in range(1, n + 1):
        for q in range(p + 1, n + 1):
            if (seq[p - 1], seq[q - 1]) in a and q not in w[p] and p not in w[q]:
                return (p, q)
    return None


def first_failing(g, n, check):
    for seq in permutations(range(1, n + 1)):
        r = check(g, list(seq))
        if r is not None:
            return list(seq), r


def induced(g, seq, quad):
    a = adj(g)
    raw = [g["part"][seq[x - 1] - 1] for x in quad]
    relabel = {}
    colors = [relabel.setdefault(c, len(relabel)) for c in raw]
    names = "ijkl"
    edges = [names[x] + names[y] for x in range(4) for y in range(x + 1, 4)
             if (seq[quad[x] - 1], seq[quad[y] - 1]) in a]
    return colors, edges


if __name__ == "__main__":
    seq, w = first_failing(FIG1, 8, gtc_witness)
    print("fig1 first failing ordering", seq, "witness (p,q,inner,outer)", w)
    seq2, w2 = first_failing(FIG2, 10, gtc_witness)
    p, q, b, d = w2
    quad = (p, b, q, d) if d > q else (d, p, b, q)
    print("fig2 first failing ordering", seq2, "witness", w2, "template", "A" if d > q else "B",
          "induced", induced(FIG2, seq2, quad))
    seq3, unc = first_failing(FIG2, 10, first_uncovered)
    print("fig2 first r-circular failure", seq3, "uncovered", unc)
