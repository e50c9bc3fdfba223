#!/usr/bin/env python3
"""Brute-force reference values for the unit tests.

Everything here is computed from first principles (plain enumeration, no
shared code with the C++ library). The tests freeze the printed numbers.
Run: python3 tools/oracle.py
"""
from collections import Counter, deque
from fractions import Fraction
from itertools import permutations, product


def maj(w):
    return sum(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def inv(w):
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def inverse(w):
    out = [0] * len(w)
    for i, x in enumerate(w):
        out[x - 1] = i + 1
    return tuple(out)


def alternating(w):
    return all((w[i] < w[i + 1]) == (i % 2 == 0) for i in range(len(w) - 1))


def poly(exps):
    c = Counter(exps)
    return [c.get(e, 0) for e in range(max(c) + 1)] if c else []


def euler_maj(n):
    return poly(maj(inverse(w)) for w in permutations(range(1, n + 1)) if alternating(w))


def foata(w):
    # classical Foata second fundamental transformation
    out = [w[0]]
    for x in w[1:]:
        last = out[-1]
        blocks, cur = [], []
        for y in out:
            cur.append(y)
            if (y > x) == (last > x):
                blocks.append(cur)
                cur = []
        out = [b for blk in blocks for b in [blk[-1]] + blk[:-1]] + [x]
    return tuple(out)


def staircase(n):
    return [n - 1 - i for i in range(n - 1)]


def cells(lam, mu=()):
    mu = list(mu) + [0] * (len(lam) - len(mu))
    return [(i + 1, j + 1) for i in range(len(lam)) for j in range(mu[i], lam[i])]


def tableau_gf(lam, mu, kind, order):
    cs = cells(lam, mu)
    cnt = [0] * (order + 1)

    def rec(i, fill, total):
        if i == len(cs):
            cnt[total] += 1
            return
        r, c = cs[i]
        lo = 0
        if (r, c - 1) in fill:
            lo = max(lo, fill[(r, c - 1)] + (1 if kind == "st" else 0))
        if (r - 1, c) in fill:
            lo = max(lo, fill[(r - 1, c)] + (0 if kind == "rpp" else 1))
        for e in range(lo, order - total + 1):
            fill[(r, c)] = e
            rec(i + 1, fill, total + e)
            del fill[(r, c)]

    rec(0, {}, 0)
    return cnt


def syt_count(lam, mu=()):
    cs = set(cells(lam, mu))

    def rec(left):
        if not left:
            return 1
        total = 0
        for c in left:
            r, j = c
            if (r - 1, j) in left or (r, j - 1) in left:
                continue
            total += rec(left - {c})
        return total

    return rec(frozenset(cs))


def excited(lam, mu):
    lam_set = set(cells(lam))
    start = frozenset(cells(mu))
    seen = {start}
    todo = deque([start])
    while todo:
        d = todo.popleft()
        for (i, j) in d:
            nxt = (i + 1, j + 1)
            if nxt in lam_set and nxt not in d and (i + 1, j) not in d and (i, j + 1) not in d:
                e = (d - {(i, j)}) | {nxt}
                if e not in seen:
                    seen.add(e)
                    todo.append(e)
    return seen


def pleasant(lam, mu):
    diagrams = excited(lam, mu)
    union = sorted(set().union(*diagrams))
    rest = len(cells(lam)) - len(union)
    good = 0
    for bits in product((0, 1), repeat=len(union)):
        s = {c for c, b in zip(union, bits) if b}
        if any(not (s & d) for d in diagrams):
            good += 1
    return good << rest


def dyck(n):
    out = []

    def rec(w, h):
        if len(w) == 2 * n:
            if h == 0:
                out.append(w)
            return
        rec(w + "U", h + 1)
        if h > 0:
            rec(w + "D", h - 1)

    rec("", 0)
    return out


def little_schroder(n):
    # Schroder paths of length 2n with no flat step on the axis
    count = 0

    def rec(x, h):
        nonlocal count
        if x == 2 * n:
            count += h == 0
            return
        if x > 2 * n:
            return
        rec(x + 1, h + 1)
        if h > 0:
            rec(x + 1, h - 1)
            rec(x + 2, h)

    rec(0, 0)
    return count


def naruse(lam, mu):
    lam_cells = cells(lam)
    conj = [sum(1 for p in lam if p > j) for j in range(lam[0])]
    total = Fraction(0)
    for d in excited(lam, mu):
        t = Fraction(1)
        for (i, j) in lam_cells:
            if (i, j) not in d:
                t /= lam[i - 1] + conj[j - 1] - i - j + 1
        total += t
    size = len(cells(lam, mu))
    f = 1
    for i in range(2, size + 1):
        f *= i
    return f * total


def main():
    for n in range(1, 8):
        print(f"E_{n} maj(pi^-1) over Alt: {euler_maj(n)}")
    print("foata(31524) =", "".join(map(str, foata((3, 1, 5, 2, 4)))))
    print("foata(496318725) =", "".join(map(str, foata((4, 9, 6, 3, 1, 8, 7, 2, 5)))))
    for lam, mu in [(staircase(4), staircase(2)), (staircase(5), staircase(1)), (staircase(5), staircase(3)),
                    ([3, 3], [1]), ([2, 2, 2], [1, 1])]:
        for kind in ("ssyt", "rpp", "st"):
            print(f"{kind} {lam}/{mu} to q^10: {tableau_gf(lam, mu, kind, 10)}")
    print(f"rpp {staircase(6)}/{staircase(3)} to q^8: {tableau_gf(staircase(6), staircase(3), 'rpp', 8)}")
    for lam, mu in [([4, 4, 3, 3], [2, 1]), (staircase(6), staircase(2)), (staircase(7), staircase(3)),
                    (staircase(6), staircase(4)), ([4, 4, 4], [2, 2])]:
        print(f"excited {lam}/{mu}: {len(excited(lam, mu))}")
    for lam, mu in [(staircase(3), staircase(1)), (staircase(4), staircase(2)), (staircase(5), staircase(3)),
                    (staircase(5), staircase(2)), (staircase(5), staircase(1)), ([3, 3], [1]), ([2, 2], [1]),
                    (staircase(6), staircase(2)), (staircase(6), staircase(3)), ([4, 4, 4, 4], [2, 2]),
                    ([3, 3, 3], [2, 2]), ([3, 3], [2])]:
        print(f"pleasant {lam}/{mu}: {pleasant(lam, mu)}")
    for lam, mu in [(staircase(5), staircase(1)), (staircase(6), staircase(2)), ([4, 4, 3, 3], [2, 1]),
                    ([3, 3, 3], [1, 1])]:
        print(f"syt {lam}/{mu}: {syt_count(lam, mu)}  naruse {naruse(lam, mu)}")
    print("catalan:", [len(dyck(n)) for n in range(8)])
    print("little schroder:", [little_schroder(n) for n in range(7)])


if __name__ == "__main__":
    main()
