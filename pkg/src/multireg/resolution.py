"""Free complexes, minimal free resolutions and Betti tables.

A resolution is built as a Schreyer-style tower of iterated syzygy
computations and then minimalized: every invertible (degree-zero)
entry of a differential is used to cancel one generator from each of
the two neighboring terms, a homotopy equivalence that preserves
homology.  A complex with no such entries is minimal, and its twist
multiplicities are the Betti numbers of the module it resolves.
"""

from collections import Counter

from .ringcore import (
    FreeModuleSpec,
    MatrixOverS,
    Poly,
    Vector,
    deg_add,
    deg_total,
    term_key,
)


class FreeComplex:
    """A chain of free modules terms[0..L] with homogeneous
    differentials d[i]: terms[i] <- terms[i+1] composing to zero."""

    __slots__ = ("terms", "differentials")

    def __init__(self, terms, differentials, check=True):
        self.terms = list(terms)
        self.differentials = list(differentials)
        if len(self.differentials) != max(len(self.terms) - 1, 0):
            raise ValueError("need one differential per adjacent pair")
        for i, d in enumerate(self.differentials):
            if d.target != self.terms[i] or d.source != self.terms[i + 1]:
                raise ValueError(f"differential {i} has wrong shape")
        if check:
            for i in range(len(self.differentials) - 1):
                comp = self.differentials[i].compose(self.differentials[i + 1])
                if not comp.is_zero():
                    raise ValueError(f"d_{i} o d_{i + 1} != 0")

    @property
    def ring(self):
        return self.terms[0].ring

    @property
    def length(self):
        return len(self.terms) - 1

    def differential(self, i):
        return self.differentials[i]

    def __repr__(self):
        ranks = " <- ".join(str(t.rank) for t in self.terms)
        return f"FreeComplex({ranks})"


class BettiTable:
    """Multiplicity of each twist at each homological index of a
    complex; for a minimal resolution these are the Betti numbers."""

    __slots__ = ("rank", "data", "from_minimal")

    def __init__(self, rank, data, from_minimal=True):
        self.rank = rank
        self.data = {(i, tuple(b)): int(m) for (i, b), m in data.items() if m}
        self.from_minimal = from_minimal

    @classmethod
    def from_complex(cls, C, from_minimal=True):
        counts = Counter()
        for i, spec in enumerate(C.terms):
            for tw in spec.twists:
                counts[(i, tw)] += 1
        rank = C.ring.r
        return cls(rank, counts, from_minimal=from_minimal)

    def __eq__(self, other):
        return isinstance(other, BettiTable) and self.data == other.data

    def __bool__(self):
        return bool(self.data)

    def items(self):
        return sorted(self.data.items())

    def multiplicity(self, i, b):
        return self.data.get((i, tuple(b)), 0)

    def support(self, i):
        """The set of twists with nonzero multiplicity at index i."""
        return {b for (j, b) in self.data if j == i}

    def max_index(self):
        return max((i for i, _ in self.data), default=-1)

    def total_rank(self, i):
        return sum(m for (j, _), m in self.data.items() if j == i)

    def indexed(self):
        out = {}
        for (i, b), m in sorted(self.data.items()):
            out.setdefault(i, {})[b] = m
        return out

    def pretty(self):
        """Text grid: one row per twist, one column per index."""
        if not self.data:
            return "(zero module)"
        imax = self.max_index()
        degs = sorted({b for (_, b) in self.data},
                      key=lambda b: (deg_total(b), b))
        width = max(6, max(len(str(list(b))) for b in degs) + 1)
        head = " " * width + "".join(f"{i:>6}" for i in range(imax + 1))
        lines = [head]
        for b in degs:
            row = f"{str(list(b)):<{width}}"
            for i in range(imax + 1):
                m = self.data.get((i, b), 0)
                row += f"{m if m else '.':>6}"
            lines.append(row)
        return "\n".join(lines)

    def to_json(self):
        return {
            "schema": "multireg/betti/v1",
            "minimal": self.from_minimal,
            "entries": [{"index": i, "degree": list(b), "multiplicity": m}
                        for (i, b), m in self.items()],
        }

    def __repr__(self):
        return f"BettiTable({dict(self.items())})"


def is_minimal_complex(C):
    """True when no differential entry is a nonzero constant."""
    for d in C.differentials:
        for col in d.columns:
            for (tot, m, negc), _ in col.terms:
                if tot == 0:
                    return False
    return True


# ---------------------------------------------------------------------------
# minimalization

def _to_mutable(C):
    ring = C.ring
    twists = [list(t.twists) for t in C.terms]
    diffs = []
    for d in C.differentials:
        cols = []
        for col in d.columns:
            entries = {}
            for (tot, m, negc), c in col.terms:
                entries.setdefault(-negc, []).append((m, c))
            cols.append({k: Poly(ring, tuple(v), _canonical=False)
                         for k, v in entries.items()})
        diffs.append(cols)
    return twists, diffs


def _find_unit(cols):
    """First unit entry in row-major order: smallest row index, then
    column index."""
    best = None
    for l, col in enumerate(cols):
        for k, f in col.items():
            if f.is_unit_constant():
                if best is None or (k, l) < best:
                    best = (k, l)
    return best


def _eliminate(ring, twists, diffs, i, k, l):
    """Cancel generator k of level i against generator l of level i+1
    using the unit at (row k, column l) of diffs[i]."""
    p = ring.p
    A = diffs[i]
    u = A[l][k].terms[0][1]
    uinv = pow(u, -1, p)
    pivot_col = A[l]
    # column operations clearing row k, tracked for the next differential
    qs = {}
    for c, col in enumerate(A):
        if c == l:
            continue
        f = col.get(k)
        if f is None:
            continue
        q = f.scale(uinv)
        qs[c] = q
        for r, g in pivot_col.items():
            new = col.get(r, Poly.zero(ring)) - q * g
            if new:
                col[r] = new
            else:
                col.pop(r, None)
    if i + 1 < len(diffs):
        B = diffs[i + 1]
        for col in B:
            add = Poly.zero(ring)
            for c, q in qs.items():
                f = col.get(c)
                if f is not None:
                    add = add + q * f
            if add:
                new = col.get(l, Poly.zero(ring)) + add
                if new:
                    col[l] = new
                else:
                    col.pop(l, None)
            # row l will be deleted; leftover entries there vanish by
            # exactness of the composite (checked below)
    # row operations clearing column l, tracked for the previous one
    if i > 0:
        C = diffs[i - 1]
        ws = {}
        for r, g in pivot_col.items():
            if r != k:
                ws[r] = g.scale(uinv)
        if ws:
            target = C[k]
            for r, w in ws.items():
                src = C[r]
                for row, f in src.items():
                    new = target.get(row, Poly.zero(ring)) + w * f
                    if new:
                        target[row] = new
                    else:
                        target.pop(row, None)
    # delete column l and row k from A
    A.pop(l)
    for col in A:
        col.pop(k, None)
    # delete row l from the next differential
    if i + 1 < len(diffs):
        for col in diffs[i + 1]:
            col.pop(l, None)
    # delete column k from the previous differential
    if i > 0:
        diffs[i - 1].pop(k)
    # renumber rows above k in level i and fix twist lists
    for col in A:
        for r in sorted([r for r in col if r > k]):
            col[r - 1] = col.pop(r)
    if i + 1 < len(diffs):
        for col in diffs[i + 1]:
            for r in sorted([r for r in col if r > l]):
                col[r - 1] = col.pop(r)
    twists[i].pop(k)
    twists[i + 1].pop(l)


def minimalize(C):
    """Homotopy-equivalent complex with no constant entries left in
    any differential; homology is unchanged."""
    if not C.differentials:
        return C
    ring = C.ring
    twists, diffs = _to_mutable(C)
    changed = True
    while changed:
        changed = False
        for i in range(len(diffs)):
            while True:
                hit = _find_unit(diffs[i])
                if hit is None:
                    break
                _eliminate(ring, twists, diffs, i, hit[0], hit[1])
                changed = True
    # rebuild, dropping trailing zero terms
    specs = [FreeModuleSpec(ring, tw) for tw in twists]
    mats = []
    for i, cols in enumerate(diffs):
        vecs = []
        for col in cols:
            terms = []
            for k, f in col.items():
                for m, c in f.terms:
                    terms.append((term_key(k, m), c))
            vecs.append(Vector(terms))
        mats.append(MatrixOverS(specs[i + 1], specs[i], vecs, check=False))
    while specs and specs[-1].rank == 0:
        specs.pop()
        if mats:
            mats.pop()
    if not specs:
        specs = [FreeModuleSpec(ring, ())]
    return FreeComplex(specs, mats, check=False)


def free_resolution(M, length_cap=None):
    """Minimal free resolution of coker(M.relations), up to homological
    index ``length_cap`` (default: the number of variables, which
    bounds every resolution length over S).

    The tower of iterated syzygies is computed first and minimalized
    second.  Each tower step replaces the incoming kernel generators
    by their reduced Groebner basis, whose syzygies come with known
    induced lead terms and can be pruned before the next step; the
    minimalization at the end removes the non-minimal generators this
    introduces along with everything else.
    """
    from .groebner import schreyer_frame
    ring = M.ring
    cap = ring.nvars if length_cap is None else length_cap
    diffs = schreyer_frame(M.relations, cap)
    terms = [M.F0] + [d.source for d in diffs]
    raw = FreeComplex(terms, diffs, check=False)
    return minimalize(raw)


def betti(C):
    """Twist multiplicities of a complex; flagged as honest Betti
    numbers only when the complex is minimal."""
    return BettiTable.from_complex(C, from_minimal=is_minimal_complex(C))


# ---------------------------------------------------------------------------
# structured complexes used elsewhere

def koszul_complex(ring, elements):
    """Koszul complex on homogeneous ring elements: terms are exterior
    powers, the differential contracts with the element list."""
    degs = [f.degree() for f in elements]
    c = len(elements)
    from itertools import combinations
    levels = []
    for k in range(c + 1):
        subsets = list(combinations(range(c), k))
        twists = [tuple(sum(degs[j][t] for j in T) for t in range(ring.r))
                  for T in subsets]
        levels.append((subsets, FreeModuleSpec(ring, twists)))
    terms = [spec for _, spec in levels]
    diffs = []
    p = ring.p
    for k in range(1, c + 1):
        subsets, spec = levels[k]
        prev_index = {T: i for i, T in enumerate(levels[k - 1][0])}
        cols = []
        for T in subsets:
            entries = []
            for pos, j in enumerate(T):
                rest = tuple(t for t in T if t != j)
                sign = 1 if pos % 2 == 0 else p - 1
                f = elements[j].scale(sign)
                row = prev_index[rest]
                for m, cc in f.terms:
                    entries.append((term_key(row, m), cc))
            cols.append(Vector(entries))
        diffs.append(MatrixOverS(spec, levels[k - 1][1], cols, check=False))
    return FreeComplex(terms, diffs, check=False)


def tensor_complexes(A, B):
    """Tensor product of two free complexes over S, with the usual
    sign (-1)^a on the second differential."""
    ring = A.ring
    p = ring.p
    la, lb = len(A.terms), len(B.terms)
    index = {}
    terms = []
    for k in range(la + lb - 1):
        twists = []
        for a in range(max(0, k - lb + 1), min(k, la - 1) + 1):
            b = k - a
            for i in range(A.terms[a].rank):
                for j in range(B.terms[b].rank):
                    index[(a, i, b, j)] = (k, len(twists))
                    twists.append(deg_add(A.terms[a].twists[i],
                                          B.terms[b].twists[j]))
        terms.append(FreeModuleSpec(ring, twists))
    diffs = []
    for k in range(1, la + lb - 1):
        cols = [None] * terms[k].rank
        for a in range(max(0, k - lb + 1), min(k, la - 1) + 1):
            b = k - a
            for i in range(A.terms[a].rank):
                for j in range(B.terms[b].rank):
                    _, pos = index[(a, i, b, j)]
                    entries = []
                    if a > 0:
                        col = A.differentials[a - 1].columns[i]
                        for (tot, m, negc), c in col.terms:
                            _, row = index[(a - 1, -negc, b, j)]
                            entries.append((term_key(row, m), c))
                    if b > 0:
                        sign = 1 if a % 2 == 0 else p - 1
                        col = B.differentials[b - 1].columns[j]
                        for (tot, m, negc), c in col.terms:
                            _, row = index[(a, i, b - 1, -negc)]
                            entries.append((term_key(row, m), (c * sign) % p))
                    cols[pos] = Vector(entries)
        diffs.append(MatrixOverS(terms[k], terms[k - 1], cols, check=False))
    return FreeComplex(terms, diffs, check=False)
