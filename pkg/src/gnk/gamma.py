"""Flip groups: Gamma_n^4, general Gamma_n^k, and the oriented variant.

Gamma_n^4 is generated by involutions d_(ijkl) indexed by dihedral classes
of 4-tuples (the cyclic order of four concyclic points), with far
commutativity for |overlap| < 3 and the pentagon relations.

For general k the generators a_{P,Q} encode exchange moves T_P -> T_Q on
k-point subconfigurations (P, Q disjoint, |P ∪ Q| = k, both sides of size
at least 2), with a_{Q,P} = a_{P,Q}^{-1}; the (k+1)-gon relations are read
off standard Gale diagrams of order k+1.  The oriented variant carries
cyclic orders on P and Q, identified under simultaneous transpositions.

Gale transforms of exact rational point sets, standard Gale diagram
enumeration, and GF(2) abelianization ranks live here too.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd

import numpy as np

from .words import Alphabet, CyclicWord, Word, word


# ---------------------------------------------------------------------------
# Gamma_n^4 generators: dihedral classes of 4-tuples


def dihedral_images(quad):
    quad = tuple(quad)
    rots = [quad[i:] + quad[:i] for i in range(4)]
    rev = quad[::-1]
    rots += [rev[i:] + rev[:i] for i in range(4)]
    return rots


def dihedral_canonical(quad):
    """Least representative of the dihedral class of a cyclic 4-tuple."""
    return min(dihedral_images(quad))


def d_symbol(quad) -> str:
    c = dihedral_canonical(quad)
    if max(c) <= 9:
        return "d_" + "".join(str(i) for i in c)
    return "d_{" + ",".join(str(i) for i in c) + "}"


def parse_d_symbol(sym: str):
    body = sym.split("_", 1)[1]
    if body.startswith("{"):
        return tuple(int(t) for t in body[1:-1].split(","))
    return tuple(int(ch) for ch in body)


class Gamma4Group:
    """Gamma_n^4 over an explicit label set; generators are involutive."""

    def __init__(self, n: int, labels=None):
        if labels is None:
            labels = tuple(range(1, n + 1))
        labels = tuple(sorted(labels))
        if len(labels) != n or n < 4:
            raise ValueError("need n >= 4 labels")
        self.n = n
        self.labels = labels
        syms = []
        for four in itertools.combinations(labels, 4):
            a, b, c, d = four
            # three dihedral classes per 4-subset
            for quad in ((a, b, c, d), (a, b, d, c), (a, c, b, d)):
                syms.append(d_symbol(quad))
        self.alphabet = Alphabet(syms, involutive=True)

    def generator(self, quad) -> Word:
        return word(self.alphabet, [d_symbol(quad)])

    def word_from_quads(self, quads) -> Word:
        return word(self.alphabet, [d_symbol(q) for q in quads])


def gamma4_presentation(n: int):
    """Relators of Gamma_n^4: involutions, far commutativity (|∩|<3), pentagons."""
    g = Gamma4Group(n)
    rels = []
    quads = [parse_d_symbol(s) for s in g.alphabet.symbols]
    for q in quads:
        rels.append(CyclicWord(g.generator(q) * g.generator(q)))
    for q1, q2 in itertools.combinations(quads, 2):
        if len(set(q1) & set(q2)) < 3:
            rels.append(CyclicWord((g.generator(q1) * g.generator(q2)) ** 2))
    seen = set()
    pentagons = []
    for five in itertools.combinations(g.labels, 5):
        for p in itertools.permutations(five):
            i, j, k, l, m = p
            w = g.word_from_quads([(i, j, k, l), (i, j, l, m), (j, k, l, m),
                                   (i, j, k, m), (i, k, l, m)])
            cw = CyclicWord(w)
            key = min(cw.letters, cw.reversal().letters)
            if key not in seen:
                seen.add(key)
                pentagons.append(cw)
    return g, rels + pentagons


# ---------------------------------------------------------------------------
# general Gamma_n^k generators a_{P,Q}


def pq_symbol(P, Q) -> str:
    P = tuple(sorted(P))
    Q = tuple(sorted(Q))
    def fmt(S):
        if S and max(S) <= 9:
            return "".join(str(i) for i in S)
        return "{" + ",".join(str(i) for i in S) + "}"
    return "a_%s,%s" % (fmt(P), fmt(Q))


def parse_pq_symbol(sym: str):
    body = sym.split("_", 1)[1]
    left, right = body.split(",", 1) if "}" not in body else (None, None)
    if left is None:
        # braced form {..},{..}
        lb = body.index("}")
        left, right = body[:lb + 1], body[lb + 2:]
        P = tuple(int(t) for t in left[1:-1].split(","))
        Q = tuple(int(t) for t in right[1:-1].split(","))
    else:
        P = tuple(int(ch) for ch in left)
        Q = tuple(int(ch) for ch in right)
    return P, Q


class GammaGroup:
    """Gamma_n^k for k >= 4: generators a_{P,Q}, a_{Q,P} = a_{P,Q}^{-1}.

    The stored symbol always has min(P ∪ Q) in P; the other orientation is
    the formal inverse.
    """

    def __init__(self, n: int, k: int, labels=None):
        if labels is None:
            labels = tuple(range(1, n + 1))
        labels = tuple(sorted(labels))
        if len(labels) != n or not 4 <= k <= n:
            raise ValueError("need 4 <= k <= n")
        self.n = n
        self.k = k
        self.labels = labels
        syms = []
        self.splits = []
        for kset in itertools.combinations(labels, k):
            for psz in range(2, k - 1):
                for P in itertools.combinations(kset, psz):
                    Q = tuple(x for x in kset if x not in P)
                    if min(P) < min(Q):
                        syms.append(pq_symbol(P, Q))
                        self.splits.append((P, Q))
        self.alphabet = Alphabet(syms, involutive=False)

    def letter(self, P, Q):
        """(symbol, sign) for a_{P,Q}, normalising inverses."""
        P, Q = tuple(sorted(P)), tuple(sorted(Q))
        if min(P) < min(Q):
            return (pq_symbol(P, Q), 1)
        return (pq_symbol(Q, P), -1)

    def word_from_pairs(self, pairs) -> Word:
        return Word(self.alphabet, [self.letter(P, Q) for P, Q in pairs])


# ---------------------------------------------------------------------------
# standard Gale diagrams


class GaleDiagram:
    """l of the 2l vertices of a regular 2l-gon, one per diameter.

    Vertex p sits at angle pi*p/l.  Canonical representative: least position
    tuple under the dihedral action of the 2l-gon.
    """

    def __init__(self, l: int, positions):
        self.l = l
        self.positions = tuple(sorted(p % (2 * l) for p in positions))
        if len(self.positions) != l:
            raise ValueError("need exactly l positions")
        for p, q in itertools.combinations(self.positions, 2):
            if (p - q) % (2 * l) == l:
                raise ValueError("two points on one diameter")

    def canonical(self) -> "GaleDiagram":
        n = 2 * self.l
        best = None
        for r in range(n):
            for sgn in (1, -1):
                cand = tuple(sorted((sgn * p + r) % n for p in self.positions))
                if best is None or cand < best:
                    best = cand
        return GaleDiagram(self.l, best)

    def satisfies_halfplane_condition(self) -> bool:
        """Every open half-plane bounded by a diameter holds >= 2 points."""
        l = self.l
        for q in range(2 * l):          # line direction angle pi*q/(2l)
            left = right = 0
            for p in self.positions:
                d = (2 * p - q) % (4 * l)
                if d == 0 or d == 2 * l:
                    continue            # point on the line
                if 0 < d < 2 * l:
                    left += 1
                else:
                    right += 1
            if left < 2 or right < 2:
                return False
        return True

    def rl_position_sets(self):
        """(R(i), L(i)) index pairs, points taken in ccw position order.

        R(i)/L(i) are the indices of the points strictly right/left of the
        oriented line spanned by point i.
        """
        pts = self.positions
        out = []
        for i, pi in enumerate(pts):
            R, L = [], []
            for j, pj in enumerate(pts):
                if j == i:
                    continue
                d = (pj - pi) % (2 * self.l)
                if 0 < d < self.l:
                    L.append(j)
                else:
                    R.append(j)
            out.append((tuple(R), tuple(L)))
        return out

    def __eq__(self, other):
        return (isinstance(other, GaleDiagram) and self.l == other.l
                and self.positions == other.positions)

    def __hash__(self):
        return hash((self.l, self.positions))

    def __repr__(self):
        return "GaleDiagram(l=%d, %r)" % (self.l, self.positions)


def enumerate_standard_gale(l: int):
    """All standard Gale diagrams of order l, canonical up to 2l-gon isometry."""
    if l < 5:
        raise ValueError("standard Gale diagrams need l >= 5")
    seen = set()
    out = []
    for bits in itertools.product((0, 1), repeat=l):
        pos = tuple((p + b * l) % (2 * l) for p, b in enumerate(bits))
        d = GaleDiagram(l, pos).canonical()
        if d.positions in seen:
            continue
        seen.add(d.positions)
        if d.satisfies_halfplane_condition():
            out.append(d)
    out.sort(key=lambda d: d.positions)
    return out


def standard_gale_count_formula(l: int) -> int:
    """Closed-form count of standard Gale diagrams of order l.

    Burnside count of diameter transversals modulo the 2l-gon isometries,
    minus the ceil(l/2) classes that fail the open-half-plane condition:

        c_l = 2^floor((l-3)/2) + (1/4l) * sum_{odd h | l} phi(h) 2^(l/h)
              - ceil(l/2).
    """
    def phi(m):
        return sum(1 for t in range(1, m + 1) if gcd(t, m) == 1)
    rot = sum(phi(h) * 2 ** (l // h) for h in range(1, l + 1)
              if l % h == 0 and h % 2 == 1)
    total = Fraction(rot, 4 * l) + 2 ** ((l - 3) // 2) - (l + 1) // 2
    assert total.denominator == 1
    return int(total)


def gale_relation_word(group: GammaGroup, diagram: GaleDiagram, M) -> Word:
    """(k+1)-gon relator for an ordered labeling M of a standard diagram.

    M lists the labels assigned to the diagram's points in ccw order; the
    relator is the product over i of a_{M_R(i), M_L(i)}.
    """
    M = tuple(M)
    if len(M) != diagram.l:
        raise ValueError("labeling must list l labels")
    pairs = []
    for R, L in diagram.rl_position_sets():
        pairs.append((tuple(M[j] for j in R), tuple(M[j] for j in L)))
    return group.word_from_pairs(pairs)


def gamma_presentation(n: int, k: int):
    """Generators and the four relation families of Gamma_n^k.

    Returns (group, inverse_pairs, far_commutativity, polygon_relators):
    inverse normalisation is structural (a_{Q,P} stored as a_{P,Q}^{-1});
    polygon relators are deduplicated by cyclic canonical form.
    """
    group = GammaGroup(n, k)
    far = []
    for (P, Q), (P2, Q2) in itertools.combinations(group.splits, 2):
        u, v = set(P) | set(Q), set(P2) | set(Q2)
        if (len(set(P) & v) < len(P) and len(set(Q) & v) < len(Q)
                and len(set(P2) & u) < len(P2) and len(set(Q2) & u) < len(Q2)):
            w1 = group.word_from_pairs([(P, Q), (P2, Q2)])
            w2 = group.word_from_pairs([(P2, Q2), (P, Q)])
            far.append(CyclicWord(w1 * w2.inverse()))
    diagrams = enumerate_standard_gale(k + 1)
    seen = set()
    polygons = []
    for M_set in itertools.combinations(group.labels, k + 1):
        for M in itertools.permutations(M_set):
            for d in diagrams:
                cw = CyclicWord(gale_relation_word(group, d, M))
                key = min(cw.letters, cw.reversal().letters)
                if key not in seen:
                    seen.add(key)
                    polygons.append(cw)
    return group, far, polygons


def pq_to_d_quad(P, Q):
    """Dictionary between a_{P,Q} (k = 4) and the dihedral 4-tuple class:
    the diagonals P and Q interleave around the quadrilateral."""
    P, Q = sorted(P), sorted(Q)
    return dihedral_canonical((P[0], Q[0], P[1], Q[1]))


# ---------------------------------------------------------------------------
# Gale transform of exact rational point sets


def _rref(rows, width):
    """Reduced row echelon form over Fractions; returns (rows, pivot columns)."""
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(width):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        rows[r] = [x / rows[r][c] for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def gale_transform(points):
    """Gale transform of n rational points in R^d: columns of a kernel basis.

    The kernel basis of the (d+1) x n matrix [coords; ones] is chosen by
    reduced row echelon form, so the output is deterministic.  Requires the
    points to affinely span R^d.
    """
    points = [tuple(Fraction(x) for x in p) for p in points]
    n = len(points)
    d = len(points[0])
    M = [[points[j][i] for j in range(n)] for i in range(d)]
    M.append([Fraction(1)] * n)
    rref, pivots = _rref(M, n)
    if len(pivots) != d + 1:
        raise ValueError("points do not affinely span R^d")
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * n
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -rref[r][fc]
        basis.append(vec)
    # columns of the basis matrix are the transform vectors
    return [tuple(basis[r][j] for r in range(len(basis))) for j in range(n)]


def primitive_direction(vec):
    """Scale a rational vector to a primitive integer vector (keep sign)."""
    vec = [Fraction(x) for x in vec]
    if all(x == 0 for x in vec):
        return tuple(0 for _ in vec)
    den = 1
    for x in vec:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    return tuple(x // g for x in ints)


def gale_diagram(points):
    """Normalized-direction multiset of the Gale transform."""
    return [primitive_direction(v) for v in gale_transform(points)]


def in_relative_interior_zero(vectors) -> bool:
    """Exact test: does 0 lie in the relative interior of conv(vectors)?

    Equivalent to the existence of strictly positive rational lambda with
    sum(lambda_v * v) = 0; decided by phase-1 simplex with Bland's rule on
    the scaled system lambda_v >= 1.
    """
    vectors = [tuple(Fraction(x) for x in v) for v in vectors]
    if not vectors:
        return False
    d = len(vectors[0])
    n = len(vectors)
    # mu_v >= 0, sum (mu_v + 1) v = 0  ->  A mu = b with A = [v], b = -sum v
    A = [[vectors[j][i] for j in range(n)] for i in range(d)]
    b = [-sum(vectors[j][i] for j in range(n)) for i in range(d)]
    return _exact_lp_feasible(A, b)


def _exact_lp_feasible(A, b) -> bool:
    """Feasibility of A x = b, x >= 0 over exact rationals (phase-1 simplex)."""
    m = len(A)
    n = len(A[0]) if m else 0
    rows = []
    for i in range(m):
        row = [Fraction(x) for x in A[i]] + [Fraction(0)] * m + [Fraction(b[i])]
        if row[-1] < 0:
            row = [-x for x in row]
        row[n + i] = Fraction(1)
        rows.append(row)
    cost = [Fraction(0)] * (n + m + 1)
    for i in range(m):
        cost = [c - r for c, r in zip(cost, rows[i])]
    for i in range(m):
        cost[n + i] = Fraction(0)          # artificials start basic
    basis = [n + i for i in range(m)]
    while True:
        enter = None
        for j in range(n):                # Bland: first improving original column
            if cost[j] < 0:
                enter = j
                break
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            if rows[i][enter] > 0:
                ratio = rows[i][-1] / rows[i][enter]
                if best is None or ratio < best or (ratio == best
                                                    and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            return False                  # unbounded phase-1: cannot happen
        piv = rows[leave][enter]
        rows[leave] = [x / piv for x in rows[leave]]
        for i in range(m):
            if i != leave and rows[i][enter] != 0:
                f = rows[i][enter]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[leave])]
        if cost[enter] != 0:
            f = cost[enter]
            cost = [x - f * y for x, y in zip(cost, rows[leave])]
        basis[leave] = enter
    objective = -cost[-1]
    return objective == 0


def polytope_faces_via_gale(points):
    """Index sets J that span faces of conv(points), via the Gale criterion:
    J is a face iff 0 is in the relative interior of the complementary
    transform vectors."""
    Y = gale_transform(points)
    n = len(points)
    faces = []
    for r in range(n + 1):
        for J in itertools.combinations(range(n), r):
            rest = [Y[i] for i in range(n) if i not in J]
            if not rest:
                continue
            if in_relative_interior_zero(rest):
                faces.append(J)
    return faces


# ---------------------------------------------------------------------------
# GF(2) abelianization ranks


def gf2_rank(rows: np.ndarray) -> int:
    """Rank over GF(2) by XOR elimination on uint8 rows."""
    M = (np.asarray(rows, dtype=np.uint8) % 2).copy()
    if M.size == 0:
        return 0
    m, n = M.shape
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, m):
            if M[i, c]:
                piv = i
                break
        if piv is None:
            continue
        M[[r, piv]] = M[[piv, r]]
        mask = M[:, c].astype(bool).copy()
        mask[r] = False
        M[mask] ^= M[r]
        r += 1
        if r == m:
            break
    return r


def abelianization_rank_gf2(generator_index, relator_rows, extra_rows=()):
    """(num_generators, num_relations, rank) of a GF(2) exponent matrix.

    ``generator_index`` maps generator keys to column numbers;
    ``relator_rows`` is an iterable of generator-key multisets (iterables),
    each XOR-accumulated into one row.
    """
    ncols = len(generator_index)
    rows = []
    for rel in relator_rows:
        row = np.zeros(ncols, dtype=np.uint8)
        for key in rel:
            row[generator_index[key]] ^= 1
        rows.append(row)
    nrel = len(rows)
    for rel in extra_rows:
        row = np.zeros(ncols, dtype=np.uint8)
        for key in rel:
            row[generator_index[key]] ^= 1
        rows.append(row)
    M = np.array(rows, dtype=np.uint8) if rows else np.zeros((0, ncols), np.uint8)
    return ncols, nrel, gf2_rank(M)


# ---------------------------------------------------------------------------
# the oriented variant


def cyclic_rotation_canonical(seq):
    seq = tuple(seq)
    n = len(seq)
    return min(tuple(seq[(i + j) % n] for j in range(n)) for i in range(n))


def oriented_generator_classes(n: int, k: int):
    """Generator classes of the oriented variant: ordered pairs of cyclically
    oriented disjoint sets, modulo simultaneous transpositions.

    A transposition on a part of size 2 fixes its cyclic order, so for parts
    of size 2 the partner's orientation collapses; classes are computed as
    orbits of (cyc P, cyc Q) under pairs of equal-parity permutations.
    """
    classes = {}
    reps = []
    labels = range(1, n + 1)
    for kset in itertools.combinations(labels, k):
        for psz in range(2, k - 1):
            for P in itertools.combinations(kset, psz):
                Q = tuple(x for x in kset if x not in P)
                for cp in _cyclic_orders(P):
                    for cq in _cyclic_orders(Q):
                        key = _oriented_canonical(cp, cq)
                        if key not in classes:
                            classes[key] = len(reps)
                            reps.append(key)
    return classes, reps


def _cyclic_orders(S):
    S = tuple(sorted(S))
    if len(S) <= 2:
        return [S]
    first = S[0]
    return [cyclic_rotation_canonical((first,) + rest)
            for rest in itertools.permutations(S[1:])]


def _oriented_canonical(cp, cq):
    """Canonical orbit representative under simultaneous transpositions."""
    def transpositions(cyc):
        n = len(cyc)
        out = set()
        for i in range(n):
            for j in range(i + 1, n):
                lst = list(cyc)
                lst[i], lst[j] = lst[j], lst[i]
                out.add(cyclic_rotation_canonical(lst))
        return out
    seen = {(cyclic_rotation_canonical(cp), cyclic_rotation_canonical(cq))}
    frontier = list(seen)
    while frontier:
        nxt = []
        for p, q in frontier:
            for p2 in transpositions(p):
                for q2 in transpositions(q):
                    cand = (p2, q2)
                    if cand not in seen:
                        seen.add(cand)
                        nxt.append(cand)
        frontier = nxt
    return min(seen)


def oriented_abelianization_gf2(n: int, k: int, extra_words=()):
    """GF(2) abelianization data of the oriented flip group.

    Returns (num_generators, num_relations, rank [, rank with each extra]).
    Relator instances: for each standard Gale diagram of order k+1, each
    (k+1)-subset M and each ordering of M, one polygon row; letters are the
    oriented classes of (M_R(i), M_L(i)); a letter with inverse sign
    contributes to the class of the swapped pair.
    """
    classes, _ = oriented_generator_classes(n, k)
    diagrams = enumerate_standard_gale(k + 1)
    rows = []
    labels = range(1, n + 1)
    for d in diagrams:
        rl = d.rl_position_sets()
        for M_set in itertools.combinations(labels, k + 1):
            for M in itertools.permutations(M_set):
                row = []
                for R, L in rl:
                    P = tuple(M[j] for j in R)
                    Q = tuple(M[j] for j in L)
                    row.append(_oriented_canonical(
                        cyclic_rotation_canonical(P),
                        cyclic_rotation_canonical(Q)))
                rows.append(row)
    extra = []
    for letters in extra_words:
        row = []
        for (P, Q, sign) in letters:
            if sign == -1:
                P, Q = Q, P
            row.append(_oriented_canonical(cyclic_rotation_canonical(P),
                                           cyclic_rotation_canonical(Q)))
        extra.append(row)
    ngen, nrel, rank = abelianization_rank_gf2(classes, rows)
    out = [ngen, nrel, rank]
    if extra:
        ngen2, _, rank2 = abelianization_rank_gf2(classes, rows, extra)
        out.append(rank2)
    return tuple(out)
