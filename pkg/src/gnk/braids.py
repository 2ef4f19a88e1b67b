"""Pure braid words and their homomorphisms into the invariant groups.

A pure braid on n strands is a word in the generators b_ij (1 <= i < j <= n).
The maps implemented here:

* pb_to_gn3   -- trisecant compiler image in G_n^3, via the circle dynamics:
                 c_{i,j} = prod_{k>j} a_{ijk} * prod_{k<j} a_{ijk} and
                 b_ij -> c_{i,i+1}^-1 .. c_{i,j-1}^-1 c_{i,j}^2 c_{i,j-1} .. c_{i,i+1}.
* pb_to_gn4   -- concyclicity compiler image in G_n^4 (parabola dynamics).
* pb_to_gamma4 -- empty-circle (Delaunay flip) compiler image in Gamma_n^4.
* pb_to_gamma4_graded -- refinement splitting flip letters by the number of
                 points inside the event circle mod (n-4).
* strand deletion p_m / q_m, Brunnian certificates, the free-product
  invariants phi_{(i,j,k)}, and the crossing-parity machinery connecting
  G_n^2 to its parity and dotted enrichments.

Strand-label bookkeeping: maps that drop a strand keep the surviving labels
by default (matching the worked examples); pass renumber=True where the
classical table form with shifted indices is wanted.
"""

from __future__ import annotations

import itertools

from .gamma import Gamma4Group
from .gnk import GnkGroup, parse_subset_symbol, subset_symbol
from .words import Alphabet, Word, word


# ---------------------------------------------------------------------------
# pure braid words


def b_symbol(i, j):
    return "b_%d_%d" % (i, j)


class PureBraidWord:
    """Freely reduced word over the generators b_ij of PB_n."""

    def __init__(self, n: int, letters=()):
        self.n = n
        out = []
        for (i, j), e in letters:
            if not (1 <= i < j <= n):
                raise ValueError("bad generator index (i,j)=(%d,%d)" % (i, j))
            if e not in (1, -1):
                raise ValueError("exponent must be +-1")
            if out and out[-1][0] == (i, j) and out[-1][1] == -e:
                out.pop()
            else:
                out.append(((i, j), e))
        self.letters = tuple(out)

    def __mul__(self, other):
        if other.n != self.n:
            raise ValueError("strand count mismatch")
        return PureBraidWord(self.n, self.letters + other.letters)

    def inverse(self):
        return PureBraidWord(self.n, [(ij, -e) for ij, e in reversed(self.letters)])

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        w = PureBraidWord(self.n)
        for _ in range(k):
            w = w * self
        return w

    def __eq__(self, other):
        return (isinstance(other, PureBraidWord) and self.n == other.n
                and self.letters == other.letters)

    def __len__(self):
        return len(self.letters)

    def __repr__(self):
        return "PureBraidWord(%s)" % (format_braid(self) or "1")


def generator(n, i, j, e=1):
    return PureBraidWord(n, [((i, j), e)])


def commutator(a: PureBraidWord, b: PureBraidWord) -> PureBraidWord:
    return a * b * a.inverse() * b.inverse()


def format_braid(b: PureBraidWord) -> str:
    return " ".join(b_symbol(i, j) + ("" if e == 1 else "^-1")
                    for (i, j), e in b.letters)


def parse_braid(n: int, text: str) -> PureBraidWord:
    letters = []
    for tok in text.split():
        e = 1
        if tok.endswith("^-1"):
            e = -1
            tok = tok[:-3]
        _, i, j = tok.split("_")
        letters.append(((int(i), int(j)), e))
    return PureBraidWord(n, letters)


def pb_relation_pairs(n: int):
    """Defining relation pairs (lhs, rhs) of PB_n used for well-definedness
    tests: commuting pairs (i<j<k<l and i<k<l<j) and the triple relations
    b_ij b_ik b_jk = b_ik b_jk b_ij = b_jk b_ij b_ik."""
    pairs = []
    rng = range(1, n + 1)
    for i, j, k, l in itertools.combinations(rng, 4):
        for (a, b), (c, d) in (((i, j), (k, l)), ((i, k), (l, j))):
            c, d = min(c, d), max(c, d)
            u = generator(n, a, b) * generator(n, c, d)
            v = generator(n, c, d) * generator(n, a, b)
            pairs.append((u, v))
    for i, j, k in itertools.combinations(rng, 3):
        t1 = generator(n, i, j) * generator(n, i, k) * generator(n, j, k)
        t2 = generator(n, i, k) * generator(n, j, k) * generator(n, i, j)
        t3 = generator(n, j, k) * generator(n, i, j) * generator(n, i, k)
        pairs.append((t1, t2))
        pairs.append((t2, t3))
    return pairs


# ---------------------------------------------------------------------------
# PB_n -> G_n^3


def c_ij_gn3(group: GnkGroup, i: int, j: int) -> Word:
    """c_{i,j} = prod_{k=j+1}^n a_{ijk} * prod_{k=1}^{j-1} a_{ijk} (k != i)."""
    n = group.n
    subs = [tuple(sorted((i, j, k))) for k in range(j + 1, n + 1) if k != i]
    subs += [tuple(sorted((i, j, k))) for k in range(1, j) if k != i]
    return group.word_from_subsets(subs)


def pb_to_gn3(b: PureBraidWord, group: GnkGroup = None) -> Word:
    if group is None:
        group = GnkGroup(b.n, 3)
    out = Word(group.alphabet)
    for (i, j), e in b.letters:
        cs = [c_ij_gn3(group, i, m) for m in range(i + 1, j + 1)]
        img = Word(group.alphabet)
        for c in cs[:-1]:
            img = img * c.inverse()
        img = img * cs[-1] * cs[-1]
        for c in reversed(cs[:-1]):
            img = img * c
        out = out * (img if e == 1 else img.inverse())
    return out


# ---------------------------------------------------------------------------
# PB_n -> G_n^4 (parabola dynamics)


def _quad(group, i, j, p, q):
    m = (i, j, p, q)
    if len(set(m)) != 4 or not all(x in group.labels for x in m):
        return None
    return tuple(sorted(m))


def c_ij_gn4(group: GnkGroup, i: int, j: int) -> Word:
    """c_ij = c^II * c^I * c^III: concyclicity letters met while the mover
    passes the anchor j, grouped by the straddling / below / above pairs."""
    n = group.n
    subs = []
    for p in range(1, j):                      # II: one index below j, one above
        for q in range(1, n - j + 1):
            m = _quad(group, i, j, j - p, j + q)
            if m:
                subs.append(m)
    for p in range(2, j):                      # I: both below j
        for q in range(1, p):
            m = _quad(group, i, j, p, q)
            if m:
                subs.append(m)
    for p in range(1, n - j):                  # III: both above j
        for q in range(0, p):
            m = _quad(group, i, j, n - p, n - q)
            if m:
                subs.append(m)
    return group.word_from_subsets(subs)


def pb_to_gn4(b: PureBraidWord, group: GnkGroup = None) -> Word:
    if b.n < 4:
        raise ValueError("G_n^4 needs n >= 4")
    if group is None:
        group = GnkGroup(b.n, 4)
    out = Word(group.alphabet)
    for (i, j), e in b.letters:
        cs = [c_ij_gn4(group, i, m) for m in range(i + 1, j + 1)]
        img = Word(group.alphabet)
        for c in cs[:-1]:
            img = img * c
        img = img * cs[-1] * cs[-1]
        for c in reversed(cs[:-1]):
            img = img * c.inverse()
        out = out * (img if e == 1 else img.inverse())
    return out


# ---------------------------------------------------------------------------
# PB_n -> Gamma_n^4


def _inside_data(n, i, c, p, q):
    """Static inside count of the circle through {p, q, c} on the parabola
    configuration, and whether the mover i starts inside it."""
    s1, s2, s3 = sorted((p, q, c))
    count = (s1 - 1) + (s3 - s2 - 1)
    mover_inside = i < s1 or s2 < i < s3
    return count, mover_inside


def _insert_adjacent(triple_sorted, anchor, mover, side):
    """Insert the mover next to the anchor in the cyclic order of the
    sorted triple; side='after' or 'before' (increasing-label direction)."""
    t = list(triple_sorted)
    pos = t.index(anchor)
    if side == "after":
        t.insert(pos + 1, mover)
    else:
        t.insert(pos, mover)
    return tuple(t)


def _gamma_phase_pairs(n, i, anchor):
    """Pair enumeration (II then I then III) for the pass of one anchor."""
    pairs = []
    m = anchor
    for p in range(1, m):
        for q in range(1, n - m + 1):
            pairs.append((m - p, m + q))
    for p in range(2, m):
        for q in range(1, p):
            pairs.append((p, q))
    for p in range(1, n - m):
        for q in range(0, p):
            pairs.append((n - p, n - q))
    out = []
    for p, q in pairs:
        if len({p, q, i, m}) == 4 and 1 <= p <= n and 1 <= q <= n:
            out.append((p, q))
    return out


def _gamma_phase(group: Gamma4Group, i, anchor, side):
    """Empty-circle letters emitted while the mover i passes the anchor."""
    n = group.n
    quads = []
    for p, q in _gamma_phase_pairs(n, i, anchor):
        count, mover_inside = _inside_data(n, i, anchor, p, q)
        if (count == 1) if mover_inside else (count == 0):
            quads.append(_insert_adjacent(sorted((p, q, anchor)), anchor, i, side))
    return group.word_from_quads(quads)


def pb_to_gamma4(b: PureBraidWord, group: Gamma4Group = None) -> Word:
    """Delaunay-flip compiler image of a pure braid in Gamma_n^4.

    The mover i hops past the anchors i+1 .. j, loops around j, and returns;
    each hop crosses all circles through the anchor, and crossing an empty
    circle emits the flip letter with the mover adjacent to the anchor.
    """
    if b.n < 4:
        raise ValueError("Gamma_n^4 needs n >= 4")
    if group is None:
        group = Gamma4Group(b.n)
    out = Word(group.alphabet)
    for (i, j), e in b.letters:
        img = Word(group.alphabet)
        for m in range(i + 1, j + 1):
            img = img * _gamma_phase(group, i, m, "after")
        img = img * _gamma_phase(group, i, j, "before")
        for m in range(j - 1, i, -1):
            img = img * _gamma_phase(group, i, m, "after").inverse()
        out = out * (img if e == 1 else img.inverse())
    return out


def pb_to_gamma4_graded(b: PureBraidWord, groups=None):
    """Image in the product of floor(r/2)+1 copies of Gamma_n^4, r = n-4.

    Every concyclicity moment emits its flip letter into the component
    indexed by the inside-point count of the event circle taken mod r and
    folded to a representative alpha <= r/2.
    """
    n = b.n
    if n <= 5:
        raise ValueError("graded map needs n > 5")
    r = n - 4
    ncomp = r // 2 + 1
    if groups is None:
        groups = [Gamma4Group(n) for _ in range(ncomp)]

    def phase(i, anchor, side):
        comps = [[] for _ in range(ncomp)]
        for p, q in _gamma_phase_pairs(n, i, anchor):
            count, mover_inside = _inside_data(n, i, anchor, p, q)
            z = count - (1 if mover_inside else 0)
            alpha = min(z % r, (-z) % r)
            comps[alpha].append(
                _insert_adjacent(sorted((p, q, anchor)), anchor, i, side))
        return [groups[t].word_from_quads(c) for t, c in enumerate(comps)]

    out = [Word(g.alphabet) for g in groups]

    def mul(acc, ws, invert=False):
        if invert:
            ws = [w.inverse() for w in ws]
        return [a * w for a, w in zip(acc, ws)]

    for (i, j), e in b.letters:
        img = [Word(g.alphabet) for g in groups]
        for m in range(i + 1, j + 1):
            img = mul(img, phase(i, m, "after"))
        img = mul(img, phase(i, j, "before"))
        for m in range(j - 1, i, -1):
            img = mul(img, phase(i, m, "after"), invert=True)
        if e == -1:
            img = [w.inverse() for w in img]
        out = mul(out, img)
    return tuple(out)


# ---------------------------------------------------------------------------
# strand deletion and Brunnian braids


def delete_pb_strand(b: PureBraidWord, m: int) -> PureBraidWord:
    """p_m: delete strand m from PB_n; surviving indices shift down."""
    letters = []
    for (i, j), e in b.letters:
        if m in (i, j):
            continue
        i2 = i if i < m else i - 1
        j2 = j if j < m else j - 1
        letters.append(((i2, j2), e))
    return PureBraidWord(b.n - 1, letters)


def is_brunnian(b: PureBraidWord) -> bool:
    """Sound, incomplete Brunnian certificate: every p_m(b) freely trivial."""
    return all(len(delete_pb_strand(b, m)) == 0 for m in range(1, b.n + 1))


def brunnian_certificate(b: PureBraidWord):
    """Per-strand free reductions of the deletions; empty lists certify."""
    return {m: delete_pb_strand(b, m) for m in range(1, b.n + 1)}


def delete_gn3_strand(group: GnkGroup, w: Word, m: int, renumber=True):
    """q_m: G_{n+1}^3 -> G_n^3, killing letters whose triple contains m."""
    from .gnk import delete_strand
    return delete_strand(group, w, m, renumber=renumber)


# ---------------------------------------------------------------------------
# free-product invariants phi_{(i,j,k)} of G_n^3


def phi_ijk(group: GnkGroup, w: Word, triple):
    """Free-product value of an even-ish G_n^3 word at a fixed triple.

    Each occurrence c of a_{ijk} contributes the map
    l -> (N_jkl + N_ijl, N_ikl + N_ijl) mod 2 over l outside the triple,
    where the counts are of occurrences before c.
    """
    i, j, k = sorted(triple)
    if len({i, j, k}) != 3:
        raise ValueError("triple must have three distinct labels")
    others = [l for l in group.labels if l not in (i, j, k)]
    names = ["s_" + ",".join("".join(str(b) for b in pair) for pair in combo)
             for combo in itertools.product(
                 tuple(itertools.product((0, 1), repeat=2)), repeat=len(others))]
    target = Alphabet(sorted(set(names)), involutive=True)
    counts = {}
    out = []
    for sym, _ in w:
        sub = tuple(sorted(parse_subset_symbol(sym)))
        if sub == (i, j, k):
            vals = []
            for l in others:
                njkl = counts.get(tuple(sorted((j, k, l))), 0)
                nijl = counts.get(tuple(sorted((i, j, l))), 0)
                nikl = counts.get(tuple(sorted((i, k, l))), 0)
                vals.append(((njkl + nijl) % 2, (nikl + nijl) % 2))
            out.append("s_" + ",".join("%d%d" % v for v in vals))
        counts[sub] = counts.get(sub, 0) + 1
    return word(target, out)


# ---------------------------------------------------------------------------
# parity and dotted enrichments of G_n^2


def parity_symbol(i, j, eps):
    i, j = min(i, j), max(i, j)
    return "a_%d%d^%d" % (i, j, eps)


def dotted_a_symbol(i, j):
    i, j = min(i, j), max(i, j)
    return "a_%d%d" % (i, j)


def tau_symbol(i):
    return "t_%d" % i


class ParityGroup:
    """G_n^2 with crossing parities: generators a_ij^eps, eps in {0,1}."""

    def __init__(self, labels):
        self.labels = tuple(sorted(labels))
        syms = [parity_symbol(i, j, e)
                for i, j in itertools.combinations(self.labels, 2)
                for e in (0, 1)]
        self.alphabet = Alphabet(syms, involutive=True)

    def word_from_letters(self, letters):
        return word(self.alphabet,
                    [parity_symbol(i, j, e) for (i, j), e in letters])


class DottedGroup:
    """G_n^2 with points: generators a_ij and strand points t_i."""

    def __init__(self, labels):
        self.labels = tuple(sorted(labels))
        syms = [dotted_a_symbol(i, j)
                for i, j in itertools.combinations(self.labels, 2)]
        syms += [tau_symbol(i) for i in self.labels]
        self.alphabet = Alphabet(syms, involutive=True)


def parse_parity_symbol(sym):
    body, eps = sym.split("^")
    i, j = int(body[2]), int(body[3])
    return (i, j), int(eps)


def iota(g2: GnkGroup, w: Word, target: ParityGroup = None) -> Word:
    """Embedding G_n^2 -> parity group: a_ij -> a_ij^0."""
    if target is None:
        target = ParityGroup(g2.labels)
    out = [parity_symbol(*parse_subset_symbol(sym), 0) for sym, _ in w]
    return word(target.alphabet, out)


def pr(pg: ParityGroup, w: Word, target: GnkGroup = None) -> Word:
    """Projection parity -> G_n^2: even letters survive, odd letters die."""
    if target is None:
        target = GnkGroup(len(pg.labels), 2, pg.labels)
    out = []
    for sym, _ in w:
        (i, j), eps = parse_parity_symbol(sym)
        if eps == 0:
            out.append(subset_symbol((i, j)))
    return word(target.alphabet, out)


def eta(pg: ParityGroup, w: Word, target: DottedGroup = None) -> Word:
    """Parity -> dotted: a_ij^0 -> a_ij, a_ij^1 -> t_i a_ij t_i."""
    if target is None:
        target = DottedGroup(pg.labels)
    out = []
    for sym, _ in w:
        (i, j), eps = parse_parity_symbol(sym)
        if eps == 0:
            out.append(dotted_a_symbol(i, j))
        else:
            out += [tau_symbol(i), dotted_a_symbol(i, j), tau_symbol(i)]
    return word(target.alphabet, out)


def chi(dg: DottedGroup, w: Word, target: ParityGroup = None) -> Word:
    """Dotted -> parity on the even-point subgroup.

    Each crossing a_ij picks up the parity of the tau_i and tau_j counts
    seen so far.  Raises on words with an odd total count of some tau.
    """
    if target is None:
        target = ParityGroup(dg.labels)
    ncount = {l: 0 for l in dg.labels}
    out = []
    for sym, _ in w:
        if sym.startswith("t_"):
            ncount[int(sym[2:])] += 1
        else:
            i, j = int(sym[2]), int(sym[3])
            out.append(parity_symbol(i, j, (ncount[i] + ncount[j]) % 2))
    odd = [l for l, c in ncount.items() if c % 2]
    if odd:
        raise ValueError("chi needs even tau counts; odd at %r" % odd)
    return word(target.alphabet, out)


def omega_m(g2: GnkGroup, w: Word, m: int, target: DottedGroup = None) -> Word:
    """G_{n+1}^2 -> dotted group on the other n strands: crossings with
    strand m become points on the other strand."""
    if m not in g2.labels:
        raise ValueError("label %d not present" % m)
    rest = tuple(l for l in g2.labels if l != m)
    if target is None:
        target = DottedGroup(rest)
    out = []
    for sym, _ in w:
        i, j = parse_subset_symbol(sym)
        if m == i or m == j:
            out.append(tau_symbol(j if m == i else i))
        else:
            out.append(dotted_a_symbol(i, j))
    return word(target.alphabet, out)


def kappa(dg: DottedGroup, w: Word, new_label: int = None):
    """Dotted group -> G_{n+1}^2 modulo the forbidden moves: a_ij -> a_ij,
    t_i -> a_{i,new}; adjacent new-strand letters commute and cancel."""
    if new_label is None:
        new_label = max(dg.labels) + 1
    labels = dg.labels + (new_label,)
    target = GnkGroup(len(labels), 2, labels)
    letters = []
    for sym, _ in w:
        if sym.startswith("t_"):
            letters.append(tuple(sorted((int(sym[2:]), new_label))))
        else:
            letters.append((int(sym[2]), int(sym[3])))
    changed = True
    while changed:
        changed = False
        out = []
        for m in letters:
            if out and out[-1] == m:
                out.pop()
                changed = True
            elif (out and new_label in m and new_label in out[-1]
                  and m < out[-1]):
                out.insert(len(out) - 1, m)   # commute adjacent new-letters
                changed = True
            else:
                out.append(m)
        letters = out
    return target.word_from_subsets(letters), target


def w_parity(pg: ParityGroup, w: Word, pair):
    """Free-product parity invariant w^P_{i,j} of a parity word.

    Each occurrence of a_ij^eps contributes the bit vector over the other
    labels k: N_ik^0 + N_jk^0 (eps = 0) or N_ik^0 + N_jk^1 (eps = 1), the
    counts taken over the letters before the occurrence.
    """
    i, j = sorted(pair)
    others = [l for l in pg.labels if l not in (i, j)]
    names = ["z_" + "".join(str(b) for b in bits)
             for bits in itertools.product((0, 1), repeat=len(others))]
    target = Alphabet(names, involutive=True)
    counts = {}
    out = []
    for sym, _ in w:
        (a, b), eps = parse_parity_symbol(sym)
        if (a, b) == (i, j):
            bits = []
            for k in others:
                n_ik0 = counts.get((tuple(sorted((i, k))), 0), 0)
                n_jk0 = counts.get((tuple(sorted((j, k))), 0), 0)
                n_jk1 = counts.get((tuple(sorted((j, k))), 1), 0)
                if eps == 0:
                    bits.append((n_ik0 + n_jk0) % 2)
                else:
                    bits.append((n_ik0 + n_jk1) % 2)
            out.append("z_" + "".join(str(b) for b in bits))
        counts[((a, b), eps)] = counts.get(((a, b), eps), 0) + 1
    return word(target, out)


def phi_parity(g2: GnkGroup, w: Word, m: int, pair):
    """phi^m_{i,j} = w^P_{i,j} o chi o omega_m on a G_{n+1}^2 word."""
    dotted = omega_m(g2, w, m)
    rest = tuple(l for l in g2.labels if l != m)
    pw = chi(DottedGroup(rest), dotted)
    return w_parity(ParityGroup(rest), pw, pair)


def r_m(group: GnkGroup, w: Word, m: int, target: GnkGroup = None) -> Word:
    """G_{n+1}^3 -> G_n^2: a_ijk -> a_{triple minus m} when m is in the
    triple, else 1.  Labels are preserved."""
    rest = tuple(l for l in group.labels if l != m)
    if target is None:
        target = GnkGroup(len(rest), 2, rest)
    out = []
    for sym, _ in w:
        triple = parse_subset_symbol(sym)
        if m in triple:
            out.append(subset_symbol(tuple(x for x in triple if x != m)))
    return word(target.alphabet, out)
