"""Generator sets for the groups used in tests and benchmarks.

Everything returns a list of Perm on points 0..n-1.  The catalog favours
small 2-generator presentations; orders are asserted in the test suite
via the stabiliser chain.
"""

from __future__ import annotations

from .perms import Perm


def _cycle_perm(degree: int, cycle) -> Perm:
    images = list(range(degree))
    for i, v in enumerate(cycle):
        images[v] = cycle[(i + 1) % len(cycle)]
    return Perm(images)


def cyclic_gens(n: int) -> list:
    if n < 1:
        raise ValueError("degree must be positive")
    return [_cycle_perm(n, tuple(range(n)))]


def symmetric_gens(n: int) -> list:
    if n <= 1:
        return []
    if n == 2:
        return [_cycle_perm(2, (0, 1))]
    return [_cycle_perm(n, (0, 1)), _cycle_perm(n, tuple(range(n)))]


def alternating_gens(n: int) -> list:
    if n < 3:
        return []
    three = _cycle_perm(n, (0, 1, 2))
    if n == 3:
        return [three]
    if n % 2 == 1:
        return [three, _cycle_perm(n, tuple(range(n)))]
    return [three, _cycle_perm(n, tuple(range(1, n)))]


def dihedral_gens(n: int) -> list:
    """Symmetries of the regular n-gon on vertices 0..n-1, order 2n."""
    if n < 3:
        raise ValueError("dihedral catalog starts at the triangle")
    rot = _cycle_perm(n, tuple(range(n)))
    ref = Perm(tuple((n - i) % n for i in range(n)))
    return [rot, ref]


def klein_gens() -> list:
    return [Perm((1, 0, 3, 2)), Perm((2, 3, 0, 1))]


def _primitive_root(p: int) -> int:
    for r in range(2, p):
        seen = set()
        x = 1
        for _ in range(p - 1):
            x = x * r % p
            seen.add(x)
        if len(seen) == p - 1:
            return r
    raise ValueError("no primitive root mod %d" % p)


def agl1p_gens(p: int) -> list:
    """AGL(1,p) on points 0..p-1: x+1 and rx for a primitive root r."""
    r = _primitive_root(p)
    add = Perm(tuple((x + 1) % p for x in range(p)))
    mul = Perm(tuple(x * r % p for x in range(p)))
    return [add, mul]


def _gf8_mul(a: int, b: int) -> int:
    # GF(8) as bit-vectors of polynomials modulo x^3 + x + 1.
    out = 0
    while b:
        if b & 1:
            out ^= a
        b >>= 1
        a <<= 1
        if a & 8:
            a ^= 0b1011
    return out


def agl1_8_gens() -> list:
    """AGL(1,8) on points 0..7 (field elements of GF(8)), order 56."""
    add = Perm(tuple(x ^ 1 for x in range(8)))
    mul = Perm(tuple(_gf8_mul(2, x) for x in range(8)))
    return [add, mul]


def _moebius(p: int, a: int, b: int, c: int, d: int) -> Perm:
    """x -> (ax+b)/(cx+d) on the projective line 0..p-1, with p = infinity."""
    images = []
    for x in range(p):
        den = (c * x + d) % p
        if den == 0:
            images.append(p)
        else:
            images.append((a * x + b) * pow(den, -1, p) % p)
    if c == 0:
        images.append(p)
    else:
        images.append(a * pow(c, -1, p) % p)
    return Perm(tuple(images))


def pgl2_gens(p: int) -> list:
    """PGL(2,p) on the p+1 projective points, order p(p^2-1)."""
    r = _primitive_root(p)
    return [
        _moebius(p, 1, 1, 0, 1),
        _moebius(p, r, 0, 0, 1),
        _moebius(p, 0, 1, 1, 0),
    ]


def psl2_gens(p: int) -> list:
    """PSL(2,p) on the p+1 projective points, order p(p^2-1)/2 for odd p."""
    r = _primitive_root(p)
    return [
        _moebius(p, 1, 1, 0, 1),
        _moebius(p, r * r % p, 0, 0, 1),
        _moebius(p, 0, p - 1, 1, 0),
    ]


def grid_gens(n: int) -> list:
    """Row and column permutations of an n-by-n grid.

    Cell (r,c) is point r*n+c.  The group is the direct product of the
    row and column symmetric groups, order (n!)^2.
    """
    if n < 2:
        raise ValueError("grid needs n >= 2")

    def rowmap(rp):
        return Perm(tuple(rp[v // n] * n + v % n for v in range(n * n)))

    def colmap(cp):
        return Perm(tuple(v // n * n + cp[v % n] for v in range(n * n)))

    swap = tuple([1, 0] + list(range(2, n)))
    cyc = tuple(list(range(1, n)) + [0])
    return [rowmap(swap), rowmap(cyc), colmap(swap), colmap(cyc)]


def wreath_gens(m: int, d: int) -> list:
    """Imprimitive wreath product on d blocks of m points, order (m!)^d * d!.

    Point j of block i is i*m+j.  Generators: the symmetric group inside
    block 0, a swap of blocks 0 and 1, and a cycle of all blocks.
    """
    if m < 2 or d < 2:
        raise ValueError("wreath needs m >= 2 and d >= 2")
    total = m * d
    gens = []
    for g in symmetric_gens(m):
        images = list(range(total))
        for j in range(m):
            images[j] = g(j)
        gens.append(Perm(tuple(images)))
    swap = list(range(total))
    for j in range(m):
        swap[j], swap[m + j] = swap[m + j], swap[j]
    gens.append(Perm(tuple(swap)))
    cyc = [((v // m + 1) % d) * m + v % m for v in range(total)]
    gens.append(Perm(tuple(cyc)))
    return gens


def partition_wreath_gens(cells, degree: int) -> list:
    """Generators of the stabiliser in Sym(degree) of an unordered partition.

    Per-cell symmetric generators, plus a pointwise swap between each pair
    of consecutive equal-size cells (cells sorted by size then content).
    For two cells of size m this is the wreath-type group of order m!^2*2.
    """
    cells = sorted((sorted(c) for c in cells), key=lambda c: (len(c), c))
    seen = [v for c in cells for v in c]
    if sorted(seen) != list(range(degree)):
        raise ValueError("cells must partition the point set")
    gens = []
    for cell in cells:
        if len(cell) >= 2:
            images = list(range(degree))
            images[cell[0]], images[cell[1]] = cell[1], cell[0]
            gens.append(Perm(tuple(images)))
        if len(cell) >= 3:
            images = list(range(degree))
            for i, v in enumerate(cell):
                images[v] = cell[(i + 1) % len(cell)]
            gens.append(Perm(tuple(images)))
    for a, b in zip(cells, cells[1:]):
        if len(a) == len(b):
            images = list(range(degree))
            for x, y in zip(a, b):
                images[x], images[y] = y, x
            gens.append(Perm(tuple(images)))
    return gens


def transitive_catalog(n: int) -> list:
    """Selected transitive groups of degree n, as (name, generators) pairs.

    Cyclic, dihedral, alternating, and symmetric at every degree (each
    distinct subgroup listed once), plus the affine Frobenius groups at
    degrees 5, 7, and 8.
    """
    if n == 3:
        return [("C3", cyclic_gens(3)), ("S3", symmetric_gens(3))]
    if n == 4:
        return [
            ("C4", cyclic_gens(4)),
            ("D4", dihedral_gens(4)),
            ("A4", alternating_gens(4)),
            ("S4", symmetric_gens(4)),
        ]
    if n == 5:
        return [
            ("C5", cyclic_gens(5)),
            ("D5", dihedral_gens(5)),
            ("AGL(1,5)", agl1p_gens(5)),
            ("A5", alternating_gens(5)),
            ("S5", symmetric_gens(5)),
        ]
    if n == 6:
        return [
            ("C6", cyclic_gens(6)),
            ("D6", dihedral_gens(6)),
            ("A6", alternating_gens(6)),
            ("S6", symmetric_gens(6)),
        ]
    if n == 7:
        return [
            ("C7", cyclic_gens(7)),
            ("D7", dihedral_gens(7)),
            ("AGL(1,7)", agl1p_gens(7)),
            ("A7", alternating_gens(7)),
            ("S7", symmetric_gens(7)),
        ]
    if n == 8:
        return [
            ("C8", cyclic_gens(8)),
            ("D8", dihedral_gens(8)),
            ("AGL(1,8)", agl1_8_gens()),
            ("A8", alternating_gens(8)),
            ("S8", symmetric_gens(8)),
        ]
    raise ValueError("no catalog for degree %d" % n)
