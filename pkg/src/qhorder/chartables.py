"""Exact ordinary character tables of finite groups.

The table is computed from the class algebra: common eigenvectors of the
class multiplication matrices are found over a suitable prime field and the
eigenvalue data is lifted to exact cyclotomic values through root-of-unity
digit counts.  No floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .cyclotomic import CycValue
from .errors import InternalConsistencyError
from .permgroups import CayleyGroup, Subgroup


@dataclass
class ClassData:
    """Conjugacy class structure of a CayleyGroup."""

    group: CayleyGroup
    class_of: list[int]
    representatives: list[int]
    sizes: list[int]
    members: list[list[int]]
    inverse_class: list[int]

    @property
    def count(self) -> int:
        return len(self.representatives)


def conjugacy_classes(G: CayleyGroup) -> ClassData:
    """Classes ordered by minimal member index; representative = minimal member."""
    n = G.order
    class_of = [-1] * n
    members: list[list[int]] = []
    for x in range(n):
        if class_of[x] != -1:
            continue
        orbit = sorted({G.conjugate(g, x) for g in range(n)})
        idx = len(members)
        for y in orbit:
            assert class_of[y] == -1
            class_of[y] = idx
        members.append(orbit)
    representatives = [orbit[0] for orbit in members]
    sizes = [len(orbit) for orbit in members]
    inverse_class = [class_of[G.inv[rep]] for rep in representatives]
    return ClassData(G, class_of, representatives, sizes, members, inverse_class)


@dataclass
class CharacterTable:
    """Rows are irreducible characters as tuples of CycValue over the classes."""

    group: CayleyGroup
    classes: ClassData
    rows: list[tuple[CycValue, ...]]
    degrees: list[int]
    conductor: int

    @property
    def count(self) -> int:
        return len(self.rows)

    def value(self, row: int, element: int) -> CycValue:
        return self.rows[row][self.classes.class_of[element]]


# ---------------------------------------------------------------- mod-p tools


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def _dixon_prime(exponent: int, group_order: int) -> int:
    p = exponent + 1
    while True:
        if p > 2 * isqrt(group_order) and _is_prime(p):
            return p
        p += exponent


def _primitive_root(p: int) -> int:
    factors = []
    m = p - 1
    f = 2
    while f * f <= m:
        if m % f == 0:
            factors.append(f)
            while m % f == 0:
                m //= f
        f += 1
    if m > 1:
        factors.append(m)
    for t in range(2, p):
        if all(pow(t, (p - 1) // q, p) != 1 for q in factors):
            return t
    raise InternalConsistencyError("no primitive root found")


def _solve_coords(basis: list[list[int]], target: list[int], p: int) -> list[int]:
    """Coordinates of `target` in the span of `basis` vectors (exact, mod p)."""
    k = len(basis[0])
    dim = len(basis)
    aug = [[basis[j][row] % p for j in range(dim)] + [target[row] % p] for row in range(k)]
    pivots = []
    r = 0
    for c in range(dim):
        pivot = next((i for i in range(r, k) if aug[i][c]), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = pow(aug[r][c], p - 2, p)
        aug[r] = [(v * inv) % p for v in aug[r]]
        for i in range(k):
            if i != r and aug[i][c]:
                factor = aug[i][c]
                aug[i] = [(a - factor * b) % p for a, b in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    coords = [0] * dim
    for row, c in enumerate(pivots):
        coords[c] = aug[row][dim]
    # consistency: rows beyond the pivots must be annihilated
    for i in range(r, k):
        if aug[i][dim] % p:
            raise InternalConsistencyError("inconsistent coordinate solve")
    return coords


def _kernel_mod(matrix: list[list[int]], p: int) -> list[list[int]]:
    """Basis of the right kernel of a square matrix over F_p."""
    dim = len(matrix)
    m = [row[:] for row in matrix]
    pivots: dict[int, int] = {}
    r = 0
    for c in range(dim):
        pivot = next((i for i in range(r, dim) if m[i][c] % p), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = pow(m[r][c] % p, p - 2, p)
        m[r] = [(v * inv) % p for v in m[r]]
        for i in range(dim):
            if i != r and m[i][c] % p:
                factor = m[i][c] % p
                m[i] = [(a - factor * b) % p for a, b in zip(m[i], m[r])]
        pivots[c] = r
        r += 1
    free = [c for c in range(dim) if c not in pivots]
    basis = []
    for fc in free:
        vec = [0] * dim
        vec[fc] = 1
        for c, row in pivots.items():
            vec[c] = (-m[row][fc]) % p
        basis.append(vec)
    return basis


def _mat_vec(matrix: list[list[int]], vec: list[int], p: int) -> list[int]:
    return [sum(a * b for a, b in zip(row, vec)) % p for row in matrix]


# ----------------------------------------------------------- table construction


def _class_constant_matrices(classes: ClassData) -> list[list[list[int]]]:
    """For each class i the matrix M_i with (M_i)[j][l] = a_{ijl}.

    a_{ijl} counts pairs (x, y) in C_i x C_j with xy equal to a fixed element
    of C_l; the count is independent of the chosen element.
    """
    G = classes.group
    k = classes.count
    mats = []
    for i in range(k):
        tally = [[0] * k for _ in range(k)]
        for x in classes.members[i]:
            row = G.mul[x]
            for y in range(G.order):
                tally[classes.class_of[y]][classes.class_of[row[y]]] += 1
        for j in range(k):
            for l in range(k):
                q, r = divmod(tally[j][l], classes.sizes[l])
                assert r == 0
                tally[j][l] = q
        mats.append(tally)
    return mats


def _split_eigenspaces(mats: list[list[list[int]]], k: int, p: int) -> list[list[int]]:
    """Common one-dimensional eigenspaces of the commuting matrices, over F_p."""
    spaces: list[list[list[int]]] = [[[1 if r == c else 0 for r in range(k)] for c in range(k)]]
    for i in range(1, k):
        M = mats[i]
        refined: list[list[list[int]]] = []
        for basis in spaces:
            dim = len(basis)
            if dim == 1:
                refined.append(basis)
                continue
            images = [_mat_vec(M, b, p) for b in basis]
            R = [[0] * dim for _ in range(dim)]
            for col, img in enumerate(images):
                coords = _solve_coords(basis, img, p)
                for row in range(dim):
                    R[row][col] = coords[row]
            pieces = []
            total = 0
            for lam in range(p):
                shifted = [
                    [(R[r][c] - (lam if r == c else 0)) % p for c in range(dim)]
                    for r in range(dim)
                ]
                ker = _kernel_mod(shifted, p)
                if ker:
                    total += len(ker)
                    pieces.append(
                        [
                            [
                                sum(vec[t] * basis[t][row] for t in range(dim)) % p
                                for row in range(k)
                            ]
                            for vec in ker
                        ]
                    )
            if total != dim:
                raise InternalConsistencyError("class matrix failed to diagonalize")
            refined.extend(pieces)
        spaces = refined
        if all(len(b) == 1 for b in spaces):
            break
    if not all(len(b) == 1 for b in spaces):
        raise InternalConsistencyError("common eigenspaces not one-dimensional")
    return [b[0] for b in spaces]


def character_table(G: CayleyGroup, classes: ClassData | None = None) -> CharacterTable:
    """The full ordinary character table with exact cyclotomic entries."""
    classes = classes or conjugacy_classes(G)
    k = classes.count
    n = G.order
    exponent = G.exponent()
    p = _dixon_prime(exponent, n)
    mats = _class_constant_matrices(classes)
    vectors = _split_eigenspaces(mats, k, p)

    root = pow(_primitive_root(p), (p - 1) // exponent, p)  # fixed image of zeta_N
    size_inv = [pow(s, p - 2, p) for s in classes.sizes]

    # power-class map: class of rep^v for each class and exponent v
    power_class = []
    for rep in classes.representatives:
        o = G.element_orders[rep]
        row = []
        acc = 0
        for _ in range(o):
            row.append(classes.class_of[acc])
            acc = G.mul[acc][rep]
        # row[v] currently holds class of rep^v with row[0] = identity class
        power_class.append(row)

    rows: list[tuple[CycValue, ...]] = []
    degrees: list[int] = []
    for vec in vectors:
        if vec[0] % p == 0:
            raise InternalConsistencyError("eigenvector vanishes at the identity class")
        norm = pow(vec[0], p - 2, p)
        omega = [(v * norm) % p for v in vec]
        s = sum(omega[l] * omega[classes.inverse_class[l]] * size_inv[l] for l in range(k)) % p
        if s == 0:
            raise InternalConsistencyError("degree norm sum vanished")
        d_sq = (n * pow(s, p - 2, p)) % p
        degree = next(
            (d for d in range(1, isqrt(n) + 1) if (d * d) % p == d_sq), None
        )
        if degree is None:
            raise InternalConsistencyError("no admissible degree")
        x = [(degree * omega[l] * size_inv[l]) % p for l in range(k)]

        values: list[CycValue] = []
        for l, rep in enumerate(classes.representatives):
            o = G.element_orders[rep]
            theta = pow(root, exponent // o, p)
            o_inv = pow(o, p - 2, p)
            total_digits = 0
            value = CycValue.zero(exponent)
            for u in range(o):
                acc = 0
                for v in range(o):
                    e = (-u * v) % o
                    acc += x[power_class[l][v]] * pow(theta, e, p)
                c_u = (acc * o_inv) % p
                if c_u > degree:
                    raise InternalConsistencyError("digit count exceeds the degree")
                total_digits += c_u
                if c_u:
                    value = value + CycValue.root_of_unity(exponent, (exponent // o) * u) * c_u
            if total_digits != degree:
                raise InternalConsistencyError("digit counts do not sum to the degree")
            values.append(value)
        rows.append(tuple(values))
        degrees.append(degree)

    order_key = []
    for r, row in enumerate(rows):
        coords = tuple(tuple(v.promote(exponent).coords) for v in row)
        order_key.append((degrees[r], coords, r))
    order_key.sort(key=lambda t: (t[0], t[1]))
    permuted = [rows[t[2]] for t in order_key]
    perm_deg = [degrees[t[2]] for t in order_key]
    if sum(d * d for d in perm_deg) != n:
        raise InternalConsistencyError("degree squares do not sum to the group order")
    return CharacterTable(G, classes, permuted, perm_deg, exponent)


# ------------------------------------------------------------------- queries


def inner_product(
    table: CharacterTable, row_a: tuple[CycValue, ...], row_b: tuple[CycValue, ...]
) -> Fraction:
    """<a, b> = (1/|G|) sum |C_l| a(g_l) conj(b(g_l)); must come out rational."""
    total = CycValue.zero(1)
    for size, va, vb in zip(table.classes.sizes, row_a, row_b):
        total = total + va * vb.conjugate() * size
    if not total.is_rational():
        raise InternalConsistencyError("irrational inner product")
    return total.rational_part() / table.group.order


def perm_character_multiplicity(
    table: CharacterTable, subgroup: Subgroup, row: int
) -> int:
    """Multiplicity of a character in the permutation module on cosets of H.

    Equals the average of the character over H; certified to be a
    non-negative integer.
    """
    assert subgroup.parent is table.group
    total = CycValue.zero(1)
    for h in subgroup.members:
        total = total + table.value(row, h)
    if not total.is_rational():
        raise InternalConsistencyError("irrational character average")
    q = total.rational_part() / len(subgroup.members)
    if q.denominator != 1 or q < 0:
        raise InternalConsistencyError(f"character average {q} is not a non-negative integer")
    return int(q)


def character_average_over(table: CharacterTable, elements, row: int) -> int:
    """Same certified average, over an explicit element iterable."""
    total = CycValue.zero(1)
    count = 0
    for h in elements:
        total = total + table.value(row, h)
        count += 1
    if not total.is_rational():
        raise InternalConsistencyError("irrational character average")
    q = total.rational_part() / count
    if q.denominator != 1 or q < 0:
        raise InternalConsistencyError(f"character average {q} is not a non-negative integer")
    return int(q)


def kernel_contains(table: CharacterTable, row: int, members) -> bool:
    """True if every listed element lies in the kernel of the character."""
    deg = table.rows[row][0]
    return all(table.value(row, g) == deg for g in members)


def conjugate_character(row: tuple[CycValue, ...]) -> tuple[CycValue, ...]:
    return tuple(v.conjugate() for v in row)


def conjugate_row_index(table: CharacterTable, row: int) -> int:
    """Index of the complex conjugate character inside the same table."""
    target = conjugate_character(table.rows[row])
    key = tuple(tuple(v.promote(table.conductor).coords) for v in target)
    for r, other in enumerate(table.rows):
        if tuple(tuple(v.promote(table.conductor).coords) for v in other) == key:
            return r
    raise InternalConsistencyError("conjugate character missing from table")
