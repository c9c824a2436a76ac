"""Small algebras used by demos, tests and the CLI."""
from itertools import product

from .gradedspace import GradedBasis, LinComb
from .inftystruct import InftyStructure, check_cinfty, trivial_field, validate_square_zero


def truncated_polynomial(k, unital=True):
    """Q[x]/(x^k) on the basis 1, x, ..., x^{k-1}, all in degree 0."""
    basis = GradedBasis([("1", 0)] + [("x%d" % a if a > 1 else "x", 0) for a in range(1, k)])
    m2 = {}
    for a in range(k):
        for b in range(k):
            if a + b < k:
                m2[(a, b)] = {a + b: 1}
    return InftyStructure.from_mcheck("cinf", basis, {2: m2}, unit=0 if unital else None,
                                      name="Q[x]/(x^%d)" % k)


def dual_numbers(unital=True):
    return truncated_polynomial(2, unital)


def field():
    return trivial_field()


def upper_triangular():
    """2x2 upper triangular matrices: associative, not commutative."""
    basis = GradedBasis([("e11", 0), ("e12", 0), ("e22", 0)])
    m2 = {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 2): {1: 1}, (2, 2): {2: 1}}
    return InftyStructure.from_mcheck("ainf", basis, {2: m2}, name="upper triangular")


def magma():
    """a*a = b, b*b = a: not associative, fails m^2 = 0 at weight 3."""
    basis = GradedBasis([("a", 0), ("b", 0)])
    return InftyStructure.from_mcheck("ainf", basis, {2: {(0, 0): {1: 1}, (1, 1): {0: 1}}},
                                      name="magma")


def bracket(x, y, degrees):
    """Graded commutator of two homogeneous LinCombs of words."""
    out = LinComb()
    for u, a in x.items():
        du = sum(degrees[g] for g in u)
        for v, b in y.items():
            dv = sum(degrees[g] for g in v)
            out.add_term(u + v, a * b)
            out.add_term(v + u, -a * b if (du * dv) % 2 == 0 else a * b)
    return out


def _letter(g):
    return LinComb({(g,): 1})


def search_nonstrict_cinf(coeffs=(-1, 0, 1), cap=6):
    """First C-infinity structure with a nonzero ternary part found by brute force.

    V = <x, y> in degree 0 and w in degree -1, so W has t_x, t_y in degree 1
    and t_w in degree 2.  m(t_y) ranges over the brackets [t_a, t_b] and
    m(t_w) over the brackets [t_a, [t_b, t_c]] (a, b, c in {x, y}); small
    integer coefficients are tried in order until m^2 = 0 holds.  Brackets
    are Lie elements, so every candidate is C-infinity by construction.
    """
    basis = GradedBasis([("x", 0), ("y", 0), ("w", -1)])
    wdeg = tuple(1 - d for d in basis.degrees)
    slots = []
    for a, b in ((0, 0), (0, 1), (1, 1)):
        slots.append((1, 2, bracket(_letter(a), _letter(b), wdeg)))
    for a, b, c in product((0, 1), repeat=3):
        br = bracket(_letter(a), bracket(_letter(b), _letter(c), wdeg), wdeg)
        if br:
            slots.append((2, 3, br))
    for choice in product(coeffs, repeat=len(slots)):
        if not any(c for (_, w, _), c in zip(slots, choice) if w == 3):
            continue
        if not any(c for (_, w, _), c in zip(slots, choice) if w == 2):
            continue
        comps = [LinComb() for _ in range(3)]
        for (g, _, v), c in zip(slots, choice):
            comps[g].add(v, c)
        if not comps[2]:
            continue
        S = InftyStructure("cinf", basis, comps, name="nonstrict")
        if validate_square_zero(S, cap).passed and check_cinfty(S).passed:
            return S
    return None


_NONSTRICT = []


def nonstrict_cinf():
    if not _NONSTRICT:
        _NONSTRICT.append(search_nonstrict_cinf())
    return _NONSTRICT[0]


def zero_structure(generators=(("a", 0),), kind="ainf"):
    basis = GradedBasis(list(generators))
    return InftyStructure(kind, basis, [{} for _ in generators], name="zero")
