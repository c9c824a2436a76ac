"""Forms on the free algebra in three geometries: associative, commutative and Lie.

Run: python demos/03_noncommutative_forms.py
"""
import random

from infty.ncforms import (cartan_suite, pj_report, poincare_report, random_vector_field,
                           zeta_report)

degrees = (1, 2)

# Cartan calculus: [L, i], [L, L], [i, i] and L = [d, i], on random vector fields
for geo in ("Ass", "Com", "Lie"):
    rep = cartan_suite(degrees, geo, max_order=3, form_weight=3, trials=2, seed=1)
    print("Cartan identities in", geo, ":", "PASS" if rep.passed else rep.failures[:2])

# the de Rham complex of each geometry is acyclic past degree zero, order by order
for geo in ("Ass", "Com", "Lie"):
    rep = poincare_report(degrees, geo, max_weight=5)
    print(geo, "H0 per order:", [r["H0"] for r in rep.info["rows"]])

# p after j is multiplication by n! on order-n forms
print("p j = n!:", pj_report(degrees, 4).passed)

# zeta identifies closed 2-forms with a quotient of 0-forms, one slice at a time
rep = zeta_report(degrees, max_order=4)
print("zeta bijective on every slice:", rep.passed)

xi = random_vector_field(list(degrees), 1, 2, random.Random(0))
print("a random vector field of degree 1:", xi)
