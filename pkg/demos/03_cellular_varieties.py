# coding: utf-8

# # Varieties built from affine cells
#
# Projective spaces, Grassmannians and their products are unions of affine
# cells. For these the enriched zeta function has a closed form: each cell of
# dimension i contributes <-1>^i d/dt log 1/(1 - q_eps^i t).

# In[1]:

from gwzeta import varieties as V
from gwzeta.display import format_factor_list
from gwzeta.gw import FqTag
from gwzeta.zeta import (
    cellular_closed_form,
    cellular_trace,
    dlog_zeta,
    enriched_trace_Nm,
    euler_characteristic,
    frobenius_cell_matrices,
    functional_equation_check,
)


# In[2]:

F3 = FqTag.of(3)
P1 = V.projective_space(F3, 1)
quad = V.product(P1, P1)
G = V.grassmannian(F3, 1, 3)
print("cells of P^1 x P^1:", quad.cells.b)
print("cells of G(1,3):  ", G.cells.b)


# The closed form and the series computed from point counts agree term by term.

# In[3]:

for X in (quad, G):
    factors, closed = cellular_closed_form(F3, X.cells, 12)
    print(X.label, "=", format_factor_list(factors))
    print("  matches point counts:", dlog_zeta(X, 12).enriched == closed)


# A trace formula on the cellular chain complex: Frobenius acts on the
# degree i cells by q_eps^i.

# In[4]:

mats = frobenius_cell_matrices(F3, G.cells)
print([cellular_trace(F3, mats, m) == enriched_trace_Nm(G, m) for m in range(1, 7)])


# The enriched Euler characteristic counts cells with signs <-1>^i.

# In[5]:

for n in (1, 2, 3):
    print(f"chi(P^{n}) =", euler_characteristic(V.projective_space(F3, n).cells, F3))


# Odd dimensional projective spaces satisfy a functional equation swapping
# cells of dimension i and n - i.

# In[6]:

for n in (1, 3, 5):
    factors, _ = cellular_closed_form(F3, V.projective_space(F3, n).cells, 12)
    print(f"P^{n}: functional equation holds:", functional_equation_check(factors, n, F3, 12))
