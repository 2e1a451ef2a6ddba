# coding: utf-8

# # Signs and real points
#
# P^1 x P^1 and the Weil restriction of P^1 from F_{q^2} become isomorphic
# over F_{q^2}, so their point counts agree over every even degree extension.
# Their real points differ: a torus against a sphere. When q = 3 mod 4 both
# come from closed forms over GW(R), and the signature of those closed forms
# sees the topology.

# In[1]:

from gwzeta import varieties as V
from gwzeta.gw import FqTag
from gwzeta.zeta import SPHERE, TORUS, dlog_zeta, sign_check_via_reduction, sign_series_from_topology


# In[2]:

F7 = FqTag.of(7)
P1 = V.projective_space(F7, 1)
quad, res = V.product(P1, P1), V.weil_restriction_p1(F7)
print("counts of P^1 x P^1:", quad.count_list(4))
print("counts of Res P^1:  ", res.count_list(4))
print("agree in even degree:", all(quad.counts(m) == res.counts(m) for m in range(2, 13, 2)))


# The lifts to GW(R) reduce back to the enriched series over F_7.

# In[3]:

print("P^1 x P^1 lift reduces correctly:", sign_check_via_reduction(quad.lift, quad, 8))
print("Res P^1 lift reduces correctly:  ", sign_check_via_reduction(res.lift, res, 8))


# Signatures of the lifted series against the topology of the real points.

# In[4]:

print("sign series, P^1 x P^1:", list(dlog_zeta(quad, 8).sign_series))
print("from the torus:        ", list(sign_series_from_topology(TORUS, 8)))
print("sign series, Res P^1:  ", list(dlog_zeta(res, 8).sign_series))
print("from the sphere:       ", list(sign_series_from_topology(SPHERE, 8)))
