# coding: utf-8

# # The enriched zeta function of an elliptic curve
#
# Take E: y^2 = x^3 + 2x + 3 over F_7. Its point counts over F_{7^m} come from
# one number, the Frobenius trace a, and the enriched logarithmic zeta function
# is assembled from those counts alone.

# In[1]:

from gwzeta import varieties as V
from gwzeta.gw import FqTag
from gwzeta.zeta import alpha, disc_series_direct, dlog_zeta


# In[2]:

F7 = FqTag.of(7)
E = V.elliptic_curve(F7, 2, 3)
print("trace of Frobenius:", E.frobenius_trace)
print("point counts:", E.count_list(6))


# Moebius inversion turns counts into the number of closed points of each degree.

# In[3]:

print("closed points by degree:", [alpha(E, i) for i in range(1, 7)])


# Each closed point of degree i contributes the trace form of F_{7^i}/F_7.
# The rank of each coefficient is the point count again; the discriminant
# records how many closed points have even degree, mod 2.

# In[4]:

rep = dlog_zeta(E, 6)
for m, c in enumerate(rep.enriched):
    print(f"t^{m}:", c)


# In[5]:

print("disc from the series:       ", rep.disc_series)
print("disc from closed points only:", disc_series_direct(E, 6))


# The same curve from its Weil polynomials gives the same series.

# In[6]:

W = V.from_weil_data(V.WeilData(F7, ((1, -1), (1, -2, 7), (1, -7))))
print("same series from Weil data:", dlog_zeta(W, 6).enriched == rep.enriched)
