# coding: utf-8

# # Recovering a closed form from a series
#
# Given enough terms of an enriched series, fit_dlog_rational looks for a
# finite sum of weighted d/dt log 1/(1 - a t) terms that reproduces it
# exactly. The rank sequence fixes the poles; the discriminant bits then
# decide which weights and poles carry a twist by <u>.

# In[1]:

from gwzeta import varieties as V
from gwzeta.display import format_factor_list
from gwzeta.fit import FitError, fit_dlog_rational
from gwzeta.gw import FqTag, GwFq, q_eps
from gwzeta.series import Series
from gwzeta.zeta import dlog_zeta, res_p1_closed_form


# In[2]:

F5 = FqTag.of(5)
series = dlog_zeta(V.projective_space(F5, 2), 12).enriched
print("P^2:", format_factor_list(fit_dlog_rational(series)))


# The Weil restriction of P^1 needs twisted poles.

# In[3]:

for q in (3, 5, 7):
    F = FqTag.of(q)
    fit = fit_dlog_rational(dlog_zeta(V.weil_restriction_p1(F), 12).enriched)
    print(f"q = {q}:", format_factor_list(fit))
    print("   equals the known closed form:", fit == res_p1_closed_form(F, 12)[0])


# A sequence with no such structure is rejected. Against the open-ended default
# basis, twelve generic terms only say the data is too short; against an
# explicit pole basis the answer is definite.

# In[4]:

F3 = FqTag.of(3)
primes = Series(F3, [GwFq(F3, p) for p in [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]])
qe = q_eps(F3)
for basis in (None, [F3.one, qe, qe**2, -qe]):
    try:
        fit_dlog_rational(primes, pole_basis=basis)
    except FitError as exc:
        print("rejected:", exc)
