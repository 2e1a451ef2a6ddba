# coding: utf-8

# # Quadratic forms over finite fields
#
# Over F_q with q odd, a nondegenerate quadratic form is pinned down by two
# numbers: its rank and whether its discriminant is a square. gwzeta stores
# an element of GW(F_q) exactly that way, as (rank, disc bit).

# In[1]:

from gwzeta.gw import FqTag, GwInt, gw_gen, gw_u, n_eps, q_eps, reduce_mod_p, transfer


# Rank one forms <a>. Whether <a> is <1> or <u> depends on whether a is a square.

# In[2]:

F7 = FqTag.of(7)
for a in range(1, 7):
    print(f"<{a}> over F_7 =", gw_gen(F7, a))


# <-1> is a square mod 5 but not mod 3 or 7, so the "signed count" n_eps
# behaves differently in the two cases.

# In[3]:

for q in (3, 5, 7):
    F = FqTag.of(q)
    print(f"q = {q}:  n_eps(3) = {n_eps(F, 3)},  q_eps = {q_eps(F)},  (rank, disc) = {q_eps(F).rank, q_eps(F).disc}")


# The trace form of a degree i extension has rank i, and a non-square
# discriminant exactly when i is even.

# In[4]:

print([str(transfer(F7, i)) for i in range(1, 7)])


# Arithmetic is the usual ring arithmetic. <u> squares to <1>.

# In[5]:

u = gw_u(F7)
x = 2 * F7.one + u
print("(2<1> + <u>)^2 =", x**2)
print("<u>^2 =", u * u)


# GW of the reals is free on <1> and <-1>; reducing mod p sends <-1> to the
# class of -1 in F_p.

# In[6]:

h = GwInt(1, 1)
print("hyperbolic plane over R: rank", h.rank, "signature", h.sign)
for q in (3, 5, 7):
    print(f"  reduced mod {q}:", reduce_mod_p(h, FqTag.of(q)))


# Halving fails: nothing doubles to <1> - <u>, since doubling always
# clears the discriminant bit.

# In[7]:

F3 = FqTag.of(3)
target = F3.one - gw_u(F3)
print("target:", (target.rank, target.disc))
print("doubles reach disc 1?", any((2 * x).disc == 1 for x in (F3.one, gw_u(F3), 5 * F3.one + gw_u(F3))))
