#!/usr/bin/env python3
"""The master fields X_k and how they climb the ladder of invariants.

H_m = Tr(L^m)/m are the conserved quantities of the chain.  The master
fields act on them by exact polynomial identities:

    X_k(H_m) = (k + m) H_{k+m}     for k >= 0,
    X_{-1}(H_m) = (m - 1) H_{m-1}  going down.

Everything below is exact rational arithmetic; "True" means the two sides
are identical polynomials, coefficient by coefficient.
"""

from todasym import hamiltonian, master_field

N = 3

print(f"chain size N = {N}")
print("\nthe first few invariants:")
for m in (1, 2, 3):
    print(f"  H_{m} = {hamiltonian(m, N)}")

print("\nthe first master fields (a-components, then b-components):")
for k in (-1, 0, 1):
    field = master_field(k, N)
    comps = ", ".join(str(c) for c in field.components())
    print(f"  X_{k}: ({comps})")

print("\nraising identities, checked exactly:")
for k in (0, 1, 2, 3):
    x = master_field(k, N)
    for m in (1, 2, 3):
        lhs = x.apply(hamiltonian(m, N))
        rhs = hamiltonian(k + m, N).scale(k + m)
        print(f"  X_{k}(H_{m}) == {k + m}*H_{k + m}:  {lhs == rhs}")

print("\nlowering with X_{-1}:")
lower = master_field(-1, N)
for m in (2, 3, 4):
    lhs = lower.apply(hamiltonian(m, N))
    rhs = hamiltonian(m - 1, N).scale(m - 1)
    print(f"  X_-1(H_{m}) == {m - 1}*H_{m - 1}:  {lhs == rhs}")
print(f"  X_-1(H_1) = {lower.apply(hamiltonian(1, N))}  (the ladder bottoms out at N)")

print("\nthe bracket recursion that generates the whole sequence:")
for k in (3, 4):
    lhs = master_field(1, N).bracket(master_field(k - 1, N))
    print(f"  [X_1, X_{k - 1}] == {k - 2}*X_{k}:  {lhs == master_field(k, N).scale(k - 2)}")
