#!/usr/bin/env python3
"""Print the state-complexity bound table and its asymptotic behavior.

Converting an n-state two-way DFA to a one-way unambiguous automaton needs
at least bound_new(n) states (the exact communication-matrix rank) and at
most bound_upper(n); bound_earlier(n) is the lower bound this rank result
supersedes.  The new bound grows like (3*sqrt(3) / (8*pi*n)) * 9**n.
"""

import mpmath

from permrank import asymptotic_ratio, bound_table, dfa_bound, nfa_bound

print(f"{'n':>3} {'earlier lower':>15} {'new lower':>15} {'upper':>15}")
for row in bound_table(10):
    print(f"{row.n:>3} {row.earlier_lower:>15} {row.new_lower:>15} {row.upper:>15}")

print("\nthe lower and upper bounds agree up to n = 3 and then diverge")

print("\none-way DFA / NFA conversion sizes for comparison:")
for n in range(1, 6):
    print(f"  n={n}: DFA {dfa_bound(n)}, NFA {nfa_bound(n)}")

print("\nratio of bound_new(n) to its asymptotic form (tends to 1):")
for n in (1, 10, 50, 100, 200, 400):
    r = asymptotic_ratio(n, digits=30)
    print(f"  n={n:>3}: {mpmath.nstr(r, 30)}")
