"""Formulas next to brute-force censuses."""

from cominuscule import enumeration as en

print(" n  bhat_n(q) formula / census")
for n in range(1, 6):
    print(f"{n:2}  {en.bhat_q(n)}  /  {en.census('B', n, 1, method='dfs')}")

print("\n n  dhat_n(1)  generating function  census")
for n in range(3, 7):
    print(f"{n:2}  {en.dhat_q(n)(1):9}  {en.dhat_gf(n):19}  {en.census('D', n, 1, grading='count', method='dfs')}")

print("\n n  B(n)  all (B_n,n) Le-diagrams")
for n in range(0, 5):
    census = en.census("B", n, n, scope="all", grading="count", method="dfs") if n else 1
    print(f"{n:2}  {en.big_B(n):4}  {census}")

print("\n n  T_n(x,y)")
for n in range(1, 4):
    print(f"{n:2}  {en.T_poly(n)}")

print("\n n  b(n) at q=1, twice the preference functions")
for n in range(1, 6):
    print(f"{n:2}  {en.b_staircase_q(n)(1):5}  {2 * en.preference_count(n)}")
