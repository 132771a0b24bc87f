"""Walk through the standard small examples end to end."""

from cominuscule import bijections as bij
from cominuscule.diagrams import is_pds, leify_direct, parse_inline, render_ascii, to_subexpression
from cominuscule.posets import build_poset
from cominuscule.preference import alpha_inverse, phi_D, psi_trace, render_trace


def section(title):
    print(f"\n== {title}")


section("three fillings of the 2x3 shape in (A4,2)")
p = build_poset("A", 4, 2)
for text in ("000/000", "0+0/00+", "000/+0+"):
    d = parse_inline(p, text)
    print(render_ascii(d))
    print(f"  {to_subexpression(d)}  PDS: {is_pds(d)}")
d = parse_inline(p, "0+0/00+")
print("Le-ification of the middle one:", leify_direct(d))

section("diagram -> cell -> decorated permutation")
for t, n, j, text in (("A", 7, 4, "/0+/000/+++0"), ("B", 3, 3, "+/00/+")):
    d = parse_inline(build_poset(t, n, j), text)
    print(f"{d.poset.name} {text!r}")
    print("  cell:     ", bij.phi2(d))
    print("  decorated:", bij.phi3(d))

section("a preference function of length 9")
f = (4, 6, 3, 1, 7, 5, 7, 2, 1)
print("alpha^-1:", alpha_inverse(f))
steps = psi_trace(f)
print(render_trace(steps[:2], notes=True))
print("...")
print(render_trace(steps[-1:]))
print("Phi of the final grid:", phi_D(steps[-1].grid))
