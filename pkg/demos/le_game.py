"""Play the Le-game on random fillings and compare strategies."""

import random

from cominuscule.diagrams import OPlusDiagram, inline, leify_direct, render_ascii
from cominuscule.legame import families_for, get_strategy, le_game_trace
from cominuscule.posets import build_poset

rng = random.Random(7)
for args in (("A", 5, 3), ("B", 4, 4), ("D", 5, 5), ("D", 5, 1)):
    p = build_poset(*args)
    o = p.top
    d = OPlusDiagram(o, rng.getrandbits(len(o.boxes)) & o.mask)
    print(f"\n{p.name} families {families_for(p)}")
    print(render_ascii(d))
    for name in ("southwest", "northeast", "random"):
        steps = le_game_trace(d, get_strategy(name, seed=1), check_value=True)
        final = steps[-1].after if steps else d
        moves = ", ".join(s.move.describe() for s in steps) or "none"
        print(f"  {name:9} {len(steps)} moves -> {inline(final)}   [{moves}]")
    print("  direct             ->", inline(leify_direct(d)))
