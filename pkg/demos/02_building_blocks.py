"""
The four building blocks
========================

Each block's flip crossed product, with generator names and the matrix of
the dual action on those generators.
"""

from flipk import Block, diag_flip

blocks = [Block.point(), Block.susp()]
blocks += [Block.cuntz(n) for n in (2, 3, 4, 6)]
blocks += [Block.drop(n) for n in (2, 3, 6)]

for b in blocks:
    c = diag_flip(b)
    print(f"{b} on {b.algebra}: {c.kdata}   [{c.source}]")
    for d in (0, 1):
        if c.kdata[d].is_trivial:
            continue
        print(f"   K{d} generators: {', '.join(c.generators[d])}")
        print(f"   dual action:   {c.dual_action[d].matrix.tolist()}")
        # the dual action has order two
        assert c.dual_action[d].is_involution()
