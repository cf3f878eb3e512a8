"""Regenerate the JSON fixtures under fixtures/.

Run from the repository root:  python3 tools/make_fixtures.py
"""

import json
import os
import sys

from hopfrb import (FieldCtx, GroupTable, RelRBHopf, check_rrbo, hrbo_action,
                    opposite_hopf, rrb_to_json, sweedler_h4)
from hopfrb.hopf_core import LinearMap

OUT = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "fixtures")


def write(name: str, obj) -> None:
    path = os.path.join(OUT, name)
    with open(path, "w") as fh:
        json.dump(obj, fh, indent=1, sort_keys=True)
        fh.write("\n")
    print("wrote", path)


def h4_rrb() -> dict:
    """H4 factored as (k*1) * H4: the whole algebra is the L-side, so the
    operator is the identity and the action is Phi_a(b) = S(a_(1)) b a_(2)."""
    ctx = FieldCtx.rationals()
    H = sweedler_h4(ctx)
    data = RelRBHopf(H, opposite_hopf(H), hrbo_action(H), LinearMap.identity(ctx, H.dim))
    rep = check_rrbo(data, full=True)
    assert rep.ok, rep.identity
    return rrb_to_json(data)


def main() -> int:
    os.makedirs(OUT, exist_ok=True)
    write("z2.json", GroupTable.cyclic(2).to_json())
    write("z3.json", GroupTable.cyclic(3).to_json())
    write("z4.json", GroupTable.cyclic(4).to_json())
    write("s3.json", GroupTable.symmetric(3).to_json())
    write("f21.json", GroupTable.metacyclic(7, 3, 2).to_json())
    write("h4-rrb-exact-factorization.json", h4_rrb())
    return 0


if __name__ == "__main__":
    sys.exit(main())
