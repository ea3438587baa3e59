"""Print the homogeneous case table for formal dimensions 4 and 8, and for
each (entry, |signature|) pair the algebra that realizes it together with the
smoothability verdict and witness.

    python3 scripts/realization_table.py
"""

from __future__ import annotations

import sys
from fractions import Fraction

from waci.families import family_A, family_B
from waci.qform import signature
from waci.quotient import build_waci, middle_form
from waci.smooth import SMOOTHABLE, homogeneous_case_table, smoothable

# label -> list of (|sigma|, description, builder)
_REALIZATIONS = {
    "(I4)": [
        (0, "CP1 x CP1", (["x1", "x2"], ["x1^2", "x2^2"])),
        (2, "CP2 # CP2", (["x1", "x2"], ["x1^2 - x2^2", "x1*x2"])),
    ],
    "(II4)": [(1, "CP2", (["x"], ["x^3"]))],
    "(I8)": [
        (0, "(CP1)^4", (["a", "b", "c", "d"], ["a^2", "b^2", "c^2", "d^2"])),
        (2, "B(2)", ("B", Fraction(2))),
        (4, "(CP2 # CP2)^2", (["x1", "x2", "y1", "y2"], ["x1^2 - x2^2", "x1*x2", "y1^2 - y2^2", "y1*y2"])),
        (6, "B(-2/5)", ("B", Fraction(-2, 5))),
    ],
    "(II8)": [
        (0, "CP1 x CP1 x CP2", (["a", "b", "c"], ["a^2", "b^2", "c^3"])),
        (2, "(CP2 # CP2) x CP2", (["x1", "x2", "x3"], ["x1^2 - x2^2", "x1*x2", "x3^3"])),
        (4, "x1^2 - x3^2, x2^2 - x3^2, x1 x2 x3", (["x1", "x2", "x3"], ["x1^2 - x3^2", "x2^2 - x3^2", "x1*x2*x3"])),
    ],
    "(III8)": [
        (0, "CP1 x CP3", (["a", "b"], ["a^2", "b^4"])),
        (2, "CP4 # CP4", (["x1", "x2"], ["x1^4 - x2^4", "x1*x2"])),
    ],
    "(IV8)": [
        (1, "CP2 x CP2", (["a", "b"], ["a^3", "b^3"])),
        (3, "A(2)", ("A", Fraction(2))),
    ],
    "(V8)": [(1, "CP4", (["a"], ["a^5"]))],
}


def _build(src):
    if src[0] in ("A", "B"):
        return (family_A if src[0] == "A" else family_B)(src[1]).build()
    names, rels = src
    return build_waci([(n, 2) for n in names], rels)


def main() -> int:
    ok = True
    print(f"{'case':7} {'d':13} {'r':>2} {'|sigma|':>7}  {'algebra':38} verdict / witness")
    for entry in homogeneous_case_table():
        for sigma, desc, src in _REALIZATIONS[entry.label]:
            q = _build(src)
            v = smoothable(q)
            got = abs(signature(middle_form(q).gram))
            good = got == sigma and v.decision == SMOOTHABLE
            ok &= good
            w = v.witness
            if hasattr(w, "alphas"):
                wtxt = f"a={w.a} b={w.b} alpha={w.alphas}"
            else:
                wtxt = w.model if w else "-"
            print(f"{entry.label:7} {str(entry.degrees):13} {entry.r:>2} {got:>7}  {desc:38} {v.decision} / {wtxt}{'' if good else '  MISMATCH'}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
