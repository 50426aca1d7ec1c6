#!/usr/bin/env python3
"""Regenerate the bundled partial-quotient tables in crates/core/data/.

Each constant is evaluated with mpmath at two working precisions; only the
leading terms on which both expansions agree are kept, then the table is
truncated to TERMS entries.
"""
import pathlib
import sys

import mpmath

TERMS = 1000
OUT = pathlib.Path(__file__).resolve().parent.parent / "crates" / "core" / "data"

CONSTANTS = {
    "pi": ("pi", lambda: mpmath.pi),
    "log2_3": ("log2(3)", lambda: mpmath.log(3, 2)),
}


def expansion(value_fn, dps, count):
    mpmath.mp.dps = dps
    x = mpmath.mpf(value_fn())
    # exact rational from the binary float, then Euclid on integers
    num, den = mpmath.mpf(x).man_exp
    p, q = (num << den, 1) if den >= 0 else (num, 1 << -den)
    out = []
    while q and len(out) < count:
        a = p // q
        out.append(a)
        p, q = q, p - a * q
    return out


def stable_terms(value_fn):
    lo = expansion(value_fn, 2500, TERMS + 200)
    hi = expansion(value_fn, 5000, TERMS + 200)
    n = 0
    while n < min(len(lo), len(hi)) and lo[n] == hi[n]:
        n += 1
    # drop a margin: the last agreeing terms can still be float noise
    n = max(0, n - 20)
    if n < TERMS:
        sys.exit(f"only {n} stable terms; raise the precision")
    return lo[:TERMS]


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for name, (label, fn) in CONSTANTS.items():
        terms = stable_terms(fn)
        lines = [
            f"# simple continued fraction partial quotients of {label}",
            f"# {len(terms)} terms, generated by scripts/gen_constants.py (mpmath {mpmath.__version__})",
            "# one term per line; lines starting with # are comments",
        ]
        lines += [str(t) for t in terms]
        (OUT / f"{name}.txt").write_text("\n".join(lines) + "\n")
        print(f"{name}: {len(terms)} terms")


if __name__ == "__main__":
    main()
