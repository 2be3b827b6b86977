"""Regenerate the bundled zero-ordinate fixture with mpmath.

Run from the repository root:

    python3 tools/make_zero_fixture.py

mpmath is used here on purpose: the fixture is an oracle for the package's
own zeta code and must not be produced by it.
"""

from pathlib import Path

import mpmath

HEIGHT = 1000
OUT = Path(__file__).resolve().parents[1] / "src" / "zetacount" / "data" / "zeros_1000.txt"


def main():
    mpmath.mp.dps = 30
    lines = [
        "# Ordinates of the nontrivial zeros of zeta(s) with 0 < gamma <= %d" % HEIGHT,
        "# computed with mpmath.zetazero at 30 significant digits",
        "# complete-to: %d" % HEIGHT,
    ]
    n = 1
    while True:
        gamma = mpmath.zetazero(n).imag
        if gamma > HEIGHT:
            break
        lines.append(mpmath.nstr(gamma, 22, strip_zeros=False))
        n += 1
    OUT.write_text("\n".join(lines) + "\n")
    print("wrote %d ordinates to %s" % (n - 1, OUT))


if __name__ == "__main__":
    main()
