# -*- coding: utf-8 -*-
"""Regenerate special_fn/data/airy_reference.csv: `x,ai` with Ai from mpmath at 30 digits.
Grid: [-12, 6] step 1/20 (the accuracy window of the Airy tests)."""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

try:
    import mpmath
except ImportError:
    print("mpmath required: pip install mpmath")
    sys.exit(1)

from config.app_config import AIRY_TABLE_PATH

X_MIN = -12
X_MAX = 6
STEPS_PER_UNIT = 20


def main():
    mpmath.mp.dps = 30
    os.makedirs(os.path.dirname(AIRY_TABLE_PATH), exist_ok=True)
    count = (X_MAX - X_MIN) * STEPS_PER_UNIT + 1
    with open(AIRY_TABLE_PATH, "w", encoding="utf-8", newline="\n") as f:
        f.write("x,ai\n")
        for i in range(count):
            x = mpmath.mpf(X_MIN) + mpmath.mpf(i) / STEPS_PER_UNIT
            f.write("%s,%s\n" % (mpmath.nstr(x, 6), mpmath.nstr(mpmath.airyai(x), 20)))
    print(f"Wrote {count} rows to {AIRY_TABLE_PATH}")


if __name__ == "__main__":
    main()
