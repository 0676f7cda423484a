"""CSV of minimal gaps of truncated spectra against the certified separation bound.

    python3 scripts/gap_table.py [max_level] > gaps.csv
"""
import sys
from pathlib import Path

from altbase.config import load_config
from altbase.spectrum import min_gap, separation_bound, spectrum_level

ROOT = Path(__file__).resolve().parent.parent


def main(argv):
    top = int(argv[1]) if len(argv) > 1 else 8
    print("config,level,count,min_gap,bound")
    for name in ("sqrt13", "golden"):
        cfg = load_config(ROOT / "configs" / f"{name}.json")
        b, D = cfg.base, cfg.alphabets
        bounds = [separation_bound(b, D, phase=i) for i in range(b.p)]
        for level in range(2, top + 1):
            s = spectrum_level(b, D, 0, level)
            # level-l values started at phase 0 end in phase l mod p
            print(f"{name},{level},{len(s)},{float(min_gap(s)):.8f},{float(bounds[level % b.p]):.8f}")


if __name__ == "__main__":
    main(sys.argv)
