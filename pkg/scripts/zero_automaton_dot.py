"""Write the zero automaton of the sqrt13 base over D = ([-2,2],[-1,1]) as DOT.

    python3 scripts/zero_automaton_dot.py [out.dot]
"""
import sys
from pathlib import Path

from altbase.automata import build_zero_automaton, to_dot
from altbase.config import load_config

ROOT = Path(__file__).resolve().parent.parent


def main(argv):
    cfg = load_config(ROOT / "configs" / "sqrt13.json")
    out = build_zero_automaton(cfg.base, cfg.alphabets)
    aut = out.automaton
    phases = [sum(1 for ph, _ in aut.states if ph == i) for i in range(cfg.base.p)]
    print(f"complete={out.complete} states={len(aut.states)} per phase={phases} edges={len(aut.transitions)}",
          file=sys.stderr)
    text = to_dot(aut, "zero")
    if len(argv) > 1:
        Path(argv[1]).write_text(text)
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    main(sys.argv)
