"""Write the automaton of greedy expansions for the sqrt13 base as DOT.

States are (i, j, k): expansion d*(1) of shift i is being followed, the next
digit has phase j, and k is the position inside that quasi-greedy writing.

    python3 scripts/greedy_automaton_dot.py [out.dot]
"""
import sys
from pathlib import Path

from altbase.automata import to_dot
from altbase.config import load_config
from altbase.expansion import shift_base
from altbase.normalization import build_greedy_automaton, quasi_greedy_writing

ROOT = Path(__file__).resolve().parent.parent


def main(argv):
    b = load_config(ROOT / "configs" / "sqrt13.json").base
    for i in range(b.p):
        digits, m, n = quasi_greedy_writing(shift_base(b, i))
        head = " ".join(map(str, digits[:m]))
        tail = " ".join(map(str, digits[m:]))
        print(f"shift {i}: {head} ({tail})  m={m} n={n}", file=sys.stderr)
    aut = build_greedy_automaton(b)
    finals = sorted(aut.states[q] for q in aut.finals)
    print(f"states={len(aut.states)} finals={finals}", file=sys.stderr)
    text = to_dot(aut, "greedy")
    if len(argv) > 1:
        Path(argv[1]).write_text(text)
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    main(sys.argv)
