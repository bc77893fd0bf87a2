"""Line-oriented text format for automata.

::

    # evil numbers: even number of 1s
    base 2
    states 2
    initial 0
    finals 0
    direction lsd
    0 0 -> 0
    0 1 -> 1
    1 0 -> 1
    1 1 -> 0

Header lines may come in any order, but each only once; ``direction``
defaults to ``msd``.  Missing transitions go to an implicit dead state.  An
``msd`` machine reads the most significant digit first and is reversed and
determinized into the internal LSD-first convention.
"""

import re
import warnings

from .automaton import Dfa, determinize, minimize, reachable, reverse
from .errors import ParseError

MSD = "msd"
LSD = "lsd"
_TOKEN = re.compile(r"\S+")


class AutomatonWarning(UserWarning):
    pass


def _tokens(line):
    body = line.split("#", 1)[0]
    return [(m.group(), m.start() + 1) for m in _TOKEN.finditer(body)]


def _int(tok, lineno, what):
    text, col = tok
    try:
        value = int(text)
    except ValueError:
        raise ParseError(f"expected an integer {what}, got {text!r}", lineno, col) from None
    if value < 0:
        raise ParseError(f"{what} must be non-negative, got {value}", lineno, col)
    return value


def parse_automaton(text):
    """Parse the text format into a DFA over LSD-first words."""
    header = {}
    transitions = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        toks = _tokens(line)
        if not toks:
            continue
        key = toks[0][0]
        if key in ("base", "states", "initial", "finals", "direction"):
            if key in header:
                raise ParseError(f"duplicate {key!r} line", lineno, toks[0][1])
            args = toks[1:]
            if key == "finals":
                header[key] = [(_int(t, lineno, "state"), lineno, t[1]) for t in args]
                continue
            if len(args) != 1:
                raise ParseError(f"{key!r} takes exactly one value", lineno, toks[0][1])
            if key == "direction":
                if args[0][0] not in (MSD, LSD):
                    raise ParseError("direction must be msd or lsd", lineno, args[0][1])
                header[key] = args[0][0]
            else:
                header[key] = (_int(args[0], lineno, key), lineno, args[0][1])
            continue
        if len(toks) != 4 or toks[2][0] != "->":
            raise ParseError("expected a transition 'q a -> p'", lineno, toks[0][1])
        q = _int(toks[0], lineno, "state")
        a = _int(toks[1], lineno, "digit")
        p = _int(toks[3], lineno, "state")
        transitions.append((q, a, p, lineno, toks))

    for key in ("base", "states", "initial"):
        if key not in header:
            raise ParseError(f"missing {key!r} line")
    k, k_line, k_col = header["base"]
    if k < 2:
        raise ParseError(f"base must be at least 2, got {k}", k_line, k_col)
    n, n_line, n_col = header["states"]
    if n < 1:
        raise ParseError("an automaton needs at least one state", n_line, n_col)

    def check_state(q, line, col):
        if q >= n:
            raise ParseError(f"state {q} out of range 0..{n - 1}", line, col)

    initial, i_line, i_col = header["initial"]
    check_state(initial, i_line, i_col)
    finals = set()
    for q, line, col in header.get("finals", []):
        check_state(q, line, col)
        finals.add(q)

    dead = n
    rows = [[None] * k for _ in range(n)]
    for q, a, p, line, toks in transitions:
        check_state(q, line, toks[0][1])
        check_state(p, line, toks[3][1])
        if a >= k:
            raise ParseError(f"digit {a} out of range for base {k}", line, toks[1][1])
        if rows[q][a] is not None and rows[q][a] != p:
            raise ParseError(f"state {q} already has a transition on {a}", line, toks[0][1])
        rows[q][a] = p
    needs_dead = any(p is None for row in rows for p in row)
    rows = [[dead if p is None else p for p in row] for row in rows]
    if needs_dead:
        rows.append([dead] * k)
    dfa = Dfa.from_rows(k, rows, initial, finals)

    unreachable = sorted(set(range(n)) - set(reachable(dfa)))
    if unreachable:
        warnings.warn(
            AutomatonWarning(f"states unreachable from the initial state: {unreachable}"),
            stacklevel=2,
        )
    if header.get("direction", MSD) == MSD:
        return determinize(reverse(dfa))
    return dfa


def render_automaton(a, direction=LSD, comment=None):
    """Text for ``a``; ``direction="msd"`` writes the minimal MSD-first machine."""
    if direction == MSD:
        a = minimize(determinize(reverse(a)))
    elif direction != LSD:
        raise ValueError("direction must be msd or lsd")
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"base {a.k}")
    lines.append(f"states {a.n_states}")
    lines.append(f"initial {a.initial}")
    lines.append("finals " + " ".join(str(q) for q in sorted(a.final_states)))
    lines.append(f"direction {direction}")
    for q in range(a.n_states):
        for d in range(a.k):
            lines.append(f"{q} {d} -> {int(a.delta[q, d])}")
    return "\n".join(lines) + "\n"


def load_automaton(path):
    with open(path, encoding="utf-8") as fh:
        return parse_automaton(fh.read())
