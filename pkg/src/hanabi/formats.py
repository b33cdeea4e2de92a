"""Text formats for instances and play sequences.

Instance::

    HANABI v1
    n=<int> c=<int> r=<int> h=<int>
    <value> <color>        (one line per card)

Plan: one record per card, ``d``, ``s`` or ``p``, optionally followed by
`` | v:k v:k ...`` listing cards played from hand after that step.
Lines starting with ``#`` and blank lines are ignored in both formats.
"""

from __future__ import annotations

import re
from collections import Counter

from .core import Action, Card, Instance, PlaySequence, Step
from .errors import MultiplicityExceeded, ParseError

MAGIC = "HANABI v1"
_PARAMS = re.compile(r"n=(\d+)\s+c=(\d+)\s+r=(\d+)\s+h=(\d+)")


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def parse_instance(text: str) -> Instance:
    lines = _content_lines(text)
    header = next(lines, None)
    if header is None or header[1] != MAGIC:
        raise ParseError(f"expected {MAGIC!r} header", header[0] if header else 1)
    params = next(lines, None)
    if params is None:
        raise ParseError("missing parameter line", header[0] + 1)
    match = _PARAMS.fullmatch(params[1])
    if not match:
        raise ParseError(f"bad parameter line {params[1]!r}", params[0])
    n, c, r, h = map(int, match.groups())
    if n < 1 or c < 1 or r < 1:
        raise ParseError("n, c and r must be positive", params[0])
    deck = []
    counts: Counter = Counter()
    for lineno, line in lines:
        fields = line.split()
        if len(fields) != 2 or not all(f.isdigit() for f in fields):
            raise ParseError(f"expected '<value> <color>', got {line!r}", lineno)
        a, k = int(fields[0]), int(fields[1])
        if not 1 <= a <= n:
            raise ParseError("value out of range", lineno)
        if not 1 <= k <= c:
            raise ParseError("color out of range", lineno)
        card = Card(a, k)
        counts[card] += 1
        if counts[card] > r:
            raise MultiplicityExceeded(f"card {card} occurs more than r={r} times, line {lineno}")
        deck.append(card)
    return Instance(n, c, r, h, tuple(deck))


def emit_instance(instance: Instance) -> str:
    out = [MAGIC, f"n={instance.n} c={instance.c} r={instance.r} h={instance.h}"]
    out += [f"{a} {k}" for a, k in instance.deck]
    return "\n".join(out) + "\n"


_ACTIONS = {a.value: a for a in Action}


def _parse_card(token: str, lineno: int) -> Card:
    parts = token.split(":")
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise ParseError(f"bad card {token!r}, expected value:color", lineno)
    return Card(int(parts[0]), int(parts[1]))


def parse_plan(text: str) -> PlaySequence:
    steps = []
    for lineno, line in _content_lines(text):
        head, bar, tail = line.partition("|")
        head = head.strip()
        action = _ACTIONS.get(head)
        if action is None:
            raise ParseError(f"unknown action {head!r}, expected d, s or p", lineno)
        chained = ()
        if bar:
            tokens = tail.split()
            if not tokens:
                raise ParseError("empty hand-play list after '|'", lineno)
            chained = tuple(_parse_card(tok, lineno) for tok in tokens)
        steps.append(Step(action, chained))
    return PlaySequence(steps)


def emit_plan(plan: PlaySequence) -> str:
    out = []
    for step in plan:
        line = step.action.value
        if step.hand_plays:
            line += " | " + " ".join(str(card) for card in step.hand_plays)
        out.append(line)
    return "\n".join(out) + "\n" if out else ""
