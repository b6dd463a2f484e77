"""Text literals shared by the CLI and the tests.

    signature     2x3x5
    tableau       [1; 2,0]            one ';'-separated vector per level
    wreath pair   (a; b1,b2,...,bn)
    H element     (k; s1,...,sn)
    H word        r r^-3 t1 t2^5      whitespace-separated letters

Every literal can also be given as JSON nested arrays: ``[[1],[2,0]]`` for a
tableau, ``[a, [b1, ..., bn]]`` for pairs and H elements, ``[2,3,5]`` for a signature.
"""

from __future__ import annotations

import json
import re

from wreathlab.core import Signature, TreeElement

class ParseError(ValueError):
    def __init__(self, text: str, offset: int, expected: str):
        self.text = text
        self.offset = len(text[:offset].encode())
        self.expected = expected
        found = repr(text[offset]) if offset < len(text) else "end of input"
        super().__init__(f"at byte {self.offset}: expected {expected}, found {found}")

class _Cursor:
    _INT = re.compile(r"[+-]?\d+")

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            raise ParseError(self.text, self.pos, repr(ch))
        self.pos += 1

    def integer(self) -> int:
        self.skip_ws()
        m = self._INT.match(self.text, self.pos)
        if not m:
            raise ParseError(self.text, self.pos, "integer")
        self.pos = m.end()
        return int(m.group())

    def int_list(self, stop: str) -> list[int]:
        """Comma-separated integers up to (not consuming) ``stop``; may be empty."""
        out = []
        if self.peek() == stop:
            return out
        out.append(self.integer())
        while self.peek() == ",":
            self.pos += 1
            out.append(self.integer())
        return out

    def end(self):
        self.skip_ws()
        if self.pos != len(self.text):
            raise ParseError(self.text, self.pos, "end of input")

def parse_signature(text: str) -> Signature:
    text_stripped = text.strip()
    if text_stripped.startswith("["):
        return Signature(tuple(json.loads(text_stripped)))
    cur = _Cursor(text)
    orders = [cur.integer()]
    while cur.peek() in ("x", "X"):
        cur.pos += 1
        orders.append(cur.integer())
    cur.end()
    if any(o < 1 for o in orders):
        raise ValueError(f"cyclic orders must be >= 1 in {text!r}")
    return Signature(tuple(orders))

def parse_element(text: str, sig: Signature) -> TreeElement:
    stripped = text.strip()
    if stripped.startswith("[["):
        return TreeElement.from_levels(sig, json.loads(stripped))
    cur = _Cursor(text)
    cur.expect("[")
    levels = [cur.int_list(";")]
    while cur.peek() == ";":
        cur.pos += 1
        levels.append(cur.int_list(";"))
    cur.expect("]")
    cur.end()
    return TreeElement.from_levels(sig, levels)

def format_element(g: TreeElement) -> str:
    return str(g)

def parse_pair(text: str) -> tuple[int, tuple[int, ...]]:
    """``(a; b1,...,bn)`` -> ``(a, (b1, ..., bn))``; also accepts JSON ``[a, [b...]]``."""
    stripped = text.strip()
    if stripped.startswith("["):
        top, base = json.loads(stripped)
        return int(top), tuple(int(b) for b in base)
    cur = _Cursor(text)
    cur.expect("(")
    top = cur.integer()
    cur.expect(";")
    base = cur.int_list(")")
    cur.expect(")")
    cur.end()
    return top, tuple(base)

def format_pair(top: int, base) -> str:
    return f"({top}; {','.join(map(str, base))})"

parse_h_literal = parse_pair
format_h_literal = format_pair

_LETTER = re.compile(r"(r|t(\d+))(?:\^([+-]?\d+))?")

def parse_word(text: str) -> list[tuple[int, int]]:
    """Letters as ``(symbol, exponent)``; symbol 0 is ``r``, ``i >= 1`` is ``t_i``."""
    out = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _LETTER.match(text, pos)
        if not m:
            raise ParseError(text, pos, "letter 'r' or 't<index>'")
        end = m.end()
        if end < n and not text[end].isspace():
            raise ParseError(text, end, "whitespace or '^<exponent>'")
        sym = 0 if m.group(2) is None else int(m.group(2))
        if m.group(2) is not None and sym < 1:
            raise ParseError(text, m.start(2), "index >= 1")
        exp = 1 if m.group(3) is None else int(m.group(3))
        if exp == 0:
            raise ParseError(text, m.start(3), "nonzero exponent")
        out.append((sym, exp))
        pos = end
    return out

def format_word(letters) -> str:
    parts = []
    for sym, exp in letters:
        name = "r" if sym == 0 else f"t{sym}"
        parts.append(name if exp == 1 else f"{name}^{exp}")
    return " ".join(parts)
