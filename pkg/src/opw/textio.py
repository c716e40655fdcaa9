"""Bit-exact textual syntax for opetopes and addresses.

Grammar::

    E    := "pt" | "ar" | "deg(" E ")" | "tree{" ADDR "->" E (";" ADDR "->" E)* "}"
    ADDR := "*" | "[" ADDR* "]"

``*`` is the unique dimension-0 address; bracket nesting carries the
dimension, with empty brackets coerced to the dimension the context demands.
"""

from __future__ import annotations

from .errors import DimensionMismatch, ParseError
from .opetope import (
    Address,
    Opetope,
    arrow,
    degenerate,
    point,
    tree,
    validate,
)


def format_address(addr: Address) -> str:
    if addr.dim == 0:
        return "*"
    return "[" + "".join(format_address(e) for e in addr.path) + "]"


def format_opetope(op: Opetope) -> str:
    if op.kind == 0:
        return "pt"
    if op.kind == 1:
        return "ar"
    if op.kind == 2:
        return f"deg({format_opetope(op.of)})"
    items = "; ".join(
        f"{format_address(a)} -> {format_opetope(d)}" for a, d in op.nodes
    )
    return "tree{" + items + "}"


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, token: str):
        self.skip_ws()
        if not self.text.startswith(token, self.pos):
            raise ParseError(
                f"expected {token!r} at position {self.pos} in {self.text!r}"
            )
        self.pos += len(token)

    def try_word(self, word: str) -> bool:
        self.skip_ws()
        if self.text.startswith(word, self.pos):
            end = self.pos + len(word)
            nxt = self.text[end:end + 1]
            if not nxt.isalnum() and nxt != "_":
                self.pos = end
                return True
        return False

    def done(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)


def _parse_raw_address(sc: _Scanner):
    """Parse an address into nested tuples ('*' or tuple of entries)."""
    ch = sc.peek()
    if ch == "*":
        sc.expect("*")
        return "*"
    if ch == "[":
        sc.expect("[")
        entries = []
        while sc.peek() != "]":
            if sc.done():
                raise ParseError("unterminated address")
            entries.append(_parse_raw_address(sc))
        sc.expect("]")
        return tuple(entries)
    raise ParseError(f"expected an address at position {sc.pos}")


def _coerce_address(raw, dim: int) -> Address:
    if raw == "*":
        if dim != 0:
            raise DimensionMismatch(f"'*' is 0-dimensional, context wants {dim}")
        return Address(0)
    if dim == 0:
        raise DimensionMismatch("dimension-0 address must be '*'")
    return Address(dim, tuple(_coerce_address(e, dim - 1) for e in raw))


def parse_address(text: str, dim: int) -> Address:
    sc = _Scanner(text)
    raw = _parse_raw_address(sc)
    if not sc.done():
        raise ParseError(f"trailing input in address {text!r}")
    return _coerce_address(raw, dim)


def _parse_expr(sc: _Scanner) -> Opetope:
    if sc.try_word("pt"):
        return point()
    if sc.try_word("ar"):
        return arrow()
    if sc.try_word("deg"):
        sc.expect("(")
        inner = _parse_expr(sc)
        sc.expect(")")
        return degenerate(inner)
    if sc.try_word("tree"):
        sc.expect("{")
        entries = []
        while True:
            raw = _parse_raw_address(sc)
            sc.expect("->")
            entries.append((raw, _parse_expr(sc)))
            if sc.peek() == ";":
                sc.expect(";")
                continue
            break
        sc.expect("}")
        dims = {d.dim for _, d in entries}
        if len(dims) != 1:
            raise DimensionMismatch(f"mixed decoration dimensions {sorted(dims)}")
        (dec_dim,) = dims
        node_map = {}
        for raw, dec in entries:
            addr = _coerce_address(raw, dec_dim)
            if addr in node_map:
                raise ParseError(f"duplicate node address {format_address(addr)}")
            node_map[addr] = dec
        return tree(node_map)
    raise ParseError(f"expected an opetope expression at position {sc.pos}")


def parse_opetope(text: str, check: bool = True) -> Opetope:
    sc = _Scanner(text)
    op = _parse_expr(sc)
    if not sc.done():
        raise ParseError(f"trailing input in opetope {text!r}")
    return validate(op) if check else op
