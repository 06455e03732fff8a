"""Index-placement expressions.

    expr     := operand (SEP operand)*
    SEP      := '⊗' | '⊙' | '(x)' | '(.)'
    operand  := NAME '_' group
    group    := '{' slots '}' | slot
    slot     := target orders

Inside braces without commas every target is one digit ("C_{12'}");
with commas targets may have several digits ("C_{1,12^3}"). Orders are
primes (′ ″ ‴ or ') or ^k, with ^{k} for multi-digit k.
"""
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from utils.errors import BadOrderSet, DuplicateIndex, NonContiguousTargets, ParseError

SEPARATORS = ("⊗", "⊙", "(x)", "(.)")
PRIMES = {"′": 1, "″": 2, "‴": 3, "'": 1}
UNIT_NAME = "I"


class Slot(NamedTuple):
    target: int
    order: int


@dataclass(frozen=True)
class Operand:
    name: str
    slots: tuple[Slot, ...]
    position: int = field(default=0, compare=False)

    @property
    def arity(self) -> int:
        return len(self.slots)


@dataclass(frozen=True)
class PlacementExpr:
    operands: tuple[Operand, ...]
    text: str = field(default="", compare=False)

    @property
    def arity(self) -> int:
        """number of targets p"""
        return max((s.target for op in self.operands for s in op.slots), default=0)

    def slots(self) -> list[Slot]:
        return [s for op in self.operands for s in op.slots]

    def names(self) -> list[str]:
        return [op.name for op in self.operands]

    def __str__(self) -> str:
        return print_expr(self)


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.pos = 0

    def error(self, message: str, position: Optional[int] = None):
        raise ParseError(message, self.pos if position is None else position, self.src)

    def char(self, n: int = 0) -> str:
        i = self.pos + n
        return self.src[i] if i < len(self.src) else ""

    def skip_space(self):
        while self.char() and self.char().isspace():
            self.pos += 1

    def parse(self) -> PlacementExpr:
        operands = [self.operand()]
        while True:
            self.skip_space()
            if not self.char():
                break
            self.separator()
            operands.append(self.operand())
        return PlacementExpr(tuple(operands), self.src)

    def separator(self):
        for sep in SEPARATORS:
            if self.src.startswith(sep, self.pos):
                self.pos += len(sep)
                return
        self.error(f"expected a tensor separator, found {self.char()!r}")

    def operand(self) -> Operand:
        self.skip_space()
        start = self.pos
        if not (self.char().isascii() and self.char().isalpha()):
            self.error("expected an operand name" if self.char() else "unexpected end of expression")
        while self.char() and self.char().isascii() and self.char().isalnum():
            self.pos += 1
        name = self.src[start:self.pos]
        if self.char() != "_":
            self.error(f"expected '_' after {name!r}")
        self.pos += 1
        if self.char() == "{":
            slots = self.braced()
        else:
            slots = [self.slot(multi_digit=False)]
        return Operand(name, tuple(slots), start)

    def braced(self) -> list[Slot]:
        open_at = self.pos
        self.pos += 1
        # a ^{k} inside the group closes its own brace first
        depth, i = 1, self.pos
        while i < len(self.src) and depth:
            if self.src[i] == "{":
                depth += 1
            elif self.src[i] == "}":
                depth -= 1
            i += 1
        if depth:
            self.error("unterminated index group", open_at)
        close_at = i - 1
        comma_form = "," in self.src[self.pos:close_at]
        slots = []
        while True:
            self.skip_space()
            if self.pos >= close_at:
                break
            slots.append(self.slot(multi_digit=comma_form))
            self.skip_space()
            if comma_form and self.char() == ",":
                self.pos += 1
        if not slots:
            self.error("empty index group", open_at)
        if self.char() != "}":
            self.error("expected '}'")
        self.pos += 1
        return slots

    def slot(self, multi_digit: bool) -> Slot:
        start = self.pos
        if not self.char().isdigit():
            self.error("expected a target digit")
        if multi_digit:
            while self.char().isdigit():
                self.pos += 1
        else:
            self.pos += 1
        target = int(self.src[start:self.pos])
        if target == 0:
            self.error("targets start at 1", start)
        order = 0
        if self.char() == "^":
            self.pos += 1
            order = self.exponent(multi_digit)
        else:
            while self.char() in PRIMES:
                order += PRIMES[self.char()]
                self.pos += 1
        return Slot(target, order)

    def exponent(self, multi_digit: bool) -> int:
        if self.char() == "{":
            self.pos += 1
            start = self.pos
            while self.char().isdigit():
                self.pos += 1
            if start == self.pos or self.char() != "}":
                self.error("malformed ^{...} order")
            value = int(self.src[start:self.pos])
            self.pos += 1
            return value
        if not self.char().isdigit():
            self.error("expected digits after '^'")
        start = self.pos
        if multi_digit:
            while self.char().isdigit():
                self.pos += 1
        else:
            self.pos += 1
        return int(self.src[start:self.pos])


def _validate(expr: PlacementExpr):
    seen = {}
    by_target = {}
    for op in expr.operands:
        for slot in op.slots:
            if slot in seen:
                raise DuplicateIndex(f"index {format_slot(slot)} used twice", op.position, expr.text)
            seen[slot] = op.position
            by_target.setdefault(slot.target, []).append((slot.order, op.position))
    for target, entries in by_target.items():
        orders = sorted(o for o, _ in entries)
        if orders != [0] and orders != list(range(1, len(orders) + 1)):
            position = max(p for _, p in entries)
            raise BadOrderSet(f"orders {orders} at target {target} are neither a lone 0 nor 1..k",
                              position, expr.text)
    targets = sorted(by_target)
    if targets != list(range(1, len(targets) + 1)):
        raise NonContiguousTargets(f"targets {targets} are not 1..{len(targets)}", 0, expr.text)


def parse(text: str) -> PlacementExpr:
    expr = _Parser(text).parse()
    _validate(expr)
    return expr


def format_slot(slot: Slot, comma_form: bool = True) -> str:
    if slot.order == 0:
        return str(slot.target)
    if comma_form or slot.order < 10:
        return f"{slot.target}^{slot.order}"
    return f"{slot.target}^{{{slot.order}}}"


def _format_operand(op: Operand) -> str:
    if len(op.slots) == 1:
        slot = op.slots[0]
        if slot.target < 10 and slot.order < 10:
            return f"{op.name}_{{{format_slot(slot)}}}"
        return f"{op.name}_{{{format_slot(slot)},}}"
    return f"{op.name}_{{{','.join(format_slot(s) for s in op.slots)}}}"


def print_expr(expr: PlacementExpr) -> str:
    """Normal form: comma-separated ^k indices joined by ' ⊗ '"""
    return " ⊗ ".join(_format_operand(op) for op in expr.operands)


def normalize(text: str) -> str:
    return print_expr(parse(text))
