"""Deterministic simulation of 1-D nearest-neighbor cellular automata and
small Turing machines.

Cellular automata run on a finite window wide enough that the radius-1
light cone never reaches the boundary, so the result is bit-identical to an
evolution on an unbounded tape.  Cells outside the window hold a uniform
background value that itself follows the rule (the image of the all-same
neighborhood), which keeps odd rules -- those that map the all-zero
neighborhood to a nonzero color -- free of artificial boundary wedges.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

CA = "CA"
TM = "TM"


@dataclass(frozen=True)
class RuleSpec:
    """Identifies one machine: a k-color radius-1 CA or an s-state k-color
    Turing machine, by its rule number."""

    kind: str
    colors: int
    rule_number: int
    states: int = 1

    def __post_init__(self):
        if self.kind not in (CA, TM):
            raise ValueError(f"unknown machine kind {self.kind!r}")
        if self.colors < 2:
            raise ValueError("colors must be >= 2")
        if self.kind == CA and self.states != 1:
            raise ValueError("CA rules have states = 1")
        if self.kind == TM and self.states < 1:
            raise ValueError("states must be >= 1")
        if not 0 <= self.rule_number < self.space_size:
            raise ValueError(
                f"rule_number {self.rule_number} outside the "
                f"{self.space_size}-rule space"
            )

    @property
    def space_size(self):
        """Number of distinct rules of this shape."""
        if self.kind == CA:
            return self.colors ** (self.colors ** 3)
        return (2 * self.states * self.colors) ** (self.states * self.colors)

    @classmethod
    def eca(cls, number):
        """Binary radius-1 CA (rules 0..255)."""
        return cls(CA, 2, number)

    @classmethod
    def ca(cls, colors, number):
        return cls(CA, colors, number)

    @classmethod
    def tm(cls, states, colors, number):
        return cls(TM, colors, number, states)


@dataclass(frozen=True, eq=False)
class SpaceTimeDiagram:
    """Dense grid of cell values; row 0 is the initial condition, row j the
    state after j steps."""

    width: int
    cells: np.ndarray  # shape (rows, width), dtype uint8

    def __post_init__(self):
        if self.cells.ndim != 2 or self.cells.shape[1] != self.width:
            raise ValueError("cells must be a 2-D array of the stated width")

    @property
    def rows(self):
        return self.cells.shape[0]

    def __eq__(self, other):
        if not isinstance(other, SpaceTimeDiagram):
            return NotImplemented
        return self.width == other.width and np.array_equal(
            self.cells, other.cells
        )


def _rule_table(rule):
    """Base-k digits of the rule number, entry n giving the image of the
    neighborhood whose base-k index is n."""
    k = rule.colors
    table = np.empty(k ** 3, dtype=np.uint8)
    n = rule.rule_number
    for i in range(k ** 3):
        table[i] = n % k
        n //= k
    return table


def ca_step(row, rule, background=0):
    """Apply one synchronous update of a radius-1 CA rule to a row.

    Cells just outside the row are taken to hold ``background`` (0 by
    default).  Output has the same length as the input.
    """
    if rule.kind != CA:
        raise ValueError("ca_step needs a CA rule")
    row = np.asarray(list(row), dtype=np.int64)
    if row.size < 3:
        raise ValueError("row must hold at least 3 cells")
    k = rule.colors
    if row.min() < 0 or row.max() >= k:
        raise ValueError(f"cell values must lie in [0, {k})")
    if not 0 <= background < k:
        raise ValueError(f"background must lie in [0, {k})")
    table = _rule_table(rule)
    padded = np.empty(row.size + 2, dtype=np.int64)
    padded[0] = padded[-1] = background
    padded[1:-1] = row
    idx = padded[:-2] * (k * k) + padded[1:-1] * k + padded[2:]
    return table[idx]


def _evolve_lookup(rule, init, steps, width):
    """Table-lookup evolution for any k; one numpy pass per step."""
    k = rule.colors
    table = _rule_table(rule)
    out = np.zeros((steps + 1, width), dtype=np.uint8)
    off = (width - len(init)) // 2
    out[0, off : off + len(init)] = init
    bg = 0
    row = out[0].astype(np.int64)
    padded = np.empty(width + 2, dtype=np.int64)
    for j in range(steps):
        padded[0] = padded[-1] = bg
        padded[1:-1] = row
        idx = padded[:-2] * (k * k) + padded[1:-1] * k + padded[2:]
        row = table[idx].astype(np.int64)
        out[j + 1] = row
        bg = int(table[bg * (k * k + k + 1)])
    return out


def _evolve_bits(rule_number, init, steps, width):
    """Binary-rule evolution on Python integers, one bit per cell.

    Each of the eight neighborhood patterns contributes one mask term, so a
    step is a handful of word-wide boolean operations regardless of width.
    Returns the list of row integers (bit i = cell i).
    """
    x = 0
    off = (width - len(init)) // 2
    for i, c in enumerate(init):
        if c:
            x |= 1 << (off + i)
    mask = (1 << width) - 1
    outs = [(rule_number >> p) & 1 for p in range(8)]
    rows = [x]
    bg = 0
    for _ in range(steps):
        left = ((x << 1) & mask) | bg
        right = (x >> 1) | (bg << (width - 1))
        y = 0
        for p in range(8):
            if outs[p]:
                l, c, r = (p >> 2) & 1, (p >> 1) & 1, p & 1
                term = (
                    (left if l else ~left)
                    & (x if c else ~x)
                    & (right if r else ~right)
                )
                y |= term
        x = y & mask
        bg = outs[7] if bg else outs[0]
        rows.append(x)
    return rows


def _bits_to_cells(rows, width):
    out = np.empty((len(rows), width), dtype=np.uint8)
    for j, x in enumerate(rows):
        line = format(x, f"0{width}b")[::-1].encode()
        out[j] = np.frombuffer(line, dtype=np.uint8)
    out -= ord("0")
    return out


def evolve_ca(rule, init, steps, width=None):
    """Evolve ``rule`` from ``init`` (centered on a zero background) for
    ``steps`` steps.

    The window defaults to ``len(init) + 2*(steps+1)`` cells so that edge
    effects cannot occur; a wider ``width`` may be requested, which leaves
    every cell value unchanged and merely pads the rows.
    """
    if rule.kind != CA:
        raise ValueError("evolve_ca needs a CA rule")
    if steps < 0:
        raise ValueError("steps must be >= 0")
    cells = [int(c) for c in init]
    if not cells:
        raise ValueError("initial condition must be non-empty")
    if any(c < 0 or c >= rule.colors for c in cells):
        raise ValueError(f"cell values must lie in [0, {rule.colors})")
    min_width = len(cells) + 2 * (steps + 1)
    if width is None:
        width = min_width
    elif width < min_width:
        raise ValueError(f"width must be >= {min_width}")
    if rule.colors == 2:
        grid = _bits_to_cells(
            _evolve_bits(rule.rule_number, cells, steps, width), width
        )
    else:
        grid = _evolve_lookup(rule, cells, steps, width)
    return SpaceTimeDiagram(width, grid)


@dataclass(frozen=True)
class TmConfiguration:
    """Tape (sparse map position -> color, 0 elsewhere), head position, and
    machine state."""

    tape: dict
    head: int
    state: int


BLANK_TM = TmConfiguration(tape={}, head=0, state=0)


@lru_cache(maxsize=4096)
def _tm_table(rule):
    """Decode a TM rule number into a tuple of (new_state, new_color, move)
    actions indexed by state*k + color.

    The number written in base 2*s*k has s*k digits (most significant
    first).  Digit d splits as d = new_state*(2k) + new_color*2 + (0 if the
    head moves right else 1).
    """
    if rule.kind != TM:
        raise ValueError("expected a TM rule")
    s, k = rule.states, rule.colors
    base = 2 * s * k
    digits = []
    n = rule.rule_number
    for _ in range(s * k):
        digits.append(n % base)
        n //= base
    digits.reverse()
    table = []
    for d in digits:
        new_state, r = divmod(d, 2 * k)
        new_color, odd = divmod(r, 2)
        table.append((new_state, new_color, 1 if odd == 0 else -1))
    return tuple(table)


def tm_step(cfg, rule):
    """One Turing-machine step: read, write, move, switch state."""
    table = _tm_table(rule)
    color = cfg.tape.get(cfg.head, 0)
    new_state, new_color, move = table[cfg.state * rule.colors + color]
    tape = dict(cfg.tape)
    if new_color:
        tape[cfg.head] = new_color
    else:
        tape.pop(cfg.head, None)
    return TmConfiguration(tape, cfg.head + move, new_state)


def reached_states_sequence(rule, steps):
    """Run ``rule`` from the blank tape and report, for each step j in
    0..steps, how many distinct states have been visited so far.

    The sequence starts at 1 (the start state), never decreases, and is
    bounded by the state count.  It is the object whose compressed length
    stands in for the machine's complexity.
    """
    if steps < 0:
        raise ValueError("steps must be >= 0")
    table = _tm_table(rule)
    k = rule.colors
    tape = {}
    head = 0
    state = 0
    seen = 1
    count = 1
    out = [1]
    for _ in range(steps):
        new_state, new_color, move = table[state * k + tape.get(head, 0)]
        if new_color:
            tape[head] = new_color
        else:
            tape.pop(head, None)
        head += move
        state = new_state
        if not (seen >> state) & 1:
            seen |= 1 << state
            count += 1
        out.append(count)
    return out


def state_sequence(rule, steps):
    """The raw state occupied at each step 0..steps (alternate complexity
    input to :func:`reached_states_sequence`)."""
    if steps < 0:
        raise ValueError("steps must be >= 0")
    table = _tm_table(rule)
    k = rule.colors
    tape = {}
    head = 0
    state = 0
    out = [0]
    for _ in range(steps):
        state, new_color, move = table[state * k + tape.get(head, 0)]
        if new_color:
            tape[head] = new_color
        else:
            tape.pop(head, None)
        head += move
        out.append(state)
    return out
