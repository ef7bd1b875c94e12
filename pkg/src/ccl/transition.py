"""Phase-transition machinery over Gray-coded initial conditions.

A rule is probed by evolving it from consecutive numbered initial
conditions (which differ by a single cell) and watching how the compressed
length of the evolution jumps.  The characteristic exponent summarizes one
sweep, its growth across longer runtimes is fitted by a line, and the slope
of that line -- the transition coefficient -- ranks rules by how sensitive
they are to their initial condition.

All initial conditions of one sweep share a common window (sized for the
longest condition and the full runtime), and every runtime block is
measured as a row prefix of the same evolution.  Both choices remove
compressor artifacts that have nothing to do with the dynamics: varying
window widths or restarts at different widths can shift match lengths
inside the compressor and fake jumps between otherwise identical regimes.
"""

import statistics
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .automaton import evolve_ca
from .complexity import DEFAULT_COMPRESSOR, compressed_length, encode_diagram
from .initcond import initial_condition


@dataclass(frozen=True)
class IcProfile:
    """Compressed length of a rule's evolution for each initial condition
    number 0..len(lengths)-1, all measured in a common window."""

    rule: object
    steps: int
    lengths: tuple
    normalized: bool


@dataclass(frozen=True)
class TransitionRecord:
    """One rule's characteristic-exponent sequence over growing runtimes,
    its fitted line, and the coefficient C (= fitted slope)."""

    rule: object
    n: int
    t_block: int
    blocks: int
    S_c: tuple
    fit: tuple  # (intercept, slope)

    @property
    def C(self):
        return self.fit[1]

    def to_dict(self):
        return {
            "rule": self.rule.rule_number,
            "kind": self.rule.kind,
            "colors": self.rule.colors,
            "n": self.n,
            "t_block": self.t_block,
            "blocks": self.blocks,
            "S_c": list(self.S_c),
            "intercept": self.fit[0],
            "coefficient": self.C,
        }


@dataclass(frozen=True)
class InterestingIcs:
    """Initial-condition numbers with the sharpest profile jumps for one
    rule, together with the aggregated per-condition score profile;
    ``warning`` is set when the rule's transition coefficient does not
    clear the phase-transition threshold."""

    rule: object
    ics: tuple
    profile: tuple
    coefficient: float
    threshold: float
    warning: bool

    def to_dict(self):
        return {
            "rule": self.rule.rule_number,
            "ics": list(self.ics),
            "profile": list(self.profile),
            "coefficient": self.coefficient,
            "threshold": self.threshold,
            "warning": self.warning,
        }


def _window_width(ic_numbers, steps):
    longest = max(len(initial_condition(j)) for j in ic_numbers)
    return longest + 2 * (steps + 1)


def _indexed_map(fn, items, threads):
    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def _prefix_lengths(rule, ic_number, t_block, blocks, width, config):
    """Compressed length of the first 1 + b*t_block rows of one evolution,
    for b = 1..blocks.  Row-major encoding makes each block a byte prefix
    of the full encoding."""
    enc = encode_diagram(
        evolve_ca(rule, initial_condition(ic_number), t_block * blocks,
                  width=width)
    )
    stride = width + 1
    return [
        compressed_length(enc[: stride * (b * t_block + 1)], config)
        for b in range(1, blocks + 1)
    ]


def ic_profile(rule, m, steps, normalize=False, config=DEFAULT_COMPRESSOR,
               threads=None):
    """Compressed length of ``rule``'s evolution from initial conditions
    0..m-1, each run for ``steps`` steps in the common window."""
    if m < 1:
        raise ValueError("need at least one initial condition")
    if steps < 1:
        raise ValueError("steps must be >= 1")
    width = _window_width(range(m), steps)

    def one(j):
        enc = encode_diagram(
            evolve_ca(rule, initial_condition(j), steps, width=width)
        )
        return compressed_length(enc, config)

    lengths = _indexed_map(one, range(m), threads)
    if normalize:
        lengths = [c / steps for c in lengths]
    return IcProfile(rule, steps, tuple(lengths), normalize)


def detect_spikes(profile, q=3.0):
    """Indices whose profile value rises above an adjacent neighbor by more
    than ``q`` times the MAD of the successive differences.

    The median absolute deviation is taken over the signed differences, so
    a handful of isolated jumps does not inflate the scale estimate.  Only
    upward excursions count: the foot of a spike falls by the same amount
    its peak rises, and reporting it would double every event.
    """
    vals = list(profile.lengths) if isinstance(profile, IcProfile) else list(profile)
    if len(vals) < 2:
        return []
    diffs = [vals[j + 1] - vals[j] for j in range(len(vals) - 1)]
    med = statistics.median(diffs)
    mad = statistics.median(abs(d - med) for d in diffs)
    thr = q * mad
    out = []
    for j in range(len(vals)):
        up_left = j > 0 and vals[j] - vals[j - 1] > thr
        up_right = j < len(vals) - 1 and vals[j] - vals[j + 1] > thr
        if up_left or up_right:
            out.append(j)
    return out


def characteristic_exponent(rule, n, steps, include_zero=False,
                            reduce="mean", normalize="t", width=None,
                            length_fn=None, config=DEFAULT_COMPRESSOR):
    """Mean absolute successive difference of compressed lengths over the
    first ``n`` numbered initial conditions, divided by the runtime.

    ``reduce="max"`` takes the largest difference instead of the mean;
    ``normalize="volume"`` divides by the cell count of the window instead
    of the step count.  ``length_fn`` substitutes an arbitrary length
    function of the initial-condition number (the formula itself is often
    what needs testing).  Values above 1 signal a phase transition.
    """
    if n < 2:
        raise ValueError("need at least two initial conditions")
    if steps < 1:
        raise ValueError("steps must be >= 1")
    if reduce not in ("mean", "max"):
        raise ValueError("reduce must be 'mean' or 'max'")
    if normalize not in ("t", "volume"):
        raise ValueError("normalize must be 't' or 'volume'")
    numbers = list(range(0, n)) if include_zero else list(range(1, n + 1))
    if length_fn is None:
        if width is None:
            width = _window_width(numbers, steps)

        def length_fn(j):
            enc = encode_diagram(
                evolve_ca(rule, initial_condition(j), steps, width=width)
            )
            return compressed_length(enc, config)

    lengths = [length_fn(j) for j in numbers]
    diffs = [abs(lengths[i + 1] - lengths[i]) for i in range(n - 1)]
    agg = max(diffs) if reduce == "max" else sum(diffs) / (n - 1)
    if normalize == "volume":
        if width is None:
            raise ValueError("volume normalization needs a window width")
        return agg / (width * (steps + 1))
    return agg / steps


def transition_sequence(rule, n, t_block, blocks, include_zero=False,
                        reduce="mean", config=DEFAULT_COMPRESSOR,
                        threads=None):
    """Characteristic exponents of ``rule`` at runtimes t_block, 2*t_block,
    ..., blocks*t_block, all measured inside the full-runtime window.

    Equivalent to calling :func:`characteristic_exponent` once per block
    with ``width`` pinned to the longest runtime's window, but each initial
    condition is evolved and encoded only once.
    """
    if blocks < 2:
        raise ValueError("need at least two blocks to see a trend")
    if n < 2:
        raise ValueError("need at least two initial conditions")
    if t_block < 1:
        raise ValueError("t_block must be >= 1")
    numbers = list(range(0, n)) if include_zero else list(range(1, n + 1))
    width = _window_width(numbers, t_block * blocks)
    per_ic = _indexed_map(
        lambda j: _prefix_lengths(rule, j, t_block, blocks, width, config),
        numbers, threads,
    )
    seq = []
    for b in range(blocks):
        diffs = [
            abs(per_ic[i + 1][b] - per_ic[i][b]) for i in range(n - 1)
        ]
        agg = max(diffs) if reduce == "max" else sum(diffs) / (n - 1)
        seq.append(agg / ((b + 1) * t_block))
    return seq


def least_squares_fit(seq):
    """Ordinary least squares line through (1, seq[0]), (2, seq[1]), ...;
    returns (intercept, slope)."""
    ys = [float(y) for y in seq]
    m = len(ys)
    if m < 2:
        raise ValueError("need at least two points to fit a line")
    xbar = (m + 1) / 2
    ybar = sum(ys) / m
    sxx = sum((i + 1 - xbar) ** 2 for i in range(m))
    sxy = sum((i + 1 - xbar) * (ys[i] - ybar) for i in range(m))
    slope = sxy / sxx
    return ybar - slope * xbar, slope


def transition_coefficient(rule, n=20, t_block=75, blocks=4,
                           config=DEFAULT_COMPRESSOR, threads=None):
    """Slope of the least-squares line through the transition sequence."""
    seq = transition_sequence(rule, n, t_block, blocks, config=config,
                              threads=threads)
    return least_squares_fit(seq)[1]


def transition_record(rule, n=20, t_block=75, blocks=4,
                      config=DEFAULT_COMPRESSOR, threads=None):
    """Full record for one rule: S_c, fitted line, coefficient."""
    seq = transition_sequence(rule, n, t_block, blocks, config=config,
                              threads=threads)
    return TransitionRecord(rule, n, t_block, blocks, tuple(seq),
                            least_squares_fit(seq))


def interesting_initial_conditions(rule, count=10, t=600, blocks=12, m=30,
                                   threshold=1.0, config=DEFAULT_COMPRESSOR,
                                   threads=None):
    """The ``count`` initial-condition numbers at which the rule's profile
    jumps hardest, scanned over conditions 0..m-1 run up to ``t`` steps in
    ``blocks`` runtime blocks.

    Each condition's per-block lengths are step-normalized and averaged, so
    a jump must persist across runtimes to score.  A condition qualifies on
    the rise over either neighbor, ranked by size, returned ascending.
    Rules whose transition coefficient (over the same sweep) does not
    exceed ``threshold`` get a best-effort list and ``warning=True``.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    if m < 3:
        raise ValueError("need at least three initial conditions to rank")
    if blocks < 2:
        raise ValueError("need at least two blocks")
    if t % blocks:
        raise ValueError("t must be a multiple of blocks")
    t_block = t // blocks
    width = _window_width(range(m), t)
    per_ic = _indexed_map(
        lambda j: _prefix_lengths(rule, j, t_block, blocks, width, config),
        range(m), threads,
    )
    agg = [
        sum(per_ic[j][b] / ((b + 1) * t_block) for b in range(blocks)) / blocks
        for j in range(m)
    ]
    rises = []
    for j in range(m):
        rise = 0.0
        if j > 0:
            rise = max(rise, agg[j] - agg[j - 1])
        if j < m - 1:
            rise = max(rise, agg[j] - agg[j + 1])
        rises.append(rise)
    ranked = sorted(
        (j for j in range(m) if rises[j] > 0),
        key=lambda j: (-rises[j], j),
    )
    ics = tuple(sorted(ranked[:count]))

    # Coefficient over the same sweep (conditions 1..m-1), reusing lengths.
    seq = []
    for b in range(blocks):
        diffs = [abs(per_ic[i + 1][b] - per_ic[i][b]) for i in range(1, m - 1)]
        seq.append(sum(diffs) / (m - 2) / ((b + 1) * t_block))
    coeff = least_squares_fit(seq)[1]
    return InterestingIcs(rule, ics, tuple(agg), coeff, threshold,
                          warning=not coeff > threshold)


@dataclass(frozen=True)
class CoefficientReport:
    """Transition coefficients for a rule set, sorted descending, with a
    largest-gap clustering of the coefficient values."""

    records: tuple
    clusters: tuple
    compressor_id: str

    def to_csv(self):
        lines = ["rule,kind,colors,coefficient,cluster"]
        for rec, cl in zip(self.records, self.clusters):
            lines.append(
                f"{rec.rule.rule_number},{rec.rule.kind},{rec.rule.colors},"
                f"{format(rec.C, '.12g')},{cl}"
            )
        return "\n".join(lines) + "\n"

    def to_json(self):
        import json

        doc = {
            "parameters": {
                "n": self.records[0].n,
                "t_block": self.records[0].t_block,
                "blocks": self.records[0].blocks,
                "compressor": self.compressor_id,
            },
            "entries": [
                dict(rec.to_dict(), cluster=cl)
                for rec, cl in zip(self.records, self.clusters)
            ],
        }
        return json.dumps(doc, indent=2) + "\n"


def coefficient_classification(rules, n=20, t_block=75, blocks=4, clusters=2,
                               config=DEFAULT_COMPRESSOR, threads=None):
    """Rank a rule set by transition coefficient (largest first) and split
    the coefficients into ``clusters`` groups by largest gaps."""
    from .classify import cluster_1d

    rules = list(rules)
    if not rules:
        raise ValueError("rule set must be non-empty")
    records = _indexed_map(
        lambda r: transition_record(r, n, t_block, blocks, config=config),
        rules, threads,
    )
    records.sort(key=lambda rec: (-rec.C, rec.rule.rule_number))
    k = min(clusters, len(set(rec.C for rec in records)))
    ids = cluster_1d([rec.C for rec in records], k)
    return CoefficientReport(tuple(records), tuple(ids), config.config_id)
