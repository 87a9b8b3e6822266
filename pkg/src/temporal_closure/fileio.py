"""Reading and writing temporal graphs and reports.

Contact logs
    One record per line, ``t u v`` separated by whitespace, extra trailing
    columns ignored, ``#`` starts a comment.  ``t`` is an integer timestamp in
    seconds.  Timestamps are binned to 1-based steps with
    ``step = (t - t_min) // bin_width + 1``; empty bins are kept.

Native format
    Header ``n lifetime``, then one line ``u v t1 t2 ...`` per footprint edge.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from typing import IO, Iterable, Iterator, Sequence

from .closure import ClosureRateCurve, OrderingResult
from .core import TemporalGraph
from .exceptions import GraphError, ParseError

__all__ = [
    "ContactRecord",
    "read_contact_records",
    "parse_contacts",
    "parse_native",
    "write_native",
    "write_ordering_csv",
    "write_curve_csv",
    "write_bounds_csv",
]


@dataclass(frozen=True)
class ContactRecord:
    timestamp: int
    u_label: str
    v_label: str


def _lines(stream) -> Iterator[tuple[int, list[str]]]:
    for lineno, line in enumerate(stream, 1):
        text = line.split("#", 1)[0].strip()
        if text:
            yield lineno, text.split()


def read_contact_records(stream: Iterable[str]) -> Iterator[ContactRecord]:
    for lineno, parts in _lines(stream):
        if len(parts) < 3:
            raise ParseError(f"expected 't u v', got {' '.join(parts)!r}", lineno)
        try:
            t = int(parts[0])
        except ValueError:
            raise ParseError(f"timestamp {parts[0]!r} is not an integer", lineno) from None
        if parts[1] == parts[2]:
            raise ParseError(f"self-contact of {parts[1]!r}", lineno)
        yield ContactRecord(t, parts[1], parts[2])


def _label_key(label: str):
    # numeric labels sort numerically, everything else after them lexicographically
    try:
        return 0, int(label), label
    except ValueError:
        return 1, 0, label


def parse_contacts(stream: Iterable[str], bin_width: int = 1) -> tuple[TemporalGraph, list[str]]:
    """Bin a contact log into a temporal graph.

    Returns the graph and the label of each vertex id.  Ids are assigned in
    sorted label order, so the result does not depend on line order.
    """
    if bin_width < 1:
        raise ParseError(f"bin width must be >= 1, got {bin_width}")
    records = list(read_contact_records(stream))
    if not records:
        raise ParseError("no usable contact records")
    t0 = min(r.timestamp for r in records)
    labels = sorted({r.u_label for r in records} | {r.v_label for r in records}, key=_label_key)
    ids = {lab: i for i, lab in enumerate(labels)}
    steps: dict[tuple[int, int], set[int]] = {}
    for r in records:
        u, v = sorted((ids[r.u_label], ids[r.v_label]))
        steps.setdefault((u, v), set()).add((r.timestamp - t0) // bin_width + 1)
    return TemporalGraph(len(labels), steps), labels


def parse_native(stream: Iterable[str]) -> TemporalGraph:
    lines = _lines(stream)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError("empty input; expected header 'n lifetime'") from None
    if len(header) != 2:
        raise ParseError("header must be 'n lifetime'", lineno)
    try:
        n, lifetime = int(header[0]), int(header[1])
    except ValueError:
        raise ParseError("header must hold two integers", lineno) from None
    if n < 0 or lifetime < 1:
        raise ParseError("header needs n >= 0 and lifetime >= 1", lineno)
    edges = {}
    for lineno, parts in lines:
        try:
            u, v, *ts = (int(x) for x in parts)
        except ValueError:
            raise ParseError("edge lines hold integers only", lineno) from None
        if not ts:
            raise ParseError(f"edge ({u}, {v}) has no time-steps", lineno)
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"invalid edge ({u}, {v}) for n={n}", lineno)
        bad = [t for t in ts if not 1 <= t <= lifetime]
        if bad:
            raise ParseError(f"time-step {bad[0]} outside [1, {lifetime}]", lineno)
        key = (min(u, v), max(u, v))
        if key in edges:
            raise ParseError(f"duplicate edge {key}", lineno)
        edges[key] = ts
    try:
        return TemporalGraph(n, edges, lifetime=lifetime)
    except GraphError as exc:
        raise ParseError(str(exc)) from exc


def write_native(g: TemporalGraph, stream: IO[str]) -> None:
    stream.write(f"{g.n} {g.lifetime}\n")
    for u, v, ts in g.edges():
        stream.write(f"{u} {v} {' '.join(map(str, ts))}\n")


def _name(v: int, labels: Sequence[str] | None) -> str:
    return labels[v] if labels is not None else str(v)


def write_ordering_csv(result: OrderingResult, stream: IO[str], labels=None, summary=None) -> None:
    """Optional ``parameter,value`` summary block, a blank line, then ``position,vertex,value``."""
    w = csv.writer(stream, lineterminator="\n")
    if summary:
        w.writerow(["parameter", "value"])
        w.writerows(summary)
        stream.write("\n")
    w.writerow(["position", "vertex", "value"])
    for i, (v, val) in enumerate(zip(result.order, result.per_step_value), 1):
        w.writerow([i, _name(v, labels), val])


def write_curve_csv(curve: ClosureRateCurve, stream: IO[str]) -> None:
    w = csv.writer(stream, lineterminator="\n")
    w.writerow(["x", "support", "rate"])
    for pt in curve:
        w.writerow([pt.x, pt.support, f"{pt.rate:.6f}"])


def write_bounds_csv(checks, stream: IO[str]) -> None:
    w = csv.writer(stream, lineterminator="\n")
    w.writerow(["kind", "eta_source", "observed_count", "bound_value", "c_or_gamma", "eta",
                "d0", "d1", "d2", "delta", "k", "n", "lifetime", "satisfied"])
    for c in checks:
        w.writerow([c.kind, c.eta_source, c.observed_count, c.bound_value, c.c_or_gamma, c.eta,
                    c.d0, c.d1, c.d2, c.delta, c.k, c.n, c.lifetime, str(c.satisfied).lower()])
