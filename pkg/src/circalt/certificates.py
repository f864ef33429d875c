"""Self-contained, re-checkable certificates.

A certificate carries the graph as graph6, a kind-specific JSON payload and a
SHA-256 checksum of the canonical payload. :func:`verify_certificate` trusts
nothing from the producer: it recomputes every claim from the payload.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from typing import Any, Sequence

from .graph_core import Graph, emit_graph6, parse_graph6

KINDS = ("altitude-upper", "altitude-exact", "pq-colouring", "zigzag", "powerful", "anneal")


def canonical_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def checksum(payload: dict) -> str:
    return hashlib.sha256(canonical_json(payload).encode()).hexdigest()


@dataclass
class Certificate:
    kind: str
    graph: str
    payload: dict

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown certificate kind {self.kind!r}")

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "graph": self.graph,
            "payload": self.payload,
            "checksum": checksum(self.payload),
        }


def ordering_certificate(g: Graph, ordering, kind: str = "altitude-upper") -> Certificate:
    from .orderings import longest_monotonic_cycle

    value, cycle = longest_monotonic_cycle(g, ordering)
    payload = {"ordering": list(ordering.perm), "value": value, "cycle": cycle}
    return Certificate(kind, emit_graph6(g), payload)


def pq_certificate(g: Graph, pq) -> Certificate:
    return Certificate("pq-colouring", emit_graph6(g), pq.to_dict())


def zigzag_certificate(g: Graph, colouring: Sequence[int], t: int, witness) -> Certificate:
    payload = {"t": t, "colouring": list(colouring), **witness.to_dict()}
    return Certificate("zigzag", emit_graph6(g), payload)


def exact_certificate(g: Graph, result) -> Certificate:
    from .graph_core import optimal_colouring

    payload = {
        "value": result.value,
        "method": result.method,
        "ordering": list(result.witness_ordering.perm),
        "cycle": list(result.witness_cycle),
    }
    if result.method == "complement-disconnected":
        payload["colouring"] = optimal_colouring(g)[1]
    return Certificate("altitude-exact", emit_graph6(g), payload)


class CertificateError(ValueError):
    pass


def _require(cond: bool, why: str) -> None:
    if not cond:
        raise CertificateError(why)


def _check_ordering_claim(g: Graph, payload: dict) -> None:
    from .orderings import CircularOrdering, longest_monotonic_cycle, verify_monotonic_cycle

    perm = payload["ordering"]
    _require(sorted(perm) == list(range(g.n)), "ordering is not a permutation of the vertices")
    ordering = CircularOrdering(perm)
    value, _ = longest_monotonic_cycle(g, ordering)
    _require(value == payload["value"], f"claimed value {payload['value']}, recomputed {value}")
    cycle = payload["cycle"]
    if value >= 2:
        _require(len(cycle) == value, "witness cycle length differs from the value")
        _require(verify_monotonic_cycle(g, ordering, cycle), "witness cycle is not monotonic")


def _verify_payload(kind: str, g: Graph, payload: dict) -> None:
    if kind in ("altitude-upper", "anneal"):
        _check_ordering_claim(g, payload)
    elif kind == "pq-colouring":
        from .circular_colouring import is_pq_colouring

        p, q, col = payload["p"], payload["q"], payload["colouring"]
        try:
            ok = is_pq_colouring(g, col, p, q)
        except ValueError as exc:
            raise CertificateError(str(exc)) from exc
        _require(ok, f"not a ({p},{q})-colouring")
    elif kind == "zigzag":
        from .circular_colouring import ZigzagWitness, check_zigzag
        from .graph_core import is_proper_colouring

        col = payload["colouring"]
        _require(is_proper_colouring(g, col), "colouring is not proper")
        w = ZigzagWitness(tuple(payload["side_a"]), tuple(payload["side_b"]), tuple(payload["colours"]))
        _require(check_zigzag(g, col, payload["t"], w), "zig-zag witness invalid")
    elif kind == "powerful":
        from .mycielski import iterated_mycielskian
        from .powerful import check_oddgirth_hypotheses, verify_powerful
        from .orderings import LinearOrdering

        base = parse_graph6(payload["base"])
        r = payload["r"]
        lg = iterated_mycielskian(base, r)
        _require(emit_graph6(lg.graph) == emit_graph6(g), "graph is not M^r of the stated base")
        t = check_oddgirth_hypotheses(base, r)
        _require(t == payload["t"], f"claimed t = {payload['t']}, recomputed {t}")
        report = verify_powerful(LinearOrdering(payload["ordering"]), lg)
        _require(all(report[k] for k in ("P0", "P1", "P2", "P3", "P4")), f"not powerful: {report}")
        _check_ordering_claim(g, payload)
        _require(payload["value"] < t, "powerful ordering does not beat t")
    elif kind == "altitude-exact":
        from .altitude import altitude_via_complement, circular_altitude_exact

        _check_ordering_claim(g, payload)
        if payload["method"] == "complement-disconnected":
            result = altitude_via_complement(g)
            _require(result is not None, "complement is connected")
        else:
            result = circular_altitude_exact(g)
        _require(result.value == payload["value"], f"recomputed value {result.value}")
    else:
        raise CertificateError(f"unknown kind {kind!r}")


def verify_certificate(cert: dict) -> tuple[bool, str]:
    """(ok, reason). Checks the checksum, then recomputes the claim from the payload."""
    try:
        kind = cert["kind"]
        payload = cert["payload"]
        if checksum(payload) != cert.get("checksum"):
            return False, "checksum mismatch"
        g = parse_graph6(cert["graph"])
        _verify_payload(kind, g, payload)
    except CertificateError as exc:
        return False, str(exc)
    except (KeyError, TypeError, ValueError) as exc:
        return False, f"malformed certificate: {exc!r}"
    return True, "ok"
