"""Machine checks for the three factor theorems on concrete graphs.

gallai_check tests the hypotheses of the Gallai bound (an m-edge-connected
r-regular graph of even order has a k-factor whenever r is even, k is odd,
and r/m <= k <= r(1 - 1/m)); verify_theorem2 confirms, on one instance, the
equivalence "an r/2-factor exists iff the order is even" for connected
r-regular graphs with r/2 odd; hub_parity_analysis builds the certificate
behind the negative results: when a hub set carries odd-order components and
only odd degrees are allowed, every component must send an odd number of
factor edges into the hubs, which pins each hub's achievable factor degree
to a small set computable from edge counts alone. If that set misses the
allowed degrees for some hub, no factor exists -- and the certificate can be
re-checked without re-running any search.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, connected_components, edge_connectivity, induced_subgraph, is_connected, regularity
from .solver import INCONCLUSIVE, FactorSpec, h_factor_decide


@dataclass(frozen=True)
class GallaiReport:
    """Hypothesis report for the Gallai k-factor bound on one graph.

    applicable is the conjunction of all hypotheses: r even, k odd, even
    order, m >= 1, and r/m <= k <= r(1 - 1/m) (checked in exact integer
    arithmetic). reason names the first failing hypothesis, if any.
    """

    r: int | None
    m: int
    k: int
    n_even: bool
    bounds_ok: bool
    applicable: bool
    reason: str | None = None

    def to_json_dict(self) -> dict:
        return {
            "r": self.r,
            "m": self.m,
            "k": self.k,
            "n_even": self.n_even,
            "bounds_ok": self.bounds_ok,
            "applicable": self.applicable,
            "reason": self.reason,
        }


def gallai_check(g: Graph, k: int) -> GallaiReport:
    """Evaluate the Gallai bound's hypotheses for a k-factor of g.

    Never decides existence itself; when applicable is True, a factor
    search must succeed, which makes this a cross-check on the solver.
    """
    n_even = g.n % 2 == 0
    r = regularity(g)
    if r is None:
        return GallaiReport(None, 0, k, n_even, False, False, "graph is not regular")
    m = edge_connectivity(g) if g.n >= 2 else 0
    bounds_ok = m >= 1 and k * m >= r and k * m <= r * (m - 1)
    reason = None
    if r % 2 == 1:
        reason = "degree r is odd"
    elif k % 2 == 0:
        reason = "k is even"
    elif not n_even:
        reason = "odd number of vertices"
    elif m < 1:
        reason = "graph is disconnected"
    elif not bounds_ok:
        reason = f"k={k} outside [r/m, r(1-1/m)] for r={r}, m={m}"
    applicable = reason is None
    return GallaiReport(r, m, k, n_even, bounds_ok, applicable, reason)


def verify_theorem2(g: Graph) -> bool:
    """Check both directions of "an r/2-factor exists iff the order is even"
    on a connected r-regular graph with r/2 odd.

    The positive direction demands an actual certificate from the solver,
    not just the Gallai hypotheses. Returns True iff the equivalence holds
    on this instance (anything else would be a counterexample).
    """
    r = regularity(g)
    if r is None:
        raise ValueError("graph must be regular")
    if r % 2 == 1 or (r // 2) % 2 == 0:
        raise ValueError(f"need even r with r/2 odd, got r={r}")
    if not is_connected(g):
        raise ValueError("graph must be connected")
    decision = h_factor_decide(g, FactorSpec.of(r // 2))
    if decision.verdict == INCONCLUSIVE:
        raise RuntimeError("factor search hit its node budget; no verdict")
    return decision.exists == (g.n % 2 == 0)


@dataclass(frozen=True)
class HubDecomposition:
    """A hub vertex set together with the components of the rest of the graph
    and the number of graph edges between each component and each hub."""

    hubs: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]
    cross_edges: tuple[tuple[int, ...], ...]  # [component][hub index]


@dataclass(frozen=True)
class NoFactorCertificate:
    """A machine-checkable parity argument that no factor exists.

    component_parities records the required parity of factor edges leaving
    each component (always odd under the hypotheses: odd-order component,
    odd allowed degrees); achievable_hub_degrees is computed from cross-edge
    counts and those parity constraints alone. conclusion is True when some
    hub's achievable set misses every allowed degree, which rules the factor
    out without any search.
    """

    decomposition: HubDecomposition
    spec: FactorSpec
    component_parities: tuple[int, ...]
    achievable_hub_degrees: tuple[tuple[int, ...], ...]  # aligned with hubs
    conclusion: bool

    def to_json_dict(self) -> dict:
        return {
            "hubs": list(self.decomposition.hubs),
            "components": [list(c) for c in self.decomposition.components],
            "cross_edges": [list(row) for row in self.decomposition.cross_edges],
            "spec": list(self.spec.allowed),
            "achievable": {
                str(h): list(degs)
                for h, degs in zip(self.decomposition.hubs, self.achievable_hub_degrees)
            },
            "conclusion": self.conclusion,
        }


def _decompose_at_hubs(g: Graph, hubs: tuple[int, ...]) -> HubDecomposition:
    hub_set = set(hubs)
    rest = [v for v in range(g.n) if v not in hub_set]
    sub, order = induced_subgraph(g, rest)
    components = tuple(
        tuple(order[i] for i in comp) for comp in connected_components(sub)
    )
    cross = []
    for comp in components:
        comp_set = set(comp)
        row = []
        for h in hubs:
            row.append(sum(1 for w in g.neighbors(h) if w in comp_set))
        cross.append(tuple(row))
    return HubDecomposition(hubs, components, tuple(cross))


def _achievable_hub_degrees(
    decomposition: HubDecomposition, g: Graph
) -> tuple[tuple[int, ...], ...]:
    """Per hub, every factor degree consistent with the parity constraints:
    each component contributes some split of an odd total across the hubs,
    bounded by the available cross edges; edges between hubs may contribute
    freely. Exhaustive over per-component contributions (Minkowski sums)."""
    hubs = decomposition.hubs
    hub_set = set(hubs)
    result = []
    for j, h in enumerate(hubs):
        contributions: set[int] = {0}
        for row in decomposition.cross_edges:
            here = row[j]
            elsewhere = sum(row) - here
            options = [
                t
                for t in range(here + 1)
                if t % 2 == 1 or (t % 2 == 0 and elsewhere >= 1)
            ]
            contributions = {c + t for c in contributions for t in options}
        hub_hub = sum(1 for w in g.neighbors(h) if w in hub_set)
        result.append(
            tuple(sorted({c + b for c in contributions for b in range(hub_hub + 1)}))
        )
    return tuple(result)


def hub_parity_analysis(
    g: Graph, hubs: Iterable[int], spec: FactorSpec
) -> NoFactorCertificate | None:
    """Build a nonexistence certificate from the hub parity argument, or
    return None when its hypotheses fail (that is a result, not a fault).

    Hypotheses: every allowed degree is odd, and every component of the
    graph minus the hubs has an odd number of vertices. Then, within any
    factor, summing degrees over a component shows it sends an odd number
    of factor edges to the hubs; the certificate's conclusion is True when
    some hub's resulting achievable degree set is disjoint from the spec.
    """
    hubs = tuple(sorted(set(int(h) for h in hubs)))
    if not hubs:
        raise ValueError("need at least one hub vertex")
    for h in hubs:
        if not 0 <= h < g.n:
            raise ValueError(f"hub {h} is not a vertex of the graph")
    if not spec.all_odd():
        return None
    decomposition = _decompose_at_hubs(g, hubs)
    if any(len(comp) % 2 == 0 for comp in decomposition.components):
        return None
    achievable = _achievable_hub_degrees(decomposition, g)
    allowed = set(spec.allowed)
    conclusion = any(not (set(degs) & allowed) for degs in achievable)
    return NoFactorCertificate(
        decomposition=decomposition,
        spec=spec,
        component_parities=(1,) * len(decomposition.components),
        achievable_hub_degrees=achievable,
        conclusion=conclusion,
    )


def check_certificate(g: Graph, cert: NoFactorCertificate) -> bool:
    """Re-derive every field of a nonexistence certificate from the graph
    alone and confirm it; no factor search is run. False on any mismatch or
    structural defect, True only when every field -- the recorded conclusion
    included -- survives re-derivation."""
    try:
        hubs = cert.decomposition.hubs
        if not hubs or len(set(hubs)) != len(hubs) or list(hubs) != sorted(hubs):
            return False
        if any(not 0 <= h < g.n for h in hubs):
            return False
        if not cert.spec.all_odd():
            return False
        fresh = _decompose_at_hubs(g, hubs)
        if fresh.components != cert.decomposition.components:
            return False
        if fresh.cross_edges != cert.decomposition.cross_edges:
            return False
        if any(len(comp) % 2 == 0 for comp in fresh.components):
            return False
        if cert.component_parities != (1,) * len(fresh.components):
            return False
        achievable = _achievable_hub_degrees(fresh, g)
        if achievable != cert.achievable_hub_degrees:
            return False
        allowed = set(cert.spec.allowed)
        conclusion = any(not (set(degs) & allowed) for degs in achievable)
        return conclusion == cert.conclusion
    except (ValueError, IndexError, TypeError):
        return False


def certificate_from_json(payload: dict) -> NoFactorCertificate:
    """Rebuild a certificate from its JSON form (inverse of to_json_dict)."""
    hubs = tuple(int(h) for h in payload["hubs"])
    components = tuple(tuple(int(v) for v in comp) for comp in payload["components"])
    cross = tuple(tuple(int(c) for c in row) for row in payload["cross_edges"])
    achievable = tuple(
        tuple(int(d) for d in payload["achievable"][str(h)]) for h in hubs
    )
    return NoFactorCertificate(
        decomposition=HubDecomposition(hubs, components, cross),
        spec=FactorSpec(tuple(payload["spec"])),
        component_parities=(1,) * len(components),
        achievable_hub_degrees=achievable,
        conclusion=bool(payload["conclusion"]),
    )
