"""Assembled invariants for one graph, renderable as text or a JSON dict.

When the graph contains a B2 sub-arrangement the census formula does not
apply: census, phi3_formula and agreement come back None and the oracle
value is computed from the exact boundary-row rank instead of the triangle
count.
"""

from dataclasses import dataclass

from . import algebra
from .census import Census, census, phi3_formula
from .graphs import SignedGraph


@dataclass(frozen=True)
class FalkReport:
    ell: int
    n: int
    contains_b2: bool
    triangle_count: int
    dim_A2: int
    dim_I3_2: int
    dim_span_F3: int
    phi3_oracle: int
    phi3_formula: int | None
    census: Census | None
    agreement: bool | None


def build_report(g: SignedGraph) -> FalkReport:
    tris = algebra.triangles(g)
    b2 = g.contains_b2()
    if b2:
        a2 = algebra.dim_a2_rank(g, tris)
        cen = None
        formula = None
    else:
        a2 = algebra.dim_a2(g, tris=tris)
        cen = census(g)
        formula = phi3_formula(cen)
    i32 = algebra.rank_i3_2(g, tris)
    oracle = algebra.phi3_from_dims(g.n, a2, i32)
    return FalkReport(
        ell=g.ell,
        n=g.n,
        contains_b2=b2,
        triangle_count=len(tris),
        dim_A2=a2,
        dim_I3_2=i32,
        dim_span_F3=algebra.dim_span_f3(g, tris),
        phi3_oracle=oracle,
        phi3_formula=formula,
        census=cen,
        agreement=None if b2 else oracle == formula,
    )


def to_json_dict(r: FalkReport) -> dict:
    return {
        "ell": r.ell,
        "n": r.n,
        "contains_b2": r.contains_b2,
        "triangle_count": r.triangle_count,
        "dim_A2": r.dim_A2,
        "dim_I3_2": r.dim_I3_2,
        "dim_span_F3": r.dim_span_F3,
        "phi3_oracle": r.phi3_oracle,
        "phi3_formula": r.phi3_formula,
        "census": None if r.census is None else r.census.as_dict(),
        "agreement": r.agreement,
    }


def render_text(r: FalkReport) -> str:
    yn = {True: "yes", False: "no"}
    lines = [
        f"vertices            {r.ell}",
        f"hyperplanes         {r.n}",
        f"contains B2         {yn[r.contains_b2]}",
        f"triangles           {r.triangle_count}",
        f"dim A^2             {r.dim_A2}",
        f"dim I3_2            {r.dim_I3_2}",
        f"dim span F3         {r.dim_span_F3}",
        f"phi3 (rank oracle)  {r.phi3_oracle}",
    ]
    if r.contains_b2:
        lines.append("phi3 (census)       n/a (B2 present, census formula inapplicable)")
    else:
        counts = " ".join(f"{k}={v}" for k, v in r.census.as_dict().items())
        lines.append(f"phi3 (census)       {r.phi3_formula}")
        lines.append(f"census              {counts}")
        lines.append(f"agreement           {yn[r.agreement]}")
    return "\n".join(lines)
