"""Per-graph analysis records and the bulk survey over graph6 streams.

The survey hot path works on the 2n x 2n companion matrix K only, and gets
its characteristic polynomial from the n x n quadratic determinant
det(x^2 I - x A + (D - I)), which equals charpoly(K) (verified in tests).
A graph whose characteristic polynomial is squarefree cannot be defective,
so rank work only happens for repeated factors.  Ranks use the three-prime
modular consensus; any defective verdict is then re-derived with certified
integer (Bareiss) ranks before it is reported, so published counts never
rest on modular arithmetic alone.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from . import exactmat, intpoly
from .errors import DomainError
from .graphs import Graph, bipartition, encode_graph6, parse_graph6
from .jordan import FactorProfile, JordanReport, extract_chain, factor_profiles
from .nbmatrices import build_B, build_K, build_M, quadratic_charpoly

DEFAULT_SEED = 0


def _structure_json(g: Graph) -> dict:
    parts = bipartition(g)
    return {
        "n": g.n,
        "m": g.m,
        "min_degree": min(g.degrees),
        "cycle_rank": g.m - g.n + 1,
        "bipartite": parts is not None,
    }


def _modular_rank_fn(rng: random.Random):
    pool = exactmat.prime_pool(32)
    primes = rng.sample(pool, 3)

    def rank_fn(mat):
        ranks = {exactmat.rank_mod(mat, p) for p in primes}
        if len(ranks) == 1:
            return ranks.pop()
        return exactmat.rank(mat)

    return rank_fn


def k_profiles_fast(g: Graph, rank_fn) -> list[FactorProfile]:
    """Profiles of repeated factors of charpoly(K) only; factors of
    multiplicity one are emitted without rank work (they cannot be
    defective)."""
    cp = quadratic_charpoly(g)
    _, sf = intpoly.squarefree_decomposition(cp)
    if all(e == 1 for _, e in sf):
        return factor_profiles([], cp, rank_fn=None, skip_simple=True)
    return factor_profiles(build_K(g), cp, rank_fn=rank_fn, skip_simple=True)


def analyze_for_survey(g: Graph, certify: str, primes_rng_seed: int) -> dict:
    """Defectiveness record for one connected min-degree->=2 graph (K side)."""
    rng = random.Random(primes_rng_seed)
    if certify == "always":
        rank_fn = exactmat.rank
    else:
        rank_fn = _modular_rank_fn(rng)
    profiles = k_profiles_fast(g, rank_fn)
    defective = [p for p in profiles if p.defective]
    certified = certify == "always"
    if defective and certify == "defects":
        profiles = k_profiles_fast(g, exactmat.rank)
        defective = [p for p in profiles if p.defective]
        certified = True
    return {
        "defective_factors": [p.factor_string for p in defective],
        "blocks": {p.factor_string: sorted(p.blocks, reverse=True) for p in defective},
        "max_block": max((max(p.blocks, default=1) for p in profiles), default=1),
        "certified": certified,
    }


@dataclass
class SurveyRow:
    """Aggregate for one vertex count."""

    n: int
    total: int = 0
    defective: int = 0
    per_factor: dict[str, int] = dc_field(default_factory=dict)
    skipped_disconnected: int = 0
    skipped_min_degree: int = 0
    max_block: int = 1

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "total": self.total,
            "defective": self.defective,
            "per_factor": dict(sorted(self.per_factor.items(),
                                      key=_factor_sort_key)),
            "skipped_disconnected": self.skipped_disconnected,
            "skipped_min_degree": self.skipped_min_degree,
            "max_block": self.max_block,
        }


def _factor_sort_key(item):
    return (item[0].count("^"), len(item[0]), item[0])


def survey_worker(task) -> dict:
    """Process one graph6 line; pure function of its arguments."""
    line_no, line, certify, seed = task
    try:
        g = parse_graph6(line)
    except Exception as exc:  # malformed line: reported, stream continues
        return {"line": line_no, "graph6": line, "error": str(exc)}
    record = {"line": line_no, "graph6": encode_graph6(g), "n": g.n, "m": g.m}
    if not g.is_connected():
        record["skipped"] = "disconnected"
        return record
    if min(g.degrees) < 2:
        record["skipped"] = "min_degree"
        return record
    record.update(analyze_for_survey(g, certify, seed))
    record["defective"] = bool(record["defective_factors"])
    return record


def run_survey(
    lines,
    certify: str = "defects",
    jobs: int = 1,
    seed: int = DEFAULT_SEED,
    sink=None,
) -> tuple[dict[int, SurveyRow], int]:
    """Aggregate SurveyRows over an iterable of graph6 lines.

    Returns ({n: SurveyRow}, number of malformed lines).  The aggregation is
    a deterministic ordered reduction over the input order, so the output is
    identical for any job count.  sink, when given, receives each per-graph
    record dict in input order (streaming JSON).
    """
    if certify not in ("defects", "always"):
        raise DomainError(f"unknown certify mode {certify!r}")
    tasks = [
        (i, line, certify, seed) for i, line in enumerate(lines, start=1)
    ]
    if jobs > 1 and len(tasks) > 1:
        import multiprocessing as mp

        with mp.Pool(jobs) as pool:
            records = pool.map(survey_worker, tasks, chunksize=64)
    else:
        records = map(survey_worker, tasks)
    rows: dict[int, SurveyRow] = {}
    malformed = 0
    for rec in records:
        if sink is not None:
            sink(rec)
        if "error" in rec:
            malformed += 1
            continue
        row = rows.setdefault(rec["n"], SurveyRow(rec["n"]))
        if rec.get("skipped") == "disconnected":
            row.skipped_disconnected += 1
            continue
        if rec.get("skipped") == "min_degree":
            row.skipped_min_degree += 1
            continue
        row.total += 1
        if rec["defective"]:
            row.defective += 1
            for f in rec["defective_factors"]:
                row.per_factor[f] = row.per_factor.get(f, 0) + 1
        row.max_block = max(row.max_block, rec["max_block"])
    return rows, malformed


def rows_to_tsv(rows: dict[int, SurveyRow]) -> str:
    """TSV summary, one line per vertex count plus expanded factor cells."""
    out = ["n\ttotal\tdefective\tmax_block\tper_factor"]
    for n in sorted(rows):
        row = rows[n]
        cells = ",".join(
            f"{k}:{v}"
            for k, v in sorted(row.per_factor.items(), key=_factor_sort_key)
        )
        out.append(
            f"{row.n}\t{row.total}\t{row.defective}\t{row.max_block}\t{cells}"
        )
    return "\n".join(out) + "\n"


# -- single-graph analysis (the analyze front end) ---------------------------

def m_report_from_k(g: Graph, k_report: JordanReport) -> JordanReport:
    """Jordan report of M = diag(K, I, -I) derived from the K report by pure
    block arithmetic: q(M)^j = diag(q(K)^j, q(1)^j I, q(-1)^j I)."""
    extra = g.m - g.n
    if extra < 0:
        raise DomainError("M requires m >= n")
    if extra == 0:
        return JordanReport("M", k_report.dim, k_report.profiles)
    by_factor = {p.factor: p for p in k_report.profiles}
    profiles: list[FactorProfile] = []
    handled = set()
    for root, lin in ((1, (-1, 1)), (-1, (1, 1))):
        kp = by_factor.get(lin)
        base_mult = kp.multiplicity if kp else 0
        base_null = list(kp.nullities) if kp else []
        base_blocks = list(kp.blocks) if kp else []
        mult = base_mult + extra
        nullities = [
            (base_null[j] if j < len(base_null) else
             (base_null[-1] if base_null else 0)) + extra
            for j in range(mult)
        ]
        blocks = sorted(base_blocks + [1] * extra, reverse=True)
        profiles.append(FactorProfile(lin, mult, nullities, blocks, True))
        handled.add(lin)
    for p in k_report.profiles:
        if p.factor not in handled:
            profiles.append(p)
    profiles.sort(key=lambda p: (p.degree, p.factor))
    return JordanReport("M", 2 * g.m, profiles)


def analysis_record(
    g: Graph,
    matrices: str = "K",
    with_chains: bool = False,
    dump_matrices: bool = False,
) -> dict:
    """Full JSON-ready analysis of one connected graph."""
    from .jordan import jordan_profile

    if not g.is_connected():
        raise DomainError("analyze requires a connected graph")
    record: dict = {
        "graph6": encode_graph6(g),
        "structure": _structure_json(g),
        "reports": {},
    }
    wanted = ("K", "B", "M") if matrices == "all" else (matrices,)
    k_report = None
    if "K" in wanted or with_chains:
        k_report = jordan_profile(build_K(g), "K")
    if "K" in wanted:
        record["reports"]["K"] = k_report.to_json()
    if "B" in wanted:
        record["reports"]["B"] = jordan_profile(build_B(g), "B").to_json()
    if "M" in wanted:
        if g.m < g.n:
            raise DomainError("M is defined only for m >= n")
        record["reports"]["M"] = jordan_profile(build_M(g), "M").to_json()
    if with_chains:
        chains = []
        kmat = build_K(g)
        for p in k_report.defective_profiles:
            if p.degree > 2 or not p.irreducible:
                continue
            target = max(p.blocks, default=1)
            chain = extract_chain(kmat, p.factor, target, "K")
            if chain is not None:
                chains.append(chain.to_json())
        record["chains"] = chains
    if dump_matrices:
        dump = {"K": build_K(g)}
        if g.m >= g.n:
            dump["B"] = build_B(g)
            dump["M"] = build_M(g)
        record["matrices"] = dump
    return record
