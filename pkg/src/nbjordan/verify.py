"""Executable forms of the structural theorems, run as named suites.

Each suite returns a list of (check_name, passed, detail) triples; a suite
passes when every check does.  Randomized checks draw from a seeded RNG so
runs are reproducible.
"""

from __future__ import annotations

import random
from itertools import combinations

from . import exactmat, intpoly
from .errors import InputError, StructureError
from .families import FAMILY_NAMES, FIXTURE_NAMES, family_chain, fixture, glue_preserves_chain
from .graphs import Graph, bipartition, find_twins
from .jordan import (
    compare_B_M,
    extract_chain,
    jordan_profile,
    lift_chain,
    torres_multiplicities,
    twin_chain_constraints,
    twin_eigen,
    unicyclic_gen_vectors,
)
from .nbmatrices import NbMatrixBundle, build_B, build_K, build_ST, build_X, ihara_check
from .smallgraphs import (
    all_graphs,
    connected_min_degree2,
    masks_to_graph,
    random_connected_graph,
    unicyclic_graphs,
)

Check = tuple[str, bool, str]

SUITES = (
    "ihara",
    "decomposition",
    "jordan-equality",
    "unicyclic",
    "torres",
    "twins",
    "gluing",
    "all",
)


def _fixture_graphs() -> list[tuple[str, Graph]]:
    out = [(name, fixture(name)) for name in FIXTURE_NAMES]
    out.append(("C7", Graph.from_edges(7, [(i, i % 7 + 1) for i in range(1, 8)])))
    out.append(("K4", Graph.from_edges(4, [(i, j) for i in range(1, 5) for j in range(i + 1, 5)])))
    out.append(("K33", Graph.from_edges(6, [(i, j) for i in (1, 2, 3) for j in (4, 5, 6)])))
    return out


def _random_graphs(rng: random.Random, samples: int, n_max: int = 8):
    return [random_connected_graph(rng, n_max=n_max) for _ in range(samples)]


def suite_ihara(rng: random.Random, samples: int) -> list[Check]:
    checks = []
    for name, g in _fixture_graphs():
        checks.append((f"ihara[{name}]", ihara_check(g), ""))
    ok = 0
    for i, g in enumerate(_random_graphs(rng, samples)):
        if ihara_check(g):
            ok += 1
    checks.append((f"ihara[random x{samples}]", ok == samples, f"{ok}/{samples}"))
    return checks


def suite_decomposition(rng: random.Random, samples: int) -> list[Check]:
    checks = []
    graphs = [(n, g) for n, g in _fixture_graphs() if g.m >= g.n]
    graphs += [
        (f"random{i}", g)
        for i, g in enumerate(_random_graphs(rng, samples))
        if g.m >= g.n
    ]
    for name, g in graphs:
        try:
            bundle = NbMatrixBundle(g)  # build_X verifies B X = X M
        except StructureError as exc:
            checks.append((f"decomposition[{name}]", False, str(exc)))
            continue
        detail = ""
        ok = True
        extra = g.m - g.n
        if extra:
            st = exactmat.mat_mul(bundle.S, bundle.T)
            cols = [[row[c] for row in bundle.R] for c in range(2 * extra)]
            for j, col in enumerate(cols):
                sign = 1 if j < extra else -1
                bcol = exactmat.mat_vec(bundle.B, col)
                if bcol != [sign * x for x in col]:
                    ok, detail = False, f"R column {j} is not a {sign:+d} eigenvector"
                    break
                if any(exactmat.mat_vec(st, col)):
                    ok, detail = False, f"R column {j} not in ker(ST)"
                    break
        checks.append((f"decomposition[{name}]", ok, detail))
    return checks


def suite_jordan_equality(rng: random.Random, samples: int) -> list[Check]:
    checks = []
    graphs = [(n, g) for n, g in _fixture_graphs() if g.m - g.n + 1 >= 2]
    graphs += [
        (f"random{i}", g)
        for i, g in enumerate(_random_graphs(rng, samples))
        if g.m - g.n + 1 >= 2
    ]
    for name, g in graphs:
        try:
            res = compare_B_M(g)
            checks.append((f"thm-equality[{name}]", res["equal"], ""))
        except StructureError as exc:
            checks.append((f"thm-equality[{name}]", False, str(exc)))
    return checks


def suite_unicyclic(_rng: random.Random, _samples: int, n_max: int = 8) -> list[Check]:
    from .graphs import unique_cycle

    checks = []
    for n in range(3, n_max + 1):
        diffs_ok = vecs_ok = lifts_ok = total = 0
        for masks in unicyclic_graphs(n):
            g = masks_to_graph(masks)
            total += 1
            try:
                compare_B_M(g)  # raises unless diffs match the classification
                diffs_ok += 1
            except StructureError:
                pass
            try:
                unicyclic_gen_vectors(g, 1)
                if len(unique_cycle(g)) % 2 == 0:
                    unicyclic_gen_vectors(g, -1)
                vecs_ok += 1
            except StructureError:
                pass
            # lifting the lambda=1 chain through X must shorten: the K
            # eigenspace at 1 lies in ker([S T^T]) for unicyclic graphs
            bundle = NbMatrixBundle(g)
            chain = extract_chain(bundle.K, (-1, 1), 2, "K")
            if chain is not None:
                _lifted, dropped = lift_chain(bundle, chain)
                if dropped >= 1:
                    lifts_ok += 1
        checks.append(
            (f"unicyclic[n={n}]",
             diffs_ok == total and vecs_ok == total and lifts_ok == total,
             f"{diffs_ok}/{total} diffs, {vecs_ok}/{total} vectors, "
             f"{lifts_ok}/{total} shortened lifts")
        )
    return checks


def suite_torres(rng: random.Random, samples: int) -> list[Check]:
    checks = []
    graphs = [(n, g) for n, g in _fixture_graphs() if g.m - g.n + 1 >= 2]
    graphs += [
        (f"random{i}", g)
        for i, g in enumerate(_random_graphs(rng, samples))
        if g.m - g.n + 1 >= 2
    ]
    for name, g in graphs:
        checks.append((f"torres[{name}]", torres_multiplicities(g), ""))
    return checks


def suite_twins(rng: random.Random, samples: int) -> list[Check]:
    checks = []
    corpus = [(n, g) for n, g in _fixture_graphs()]
    corpus += [(f"random{i}", g) for i, g in enumerate(_random_graphs(rng, samples))]
    eig_total = eig_ok = 0
    chain_total = chain_ok = 0
    for name, g in corpus:
        twins = [(x, y) for x, y, _adj in find_twins(g) if g.degrees[x] >= 2]
        if not twins:
            continue
        for x, y in twins:
            eig_total += 1
            try:
                twin_eigen(g, x, y)
                eig_ok += 1
            except StructureError:
                pass
        report = jordan_profile(build_K(g), "K")
        for p in report.defective_profiles:
            if p.degree > 2 or not p.irreducible:
                continue
            if intpoly.constant(p.factor) == 0:
                continue  # lambda = 0: the twin equalities assume lambda != 0
            chain = extract_chain(build_K(g), p.factor, 2, "K")
            if chain is None:
                continue
            for x, y in twins:
                chain_total += 1
                if twin_chain_constraints(g, x, y, chain):
                    chain_ok += 1
    checks.append(
        ("twins[eigenpairs]", eig_total == eig_ok, f"{eig_ok}/{eig_total}")
    )
    checks.append(
        ("twins[chain constraints]", chain_total == chain_ok,
         f"{chain_ok}/{chain_total}")
    )
    return checks


def _small_connected_h(max_n: int = 4) -> list[tuple[str, Graph]]:
    out = []
    for n in range(1, max_n + 1):
        for masks in all_graphs(n):
            from .smallgraphs import _masks_connected

            if _masks_connected(masks):
                g = masks_to_graph(masks)
                out.append((f"H(n={n},m={g.m})", g))
    return out


def suite_gluing(_rng: random.Random, _samples: int) -> list[Check]:
    """Glue every connected H with <= 4 vertices onto every family base at
    every subset of the zero-support vertices; the transported chain must
    verify and the glued graph's independently computed profile must contain
    the inherited defective factor."""
    checks = []
    hs = _small_connected_h()
    for base_name in FAMILY_NAMES:
        base = family_chain(base_name)
        factor = base.chain.field.modulus
        tried = passed = 0
        for hname, h in hs:
            max_k = min(len(base.zero_support), h.n)
            for k in range(1, max_k + 1):
                for xs in combinations(base.zero_support, k):
                    for ys in combinations(range(h.n), k):
                        tried += 1
                        try:
                            glued, chain = glue_preserves_chain(base, xs, h, ys)
                        except StructureError as exc:
                            checks.append(
                                (f"gluing[{base_name}+{hname}]", False, str(exc))
                            )
                            continue
                        report = jordan_profile(build_K(glued), "K")
                        inherited = any(
                            p.factor == factor and p.defective
                            for p in report.profiles
                        )
                        if inherited:
                            passed += 1
        checks.append(
            (f"gluing[{base_name}]", tried == passed, f"{passed}/{tried}")
        )
    return checks


_SUITE_FUNCS = {
    "ihara": suite_ihara,
    "decomposition": suite_decomposition,
    "jordan-equality": suite_jordan_equality,
    "unicyclic": suite_unicyclic,
    "torres": suite_torres,
    "twins": suite_twins,
    "gluing": suite_gluing,
}


def run_suite(name: str, seed: int = 0, samples: int = 25) -> tuple[bool, list[Check]]:
    if name == "all":
        checks: list[Check] = []
        for key in _SUITE_FUNCS:
            checks.extend(run_suite(key, seed=seed, samples=samples)[1])
        return all(ok for _, ok, _ in checks), checks
    if name not in _SUITE_FUNCS:
        raise InputError(f"unknown suite {name!r}; choose from {SUITES}")
    rng = random.Random(seed)
    checks = _SUITE_FUNCS[name](rng, samples)
    return all(ok for _, ok, _ in checks), checks
