#!/usr/bin/env python3
"""Generate the graph6 fixture files under data/.

  mindeg2_n7.g6    all connected min-degree-2 graphs on 7 vertices (507)
  mindeg2_n8.g6    same on 8 vertices (7442)
  mindeg2_n9.g6    same on 9 vertices (197772); pass --with-n9 (minutes)
  unicyclic_n3_8.g6  all connected unicyclic graphs with 3 <= n <= 8 (143)

The n=9 step does not enumerate all 9-vertex graphs: every connected
min-degree-2 graph on 9 vertices arises from some 8-vertex parent with
minimum degree >= 1 by attaching a vertex whose neighborhood covers the
parent's degree-1 vertices, so only those candidates are generated,
filtered, canonized, and deduplicated.  Expected counts are asserted, and a
SHA256SUMS file is written for everything generated.

Usage: python tools/generate_fixtures.py [--with-n9]
"""

from __future__ import annotations

import argparse
import hashlib
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from nbjordan.graphs import encode_graph6  # noqa: E402
from nbjordan.smallgraphs import (  # noqa: E402
    all_graphs,
    canonical_certificate,
    connected_min_degree2,
    masks_to_graph,
    _masks_connected,
    unicyclic_graphs,
)

EXPECTED_MINDEG2 = {7: 507, 8: 7442, 9: 197772}
EXPECTED_UNICYCLIC_3_8 = 143  # 1 + 2 + 5 + 13 + 33 + 89

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


def sorted_lines(mask_list) -> list[str]:
    keyed = []
    for masks in mask_list:
        g = masks_to_graph(masks)
        keyed.append((g.n, g.m, encode_graph6(g)))
    return [g6 for _, _, g6 in sorted(keyed)]


def gen_mindeg2_small(n: int) -> list[str]:
    lines = sorted_lines(connected_min_degree2(n))
    assert len(lines) == EXPECTED_MINDEG2[n], (n, len(lines))
    return lines


def gen_unicyclic() -> list[str]:
    masks = []
    for n in range(3, 9):
        masks.extend(unicyclic_graphs(n))
    lines = sorted_lines(masks)
    assert len(lines) == EXPECTED_UNICYCLIC_3_8, len(lines)
    return lines


def gen_mindeg2_n9(progress=True) -> list[str]:
    """Targeted augmentation 8 -> 9 restricted to connected min-degree-2
    results."""
    parents = all_graphs(8)
    top = 1 << 8
    seen: set = set()
    out = []
    t0 = time.time()
    for pi, parent in enumerate(parents):
        degs = [m.bit_count() for m in parent]
        if min(degs) == 0:
            continue
        deficient = 0
        for v, d in enumerate(degs):
            if d == 1:
                deficient |= 1 << v
        comp_bits = [v for v in range(8) if not deficient >> v & 1]
        base_count = deficient.bit_count()
        for t in range(1 << len(comp_bits)):
            s = deficient
            tt = t
            for b in comp_bits:
                if tt & 1:
                    s |= 1 << b
                tt >>= 1
            if base_count + bin(t).count("1") < 2:
                continue
            cand = tuple(
                parent[i] | top if s >> i & 1 else parent[i] for i in range(8)
            ) + (s,)
            if not _masks_connected(cand):
                continue
            cert = canonical_certificate(cand)
            if cert not in seen:
                seen.add(cert)
                out.append(cand)
        if progress and pi % 1000 == 999:
            print(
                f"  parents {pi + 1}/{len(parents)}, classes {len(out)}, "
                f"{time.time() - t0:.0f}s",
                flush=True,
            )
    lines = sorted_lines(out)
    assert len(lines) == EXPECTED_MINDEG2[9], len(lines)
    return lines


def write_file(name: str, lines: list[str]) -> None:
    DATA_DIR.mkdir(exist_ok=True)
    path = DATA_DIR / name
    path.write_text("\n".join(lines) + "\n", encoding="ascii")
    print(f"wrote {path} ({len(lines)} lines)")


def write_checksums() -> None:
    entries = []
    for path in sorted(DATA_DIR.glob("*.g6")):
        digest = hashlib.sha256(path.read_bytes()).hexdigest()
        entries.append(f"{digest}  {path.name}")
    (DATA_DIR / "SHA256SUMS").write_text("\n".join(entries) + "\n")
    print("wrote SHA256SUMS")


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--with-n9", action="store_true")
    args = ap.parse_args()
    write_file("mindeg2_n7.g6", gen_mindeg2_small(7))
    write_file("mindeg2_n8.g6", gen_mindeg2_small(8))
    write_file("unicyclic_n3_8.g6", gen_unicyclic())
    if args.with_n9:
        write_file("mindeg2_n9.g6", gen_mindeg2_n9())
    write_checksums()
    return 0


if __name__ == "__main__":
    sys.exit(main())
