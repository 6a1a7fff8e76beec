#!/usr/bin/env python3
"""Convert the public AUCS multiplex dataset into the edge-list format.

The dataset (61 employees of a university department, five relation
types) is distributed in two common forms:

  * `aucs.mpx` — the multiplex format bundled with the `uunet` Python
    package and published at https://manliodedomenico.com/data.php and
    http://multilayer.it.uu.se/datasets.html
  * `CS-Aarhus_multiplex.edges` plus `CS-Aarhus_layers.txt` — the
    numeric multiplex format of the same dataset

Usage:
    python3 tools/fetch_aucs.py path/to/aucs.mpx [--out data/]
    python3 tools/fetch_aucs.py --from-uunet   [--out data/]   # pip install uunet

Writes `aucs_edges.csv` and `aucs_actors.csv` with the canonical layer
names (work, leisure, coauthor, lunch, facebook) in that order.
"""

import argparse
import os
import sys

CANONICAL = ["work", "leisure", "coauthor", "lunch", "facebook"]


def normalize(layer):
    name = layer.strip().lower()
    if name in CANONICAL:
        return name
    raise SystemExit(f"unrecognized layer name: {layer!r}")


def parse_mpx(path):
    edges, actors = [], []
    section = None
    with open(path, encoding="utf-8") as f:
        for raw in f:
            line = raw.strip()
            if not line or line.startswith("--"):
                continue
            if line.startswith("#"):
                section = line.lstrip("#").strip().upper()
                continue
            fields = [x.strip() for x in line.split(",")]
            if section == "EDGES" and len(fields) >= 3:
                edges.append((fields[0], fields[1], normalize(fields[2])))
            elif section == "ACTORS" and fields[0]:
                actors.append(fields[0])
    return edges, actors


def parse_numeric(path):
    base = path[: path.rindex("_multiplex.edges")]
    layer_names = {}
    with open(base + "_layers.txt", encoding="utf-8") as f:
        next(f)  # header
        for line in f:
            fields = line.split()
            if len(fields) >= 2:
                layer_names[fields[0]] = normalize(fields[1])
    node_names = {}
    nodes_file = base + "_nodes.txt"
    if os.path.exists(nodes_file):
        with open(nodes_file, encoding="utf-8") as f:
            next(f)
            for line in f:
                fields = line.split()
                if len(fields) >= 2:
                    node_names[fields[0]] = fields[1]
    edges = []
    with open(path, encoding="utf-8") as f:
        for line in f:
            fields = line.split()
            if len(fields) >= 3:
                layer, u, v = fields[0], fields[1], fields[2]
                edges.append((node_names.get(u, "U" + u), node_names.get(v, "U" + v),
                              layer_names[layer]))
    return edges, sorted({u for u, _, _ in edges} | {v for _, v, _ in edges})


def load_from_uunet():
    try:
        import uunet.multinet as ml
    except ImportError:
        raise SystemExit("pip install uunet, or pass a downloaded aucs.mpx path")
    net = ml.data("aucs")
    raw = ml.edges(net)
    edges = [(a, b, normalize(l))
             for a, b, l in zip(raw["from_actor"], raw["to_actor"], raw["from_layer"])]
    return edges, sorted(ml.actors(net))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("source", nargs="?", help="aucs.mpx or *_multiplex.edges file")
    ap.add_argument("--from-uunet", action="store_true", help="use the uunet package data")
    ap.add_argument("--out", default="data", help="output directory (default: data/)")
    args = ap.parse_args()

    if args.from_uunet:
        edges, actors = load_from_uunet()
    elif args.source and args.source.endswith("_multiplex.edges"):
        edges, actors = parse_numeric(args.source)
    elif args.source:
        edges, actors = parse_mpx(args.source)
    else:
        ap.print_help()
        return 2

    # deduplicate undirected records and group by canonical layer order
    seen = set()
    grouped = {name: [] for name in CANONICAL}
    for u, v, layer in edges:
        if u == v:
            continue
        key = (min(u, v), max(u, v), layer)
        if key in seen:
            continue
        seen.add(key)
        grouped[layer].append((u, v))

    os.makedirs(args.out, exist_ok=True)
    edges_path = os.path.join(args.out, "aucs_edges.csv")
    with open(edges_path, "w", encoding="utf-8") as f:
        for layer in CANONICAL:
            for u, v in grouped[layer]:
                f.write(f"{u},{v},{layer}\n")
    actors_path = os.path.join(args.out, "aucs_actors.csv")
    with open(actors_path, "w", encoding="utf-8") as f:
        for a in actors:
            f.write(a + "\n")

    counts = {layer: len(grouped[layer]) for layer in CANONICAL}
    print(f"wrote {edges_path} ({sum(counts.values())} edges: {counts})")
    print(f"wrote {actors_path} ({len(actors)} actors)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
