"""Command-line entry point: ``graphgeom <command> [options]``.

Every option can also be given in a flat ``key = value`` file passed with
``--config``; explicit flags win over the file, and the file wins over
built-in defaults. Artifacts go to ``--out`` together with a
``manifest.json`` listing each file and its SHA-256. Failures exit
nonzero and print one JSON object ``{"error": ..., "message": ...}`` on
stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Callable

import numpy as np

from . import io as gio
from .graph import Graph, GraphError

INFINITE = float("inf")


class CliError(Exception):
    """Failure reported as error JSON with a nonzero exit status."""

    def __init__(self, kind: str, message: str, status: int = 1, **extra):
        super().__init__(message)
        self.kind = kind
        self.status = status
        self.extra = extra

    def payload(self) -> dict:
        return {"error": self.kind, "message": str(self), **self.extra}


# --------------------------------------------------------------------------- options

@dataclass(frozen=True)
class Option:
    name: str
    type: Callable
    default: object
    help: str


def _bool(text) -> bool:
    if isinstance(text, bool):
        return text
    low = str(text).strip().lower()
    if low in ("1", "true", "yes", "on"):
        return True
    if low in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {text!r}")


def _multipliers(text) -> dict | int:
    """``"0:5,1:60"`` or a single integer applied to every class."""
    if isinstance(text, (int, dict)):
        return text
    text = str(text).strip()
    if ":" not in text:
        return int(text)
    out = {}
    for part in text.split(","):
        k, v = part.split(":")
        k = k.strip()
        out[int(k) if k.lstrip("-").isdigit() else k] = int(v)
    return out


def _fractions(text) -> tuple[int, ...]:
    if isinstance(text, tuple):
        return text
    return tuple(int(x) for x in str(text).split(","))


COMMON = (
    Option("seed", int, 0, "seed for every randomized step"),
    Option("threads", int, 1, "worker processes for per-graph work (artifacts do not depend on it)"),
    Option("out", str, ".", "output directory"),
)
INPUT = (
    Option("input", str, None, "graph6 file; defaults to the built-in corpus named by --corpus"),
    Option("corpus", str, "enumerated", "built-in corpus: enumerated, default or girth5"),
)
COMMANDS: dict[str, tuple[str, tuple[Option, ...]]] = {
    "corpus": ("write a graph corpus as graph6", (
        Option("source", str, "enumerate", "enumerate, named, random, default or girth5"),
        Option("n", int, 6, "vertex count for enumerate and random"),
        Option("enum_cap", int, 7, "largest n that enumerate accepts"),
        Option("count", int, 10, "number of random graphs"),
        Option("p", float, 0.3, "edge probability for random graphs"),
        Option("max_n", int, 20, "largest named graph"),
    )),
    "label": ("invariant labels as CSV", INPUT + (
        Option("chromatic_cap", int, 12, "largest n for exact chromatic number"),
        Option("hamiltonian_cap", int, 12, "largest n for the Hamiltonian search"),
        Option("hamiltonian_count", _bool, False, "also count Hamiltonian cycles"),
        Option("ricci", _bool, False, "add olly_flat and cd_flat columns"),
    )),
    "spectra": ("Laplacian spectra and gap bounds as CSV", INPUT),
    "curvature": ("edge curvature and CD(inf,0) verdicts as JSON", INPUT),
    "homology": ("path homology of random orientations as CSV and JSON", INPUT + (
        Option("orientations", int, 3, "random orientations per graph"),
        Option("p_max", int, None, "largest path length (default: vertex count)"),
    )),
    "dataset": ("augmented, padded dataset from a label CSV", (
        Option("labels", str, None, "label CSV with a graph6 column"),
        Option("label_column", str, "planar", "column holding the class or target"),
        Option("multipliers", _multipliers, 0, "augmentation count, e.g. 0:5,1:60"),
        Option("pad_dim", int, None, "padding dimension (default: largest graph)"),
    )),
    "train": ("five-fold cross-validation report", (
        Option("dataset", str, None, "dataset CSV"),
        Option("label_column", str, "target", "target column of the dataset CSV"),
        Option("task", str, None, "built-in task instead of a dataset CSV"),
        Option("learner", str, "forest", "logistic, tree, forest, boosted or mlp"),
        Option("n_estimators", int, None, "forest size"),
        Option("max_depth", int, None, "tree depth cap"),
        Option("alpha", float, None, "L2 penalty for logistic regression"),
        Option("epochs", int, None, "MLP epochs"),
    )),
    "curve": ("training curve over 10%..90% training fractions", (
        Option("dataset", str, None, "dataset CSV"),
        Option("label_column", str, "target", "target column of the dataset CSV"),
        Option("learner", str, "forest", "logistic, tree, forest, boosted or mlp"),
        Option("fractions", _fractions, (10, 20, 30, 40, 50, 60, 70, 80, 90), "training percentages"),
        Option("repeats", int, 5, "runs per fraction"),
        Option("n_estimators", int, None, "forest size"),
        Option("epochs", int, None, "MLP epochs"),
    )),
    "pca": ("2-D PCA of the normalized-Laplacian point cloud", INPUT + (
        Option("out_dim", int, 2, "number of components"),
    )),
    "tda": ("H0 and H1 barcodes of the normalized-Laplacian point cloud", INPUT + (
        Option("k", int, 500, "subsample size (capped at the cloud size)"),
        Option("threshold", float, None, "Rips threshold (default 1.1 x longest MST edge)"),
    )),
    "reproduce-appendix": ("recompute the dipyramid worked example and diff against golden values", ()),
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError("usage", message, status=2)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="graphgeom", description="Spectral graph geometry toolkit.")
    parser.add_argument("--version", action="version", version=f"graphgeom {gio.TOOL_VERSION}")
    sub = parser.add_subparsers(dest="command", metavar="command", parser_class=_Parser)
    sub.required = True
    for name, (helptext, options) in COMMANDS.items():
        p = sub.add_parser(name, help=helptext, description=helptext)
        p.add_argument("--config", default=None, help="flat key=value file")
        for opt in COMMON + options:
            p.add_argument("--" + opt.name.replace("_", "-"), dest=opt.name, default=None, help=opt.help)
    return parser


def resolve_config(command: str, cli: dict, file_values: dict) -> dict:
    """Merge flags over the config file over defaults, with type conversion."""
    options = COMMON + COMMANDS[command][1]
    known = {o.name for o in options}
    unknown = sorted(set(file_values) - known)
    if unknown:
        raise CliError("config", f"unknown config key(s) for {command}: {', '.join(unknown)}", status=2)
    cfg = {"command": command}
    for o in options:
        raw = cli.get(o.name)
        if raw is None:
            raw = file_values.get(o.name, o.default)
        try:
            cfg[o.name] = None if raw is None else o.type(raw)
        except (TypeError, ValueError) as exc:
            raise CliError("config", f"bad value for {o.name}: {raw!r} ({exc})", status=2) from None
    if cfg["threads"] < 1:
        raise CliError("config", "threads must be positive", status=2)
    return cfg


# --------------------------------------------------------------------------- helpers

def _pmap(fn, items: list, threads: int) -> list:
    """Ordered map; uses worker processes when ``threads > 1``."""
    if threads <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=threads) as ex:
        return list(ex.map(fn, items, chunksize=max(1, len(items) // (4 * threads))))


def _builtin_corpus(name: str, seed: int) -> list[Graph]:
    from .canon import enumerate_connected_upto
    from .corpus import default_corpus, girth5_corpus

    if name == "enumerated":
        return enumerate_connected_upto(7)
    if name == "default":
        return [e.graph for e in default_corpus(seed)]
    if name == "girth5":
        return [e.graph for e in girth5_corpus(seed)]
    raise CliError("config", f"unknown corpus {name!r}; choose enumerated, default or girth5", status=2)


def _load_graphs(cfg: dict) -> list[Graph]:
    from .graph6 import read_graph6_file

    if cfg.get("input"):
        path = Path(cfg["input"])
        if not path.is_file():
            raise CliError("input", f"cannot read input file {str(path)!r}", path=str(path))
        return read_graph6_file(path)
    return _builtin_corpus(cfg["corpus"], cfg["seed"])


class _Run:
    """Collects artifacts written under the output directory."""

    def __init__(self, cfg: dict):
        self.cfg = cfg
        self.out = Path(cfg["out"])
        self.files: list[Path] = []

    def write(self, name: str, text: str) -> Path:
        p = gio.write_text(self.out / name, text)
        self.files.append(p)
        return p

    def write_bytes(self, name: str, data: bytes) -> Path:
        p = self.out / name
        p.parent.mkdir(parents=True, exist_ok=True)
        p.write_bytes(data)
        self.files.append(p)
        return p

    def finish(self) -> None:
        arts = [{"path": p.name, "sha256": gio.sha256_file(p)} for p in self.files]
        data = {"command": self.cfg["command"], "config": gio.semantic_config(self.cfg), "artifacts": arts}
        gio.write_text(self.out / "manifest.json", gio.dumps_json(data, self.cfg))


def _fmt(x):
    if isinstance(x, bool) or x is None:
        return x  # rendered by the CSV writer as true/false or an empty cell
    if isinstance(x, float) and x == INFINITE:
        return "inf"
    if isinstance(x, float) and x.is_integer():
        return str(int(x))
    return str(x)


# --------------------------------------------------------------------------- per-graph workers (top level, picklable)

def _label_row(args):
    from .curvature import is_cd_ricci_flat, is_olly_ricci_flat
    from .graph6 import to_graph6
    from .invariants import invariant_record

    g, cfg = args
    rec = invariant_record(g, count_hamiltonian=cfg["hamiltonian_count"],
                           chromatic_cap=cfg["chromatic_cap"], hamiltonian_cap=cfg["hamiltonian_cap"])
    row = [to_graph6(g), g.n, g.m] + [_fmt(v) for v in rec.as_dict().values()]
    if cfg["ricci"]:
        usable = g.n > 1 and min(g.degrees) > 0
        row += [is_olly_ricci_flat(g) if usable else "", is_cd_ricci_flat(g) if usable else ""]
    return row


def _curvature_doc(g):
    from .curvature import curvature_report
    from .graph import is_connected

    if g.n < 2 or not is_connected(g):
        from .graph6 import to_graph6
        return {"graph6": to_graph6(g), "skipped": "curvature needs a connected graph on >= 2 vertices"}
    return curvature_report(g)


def _homology_rows(args):
    from .graph import orient_random
    from .graph6 import to_graph6
    from .homology import homology_dims

    idx, g, seed, count, p_max = args
    rows = []
    for r in range(count):
        s = int(np.random.SeedSequence([seed, idx, r]).generate_state(1)[0])
        d = orient_random(g, s)
        prof = homology_dims(d, p_max if p_max is not None else max(g.n, 1))
        rows.append((idx, to_graph6(g), r, prof))
    return rows


# --------------------------------------------------------------------------- commands

def cmd_corpus(run: _Run) -> None:
    from . import corpus as gc
    from .canon import enumerate_connected
    from .graph import random_graph
    from .graph6 import to_graph6

    cfg = run.cfg
    src = cfg["source"]
    if src == "enumerate":
        if cfg["n"] > cfg["enum_cap"]:
            raise CliError("cap", f"enumeration n={cfg['n']} exceeds enum_cap={cfg['enum_cap']}")
        graphs = enumerate_connected(cfg["n"], cap=cfg["enum_cap"])
    elif src == "named":
        graphs = [e.graph for e in gc.dedupe(gc.named_entries(cfg["max_n"]))]
    elif src == "random":
        graphs = [random_graph(cfg["n"], cfg["p"], int(np.random.SeedSequence([cfg["seed"], i]).generate_state(1)[0]))
                  for i in range(cfg["count"])]
    elif src in ("default", "girth5"):
        graphs = _builtin_corpus(src, cfg["seed"])
    else:
        raise CliError("config", f"unknown corpus source {src!r}", status=2)
    run.write("corpus.g6", "".join(to_graph6(g) + "\n" for g in graphs))


LABEL_COLUMNS = ["graph6", "n", "m", "planar", "skewness_class", "girth", "diameter", "chromatic",
                 "bipartite", "acyclic", "eulerian", "hamiltonian", "hamiltonian_count"]


def cmd_label(run: _Run) -> None:
    cfg = run.cfg
    graphs = _load_graphs(cfg)
    header = ["index"] + LABEL_COLUMNS + (["olly_flat", "cd_flat"] if cfg["ricci"] else [])
    try:
        rows = _pmap(_label_row, [(g, cfg) for g in graphs], cfg["threads"])
    except GraphError as exc:  # cap violations from the invariants
        raise CliError("cap", str(exc)) from None
    run.write("labels.csv", gio.csv_text(header, ([i] + r for i, r in enumerate(rows)), cfg))


def cmd_spectra(run: _Run) -> None:
    from .spectra import spectra_table

    cfg = run.cfg
    table = spectra_table(_load_graphs(cfg))
    header = ["index", "graph6", "laplacian", "normalized", "gap", "bound_standard", "bound_lin_yau",
              "satisfied_standard", "satisfied_lin_yau"]

    def cell(rec, k):
        v = rec.get(k)
        return " ".join(repr(float(x)) for x in v) if isinstance(v, list) else v

    rows = ([i] + [cell(r, k) for k in header[1:]] for i, r in enumerate(table))
    run.write("spectra.csv", gio.csv_text(header, rows, cfg))


def cmd_curvature(run: _Run) -> None:
    cfg = run.cfg
    docs = _pmap(_curvature_doc, _load_graphs(cfg), cfg["threads"])
    run.write("curvature.json", gio.dumps_json({"graphs": docs}, cfg))


def cmd_homology(run: _Run) -> None:
    cfg = run.cfg
    graphs = _load_graphs(cfg)
    jobs = [(i, g, cfg["seed"], cfg["orientations"], cfg["p_max"]) for i, g in enumerate(graphs) if g.m > 0]
    results = [row for rows in _pmap(_homology_rows, jobs, cfg["threads"]) for row in rows]
    header = ["index", "graph6", "orientation", "omega_dims", "homology_dims", "euler", "truncated"]
    rows = [(i, g6, r, " ".join(map(str, p.omega_dims)), " ".join(map(str, p.homology_dims)), p.euler, p.truncated)
            for i, g6, r, p in results]
    run.write("homology.csv", gio.csv_text(header, rows, cfg))
    hist: dict[int, int] = {}
    for *_, p in results:
        hist[p.euler] = hist.get(p.euler, 0) + 1
    doc = {"profiles": [{"index": i, "graph6": g6, "orientation": r, **p.as_dict()} for i, g6, r, p in results],
           "euler_histogram": {str(k): hist[k] for k in sorted(hist)}}
    run.write("homology.json", gio.dumps_json(doc, cfg))


def _label_value(text: str):
    low = text.strip().lower()
    if low in ("true", "false"):
        return int(low == "true")
    try:
        return int(text)
    except ValueError:
        pass
    try:
        v = float(text)
    except ValueError:
        return text
    return int(v) if v == INFINITE else v


def cmd_dataset(run: _Run) -> None:
    from .graph6 import from_graph6
    from .learn.dataset import build_dataset, dataset_to_csv, save_npz

    cfg = run.cfg
    if not cfg["labels"]:
        raise CliError("config", "dataset needs --labels (a label CSV with a graph6 column)", status=2)
    path = Path(cfg["labels"])
    if not path.is_file():
        raise CliError("input", f"cannot read label file {str(path)!r}", path=str(path))
    header, rows = gio.read_csv(path)
    col = cfg["label_column"]
    for needed in ("graph6", col):
        if needed not in header:
            raise CliError("missing_column", f"label file has no column {needed!r}", column=needed)
    gi, li = header.index("graph6"), header.index(col)
    pairs = [(from_graph6(r[gi]), r[li]) for r in rows if r[li] != ""]
    graphs = [g for g, _ in pairs]
    labels = [_label_value(v) for _, v in pairs]
    if any(isinstance(v, float) and v == INFINITE for v in labels):
        raise CliError("input", f"column {col!r} contains infinite values")
    pad_dim = cfg["pad_dim"] or max(g.n for g in graphs)
    try:
        d = build_dataset(graphs, labels, pad_dim, cfg["seed"], cfg["multipliers"])
    except GraphError as exc:
        raise CliError("input", str(exc)) from None
    run.write("dataset.csv", gio.meta_comment(cfg) + dataset_to_csv(d))
    npz = run.out / "dataset.npz"
    npz.parent.mkdir(parents=True, exist_ok=True)
    save_npz(d, npz)
    run.files.append(npz)
    counts = {str(k): v for k, v in d.class_counts.items()} if d.class_counts else {}
    run.write("dataset.json", gio.dumps_json({"rows": len(d), "pad_dim": pad_dim, "class_counts": counts}, cfg))


def _learner_params(cfg: dict) -> dict:
    keys = {"forest": ("n_estimators", "max_depth"), "boosted": ("n_estimators", "max_depth"),
            "tree": ("max_depth",), "logistic": ("alpha",), "mlp": ("epochs",)}
    params = {"random_state": cfg["seed"]}
    for k in keys.get(cfg["learner"], ()):
        if cfg.get(k) is not None:
            params[k] = cfg[k]
    return params


def _load_dataset(cfg: dict):
    from .learn.dataset import load_csv

    if not cfg["dataset"]:
        raise CliError("config", "a dataset CSV is required (--dataset)", status=2)
    path = Path(cfg["dataset"])
    if not path.is_file():
        raise CliError("input", f"cannot read dataset file {str(path)!r}", path=str(path))
    try:
        return load_csv(path, cfg["label_column"], cfg["seed"])
    except KeyError:
        col = cfg["label_column"]
        raise CliError("missing_column", f"dataset has no column {col!r}", column=col) from None


def cmd_train(run: _Run) -> None:
    from .learn.evaluation import cross_validate, make_learner
    from .learn.tasks import RECIPES, run_classification_task, run_max_lambda_regression, table_row

    cfg = run.cfg
    if cfg["task"]:
        task = cfg["task"]
        if task == "max_lambda":
            extra = {"epochs": cfg["epochs"]} if cfg["epochs"] else {}
            report = run_max_lambda_regression(cfg["seed"], **extra)
        elif task in RECIPES:
            extra = {k: cfg[k] for k in ("n_estimators", "max_depth") if cfg[k] is not None}
            report = run_classification_task(task, cfg["seed"], **extra)
        else:
            raise CliError("config", f"unknown task {task!r}; choose from {sorted(RECIPES) + ['max_lambda']}",
                           status=2)
    else:
        d = _load_dataset(cfg)
        params = _learner_params(cfg)
        try:
            scores = cross_validate(d, lambda: make_learner(cfg["learner"], **params))
        except ValueError as exc:
            raise CliError("train", str(exc)) from None
        report = {"learner": cfg["learner"], "rows": len(d),
                  "metrics": {k: {"mean": s.mean, "std": s.std} for k, s in scores.items()},
                  "table_row": table_row(scores)}
    run.write("report.json", gio.dumps_json(report, cfg))


def cmd_curve(run: _Run) -> None:
    from .learn.evaluation import make_learner, training_curve

    cfg = run.cfg
    d = _load_dataset(cfg)
    params = _learner_params(cfg)
    curve = training_curve(d, lambda: make_learner(cfg["learner"], **params), cfg["fractions"],
                           cfg["repeats"], cfg["seed"])
    rows = [(x, k, s.mean, s.std) for x, scores in curve.items() for k, s in scores.items()]
    run.write("curve.csv", gio.csv_text(["fraction", "metric", "mean", "std"], rows, cfg))


def _spectrum_cloud(graphs: list[Graph]) -> tuple[list[Graph], np.ndarray]:
    from .spectra import eigen_point_cloud

    usable = [g for g in graphs if g.n > 1 and min(g.degrees) > 0]
    if not usable:
        raise CliError("input", "no graph without isolated vertices in the input")
    return usable, eigen_point_cloud(usable, max(g.n for g in usable))


def cmd_pca(run: _Run) -> None:
    from .invariants import is_planar
    from .learn.evaluation import pca_project

    cfg = run.cfg
    graphs, cloud = _spectrum_cloud(_load_graphs(cfg))
    try:
        res = pca_project(cloud, cfg["out_dim"])
    except ValueError as exc:
        raise CliError("input", str(exc)) from None
    header = ["index"] + [f"pc{i + 1}" for i in range(cfg["out_dim"])] + ["planar"]
    rows = ([i] + [float(v) for v in res.projected[i]] + [is_planar(g)] for i, g in enumerate(graphs))
    run.write("pca.csv", gio.csv_text(header, rows, cfg))
    run.write("pca.json", gio.dumps_json({"explained_variance_ratio": res.explained_variance_ratio.tolist(),
                                          "components": res.components.tolist()}, cfg))


def cmd_tda(run: _Run) -> None:
    from .tda import ComplexTooLarge, barcode_csv, default_threshold, rips_h0, rips_h1, subsample

    cfg = run.cfg
    _, cloud = _spectrum_cloud(_load_graphs(cfg))
    pts = subsample(cloud, min(cfg["k"], len(cloud)), cfg["seed"])
    threshold = default_threshold(pts) if cfg["threshold"] is None else cfg["threshold"]
    try:
        h1 = rips_h1(pts, threshold)
    except ComplexTooLarge as exc:
        raise CliError("cap", str(exc), threshold=threshold) from None
    run.write("barcodes.csv", gio.meta_comment(cfg) + barcode_csv([rips_h0(pts), h1]))


# --------------------------------------------------------------------------- appendix

APPENDIX_GOLDEN = {
    "L": [[3, 0, -1, -1, -1], [0, 3, -1, -1, -1], [-1, -1, 4, -1, -1], [-1, -1, -1, 4, -1], [-1, -1, -1, -1, 4]],
    "D": [3, 3, 4, 4, 4],
    "delta_spectrum": [Fraction(0), Fraction(1), Fraction(5, 4), Fraction(5, 4), Fraction(3, 2)],
    "girth": 3,
    "diameter": 2,
    "chromatic": 4,
    "skewness_class": 0,
    "planar": True,
    "eulerian": False,
    "hamiltonian_cycles": 6,
    "omega_dims": [5, 9, 6, 2, 0],
    "euler": 0,
}


def appendix_values() -> dict:
    """Every quantity of the dipyramid worked example, recomputed."""
    from .families import dipyramid, dipyramid_orientation
    from .graph import degree_matrix
    from .homology import homology_dims
    from .invariants import invariant_record
    from .spectra import laplacian, normalized_laplacian_spectrum

    g = dipyramid(5)
    rec = invariant_record(g, count_hamiltonian=True)
    prof = homology_dims(dipyramid_orientation(), 4)
    return {
        "L": laplacian(g).astype(int).tolist(),
        "D": np.diag(degree_matrix(g)).astype(int).tolist(),
        "delta_spectrum": [float(x) for x in normalized_laplacian_spectrum(g).values],
        "girth": int(rec.girth),
        "diameter": int(rec.diameter),
        "chromatic": rec.chromatic,
        "skewness_class": rec.skewness_class,
        "planar": rec.planar,
        "eulerian": rec.eulerian,
        "hamiltonian_cycles": rec.hamiltonian_count,
        "omega_dims": list(prof.omega_dims),
        "euler": prof.euler,
    }


def _matches(key: str, got, want) -> bool:
    if key == "delta_spectrum":
        return len(got) == len(want) and all(abs(a - float(b)) <= 1e-9 for a, b in zip(got, want))
    return got == want


def appendix_table(values: dict) -> tuple[list[str], bool]:
    def show(k, v):
        if k == "delta_spectrum" and v and isinstance(v[0], Fraction):
            return "{" + ", ".join(str(x) for x in v) + "}"
        if k == "delta_spectrum":
            return "{" + ", ".join(str(Fraction(x).limit_denominator(1000)) for x in v) + "}"
        return json.dumps(v)

    lines, ok = [], True
    width = max(len(k) for k in APPENDIX_GOLDEN)
    for k, want in APPENDIX_GOLDEN.items():
        good = _matches(k, values[k], want)
        ok &= good
        lines.append(f"{k.ljust(width)}  {show(k, values[k])}  [{'ok' if good else 'MISMATCH, expected ' + show(k, want)}]")
    return lines, ok


def cmd_reproduce_appendix(run: _Run) -> None:
    values = appendix_values()
    lines, ok = appendix_table(values)
    print("\n".join(lines))
    run.write("appendix.json", gio.dumps_json({"values": values, "matches_golden": ok}, run.cfg))
    if not ok:
        raise CliError("golden_mismatch", "appendix values differ from the golden table")


HANDLERS = {
    "corpus": cmd_corpus, "label": cmd_label, "spectra": cmd_spectra, "curvature": cmd_curvature,
    "homology": cmd_homology, "dataset": cmd_dataset, "train": cmd_train, "curve": cmd_curve,
    "pca": cmd_pca, "tda": cmd_tda, "reproduce-appendix": cmd_reproduce_appendix,
}


def run(argv: list[str] | None = None) -> int:
    """Parse ``argv``, execute the command and return the exit status."""
    try:
        ns = build_parser().parse_args(argv)
        values = vars(ns)
        command = values.pop("command")
        file_values = {}
        if values.get("config"):
            cpath = Path(values["config"])
            if not cpath.is_file():
                raise CliError("input", f"cannot read config file {str(cpath)!r}", path=str(cpath))
            try:
                file_values = gio.parse_config_file(cpath)
            except ValueError as exc:
                raise CliError("config", str(exc), status=2) from None
        cfg = resolve_config(command, values, file_values)
        r = _Run(cfg)
        HANDLERS[command](r)
        r.finish()
        return 0
    except CliError as exc:
        print(json.dumps(exc.payload(), sort_keys=True), file=sys.stderr)
        return exc.status
    except (OSError, GraphError, ValueError, ArithmeticError) as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}, sort_keys=True), file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
