"""Artifact writers with provenance stamps.

Every artifact carries the tool version and a digest of the run
configuration:

* JSON documents get a top-level ``"meta"`` object and are written with
  sorted keys, two-space indentation and a trailing newline.
* CSV files start with one ``#`` comment line holding the same fields,
  followed by an RFC-4180 body (CRLF line ends, minimal quoting).
* Formats without a comment syntax (graph6) are covered by the run
  manifest, which lists each artifact with its SHA-256.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import math
from pathlib import Path
from typing import Iterable, Mapping, Sequence

TOOL_NAME = "graphgeom"

try:
    from importlib.metadata import PackageNotFoundError, version as _dist_version

    try:
        TOOL_VERSION = _dist_version(TOOL_NAME)
    except PackageNotFoundError:  # running from a source tree
        TOOL_VERSION = "0.1.0"
except ImportError:  # pragma: no cover
    TOOL_VERSION = "0.1.0"

# keys that may differ between runs without changing any artifact
NON_SEMANTIC_KEYS = frozenset({"out", "threads", "config"})
# keys naming input files: they enter the digest by content, not by path
INPUT_FILE_KEYS = frozenset({"input", "labels", "dataset"})


def semantic_config(config: Mapping[str, object]) -> dict[str, str]:
    """Sorted ``key -> text`` map of the settings that can change an artifact.

    Non-semantic keys and unset values are dropped; input file paths are
    replaced by ``sha256:<digest>`` of the file so that copies of the same
    input in different directories give the same digest.
    """
    out = {}
    for k in sorted(config):
        v = config[k]
        if k in NON_SEMANTIC_KEYS or v is None:
            continue
        if k in INPUT_FILE_KEYS and Path(str(v)).is_file():
            out[k] = "sha256:" + sha256_file(Path(str(v)))
        else:
            out[k] = _scalar(v)
    return out


def canonical_config(config: Mapping[str, object]) -> str:
    """``key=value`` lines of :func:`semantic_config`."""
    return "".join(f"{k}={v}\n" for k, v in semantic_config(config).items())


def _scalar(v: object) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, tuple)):
        return ",".join(_scalar(x) for x in v)
    if isinstance(v, dict):
        return ",".join(f"{k}:{_scalar(x)}" for k, x in sorted(v.items()))
    return str(v)


def config_digest(config: Mapping[str, object]) -> str:
    return hashlib.sha256(canonical_config(config).encode()).hexdigest()[:16]


def meta(config: Mapping[str, object]) -> dict:
    return {"config_digest": config_digest(config), "tool": TOOL_NAME, "version": TOOL_VERSION}


def _json_safe(obj):
    if isinstance(obj, float) and not math.isfinite(obj):
        return "inf" if obj > 0 else ("-inf" if obj < 0 else "nan")
    if isinstance(obj, dict):
        return {str(k): _json_safe(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_json_safe(v) for v in obj]
    if hasattr(obj, "item") and not isinstance(obj, (str, bytes)):  # numpy scalar
        return _json_safe(obj.item())
    return obj


def dumps_json(data, config: Mapping[str, object]) -> str:
    doc = {"meta": meta(config), "data": _json_safe(data)}
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False, allow_nan=False) + "\n"


def meta_comment(config: Mapping[str, object]) -> str:
    """The ``#`` provenance line that heads every CSV artifact."""
    m = meta(config)
    return f"# tool={m['tool']} version={m['version']} config_digest={m['config_digest']}\r\n"


def csv_text(header: Sequence[str], rows: Iterable[Sequence], config: Mapping[str, object] | None = None) -> str:
    buf = io.StringIO()
    if config is not None:
        buf.write(meta_comment(config))
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(header)
    for r in rows:
        w.writerow([_csv_cell(x) for x in r])
    return buf.getvalue()


def _csv_cell(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        return repr(x)
    if x is None:
        return ""
    return str(x)


def read_csv(path: str | Path) -> tuple[list[str], list[list[str]]]:
    """Header and rows, skipping leading ``#`` metadata lines."""
    with open(path, newline="", encoding="utf-8") as fh:
        lines = [ln for ln in fh if not ln.startswith("#")]
    rows = list(csv.reader(lines))
    if not rows:
        raise ValueError(f"{path} has no CSV header")
    return rows[0], rows[1:]


def write_text(path: str | Path, text: str) -> Path:
    p = Path(path)
    p.parent.mkdir(parents=True, exist_ok=True)
    with open(p, "w", newline="", encoding="utf-8") as fh:
        fh.write(text)
    return p


def sha256_file(path: str | Path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def parse_config_file(path: str | Path) -> dict[str, str]:
    """Flat ``key = value`` text; ``#`` starts a comment, blank lines ignored."""
    out = {}
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected key=value, got {raw.strip()!r}")
        k, v = (s.strip() for s in line.split("=", 1))
        if not k:
            raise ValueError(f"{path}:{lineno}: empty key")
        out[k.replace("-", "_")] = v
    return out
