"""On-disk cache of exact polynomials in canonical text form.

Layout::

    <cache_dir>/T_Sm_<m>.poly     Tutte polynomial of S_m
    <cache_dir>/V_H_<m>.poly      Jones polynomial of the m-th knot
    <cache_dir>/manifest.json     {file name: {"m", "ring", "sha256"}}

A file whose digest disagrees with the manifest raises CorruptCache;
nothing is silently recomputed over a damaged entry.
"""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path

from .algebra import BivarPoly, LaurentPoly
from .errors import CorruptCache, InvalidParameter, IoFailure
from .genfun import build_genfun, tutte_recursive
from .jones import jones_H

ENV_VAR = "KNOTPOLY_CACHE"
MANIFEST = "manifest.json"

_KINDS = {
    # kind: (file prefix, ring name, parser)
    "tutte": ("T_Sm_", "bivariate", BivarPoly.from_text),
    "jones": ("V_H_", "laurent", LaurentPoly.from_text),
}


def default_cache_dir() -> Path | None:
    v = os.environ.get(ENV_VAR)
    return Path(v) if v else None


def _sha(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def _compute(kind: str, m: int):
    if kind == "tutte":
        return tutte_recursive(build_genfun(), m)[-1]
    return jones_H(m)


def _read_manifest(root: Path) -> dict:
    p = root / MANIFEST
    if not p.exists():
        return {}
    try:
        data = json.loads(p.read_text(encoding="utf-8"))
    except (OSError, ValueError) as exc:
        raise CorruptCache(f"unreadable manifest {p}: {exc}") from exc
    if not isinstance(data, dict):
        raise CorruptCache(f"manifest {p} is not an object")
    return data


def _write(path: Path, text: str) -> None:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(path.suffix + ".tmp")
        with open(tmp, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except OSError as exc:
        raise IoFailure(f"cannot write {path}: {exc}") from exc


def store(kind: str, m: int, poly, cache_dir) -> Path:
    prefix, ring, _ = _KINDS[kind]
    root = Path(cache_dir)
    name = f"{prefix}{m}.poly"
    text = poly.to_text() + "\n"
    _write(root / name, text)
    manifest = _read_manifest(root)
    manifest[name] = {"m": m, "ring": ring, "sha256": _sha(text)}
    _write(root / MANIFEST, json.dumps(manifest, indent=2, sort_keys=True) + "\n")
    return root / name


def load(kind: str, m: int, cache_dir):
    """Cached polynomial, or None when there is no entry."""
    prefix, ring, parse = _KINDS[kind]
    root = Path(cache_dir)
    name = f"{prefix}{m}.poly"
    path = root / name
    entry = _read_manifest(root).get(name)
    if entry is None:
        if path.exists():
            raise CorruptCache(f"{path} has no manifest entry")
        return None
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise CorruptCache(f"manifest lists {name} but it cannot be read: {exc}") from exc
    if _sha(text) != entry.get("sha256") or entry.get("ring") != ring or entry.get("m") != m:
        raise CorruptCache(f"{path} does not match its manifest entry")
    try:
        return parse(text.strip())
    except ValueError as exc:
        raise CorruptCache(f"{path} is not a canonical polynomial: {exc}") from exc


def fetch(kind: str, m: int, cache_dir=None):
    """Load from cache if present, otherwise compute and (if a dir is given) store."""
    if kind not in _KINDS:
        raise InvalidParameter(f"unknown cache kind {kind!r}")
    if not isinstance(m, int) or m < 1:
        raise InvalidParameter(f"m must be a positive integer, got {m!r}")
    if cache_dir is not None:
        hit = load(kind, m, cache_dir)
        if hit is not None:
            return hit
    poly = _compute(kind, m)
    if cache_dir is not None:
        store(kind, m, poly, cache_dir)
    return poly


def cache_roundtrip(m: int, cache_dir, kind: str = "tutte"):
    """Write T(S_m) (or V) to ``cache_dir`` and read it back through the manifest."""
    poly = _compute(kind, m)
    store(kind, m, poly, cache_dir)
    back = load(kind, m, cache_dir)
    if back != poly:
        raise CorruptCache(f"roundtrip of {kind} m={m} changed the polynomial")
    return back
