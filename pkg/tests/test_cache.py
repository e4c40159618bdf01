from __future__ import annotations

import json

import pytest

from knotpoly import cache
from knotpoly.errors import CorruptCache, InvalidParameter
from knotpoly.genfun import build_genfun
from knotpoly.graphs import build_S, tutte_delcon, tutte_oracle
from knotpoly.jones import jones_H


def test_roundtrip_s1(tmp_path):
    back = cache.cache_roundtrip(1, tmp_path)
    assert back == tutte_oracle(build_S(1)) == build_genfun().a[0]


def test_roundtrip_s4(tmp_path):
    assert cache.cache_roundtrip(4, tmp_path) == tutte_delcon(build_S(4))


def test_jones_entry(tmp_path):
    v = cache.fetch("jones", 3, tmp_path)
    assert (tmp_path / "V_H_3.poly").exists()
    assert cache.load("jones", 3, tmp_path) == v == jones_H(3)


def test_manifest_layout(tmp_path):
    cache.fetch("tutte", 2, tmp_path)
    cache.fetch("jones", 2, tmp_path)
    man = json.loads((tmp_path / "manifest.json").read_text())
    assert set(man) == {"T_Sm_2.poly", "V_H_2.poly"}
    assert man["T_Sm_2.poly"]["ring"] == "bivariate"
    assert man["V_H_2.poly"]["m"] == 2


def test_tampered_file(tmp_path):
    cache.fetch("tutte", 2, tmp_path)
    p = tmp_path / "T_Sm_2.poly"
    p.write_text(p.read_text().replace("+x", "+2*x", 1))
    with pytest.raises(CorruptCache):
        cache.fetch("tutte", 2, tmp_path)


def test_unlisted_file(tmp_path):
    (tmp_path / "T_Sm_5.poly").write_text("+x\n")
    with pytest.raises(CorruptCache):
        cache.load("tutte", 5, tmp_path)


def test_bad_manifest(tmp_path):
    (tmp_path / "manifest.json").write_text("[1, 2")
    with pytest.raises(CorruptCache):
        cache.load("tutte", 1, tmp_path)


def test_miss_without_dir():
    assert cache.fetch("jones", 1) == jones_H(1)
    with pytest.raises(InvalidParameter):
        cache.fetch("jones", 0)
    with pytest.raises(InvalidParameter):
        cache.fetch("alexander", 1)


def test_env_var(tmp_path, monkeypatch):
    monkeypatch.setenv(cache.ENV_VAR, str(tmp_path))
    assert cache.default_cache_dir() == tmp_path
    monkeypatch.delenv(cache.ENV_VAR)
    assert cache.default_cache_dir() is None
