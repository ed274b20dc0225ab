"""Builds the extension module with cargo and exercises it from Python.

Run from anywhere: python3 python/smoke_test.py
"""

import os
import shutil
import subprocess
import sys
import tempfile

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def build():
    subprocess.run(["cargo", "build", "-p", "triassoc-py"], cwd=ROOT, check=True)
    target = os.environ.get("CARGO_TARGET_DIR", os.path.join(ROOT, "target"))
    lib = os.path.join(target, "debug", "libtriassoc.so")
    out = tempfile.mkdtemp()
    shutil.copy(lib, os.path.join(out, "triassoc.so"))
    sys.path.insert(0, out)


def main():
    build()
    import triassoc as ta

    a2 = ta.Algebra.abelian(2)
    assert a2.dim == 2 and a2.validate() == []
    assert a2.multiplier_dim() == 12
    assert a2.z_star() == [] and not a2.is_unicentral()

    k1 = ta.Algebra.cover_abelian(1)
    inv = k1.invariants()
    assert (inv["dim"], inv["derived_dim"], inv["center_dim"]) == (4, 3, 3)
    assert ta.Algebra.cover_abelian(2).dim == 14

    text = '{"field": "Q", "dim": 2, "products": [{"op": "vdash", "i": 0, "j": 0, "value": ["0", "1"]}]}'
    l = ta.Algebra.from_json(text)
    assert l.multiply([1, 0], ["1/2", 0], "vdash") == ["0", "1/2"]
    assert l.multiplier_dim() == 2 and l.h2_dim(2) == 4
    assert l.z_star() == [["0", "1"]] and l.is_unicentral()
    k, kernel = l.cover()
    assert k.dim == 4 and len(kernel) == 2 and k.validate() == []
    assert ta.Algebra.from_json(l.to_json()) == l

    [r] = l.verify([[0, 1]])
    assert r["passed"] and r["dims"] == [1, 1, 1, 3, 2] and r["ranks"] == [1, 0, 1, 2]
    assert all(r["passed"] for r in a2.verify())
    try:
        l.verify([[1, 0]])
    except ValueError:
        pass
    else:
        raise AssertionError("non-central z accepted")

    bad = ta.Algebra.from_json(
        '{"field": "Q", "dim": 2, "products": [{"op": "vdash", "i": 0, "j": 1, "value": ["1", "0"]}]}'
    )
    assert bad.validate()[0] == 1
    try:
        bad.h2_dim()
    except ValueError:
        pass
    else:
        raise AssertionError("invalid algebra accepted")

    rows = ta.bound_table(10)
    assert ("Triassociative", 1, 3, 4) in rows and len(rows) == 50
    assert ta.Algebra.abelian(1, "Fp:7").field == "Fp:7"
    print("python smoke test: ok")


if __name__ == "__main__":
    main()
