"""Smoke test for the pysuperlie extension module."""

import pathlib

import pysuperlie

OSP12 = (pathlib.Path(__file__).resolve().parents[1] / "crates" / "core" / "data" / "osp12.alg").read_text()


def main():
    report = pysuperlie.check(OSP12, "super-lie")
    assert report["passed"], report

    rl = pysuperlie.catalog_show("ospRL")
    left = pysuperlie.check(rl, "left_rota_baxter", algebra="osp12", map="RL")
    assert left["passed"], left
    right = pysuperlie.check(rl, "right_rota_baxter", algebra="osp12", map="RL")
    assert not right["passed"]
    assert right["counterexamples"][0]["tuple"]

    assert "osp12" in pysuperlie.catalog_list()
    claims = pysuperlie.catalog_verify("ex5_odd_3lie")
    assert all(c["matches_expected"] for c in claims)
    assert any(c["errata"] == "E1" for c in claims)

    assert pysuperlie.canonical(pysuperlie.canonical(OSP12)) == pysuperlie.canonical(OSP12)
    try:
        pysuperlie.canonical("algebra a\nparity 2\n")
    except ValueError as e:
        assert "line 2" in str(e), e
    else:
        raise AssertionError("bad parity accepted")

    code, out, _ = pysuperlie.run(["catalog", "verify"])
    assert code == 0 and out.endswith("as expected\n"), out
    print("smoke test passed")


if __name__ == "__main__":
    main()
