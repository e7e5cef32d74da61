"""Import smoke test for the paraline_py extension module.

Builds are not triggered here; run `cargo build -p paraline-py` (or
`--release`) first. The script copies the cdylib into a temporary
directory under the importable name, imports it, and checks the golden
values the CLI also guarantees.
"""

import json
import pathlib
import shutil
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent

QUATERNION_SPEC = (
    '{"m":4,"c":4,"r_inf":4,"weights0":[1,3],"weights1":[1,3],"weights_inf":[1,3]}'
)
QUATERNION_MATRICES = (
    '{"dim":2,"cyclotomic_order":4,'
    '"gen0":[[[0,0,0,0],[1,0,0,0]],[[-1,0,0,0],[0,0,0,0]]],'
    '"gen1":[[[0,1,0,0],[0,0,0,0]],[[0,0,0,0],[0,0,0,1]]]}'
)


def find_library() -> pathlib.Path:
    candidates = [
        ROOT / "target" / profile / "libparaline_py.so"
        for profile in ("release", "debug")
    ]
    for path in candidates:
        if path.exists():
            return path
    sys.exit(
        "extension module not built; run: cargo build -p paraline-py"
    )


def main() -> None:
    library = find_library()
    with tempfile.TemporaryDirectory() as tmp:
        shutil.copy(library, pathlib.Path(tmp) / "paraline_py.so")
        sys.path.insert(0, tmp)
        import paraline_py as pl

        assert pl.kappa(3, 4) == 1
        assert pl.s_j(4, 4, 3) == -3
        assert pl.can_inject([-2, -1], [-1, 0]) is True
        assert pl.can_inject([0, -1], [-1, -1]) is False
        assert pl.weight_multiplicities(4, [2, 0, -2, 0]) == [0, 1, 0, 1]

        bundle = json.loads(pl.cyclic_bundle(1, 3, 1))
        assert bundle["pieces"][0]["degree"] == -1
        assert bundle["pieces"][0]["weights"][0] == {"num": 1, "den": 3}

        v1 = pl.cyclic_bundle(4, 4, 1)
        v3 = pl.cyclic_bundle(4, 4, 3)
        assert pl.eval_bundle(pl.tensor(v1, v3), "0,0,0,0,0") == [0]

        report = json.loads(pl.bound_from_spec(QUATERNION_SPEC))
        assert report["t"] == [-3, -1]
        assert report["u_bounds"] == [-2, -1]
        assert json.loads(pl.bound_from_matrices(QUATERNION_MATRICES)) == report

        for bad_call in (
            lambda: pl.kappa(0, 4),
            lambda: pl.eval_bundle("{}", "0"),
            lambda: pl.eval_bundle(v1, "2/4,0,0,0,0"),
            lambda: pl.can_inject([0], [0, 1]),
        ):
            try:
                bad_call()
            except ValueError:
                pass
            else:
                raise AssertionError("expected ValueError")

    print("paraline_py smoke: OK")


if __name__ == "__main__":
    main()
